#include <catch_amalgamated.hpp>

#include <filesystem>

#include <endlam/io.hpp>

using namespace endlam;

TEST_CASE("rationals") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_str(Rational(10, 4)) == "5/2");
    CHECK(to_str(Rational(4)) == "4");
    CHECK_THROWS_AS(parse_rational("x/2"), FormatError);
}

TEST_CASE("sequence round trip") {
    auto seq = build_sequence(7, make_schedule(5, Rational(3, 2), 16), 12);
    auto path = (std::filesystem::temp_directory_path() / "endlam_io_seq.json").string();
    save_sequence(path, seq);
    auto back = load_sequence(path);
    CHECK(back.p == 7);
    CHECK(back.depth == 12);
    CHECK(back.schedule.e == seq.schedule.e);
    CHECK(back.schedule.a == Rational(3, 2));
    for (int k = 0; k <= 12; ++k) {
        CHECK(back.gamma[k].coords == seq.gamma[k].coords);
        CHECK(back.words[k].letters.size() == seq.words[k].letters.size());
    }
    // provenance survives: transport still works
    CHECK(intersection_detail(back.gamma[3], back.gamma[11]).method == Method::transport);
    CHECK(intersection_number(back.gamma[3], back.gamma[11]) == intersection_number(seq.gamma[3], seq.gamma[11]));
    // second save is byte identical
    auto path2 = path + ".2";
    save_sequence(path2, back);
    CHECK(read_file(path) == read_file(path2));
}

TEST_CASE("malformed sequences") {
    auto j = sequence_to_json(build_sequence(5, make_schedule(3, 2, 8), 5));
    auto bad = j;
    bad["depth"] = 9;
    CHECK_THROWS_AS(sequence_from_json(bad), FormatError);
    bad = j;
    bad["curves"][0]["coords"][0] = 5;  // numbers must be strings
    CHECK_THROWS_AS(sequence_from_json(bad), FormatError);
    bad = j;
    bad["curves"][1]["coords"][0] = "-1";
    CHECK_THROWS_AS(sequence_from_json(bad), FormatError);
    bad = j;
    bad["aux"] = json::array();
    CHECK_THROWS_AS(sequence_from_json(bad), FormatError);
    bad = j;
    bad["p"] = 6;
    CHECK_THROWS_AS(sequence_from_json(bad), DomainError);
}

TEST_CASE("csv quoting") {
    Csv c({"a", "b"});
    c.row({"x,y", "say \"hi\""});
    CHECK(c.str() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
    CHECK_THROWS(c.row({"only one"}));
    CHECK(fmt_double(0.1) == "0.1");
    CHECK(fmt_double(1.0 / 3) == "0.333333333333333");
}

TEST_CASE("constants files") {
    auto dir = std::filesystem::temp_directory_path();
    auto good = (dir / "endlam_c1.txt").string(), bad = (dir / "endlam_c2.txt").string();
    write_file(good, "# tuned\nB0 = 12\nG0=50\n");
    auto vc = load_constants(good);
    CHECK(vc.B0 == 12);
    CHECK(vc.B() == 50);
    CHECK(vc.E0() == 154);
    write_file(bad, "B0 = -1\n");
    CHECK_THROWS_AS(load_constants(bad), FormatError);
    write_file(bad, "Q = 3\n");
    CHECK_THROWS_AS(load_constants(bad), FormatError);
    write_file(bad, "B0 3\n");
    CHECK_THROWS_AS(load_constants(bad), FormatError);
}
