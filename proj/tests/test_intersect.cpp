#include <catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace endlam;

TEST_CASE("transport agrees with the chord oracle on small sequences") {
    for (int p : {5, 7}) {
        const int m = (p - 1) / 2, depth = 2 * m + 2;
        auto sch = make_schedule(1, 2, depth + m);
        auto seq = build_sequence(p, sch, depth);
        auto g = oracle::chord_sequence(p, sch, depth);
        for (int i = 0; i <= depth; ++i)
            for (int k = 0; k <= depth; ++k) {
                Intersection r = intersection_detail(seq.gamma[i], seq.gamma[k]);
                CHECK(r.value == oracle::inter(g[i], g[k]));
                CHECK(oracle_intersection(seq.gamma[i], seq.gamma[k]) == r.value);
            }
    }
}

TEST_CASE("frozen intersections on S_{0,5}, e_k = 2^k") {
    auto seq = build_sequence(5, make_schedule(1, 2, 8), 6);
    const long row0[] = {0, 0, 2, 2, 16, 48, 544};
    const long row1[] = {0, 0, 0, 2, 2, 32, 96};
    for (int k = 0; k <= 6; ++k) {
        CHECK(intersection_number(seq.gamma[0], seq.gamma[k]) == row0[k]);
        CHECK(intersection_number(seq.gamma[1], seq.gamma[k]) == row1[k]);
    }
}

TEST_CASE("intersection is symmetric and vanishes on the diagonal") {
    auto seq = build_sequence(7, make_schedule(3, 2, 12), 9);
    for (int i = 0; i <= 9; ++i) {
        CHECK(intersection_number(seq.gamma[i], seq.gamma[i]) == 0);
        for (int k = 0; k <= 9; ++k)
            CHECK(intersection_number(seq.gamma[i], seq.gamma[k]) == intersection_number(seq.gamma[k], seq.gamma[i]));
    }
}

TEST_CASE("filling census") {
    for (int p : {5, 7, 9}) {
        const auto& S = build_surface(p);
        const int m = S.m();
        std::vector<Curve> win, half;
        for (int j = 0; j < 2 * m; ++j) win.push_back(base_curve(S, j));
        for (int j = 0; j < m; ++j) half.push_back(base_curve(S, j));
        auto cert = is_filling(win);
        CHECK(cert.verdict);
        CHECK(cert.euler_sum() - cert.crossings == 2 - p);
        CHECK_FALSE(is_filling(half).verdict);
    }
}

TEST_CASE("pants completion gives p-3 disjoint distinct curves") {
    for (int p : {5, 7, 9}) {
        const int m = (p - 1) / 2;
        auto seq = build_sequence(p, make_schedule(2, 2, 4 * m), 3 * m);
        for (int k = 0; k + m - 1 <= seq.depth; k += 2) {
            std::vector<Curve> sigma(seq.gamma.begin() + k, seq.gamma.begin() + k + m);
            PantsData pd = complete_to_pants(sigma, k);
            std::vector<Curve> all = sigma;
            all.insert(all.end(), pd.completion.begin(), pd.completion.end());
            REQUIRE(static_cast<int>(all.size()) == p - 3);
            for (size_t a = 0; a < all.size(); ++a)
                for (size_t b = a + 1; b < all.size(); ++b) {
                    CHECK(intersection_number(all[a], all[b]) == 0);
                    CHECK_FALSE(all[a].same_class(all[b]));
                }
        }
    }
}

TEST_CASE("curves on different surfaces are rejected") {
    CHECK_THROWS_AS(intersection_number(base_curve(build_surface(5), 0), base_curve(build_surface(7), 0)),
                    std::invalid_argument);
}
