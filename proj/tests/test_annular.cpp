#include <catch_amalgamated.hpp>

#include <endlam/subproj.hpp>

using namespace endlam;

TEST_CASE("exact coefficient of a curve against its twists") {
    for (int p : {5, 7}) {
        const auto& S = build_surface(p);
        Curve axis = interval_curve(S, {0, 1});
        Curve a = interval_curve(S, {1, 1});
        Curve b = interval_curve(S, {p - 2, 2});
        CHECK(annular_coeff_exact(axis, a, a).value == 1);
        for (long n : {-4L, -1L, 1L, 2L, 5L}) {
            CHECK(annular_coeff_exact(axis, a, dehn_twist(a, axis, n)).value == std::labs(n) + 2);
            CHECK(annular_coeff_exact(axis, b, dehn_twist(b, axis, n)).value == std::labs(n) + 2);
        }
    }
}

TEST_CASE("twist offset of a curve and its own twist is the power") {
    const auto& S = build_surface(7);
    Curve axis = interval_curve(S, {3, 1});
    for (IntervalLabel L : {IntervalLabel{2, 1}, IntervalLabel{4, 2}, IntervalLabel{1, 3}}) {
        Curve a = interval_curve(S, L);
        if (intersection_number(a, axis) == 0) continue;
        for (long n : {-6L, -1L, 1L, 3L, 40L}) CHECK(twist_offset(axis, a, dehn_twist(a, axis, n)) == Rational(n));
    }
}

TEST_CASE("slope coefficient brackets the exact one") {
    for (int p : {5, 7}) {
        auto seq = build_sequence(p, make_schedule(1, 2, 20), 2 * ((p - 1) / 2) + 3);
        IntersectionTable tab(seq);
        SequenceCoeffs c(seq, tab);
        int n = 0;
        for (int k = 0; k <= seq.depth; ++k)
            for (int a = 0; a <= seq.depth; ++a)
                for (int b = a; b <= seq.depth; ++b) {
                    if (a == k || b == k || tab(a, k) == 0 || tab(b, k) == 0) continue;
                    AnnularCoeff ex;
                    try {
                        ex = c.exact(k, a, b);
                    } catch (const OracleScaleExceeded&) {
                        continue;
                    }
                    AnnularCoeff sl = c.slope(k, a, b);
                    CHECK(ex.value >= sl.lower());
                    CHECK(ex.value <= sl.upper());
                    ++n;
                }
        CHECK(n > 10);
    }
}

TEST_CASE("twisted triples sit within 4 of e_k") {
    for (int p : {5, 7}) {
        const int m = (p - 1) / 2;
        auto seq = build_sequence(p, make_schedule(1, 2, 12), 3 + 2 * m);
        IntersectionTable tab(seq);
        SequenceCoeffs c(seq, tab);
        for (int k = m; k + m <= seq.depth; ++k) {
            if (seq.e(k) > 8) break;
            AnnularCoeff d = c.exact(k, k - m, k + m);
            BigInt dev = abs_diff(d.value, seq.e(k));
            CHECK(dev <= 4);
            AnnularCoeff r = c.estimate(k, k - m, k + m);
            CHECK(abs_diff(r.value, d.value) <= r.uncertainty);
        }
    }
}

TEST_CASE("ratio estimator values") {
    CHECK(annular_estimate_values(100, 3, 4).value == 8);
    CHECK(annular_estimate_values(6, 2, 2).value == 2);  // 1.5 rounds up
    CHECK(annular_estimate_values(10, 1, 1, 3).uncertainty == 3);
    CHECK_THROWS_AS(annular_estimate_values(10, 0, 1), DisjointFromAxis);
}

TEST_CASE("disjoint curves have no projection") {
    const auto& S = build_surface(5);
    Curve axis = base_curve(S, 0);
    CHECK_THROWS_AS(annular_coeff_exact(axis, base_curve(S, 1), base_curve(S, 2)), DisjointFromAxis);
    auto seq = build_sequence(5, make_schedule(2, 2, 10), 6);
    IntersectionTable tab(seq);
    SequenceCoeffs c(seq, tab);
    CHECK_THROWS_AS(c(3, 2, 5), DisjointFromAxis);
}

TEST_CASE("offset rounding") {
    CHECK(coeff_from_offset(Rational(5, 2)).value == 5);
    CHECK(coeff_from_offset(Rational(-7, 3)).value == 4);
    CHECK(coeff_from_offset(Rational(0)).value == 2);
}
