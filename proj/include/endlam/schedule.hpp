#pragma once
// Twist schedules e_0, e_1, ... with growth ratio a and the verifier floor.

#include <stdexcept>
#include <string>
#include <vector>

#include "triangulation.hpp"

namespace endlam {

struct VerifierConstants {
    long B0 = 10;
    long G0 = 100;

    long B() const { return std::max({3L, B0 + 1, G0}); }
    long E0() const { return 3 * B() + 4; }
};

struct TwistSchedule {
    std::vector<BigInt> e;
    Rational a = 2;
    BigInt E0 = 304;
    bool gate = false;  // enforce e_0 >= E0

    size_t size() const { return e.size(); }

    const BigInt& operator[](size_t k) const {
        if (k >= e.size()) throw std::out_of_range("schedule too short: index " + std::to_string(k));
        return e[k];
    }

    bool growth_ok() const {
        for (size_t k = 0; k + 1 < e.size(); ++k)
            if (Rational(e[k + 1]) < a * Rational(e[k])) return false;
        return true;
    }

    bool gate_ok() const { return !e.empty() && e.front() >= E0; }
};

inline BigInt ceil_rational(const Rational& x) {
    BigInt n = numerator(x), d = denominator(x);
    BigInt q = n / d;
    if (q * d < n) q += 1;
    return q;
}

// e_{k+1} = ceil(a e_k).  For integer a this is e0 a^k; for fractional a the
// recursive form is what keeps e_{k+1} >= a e_k true.
inline TwistSchedule make_schedule(const BigInt& e0, const Rational& a, int depth, bool strict = false,
                                   const VerifierConstants& vc = {}) {
    if (e0 < 1) throw std::invalid_argument("e0 must be >= 1");
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (strict && a <= 1) throw std::invalid_argument("growth ratio must exceed 1");
    if (a < 1) throw std::invalid_argument("growth ratio must be >= 1");
    TwistSchedule s;
    s.a = a;
    s.E0 = vc.E0();
    s.gate = strict;
    s.e.push_back(e0);
    for (int k = 1; k <= depth; ++k) s.e.push_back(ceil_rational(a * Rational(s.e.back())));
    return s;
}

// explicit values; a is taken as the least ratio so the growth invariant holds
inline TwistSchedule explicit_schedule(std::vector<BigInt> e, const VerifierConstants& vc = {}) {
    if (e.empty()) throw std::invalid_argument("empty schedule");
    TwistSchedule s;
    s.e = std::move(e);
    s.E0 = vc.E0();
    Rational a = 0;
    bool first = true;
    for (size_t k = 0; k + 1 < s.e.size(); ++k) {
        if (s.e[k] < 1) throw std::invalid_argument("schedule entries must be positive");
        Rational r(s.e[k + 1], s.e[k]);
        if (first || r < a) a = r;
        first = false;
    }
    s.a = first ? Rational(1) : a;
    return s;
}

}  // namespace endlam
