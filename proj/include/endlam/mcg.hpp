#pragma once
// Curves with provenance, mapping-class words over {rho, twists}, and their
// action on normal coordinates.
//
// Composition: the word [L1, L2, ..., Ln] is the map L1 o L2 o ... o Ln, so
// Ln acts first.  Phi_k = phi_1 ... phi_k and phi_k = [D_alpha^{e_{k+m-1}}, rho].

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schedule.hpp"
#include "surface.hpp"

namespace endlam {

struct MCWord;

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A curve, optionally remembering that it equals word(base) where base is
// the interval curve `base` (gamma_0 = I(0,1) unless stated otherwise).
struct Curve {
    int p = 0;
    Weights coords;
    std::shared_ptr<const MCWord> word;
    IntervalLabel base{0, 1};

    bool same_class(const Curve& o) const { return p == o.p && coords == o.coords; }
};

struct Letter {
    bool rho = true;
    std::shared_ptr<const Curve> axis;  // set for twists
    BigInt exp = 0;
};

struct MCWord {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
};

inline bool same_generator(const Letter& x, const Letter& y) {
    if (x.rho != y.rho) return false;
    if (x.rho) return true;
    return x.axis->coords == y.axis->coords;
}

// Merge equal neighbours and drop trivial letters.  rho has order p, so its
// exponents are kept in [0, p).
inline MCWord canonical(const MCWord& w, int p) {
    std::vector<Letter> out;
    auto norm = [p](Letter& L) {
        if (L.rho) {
            BigInt r = L.exp % p;
            if (r < 0) r += p;
            L.exp = r;
        }
    };
    for (Letter L : w.letters) {
        norm(L);
        if (L.exp == 0) continue;
        if (!out.empty() && same_generator(out.back(), L)) {
            out.back().exp += L.exp;
            norm(out.back());
            if (out.back().exp == 0) out.pop_back();
            continue;
        }
        out.push_back(std::move(L));
    }
    return MCWord{std::move(out)};
}

inline MCWord compose(const MCWord& a, const MCWord& b, int p) {
    MCWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return canonical(r, p);
}

inline MCWord inverse(const MCWord& w, int p) {
    MCWord r;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        Letter L = *it;
        L.exp = -L.exp;
        r.letters.push_back(L);
    }
    return canonical(r, p);
}

inline Letter rho_letter(long n) { return Letter{true, nullptr, BigInt(n)}; }

inline Letter twist_letter(const Curve& axis, const BigInt& n) {
    return Letter{false, std::make_shared<const Curve>(axis), n};
}

inline Curve interval_curve(const SurfaceModel& S, IntervalLabel L) {
    return Curve{S.p(), S.interval_coords(L), nullptr, {0, 1}};
}

inline Weights apply_word_coords(const SurfaceModel& S, const MCWord& w, Weights x);

// D_axis^n on raw coordinates.  Supported axes: side curves, and images of
// side curves under a recorded word (twist conjugated through the word).
inline Weights twist_coords(const SurfaceModel& S, const Curve& axis, const BigInt& n, const Weights& x) {
    if (n == 0) return x;
    if (auto L = S.recognize(axis.coords)) {
        if (L->t == 1) return S.twist_side(x, L->a, n);
        throw UnsupportedError("twist about a separating curve of more than two punctures");
    }
    if (axis.word && axis.base.t == 1) {
        Weights y = apply_word_coords(S, inverse(*axis.word, S.p()), x);
        y = S.twist_side(y, axis.base.a, n);
        return apply_word_coords(S, *axis.word, std::move(y));
    }
    throw UnsupportedError("twist axis has no usable provenance");
}

inline Weights apply_word_coords(const SurfaceModel& S, const MCWord& w, Weights x) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (it->rho) {
            long r = static_cast<long>(BigInt(it->exp % S.p()));
            x = S.rotate_R(std::move(x), 2 * r);
        } else {
            x = twist_coords(S, *it->axis, it->exp, x);
        }
    }
    return x;
}

inline Curve apply_word(const MCWord& w, const Curve& c) {
    const auto& S = build_surface(c.p);
    Curve r{c.p, apply_word_coords(S, w, c.coords), nullptr, {0, 1}};
    if (c.word) {
        r.word = std::make_shared<const MCWord>(compose(w, *c.word, c.p));
        r.base = c.base;
    } else if (auto L = S.recognize(c.coords)) {
        r.word = std::make_shared<const MCWord>(canonical(w, c.p));
        r.base = *L;
    }
    return r;
}

inline Curve dehn_twist(const Curve& c, const Curve& axis, const BigInt& power) {
    if (c.p != axis.p) throw std::invalid_argument("mismatched surfaces");
    MCWord w{{twist_letter(axis, power)}};
    return apply_word(w, c);
}

inline Curve rotate(const Curve& c, long n) {
    MCWord w{{rho_letter(n)}};
    return apply_word(w, c);
}

// gamma_j = rho^j(gamma_0) for 0 <= j <= 2m-1
inline Curve base_curve(const SurfaceModel& S, int j) {
    if (j < 0 || j > 2 * S.m() - 1) throw std::out_of_range("base curve index out of range");
    Curve g0 = interval_curve(S, {0, 1});
    if (j == 0) return g0;
    return rotate(g0, j);
}

inline Curve alpha_curve(const SurfaceModel& S) { return interval_curve(S, {S.p() - 1, 1}); }

// (phi_k, Phi_k)
inline std::pair<MCWord, MCWord> generator_words(const SurfaceModel& S, const TwistSchedule& sch, int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const int m = S.m();
    Curve alpha = alpha_curve(S);
    auto phi = [&](int j) {
        return MCWord{{twist_letter(alpha, sch[j + m - 1]), rho_letter(1)}};
    };
    MCWord Phi;
    for (int j = 1; j <= k; ++j) {
        MCWord f = phi(j);
        Phi.letters.insert(Phi.letters.end(), f.letters.begin(), f.letters.end());
    }
    Phi = canonical(Phi, S.p());
    MCWord ph = k >= 1 ? canonical(phi(k), S.p()) : MCWord{};
    return {ph, Phi};
}

}  // namespace endlam
