#pragma once
// Annular projection coefficients d_gamma(a, b).
//
// Exact: every crossing of a with the axis gives a lift of a across a fixed
// lift of the axis in the universal cover.  The axis lift runs through tiles
// t = ..., -1, 0, 1, ... (tile t holds the chord after crossing t of the axis
// word).  A lift leaves the strip through some side y of some tile on each
// of the two boundary arcs; (t, position of y along the arc, tie-break)
// orders its ideal endpoints.  Two lifts of arcs in the annulus cross once
// for every deck translate that swaps their order on one side only.

#include <cmath>
#include <functional>
#include <optional>

#include "intersect.hpp"

namespace endlam {

enum class CoeffMethod { exact, estimated };

struct AnnularCoeff {
    BigInt value = 0;
    BigInt uncertainty = 0;
    CoeffMethod method = CoeffMethod::exact;

    BigInt lower() const { return value > uncertainty ? BigInt(value - uncertainty) : BigInt(0); }
    BigInt upper() const { return value + uncertainty; }
};

struct DisjointFromAxis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace annular_detail {

using chord_detail::ccw_order;
using chord_detail::mod;
using chord_detail::sheet_after;

struct Ray {
    const std::vector<int>* w;
    long start;
    int dir;
    int at(long l) const {
        long L = static_cast<long>(w->size());
        return (*w)[mod(start + dir * l, L)];
    }
};

// +1 if A meets side ray(0) nearer its far vertex v_{s+1}, -1 if B does,
// 0 if the rays never separate
inline int compare_rays(const Ray& A, const Ray& B, int p, long limit) {
    for (long l = 1; l < limit; ++l) {
        int ua = A.at(l), ub = B.at(l);
        if (ua == ub) continue;
        int z = A.at(l - 1);
        bool a_near = mod(ua - z, p) < mod(ub - z, p);
        bool larger = a_near != ((l - 1) % 2 == 1);
        return larger ? 1 : -1;
    }
    return 0;
}

struct End {
    long t;
    int theta;
    bool ccw_arc;
    bool front;
    Ray ray;
};

struct Lift {
    End x;  // end on the ccw arc
    End y;
};

inline bool on_ccw_arc(const std::vector<int>& G, int p, long t, int side) {
    long Lg = static_cast<long>(G.size());
    Sheet f = sheet_after(mod(t, 2));
    int o0 = ccw_order(p, f, G[mod(t, Lg)]), o1 = ccw_order(p, f, side), o2 = ccw_order(p, f, G[mod(t + 1, Lg)]);
    long dx = mod(o1 - o0, p), db = mod(o2 - o0, p);
    return 0 < dx && dx < db;
}

inline End make_end(const std::vector<int>& G, int p, long t, Ray r) {
    long Lg = static_cast<long>(G.size());
    Sheet f = sheet_after(mod(t, 2));
    int side = r.at(0);
    bool ccw = on_ccw_arc(G, p, t, side);
    int oe = ccw_order(p, f, G[mod(t, Lg)]), oy = ccw_order(p, f, side);
    int theta = static_cast<int>(ccw ? mod(oy - oe, p) : mod(oe - oy, p));
    return End{t, theta, ccw, f == Sheet::front, r};
}

// lifts of the curve with word A crossing the axis lift with word G
inline std::vector<Lift> lifts(const std::vector<int>& G, const std::vector<int>& A, int p) {
    const long La = static_cast<long>(A.size()), Lg = static_cast<long>(G.size());
    std::vector<Lift> out;
    auto add = [&](End e1, End e2) {
        if (e1.ccw_arc == e2.ccw_arc) return;
        if (!e1.ccw_arc) std::swap(e1, e2);
        out.push_back({e1, e2});
    };
    for (long i = 0; i < La; ++i) {
        Sheet fa = sheet_after(i);
        int x1 = A[i], y1 = A[mod(i + 1, La)];
        for (long j = 0; j < Lg; ++j) {
            if (sheet_after(j) != fa) continue;
            int x2 = G[j], y2 = G[mod(j + 1, Lg)];
            if (x2 == x1 || x2 == y1 || y2 == x1 || y2 == y1) continue;
            End fwd = make_end(G, p, j, Ray{&A, i + 1, 1});
            End bwd = make_end(G, p, j, Ray{&A, i, -1});
            add(fwd, bwd);
        }
    }
    for (long i = 0; i < La; ++i)
        for (long j = 0; j < Lg; ++j) {
            if (A[i] != G[j]) continue;
            for (int eps : {1, -1}) {
                Sheet fa_before = sheet_after(mod(i - 1, 2));
                Sheet fb_before = eps == 1 ? sheet_after(mod(j - 1, 2)) : sheet_after(j);
                if (fa_before != fb_before) continue;
                if (A[mod(i - 1, La)] == G[mod(j - eps, Lg)]) continue;
                long l = 1;
                bool wraps = false;
                while (A[mod(i + l, La)] == G[mod(j + eps * l, Lg)]) {
                    ++l;
                    if (l > La * Lg) {
                        wraps = true;
                        break;
                    }
                }
                if (wraps) continue;
                long t_start = eps == 1 ? j - 1 : j;
                long t_end = eps == 1 ? j + l - 1 : j - l;
                End s = make_end(G, p, t_start, Ray{&A, i - 1 + La, -1});
                End e = make_end(G, p, t_end, Ray{&A, i + l, 1});
                add(s, e);
            }
        }
    return out;
}

// order of two ends on the same arc along the axis direction: -1, 0, +1
inline int order(const End& a, const End& b, long shift_b, int p, long limit) {
    long tb = b.t + shift_b;
    if (a.t != tb) return a.t < tb ? -1 : 1;
    if (a.theta != b.theta) return a.theta < b.theta ? -1 : 1;
    int c = compare_rays(a.ray, b.ray, p, limit);
    if (c == 0) return 0;
    // larger position on the side is later along the ccw arc in a front tile
    bool later_if_larger = (a.ccw_arc == a.front);
    return (c > 0) == later_if_larger ? 1 : -1;
}

inline long crossing_count(const Lift& a, const Lift& b, long Lg, int p, long limit) {
    long lo_a = std::min(a.x.t, a.y.t), hi_a = std::max(a.x.t, a.y.t);
    long lo_b = std::min(b.x.t, b.y.t), hi_b = std::max(b.x.t, b.y.t);
    long n0 = (lo_a - hi_b) / Lg - 2, n1 = (hi_a - lo_b) / Lg + 2;
    long count = 0;
    for (long n = n0; n <= n1; ++n) {
        int cx = order(a.x, b.x, n * Lg, p, limit);
        int cy = order(a.y, b.y, n * Lg, p, limit);
        if (cx != 0 && cy != 0 && cx != cy) ++count;
    }
    return count;
}

}  // namespace annular_detail

// Exact coefficient in the chord model with the axis given as a chord word.
inline BigInt annular_exact_chords(const ChordCurve& axis, const ChordCurve& a, const ChordCurve& b) {
    using namespace annular_detail;
    const int p = axis.p;
    auto la = lifts(axis.sides, a.sides, p);
    auto lb = lifts(axis.sides, b.sides, p);
    if (la.empty() || lb.empty()) throw DisjointFromAxis("curve disjoint from axis");
    const long Lg = static_cast<long>(axis.size());
    const long limit = static_cast<long>(2 * (a.size() + b.size() + axis.size()) + 8);
    long best = 0;
    for (const auto& x : la)
        for (const auto& y : lb) best = std::max(best, crossing_count(x, y, Lg, p, limit));
    return BigInt(1 + best);
}

// Pull the configuration back so the axis is a side curve, then count.
inline AnnularCoeff annular_coeff_exact(const Curve& axis, const Curve& a, const Curve& b,
                                        size_t cap = default_oracle_cap) {
    if (axis.p != a.p || axis.p != b.p) throw std::invalid_argument("mismatched surfaces");
    const auto& S = build_surface(axis.p);
    int side;
    Weights wa = a.coords, wb = b.coords;
    if (auto L = S.recognize(axis.coords); L && L->t == 1) {
        side = L->a;
    } else if (axis.word && axis.base.t == 1) {
        MCWord inv = inverse(*axis.word, axis.p);
        wa = apply_word_coords(S, inv, wa);
        wb = apply_word_coords(S, inv, wb);
        side = axis.base.a;
    } else {
        throw UnsupportedError("annular coefficient needs a side-curve axis or one with provenance");
    }
    if (S.intersect_interval(wa, {side, 1}) == 0 || S.intersect_interval(wb, {side, 1}) == 0)
        throw DisjointFromAxis("curve disjoint from axis");
    ChordCurve ca = trace_coords(S, wa, cap), cb = trace_coords(S, wb, cap);
    if (ca.size() + cb.size() > cap) throw OracleScaleExceeded("oracle scale exceeded");
    AnnularCoeff r;
    r.value = annular_exact_chords(side_chord_curve(axis.p, side), ca, cb);
    r.method = CoeffMethod::exact;
    return r;
}

inline BigInt round_ratio(const BigInt& num, const BigInt& den) {
    // nearest integer, halves rounded up
    return (2 * num + den) / (2 * den);
}

inline AnnularCoeff annular_estimate_values(const BigInt& iab, const BigInt& iax, const BigInt& ibx, long delta = 3) {
    if (iax == 0 || ibx == 0) throw DisjointFromAxis("curve disjoint from axis");
    AnnularCoeff r;
    r.value = round_ratio(iab, iax * ibx);
    r.uncertainty = delta;
    r.method = CoeffMethod::estimated;
    return r;
}

// Relative twist read off the tails of f(n) = i(D^n a, b), which are exactly
// affine with slope P = i(a,axis) i(b,axis) once |n| is large:
// f(n) = P|n| + beta_sign(n).  tau = (beta_- - beta_+) / 2P, so that
// tau(a, D^n a) = n.
inline Rational twist_offset(const std::function<BigInt(const BigInt&)>& f, const BigInt& P, const BigInt& iab) {
    if (P == 0) throw DisjointFromAxis("curve disjoint from axis");
    BigInt N = 2 * (iab / P) + 4;
    auto tail = [&](const BigInt& n) { return f(n) - P * abs(n); };
    for (int it = 0; it < 64; ++it, N *= 2) {
        BigInt bp = tail(N), bm = tail(-N);
        if (bp == tail(2 * N) && bm == tail(-2 * N)) return Rational(bm - bp, 2 * P);
    }
    throw std::runtime_error("twist tails did not stabilise");
}

// Calibrated against the exact method: |tau| + 1 <= d <= |tau| + 9/4 on the
// small-scale family; value round(|tau|) + 2 with a margin of one
inline constexpr long slope_delta = 2;

inline AnnularCoeff coeff_from_offset(const Rational& tau) {
    AnnularCoeff r;
    Rational t = abs(tau);
    BigInt fl = numerator(t) / denominator(t);
    r.value = (2 * (t - fl) >= 1 ? fl + 1 : fl) + 2;
    r.uncertainty = slope_delta;
    r.method = CoeffMethod::estimated;
    return r;
}

inline Rational twist_offset(const Curve& axis, const Curve& a, const Curve& b) {
    BigInt P = intersection_number(a, axis) * intersection_number(b, axis);
    auto f = [&](const BigInt& n) { return intersection_number(dehn_twist(a, axis, n), b); };
    return twist_offset(f, P, intersection_number(a, b));
}

inline AnnularCoeff annular_coeff_slope(const Curve& axis, const Curve& a, const Curve& b) {
    return coeff_from_offset(twist_offset(axis, a, b));
}

inline AnnularCoeff annular_coeff_estimate(const Curve& axis, const Curve& a, const Curve& b, long delta = 3) {
    return annular_estimate_values(intersection_number(a, b), intersection_number(a, axis),
                                   intersection_number(b, axis), delta);
}

}  // namespace endlam
