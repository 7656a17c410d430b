#pragma once
// Twisting checks along a built sequence: the nearly-partial-order estimate,
// curve complex distance certificates and the Behrstock inequality.

#include <string>
#include <vector>

#include "annular.hpp"
#include "seqgen.hpp"

namespace endlam {

// Phi_to^{-1} Phi_from on coordinates, one phi at a time
inline Weights move_along(const SurfaceModel& S, const TwistSchedule& sch, Weights x, int from, int to) {
    const int m = S.m();
    for (int j = from + 1; j <= to; ++j) {
        x = S.twist_side(x, S.p() - 1, -sch[j + m - 1]);
        x = S.rotate_R(std::move(x), -2);
    }
    for (int j = from; j > to; --j) x = apply_phi(S, sch, j, std::move(x));
    return x;
}

inline constexpr size_t annular_exact_budget = 4000;

// d_{gamma_k}(gamma_a, gamma_b).  Everything is pulled back by Phi_k so the
// axis is gamma_0; exact when that configuration is within oracle scale,
// otherwise the twist-slope value.  The ratio estimator is kept separately.
class SequenceCoeffs {
public:
    SequenceCoeffs(const CurveSequence& seq, const IntersectionTable& tab, size_t cap = default_oracle_cap,
                   long delta = 3, bool allow_exact = true)
        : seq_(seq), tab_(tab), S_(build_surface(seq.p)), cap_(cap), delta_(delta), allow_exact_(allow_exact) {}

    AnnularCoeff operator()(int k, int a, int b) const {
        if (tab_(a, k) == 0 || tab_(b, k) == 0) throw DisjointFromAxis("curve disjoint from axis");
        if (allow_exact_ && small_enough(k, a, b)) {
            try {
                return exact(k, a, b);
            } catch (const OracleScaleExceeded&) {
            }
        }
        return slope(k, a, b);
    }

    AnnularCoeff exact(int k, int a, int b) const {
        ChordCurve ca = trace_coords(S_, pulled(a, k), cap_), cb = trace_coords(S_, pulled(b, k), cap_);
        if (ca.size() + cb.size() > cap_) throw OracleScaleExceeded("oracle scale exceeded");
        AnnularCoeff r;
        r.value = annular_exact_chords(side_chord_curve(seq_.p, 0), ca, cb);
        return r;
    }

    Rational offset(int k, int a, int b) const {
        const Weights x = pulled(a, k);
        auto f = [&](const BigInt& n) {
            Weights y = S_.twist_side(x, 0, n);
            return S_.intersect_interval(move_along(S_, seq_.schedule, std::move(y), k, b), {0, 1});
        };
        return twist_offset(f, tab_(a, k) * tab_(b, k), tab_(a, b));
    }

    AnnularCoeff slope(int k, int a, int b) const { return coeff_from_offset(offset(k, a, b)); }

    AnnularCoeff estimate(int k, int a, int b) const {
        return annular_estimate_values(tab_(a, b), tab_(a, k), tab_(b, k), delta_);
    }

    long delta() const { return delta_; }

private:
    Weights pulled(int a, int k) const { return move_along(S_, seq_.schedule, S_.interval_coords({0, 1}), a, k); }

    // a traced chord curve has at least i(., gamma_0) letters
    // the lift comparison is superlinear, so exact has its own budget below the oracle cap
    bool small_enough(int k, int a, int b) const {
        BigInt lim(std::min(cap_, annular_exact_budget));
        return tab_(a, k) + tab_(b, k) <= lim;
    }

    const CurveSequence& seq_;
    const IntersectionTable& tab_;
    const SurfaceModel& S_;
    size_t cap_;
    long delta_;
    bool allow_exact_;
};

inline bool in_monoid(long n, int m) {
    if (n <= 0) return false;
    for (long y = 0; y * (m + 1) <= n; ++y)
        if ((n - y * (m + 1)) % m == 0) return true;
    return false;
}

struct TripleRow {
    int i, k, j;
    AnnularCoeff d;
    BigInt e_k, e_i;
    bool pass;
};

struct LocalGlobalReport {
    VerifierConstants consts;
    bool hypothesis_met = true;
    std::vector<TripleRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

inline BigInt abs_diff(const BigInt& a, const BigInt& b) { return a > b ? BigInt(a - b) : BigInt(b - a); }

// |d_{gamma_k}(gamma_i, gamma_j) - e_k| <= 2 B0 + 4, widened by the
// estimator half-width when the coefficient is estimated
inline LocalGlobalReport local_to_global_check(const CurveSequence& seq, const VerifierConstants& vc,
                                               const IntersectionTable& tab, size_t max_samples = 2000,
                                               size_t cap = default_oracle_cap, long delta = 3) {
    LocalGlobalReport rep;
    rep.consts = vc;
    rep.hypothesis_met = !seq.schedule.e.empty() && seq.schedule.e.front() >= vc.E0();
    SequenceCoeffs coeff(seq, tab, cap, delta);
    std::vector<std::array<int, 3>> triples;
    for (int k = 1; k < seq.depth; ++k)
        for (int i = 0; i < k; ++i)
            for (int j = k + 1; j <= seq.depth; ++j)
                if (in_monoid(k - i, seq.m) && in_monoid(j - k, seq.m)) triples.push_back({i, k, j});
    size_t stride = triples.size() > max_samples ? (triples.size() + max_samples - 1) / max_samples : 1;
    const BigInt tol = 2 * vc.B0 + 4;
    for (size_t n = 0; n < triples.size(); n += stride) {
        auto [i, k, j] = triples[n];
        AnnularCoeff d = coeff(k, i, j);
        BigInt dev = abs_diff(d.value, seq.e(k));
        bool pass = dev <= tol + d.uncertainty;
        rep.rows.push_back({i, k, j, d, seq.e(k), seq.e(i), pass});
    }
    return rep;
}

struct DistanceBounds {
    long lower = 0;
    long upper = 0;
    long q = 0;
    long markers_verified = 0;
    std::string method;  // exact, estimated or mixed
};

inline long qg_constant(int m) { return 2L * m * m + 2L * m - 1; }

// Marker certificate: delta_l = gamma_{i + l K}, l = 1..q-1, each with a
// certified d_{delta_l}(gamma_i, gamma_j) >= B.  A geodesic from gamma_i to
// gamma_j then has distinct vertices disjoint from gamma_i, each verified
// marker and gamma_j, so its length is at least (verified + 1).
inline DistanceBounds cc_distance_bounds(const CurveSequence& seq, const SequenceCoeffs& coeff, int i, int j,
                                         const VerifierConstants& vc = {}) {
    if (i < 0 || j > seq.depth || i >= j) throw std::out_of_range("need 0 <= i < j <= depth");
    DistanceBounds r;
    r.upper = j - i;
    const long K = qg_constant(seq.m);
    r.q = (j - i) / K;
    bool any_exact = false, any_est = false;
    if (r.q >= 1) {
        long verified = 0;
        for (long l = 1; l <= r.q - 1; ++l) {
            int k = static_cast<int>(i + l * K);
            AnnularCoeff d = coeff(k, i, j);
            (d.method == CoeffMethod::exact ? any_exact : any_est) = true;
            if (d.lower() >= vc.B()) ++verified;
        }
        r.markers_verified = verified;
        r.lower = verified + 1;
    } else {
        r.lower = seq.gamma[i].coords == seq.gamma[j].coords ? 0 : 1;
    }
    if (r.lower > r.upper) r.lower = r.upper;
    r.method = any_exact && any_est ? "mixed" : any_est ? "estimated" : any_exact ? "exact" : "none";
    return r;
}

struct BehrstockRow {
    int k, l;
    BigInt side_kl;  // d_{gamma_k}(gamma_l, mu), upper value
    BigInt side_lk;
    bool pass;
    std::string method;
};

struct BehrstockReport {
    long B0 = 10;
    BigInt empirical_max = 0;
    long skipped = 0;
    std::vector<BehrstockRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

// diam of pi_{gamma_k}({gamma_l} u mu) with mu the base marking gamma_0..gamma_{2m-1}
inline AnnularCoeff projection_diam(const CurveSequence& seq, const SequenceCoeffs& coeff, const IntersectionTable& tab,
                                    int k, int l) {
    std::vector<int> pts{l};
    for (int c = 0; c < 2 * seq.m; ++c)
        if (c != l) pts.push_back(c);
    std::vector<int> crossing;
    for (int c : pts)
        if (c != k && tab(c, k) != 0) crossing.push_back(c);
    AnnularCoeff best;
    bool exact = true;
    for (size_t a = 0; a < crossing.size(); ++a)
        for (size_t b = a; b < crossing.size(); ++b) {
            AnnularCoeff d = coeff(k, crossing[a], crossing[b]);
            if (d.method != CoeffMethod::exact) exact = false;
            if (d.upper() > best.upper()) best = d;
        }
    if (!exact) best.method = CoeffMethod::estimated;
    return best;
}

inline BehrstockReport behrstock_check(const CurveSequence& seq, const IntersectionTable& tab,
                                       const std::vector<std::pair<int, int>>& samples, const VerifierConstants& vc,
                                       size_t cap = default_oracle_cap, long delta = 3) {
    BehrstockReport rep;
    rep.B0 = vc.B0;
    SequenceCoeffs coeff(seq, tab, cap, delta);
    for (auto [k, l] : samples) {
        if (k == l || tab(k, l) == 0) {
            ++rep.skipped;  // axes must overlap
            continue;
        }
        AnnularCoeff a = projection_diam(seq, coeff, tab, k, l);
        AnnularCoeff b = projection_diam(seq, coeff, tab, l, k);
        // the smaller side, certified from above
        BigInt mn = std::min(a.upper(), b.upper());
        bool exact = a.method == CoeffMethod::exact && b.method == CoeffMethod::exact;
        rep.rows.push_back({k, l, a.upper(), b.upper(), mn <= vc.B0, exact ? "exact" : "estimated"});
        if (mn > rep.empirical_max) rep.empirical_max = mn;
    }
    return rep;
}

}  // namespace endlam
