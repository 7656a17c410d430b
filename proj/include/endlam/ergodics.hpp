#pragma once
// Intersection growth against the twist products A(i,k), convergence of the
// normalised residue subsequences and the singularity ratios that separate
// their limits.  Every asserted inequality is exact.

#include <cmath>
#include <string>
#include <vector>

#include "seqgen.hpp"

namespace endlam {

inline std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_pow(const Rational& a, long n) {
    Rational r = 1, base = n >= 0 ? a : Rational(1) / a;
    for (long i = 0; i < std::labs(n); ++i) r *= base;
    return r;
}

inline bool qualifying_pair(int i, int k, int m) {
    return (k - i >= 2 * m && (k - i) % m == 0) || (i <= 2 * m - 1 && k - i >= m * m + m - 1);
}

struct RatioRow {
    int i, k;
    BigInt inter;
    BigInt A;
    Rational ratio;
    bool qualifying;
};

struct AsymptoticsReport {
    std::vector<RatioRow> rows;
    Rational kappa = 0;   // max ratio over all pairs
    Rational kappa0 = 0;  // max of ratio and 1/ratio over qualifying pairs
    bool kappa0_finite = true;
    std::vector<Rational> kappa0_by_depth;  // index d: qualifying pairs with k <= d
};

inline AsymptoticsReport intersection_ratio_table(const CurveSequence& seq, const IntersectionTable& tab) {
    AsymptoticsReport rep;
    rep.kappa0_by_depth.assign(seq.depth + 1, Rational(0));
    for (int k = 1; k <= seq.depth; ++k) {
        Rational best = k > 0 ? rep.kappa0_by_depth[k - 1] : Rational(0);
        for (int i = 0; i < k; ++i) {
            RatioRow r{i, k, tab(i, k), twist_product(seq, i, k), 0, qualifying_pair(i, k, seq.m)};
            r.ratio = Rational(r.inter, r.A);
            if (r.ratio > rep.kappa) rep.kappa = r.ratio;
            if (r.qualifying) {
                if (r.inter == 0) {
                    rep.kappa0_finite = false;
                } else {
                    Rational v = std::max(r.ratio, Rational(1) / r.ratio);
                    if (v > best) best = v;
                }
            }
            rep.rows.push_back(std::move(r));
        }
        rep.kappa0_by_depth[k] = best;
        if (best > rep.kappa0) rep.kappa0 = best;
    }
    return rep;
}

struct RatioLemmaResult {
    long checked = 0;
    long failed = 0;
    std::string first_failure;
};

// A(i,k)/A(i,l) <= a^{1 - floor((l-i)/m)} on all i < k < l <= depth
inline RatioLemmaResult check_ratio_lemma(const CurveSequence& seq) {
    RatioLemmaResult res;
    const Rational a = seq.schedule.a;
    for (int i = 0; i <= seq.depth; ++i)
        for (int k = i + 1; k <= seq.depth; ++k) {
            BigInt Aik = twist_product(seq, i, k);
            for (int l = k + 1; l <= seq.depth; ++l) {
                BigInt Ail = twist_product(seq, i, l);
                ++res.checked;
                if (Rational(Aik, Ail) > rational_pow(a, 1 - (l - i) / seq.m)) {
                    if (res.failed++ == 0)
                        res.first_failure = "(" + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
                }
            }
        }
    return res;
}

struct ErgodicProxy {
    int h = 0;
    int k = 0;  // proxy depth: gamma_{h+km}
    std::vector<Rational> vector;
};

struct ResidueConvergence {
    int h = 0;
    std::vector<ErgodicProxy> proxies;
    std::vector<Rational> residuals;  // sup distance of consecutive proxies
    double fitted_rate = 0;
    Rational bound;                   // max(fit, 1/a), rounded up
    int burn_in = 0;
    bool decay_ok = true;
};

struct ConvergenceReport {
    std::vector<std::string> family_names;
    std::vector<std::string> excluded;
    std::vector<ResidueConvergence> residues;
    Rational cross_ratio_max = 0;  // distinctness of the deepest proxies of h = 0, 1
    bool distinct = false;
};

struct TestCurve {
    std::string name;
    Curve curve;
};

// gamma_0 .. gamma_{2m-1} plus the pants completion of gamma_0 .. gamma_{m-1}
inline std::vector<TestCurve> default_family(const CurveSequence& seq) {
    std::vector<TestCurve> fam;
    for (int j = 0; j < 2 * seq.m; ++j) fam.push_back({"gamma" + std::to_string(j), seq.gamma.at(j)});
    std::vector<Curve> sigma(seq.gamma.begin(), seq.gamma.begin() + seq.m);
    auto pants = complete_to_pants(sigma, 0);
    for (size_t c = 0; c < pants.completion.size(); ++c) fam.push_back({"pants" + std::to_string(c), pants.completion[c]});
    return fam;
}

inline BigInt family_intersection(const SurfaceModel& S, const Curve& delta, const Curve& g) {
    if (auto L = S.recognize(delta.coords)) return S.intersect_interval(g.coords, *L);
    return intersection_number(delta, g);
}

inline Rational rational_up(double x) {
    const long den = 1000000;
    return Rational(static_cast<long>(std::ceil(x * den)), den);
}

inline ConvergenceReport convergence_report(const CurveSequence& seq, const std::vector<TestCurve>& family_in) {
    const auto& S = build_surface(seq.p);
    const int m = seq.m;
    ConvergenceReport rep;
    // keep family members that meet the tail of every residue
    std::vector<TestCurve> family;
    for (const auto& t : family_in) {
        bool meets = true;
        for (int h = 0; h < m; ++h) {
            int last = h + ((seq.depth - h) / m) * m;
            if (family_intersection(S, t.curve, seq.gamma[last]) == 0) meets = false;
        }
        if (meets) {
            family.push_back(t);
            rep.family_names.push_back(t.name);
        } else {
            rep.excluded.push_back(t.name + ": disjoint from the tail, excluded");
        }
    }
    if (family.empty()) throw std::invalid_argument("no test curve meets the sequence tail");
    for (int h = 0; h < m; ++h) {
        ResidueConvergence rc;
        rc.h = h;
        rc.burn_in = m * m;
        for (int k = h == 0 ? 1 : 0; h + k * m <= seq.depth; ++k) {
            int n = h + k * m;
            BigInt A = n == 0 ? BigInt(1) : twist_product(seq, 0, n);
            ErgodicProxy px{h, k, {}};
            for (const auto& t : family) px.vector.push_back(Rational(family_intersection(S, t.curve, seq.gamma[n]), A));
            rc.proxies.push_back(std::move(px));
        }
        for (size_t s = 0; s + 1 < rc.proxies.size(); ++s) {
            Rational r = 0;
            for (size_t d = 0; d < family.size(); ++d)
                r = std::max(r, Rational(abs(rc.proxies[s + 1].vector[d] - rc.proxies[s].vector[d])));
            rc.residuals.push_back(r);
        }
        // least squares slope of log residual against step
        std::vector<std::pair<double, double>> pts;
        for (size_t s = 0; s < rc.residuals.size(); ++s)
            if (rc.residuals[s] > 0) pts.push_back({double(s), std::log(rc.residuals[s].convert_to<double>())});
        if (pts.size() >= 2) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0, n = double(pts.size());
            for (auto [x, y] : pts) {
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            rc.fitted_rate = std::exp((n * sxy - sx * sy) / (n * sxx - sx * sx));
        }
        rc.bound = std::max(rational_up(rc.fitted_rate), Rational(1) / seq.schedule.a);
        for (size_t s = rc.burn_in; s + 1 < rc.residuals.size(); ++s)
            if (rc.residuals[s + 1] > rc.bound * rc.residuals[s]) rc.decay_ok = false;
        rep.residues.push_back(std::move(rc));
    }
    if (m >= 2) {
        const auto& v0 = rep.residues[0].proxies.back().vector;
        const auto& v1 = rep.residues[1].proxies.back().vector;
        for (size_t x = 0; x < v0.size(); ++x)
            for (size_t y = 0; y < v0.size(); ++y) {
                if (v0[y] == 0 || v1[x] == 0) continue;
                Rational cr = (v0[x] / v0[y]) / (v1[x] / v1[y]);
                rep.cross_ratio_max = std::max(rep.cross_ratio_max, cr);
            }
        rep.distinct = rep.cross_ratio_max >= seq.schedule.a;
    }
    return rep;
}

struct SingularityRow {
    int i;
    Rational same;   // i(g_0, g_{h+(i+1)m}) i(g_{h+im}, proxy of h)
    Rational cross;  // same with the proxy of h'
};

struct SingularityReport {
    int h = 0, hprime = 1, K = 0;
    std::vector<SingularityRow> rows;
    bool band_ok = true;        // same in [1/kappa0^2, kappa0^2]
    bool cross_monotone = true;
    int monotone_steps = 0;
    bool degenerate = false;    // h == h'
};

inline SingularityReport singularity_ratios(const CurveSequence& seq, const IntersectionTable& tab, int h, int hprime,
                                            int K, const Rational& kappa0) {
    const int m = seq.m;
    if (h < 0 || h >= m || hprime < 0 || hprime >= m) throw std::invalid_argument("residue out of range");
    int need = std::max(h, hprime) + K * m;
    if (need > seq.depth) throw std::invalid_argument("insufficient depth: need depth >= " + std::to_string(need));
    SingularityReport rep;
    rep.h = h;
    rep.hprime = hprime;
    rep.K = K;
    rep.degenerate = h == hprime;
    const int nh = h + K * m, nh2 = hprime + K * m;
    const BigInt Ah = twist_product(seq, 0, nh), Ah2 = twist_product(seq, 0, nh2);
    const Rational lo = Rational(1) / (kappa0 * kappa0), hi = kappa0 * kappa0;
    for (int i = 1; h + (i + 1) * m < nh; ++i) {
        int a = h + (i + 1) * m, b = h + i * m;
        SingularityRow r{i, Rational(tab(0, a) * tab(b, nh), Ah), Rational(tab(0, a) * tab(b, nh2), Ah2)};
        if (r.same < lo || r.same > hi) rep.band_ok = false;
        rep.rows.push_back(std::move(r));
    }
    if (!rep.degenerate) {
        for (size_t s = 0; s + 1 < rep.rows.size(); ++s) {
            if (rep.rows[s + 1].cross < rep.rows[s].cross)
                ++rep.monotone_steps;
            else
                rep.cross_monotone = false;
        }
    }
    return rep;
}

}  // namespace endlam
