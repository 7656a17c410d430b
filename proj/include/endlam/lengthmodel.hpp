#pragma once
// A model of hyperbolic lengths along the ray: short-curve schedule
// synthesised from the sequence, lengths from the collar/twist expansion,
// and the projectivised trace of the limit set.  Everything here is a model
// and is labelled as such in the outputs.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "ergodics.hpp"
#include "subproj.hpp"

namespace endlam {

enum class Regime { C1, sweep, C2 };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::C1: return "C1";
        case Regime::sweep: return "sweep";
        default: return "C2";
    }
}

enum class EpsModel { scaled, literal };

struct LengthModelParams {
    double L0 = 1.0;
    EpsModel eps_model = EpsModel::scaled;
    double lambda = 20.0;   // literal: eps(u) = L0 exp(-lambda u)
    double rho_min = 1e-4;  // scaled: w(gamma_{k+1}) = x_k r_k (rho_min (rho_max/rho_min)^u - rho_min)
    double rho_max = 1e4;
    int samples = 32;       // per edge, u = 0 .. 1
    int k_min = -1;         // -1: first k after which every gamma_k meets gamma_0
};

inline void validate(const LengthModelParams& p) {
    if (!(p.L0 > 0 && p.L0 <= 1)) throw DomainError("L0 must lie in (0, 1] so collar widths are non-negative");
    if (p.samples < 2) throw DomainError("need at least 2 samples per edge");
    if (!(p.lambda > 0) || !(p.rho_min > 0) || !(p.rho_max > p.rho_min)) throw DomainError("bad eps parameters");
}

inline double collar_width(double len) { return 2.0 * std::log(1.0 / len); }

struct ModelState {
    int k = 0;
    double u = 0;
    Regime regime = Regime::C1;
    std::vector<Curve> pants;         // P_k; pants[j] = gamma_{k+j} for j < m
    std::vector<double> len;          // ell_beta
    std::vector<double> width;        // w(beta)
    double x = 0, y = 0;
};

// Per-k data shared by every sample on the edge [k, k+1]
struct EdgeData {
    int k = 0;
    std::vector<Curve> pants;
    BigInt tw_gamma0;                    // twist of gamma_0 about gamma_k
    std::map<size_t, BigInt> tw_family;  // twist of family member about gamma_k
    double uncertainty = 0;
    double balance = 1;                  // r_k = A(0,k) / A(0,k+1)
};

inline BigInt twist_about(const Curve& axis, const Curve& delta, const Curve& anchor) {
    if (intersection_number(delta, axis) == 0 || intersection_number(anchor, axis) == 0) return 0;
    return coeff_from_offset(twist_offset(axis, delta, anchor)).value;
}

inline EdgeData edge_data(const CurveSequence& seq, int k, const std::vector<TestCurve>& family) {
    if (k + seq.m > seq.depth) throw std::out_of_range("edge needs gamma_{k+m}");
    EdgeData E;
    E.k = k;
    std::vector<Curve> sigma(seq.gamma.begin() + k, seq.gamma.begin() + k + seq.m);
    PantsData pd = complete_to_pants(sigma, k);
    E.pants = sigma;
    E.pants.insert(E.pants.end(), pd.completion.begin(), pd.completion.end());
    const Curve& anchor = seq.gamma[k + seq.m];
    E.tw_gamma0 = twist_about(seq.gamma[k], seq.gamma[0], anchor);
    for (size_t d = 0; d < family.size(); ++d) E.tw_family[d] = twist_about(seq.gamma[k], family[d].curve, anchor);
    E.uncertainty = static_cast<double>(slope_delta);
    if (k >= 1) E.balance = Rational(twist_product(seq, 0, k), twist_product(seq, 0, k + 1)).convert_to<double>();
    return E;
}

inline ModelState model_state(const CurveSequence& seq, const EdgeData& E, double u, const LengthModelParams& P) {
    validate(P);
    ModelState st;
    st.k = E.k;
    st.u = u;
    st.regime = u <= 0 ? Regime::C1 : u >= 1 ? Regime::C2 : Regime::sweep;
    st.pants = E.pants;
    const double wL = collar_width(P.L0);
    st.len.assign(st.pants.size(), P.L0);
    st.width.assign(st.pants.size(), wL);
    st.x = wL + E.tw_gamma0.convert_to<double>() * P.L0;
    if (st.regime != Regime::C1 && seq.m >= 2) {
        double w1;
        if (P.eps_model == EpsModel::literal) {
            w1 = collar_width(P.L0 * std::exp(-P.lambda * u));
        } else {
            double rho = P.rho_min * std::pow(P.rho_max / P.rho_min, u) - P.rho_min;
            w1 = wL + st.x * E.balance * rho;
        }
        st.width[1] = w1;
        st.len[1] = std::exp(-w1 / 2.0);
        st.y = w1;  // twist about gamma_{k+1} is modelled as 0
    }
    return st;
}

struct LengthValue {
    double main = 0;
    double error_scale = 0;  // sum of i(delta, beta); the expansion error is O(this)
};

// sum over beta in P_k of i(delta, beta) (w(beta) + tw_beta(delta) ell_beta),
// with tw nonzero only for beta = gamma_k
inline LengthValue model_length(const ModelState& st, const Curve& delta, const BigInt& tw_gamma_k) {
    LengthValue v;
    for (size_t j = 0; j < st.pants.size(); ++j) {
        double i = intersection_number(delta, st.pants[j]).convert_to<double>();
        double tw = j == 0 ? tw_gamma_k.convert_to<double>() : 0.0;
        v.main += i * (st.width[j] + tw * st.len[j]);
        v.error_scale += i;
    }
    return v;
}

inline std::vector<double> projectivize(std::vector<double> v) {
    double mx = 0;
    for (double x : v) mx = std::max(mx, std::fabs(x));
    if (mx > 0)
        for (double& x : v) x /= mx;
    return v;
}

inline double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

struct TracePoint {
    int k = 0;
    double u = 0;
    Regime regime = Regime::C1;
    double x = 0, y = 0;
    std::vector<double> lengths;
    std::vector<double> projective;
    std::vector<double> reduction;  // projectivised x i(., gamma_k) + y i(., gamma_{k+1})
    double residual = 0;
    double error_scale = 0;         // max over family of sum i(delta, beta)
};

struct LimitTrace {
    LengthModelParams params;
    std::vector<std::string> family;
    std::vector<TracePoint> points;
    std::vector<std::vector<double>> vertices;  // projectivised proxies of each residue
    std::vector<int> vertex_index;              // sequence index used for each proxy
};

inline std::vector<double> intersection_vector(const CurveSequence& seq, const std::vector<TestCurve>& family, int n) {
    const auto& S = build_surface(seq.p);
    std::vector<double> v;
    for (const auto& t : family) v.push_back(family_intersection(S, t.curve, seq.gamma[n]).convert_to<double>());
    return v;
}

// x_k needs tw_{gamma_k}(gamma_0), which vanishes while gamma_k misses gamma_0
inline int first_edge(const CurveSequence& seq, const LengthModelParams& P) {
    if (P.k_min >= 1) return P.k_min;
    const auto& S = build_surface(seq.p);
    int k = seq.depth;
    while (k >= 2 && S.intersect_interval(seq.gamma[k - 1].coords, {0, 1}) > 0) --k;
    return std::max(k, 1);
}

// Model states for every edge and sample, in (k, u) order
inline std::vector<ModelState> synthesize_schedule(const CurveSequence& seq, const std::vector<TestCurve>& family,
                                                   const LengthModelParams& P) {
    validate(P);
    std::vector<ModelState> out;
    for (int k = first_edge(seq, P); k + seq.m <= seq.depth; ++k) {
        EdgeData E = edge_data(seq, k, family);
        for (int s = 0; s < P.samples; ++s) out.push_back(model_state(seq, E, double(s) / (P.samples - 1), P));
    }
    return out;
}

inline LimitTrace limit_trace(const CurveSequence& seq, const std::vector<TestCurve>& family,
                              const LengthModelParams& P, int jobs = 1) {
    validate(P);
    {
        std::vector<Curve> fc;
        for (const auto& t : family) fc.push_back(t.curve);
        if (!is_filling(fc).verdict) throw DomainError("test family does not fill the surface");
    }
    LimitTrace tr;
    tr.params = P;
    for (const auto& t : family) tr.family.push_back(t.name);
    const int m = seq.m;
    for (int h = 0; h < m; ++h) {
        int n = h + ((seq.depth - h) / m) * m;
        tr.vertex_index.push_back(n);
        tr.vertices.push_back(projectivize(intersection_vector(seq, family, n)));
    }
    std::vector<int> ks;
    for (int k = first_edge(seq, P); k + m <= seq.depth; ++k) ks.push_back(k);
    std::vector<std::vector<TracePoint>> per(ks.size());
    IntersectionTable::run_parallel(static_cast<int>(ks.size()), jobs, [&](int idx) {
        const int k = ks[idx];
        EdgeData E = edge_data(seq, k, family);
        const auto ik = intersection_vector(seq, family, k), ik1 = intersection_vector(seq, family, k + 1);
        for (int s = 0; s < P.samples; ++s) {
            double u = static_cast<double>(s) / (P.samples - 1);
            ModelState st = model_state(seq, E, u, P);
            TracePoint tp;
            tp.k = k;
            tp.u = u;
            tp.regime = st.regime;
            tp.x = st.x;
            tp.y = st.y;
            std::vector<double> red;
            for (size_t d = 0; d < family.size(); ++d) {
                LengthValue lv = model_length(st, family[d].curve, E.tw_family[d]);
                tp.lengths.push_back(lv.main);
                tp.error_scale = std::max(tp.error_scale, lv.error_scale);
                red.push_back(st.x * ik[d] + st.y * ik1[d]);
            }
            tp.projective = projectivize(tp.lengths);
            tp.reduction = projectivize(red);
            tp.residual = sup_distance(tp.projective, tp.reduction);
            per[idx].push_back(std::move(tp));
        }
    });
    for (auto& v : per)
        for (auto& tp : v) tr.points.push_back(std::move(tp));
    return tr;
}

// i(delta, beta) / A(0, k+m) for beta in the completion part of P_k
struct NegligibilityRow {
    int k;
    std::string delta;
    Rational ratio;
};

inline std::vector<NegligibilityRow> negligibility(const CurveSequence& seq, const std::vector<TestCurve>& family) {
    std::vector<NegligibilityRow> rows;
    for (int k = 1; k + seq.m <= seq.depth; ++k) {
        std::vector<Curve> sigma(seq.gamma.begin() + k, seq.gamma.begin() + k + seq.m);
        PantsData pd = complete_to_pants(sigma, k);
        BigInt A = twist_product(seq, 0, k + seq.m);
        for (const auto& t : family) {
            BigInt mx = 0;
            for (const auto& b : pd.completion) mx = std::max(mx, intersection_number(t.curve, b));
            rows.push_back({k, t.name, Rational(mx, A)});
        }
    }
    return rows;
}

}  // namespace endlam
