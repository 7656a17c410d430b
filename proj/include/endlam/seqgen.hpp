#pragma once
// The twist-and-rotate sequences gamma_k = Phi_k(gamma_0), the auxiliary
// curves gamma'_{k+m}, condition P, and the twist products A(i,k).

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "intersect.hpp"

namespace endlam {

struct CurveSequence {
    int p = 0;
    int m = 0;
    int b = 2;
    int bprime = 2;
    TwistSchedule schedule;
    int depth = 0;
    std::vector<Curve> gamma;          // gamma_0 .. gamma_depth
    std::vector<Curve> aux;            // gamma'_j for j = 2m .. depth
    std::vector<MCWord> words;         // Phi_0 .. Phi_depth

    int aux_first() const { return 2 * m; }
    const Curve& aux_at(int j) const { return aux.at(j - aux_first()); }
    const BigInt& e(int k) const { return schedule[k]; }
};

// phi_j acting on coordinates: D_alpha^{e_{j+m-1}} rho
inline Weights apply_phi(const SurfaceModel& S, const TwistSchedule& sch, int j, Weights x) {
    x = S.rotate_R(std::move(x), 2);
    return S.twist_side(x, S.p() - 1, sch[j + S.m() - 1]);
}

inline CurveSequence build_sequence(int p, const TwistSchedule& sch, int depth) {
    const auto& S = build_surface(p);
    const int m = S.m();
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    if (static_cast<int>(sch.size()) < depth + m)
        throw std::invalid_argument("schedule too short: need " + std::to_string(depth + m) + " entries");
    CurveSequence seq;
    seq.p = p;
    seq.m = m;
    seq.schedule = sch;
    seq.depth = depth;
    const Weights g0 = S.interval_coords({0, 1});
    for (int k = 0; k <= depth; ++k) {
        Weights x = g0;
        for (int j = k; j >= 1; --j) x = apply_phi(S, sch, j, std::move(x));
        MCWord Phi = generator_words(S, sch, k).second;
        seq.words.push_back(Phi);
        seq.gamma.push_back(Curve{p, std::move(x), std::make_shared<const MCWord>(Phi), {0, 1}});
    }
    const Weights rot = S.rotate_R(g0, 4 * m);  // rho^{2m} gamma_0
    for (int j = 2 * m; j <= depth; ++j) {
        const MCWord& W = seq.words[j - 2 * m];
        MCWord w = compose(W, MCWord{{rho_letter(2 * m)}}, p);
        seq.aux.push_back(Curve{p, apply_word_coords(S, W, rot), std::make_shared<const MCWord>(w), {0, 1}});
    }
    return seq;
}

// A(i,k) = prod of b e_j over i+m <= j < k with j = k mod m
inline BigInt twist_product(const TwistSchedule& sch, int m, int b, int i, int k) {
    if (i >= k) throw std::invalid_argument("twist_product needs i < k");
    BigInt r = 1;
    for (int j = i + m; j < k; ++j)
        if ((k - j) % m == 0) r *= BigInt(b) * sch[j];
    return r;
}

inline BigInt twist_product(const CurveSequence& seq, int i, int k) {
    return twist_product(seq.schedule, seq.m, seq.b, i, k);
}

// Pairwise i(gamma_i, gamma_k) for all i < k <= depth.  Column k is built by
// applying phi_k, phi_{k-1}, ... to gamma_0: after phi_{i+1} the curve is
// Phi_i^{-1}(gamma_k), whose intersection with gamma_0 is i(gamma_i, gamma_k).
class IntersectionTable {
public:
    IntersectionTable() = default;
    IntersectionTable(const CurveSequence& seq, int jobs = 1) : n_(seq.depth + 1) {
        const auto& S = build_surface(seq.p);
        v_.assign(static_cast<size_t>(n_) * n_, 0);
        auto column = [&](int k) {
            Weights x = S.interval_coords({0, 1});
            for (int i = k - 1; i >= 0; --i) {
                x = apply_phi(S, seq.schedule, i + 1, std::move(x));
                BigInt v = S.intersect_interval(x, {0, 1});
                at(i, k) = v;
                at(k, i) = v;
            }
        };
        run_parallel(n_, jobs, column);
    }

    int size() const { return n_; }
    const BigInt& operator()(int i, int k) const { return v_.at(static_cast<size_t>(i) * n_ + k); }

    static void run_parallel(int n, int jobs, const std::function<void(int)>& f) {
        if (jobs <= 1) {
            for (int k = 0; k < n; ++k) f(k);
            return;
        }
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (int k; (k = next.fetch_add(1)) < n;) f(k);
            });
        for (auto& th : pool) th.join();
    }

private:
    BigInt& at(int i, int k) { return v_[static_cast<size_t>(i) * n_ + k]; }
    int n_ = 0;
    std::vector<BigInt> v_;
};

struct ClauseRow {
    std::string clause;  // i, ii, iii-int, iii-twist
    int k;
    bool pass;
    std::string detail;
};

struct ConditionReport {
    std::vector<ClauseRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

// Clause (ii) is checked after pulling the window back by Phi_k: filling is
// invariant under mapping classes, and the pulled-back window is small.
inline ConditionReport verify_condition_P(const CurveSequence& seq, size_t cap = default_oracle_cap) {
    const auto& S = build_surface(seq.p);
    const int m = seq.m, d = seq.depth;
    ConditionReport rep;
    for (int k = 0; k + m - 1 <= d; ++k) {
        bool ok = true;
        std::string bad;
        for (int i = k; i < k + m; ++i)
            for (int j = i + 1; j < k + m; ++j) {
                BigInt v = intersection_number(seq.gamma[i], seq.gamma[j], cap);
                if (v != 0) {
                    ok = false;
                    bad += "i(" + std::to_string(i) + "," + std::to_string(j) + ")=" + v.str() + " ";
                }
            }
        rep.rows.push_back({"i", k, ok, ok ? "pairwise disjoint" : bad});
    }
    for (int k = 0; k + 2 * m - 1 <= d; ++k) {
        MCWord inv = inverse(seq.words[k], seq.p);
        std::vector<Curve> win;
        for (int j = k; j < k + 2 * m; ++j)
            win.push_back(Curve{seq.p, apply_word_coords(S, inv, seq.gamma[j].coords), nullptr, {0, 1}});
        try {
            auto cert = is_filling(win, cap);
            rep.rows.push_back({"ii", k, cert.verdict,
                                std::to_string(cert.regions.size()) + " regions, " +
                                    std::to_string(cert.crossings) + " crossings"});
        } catch (const OracleScaleExceeded& ex) {
            rep.rows.push_back({"ii", k, false, std::string("skipped: ") + ex.what()});
        }
    }
    for (int k = m; k + m <= d; ++k) {
        const Curve& g = seq.aux_at(k + m);
        bool ok = true;
        std::string det;
        for (int j = k - m; j <= k + m - 1; ++j) {
            BigInt v = intersection_number(g, seq.gamma[j], cap);
            bool good;
            if (j == k || j == k - 1)
                good = (v == seq.b);
            else if (j > k)
                good = (v == 0);
            else
                good = (v <= seq.bprime);
            if (!good) {
                ok = false;
                det += "j=" + std::to_string(j) + ":" + v.str() + " ";
            }
        }
        rep.rows.push_back({"iii-int", k, ok, ok ? "pattern holds" : det});
        Curve tw = dehn_twist(g, seq.gamma[k], seq.e(k));
        bool same = tw.coords == seq.gamma[k + m].coords;
        rep.rows.push_back({"iii-twist", k, same, same ? "gamma_{k+m} = D^{e_k}(gamma')" : "twist relation fails"});
    }
    return rep;
}

}  // namespace endlam
