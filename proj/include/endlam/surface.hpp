#pragma once
// S_{0,p} as the double of a regular p-gon with a fixed fan triangulation.
//
// Labels: sides 0..p-1 (side s joins v_s and v_{s+1}); front diagonal
// [v_0,v_k] is F(k) = p+k-2 and the back one B(k) = 2p-3+k-2, k = 2..p-2.
// Triangle k (k = 1..p-2) has corners v_0, v_k, v_{k+1} on each sheet.

#include <algorithm>
#include <map>
#include <optional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "triangulation.hpp"

namespace endlam {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Curves that separate a cyclic run of punctures {v_a, ..., v_{a+t}} from
// the rest.  Side curves are the t = 1 case: c_s = I(s, 1).
struct IntervalLabel {
    int a = 0;
    int t = 1;
    auto operator<=>(const IntervalLabel&) const = default;
};

// Loop-edge engine for the interval curve S_t = I(0, t).  A fixed flip
// sequence makes S_t parallel to a loop edge; intersection with S_t is then
// read off the conjugated weights.  For t = 1 the engine also twists.
class LoopEngine {
public:
    LoopEngine() = default;
    LoopEngine(const Triangulation& T, int p, int t) : p_(p), t_(t) {
        std::vector<int> seq;
        for (int k = p - 2; k > t; --k) seq.push_back(B(k));
        seq.push_back(t);
        for (int k = t + 1; k <= p - 2; ++k) seq.push_back(F(k));
        seq.push_back(B(t + 1));
        auto [T1, conj] = flip_sequence(T, seq);
        T1_ = T1;
        conj_.steps = conj;
        unconj_.steps = inverse_steps(T, conj);
        a_ = B(t + 1);
        auto v = T1_.vertex(a_);
        auto it = std::find(v.begin(), v.end(), a_);
        std::rotate(v.begin(), it, v.end());
        auto j = std::find(v.begin(), v.end(), ~a_);
        vedges_.assign(v.begin(), j);
        if (t == 1) {
            auto [T2, sh] = flip_sequence(T1_, {1});
            std::vector<int> perm(T.edge_count());
            for (int i = 0; i < T.edge_count(); ++i) perm[i] = i;
            std::swap(perm[1], perm[p - 1]);
            sh.push_back(perm_step(perm));
            one_.steps = sh;
            oneinv_.steps = inverse_steps(T1_, sh);
            cvec_.assign(T.edge_count(), 0);
            cvec_[1] = 1;
            cvec_[p - 1] = 1;
        }
    }

    BigInt intersection(const Weights& x) const { return inter_short(conj_(x)); }

    // D^n applied to x, where D twists about S_1 = c_0
    Weights twist(const Weights& x, BigInt n) const {
        if (t_ != 1) throw std::logic_error("twist only supported about side curves");
        return unconj_(power_short(conj_(x), std::move(n)));
    }

private:
    int F(int k) const { return p_ + k - 2; }
    int B(int k) const { return 2 * p_ - 3 + k - 2; }

    BigInt dual(const Weights& w, int e) const {
        const auto& c = T1_.corner(e);
        return (w[idx(c[1])] + w[idx(c[2])] - w[idx(c[0])]) / 2;
    }
    BigInt left(const Weights& w, int e) const { return dual(w, T1_.corner(e)[1]); }

    BigInt around(const Weights& w) const {
        BigInt best = left(w, vedges_.front());
        for (size_t i = 1; i < vedges_.size(); ++i) best = std::min(best, left(w, vedges_[i]));
        return best > 0 ? best : BigInt(0);
    }

    BigInt inter_short(const Weights& w) const { return w[a_] - 2 * around(w); }

    Weights power_short(Weights w, BigInt n) const {
        if (n == 0) return w;
        BigInt q = inter_short(w);
        if (q == 0) return w;
        BigInt ar = around(w);
        BigInt tw;
        bool first = true;
        for (size_t i = 1; i + 1 < vedges_.size(); ++i) {
            BigInt v = left(w, vedges_[i]) - ar;
            if (first || v < tw) tw = v;
            first = false;
        }
        if (first || tw < 0) tw = 0;
        int sign = (left(w, a_) - ar > 0) ? -1 : 1;
        BigInt absn = abs(n);
        BigInt steps = std::min(absn, BigInt(tw / q));
        if ((n > 0 && sign < 0) || (n < 0 && sign > 0)) {
            for (size_t i = 0; i < w.size(); ++i)
                if (cvec_[i]) w[i] -= steps * q;
            n += sign * steps;
        }
        for (int r = 0; r < 3 && n != 0; ++r) {
            if (n > 0) {
                w = one_(std::move(w));
                n -= 1;
            } else {
                w = oneinv_(std::move(w));
                n += 1;
            }
        }
        if (n != 0) {
            BigInt add = abs(n) * q;
            for (size_t i = 0; i < w.size(); ++i)
                if (cvec_[i]) w[i] += add;
        }
        return w;
    }

    int p_ = 0, t_ = 0, a_ = 0;
    Triangulation T1_;
    Encoding conj_, unconj_, one_, oneinv_;
    std::vector<int> vedges_;
    std::vector<int> cvec_;
};

class SurfaceModel {
public:
    explicit SurfaceModel(int p) : p_(p), m_((p - 1) / 2) {
        if (p < 5 || p % 2 == 0) throw DomainError("p must be odd and >= 5, got " + std::to_string(p));
        T_ = Triangulation(3 * p - 6, fan_triangles(p));
        std::vector<int> fl;
        for (int k = p - 2; k >= 2; --k) fl.push_back(F(k));
        for (int k = p - 2; k >= 2; --k) fl.push_back(B(k));
        auto [T2, st] = flip_sequence(T_, fl);
        std::vector<int> perm(3 * p - 6);
        for (int i = 0; i < 3 * p - 6; ++i) perm[i] = i;
        for (int i = 0; i < p; ++i) perm[i] = (i + 1) % p;
        st.push_back(perm_step(perm));
        R_.steps = st;
        Rinv_.steps = inverse_steps(T_, st);
        for (int t = 1; t <= p - 3; ++t) engines_.emplace_back(T_, p, t);
    }

    int p() const { return p_; }
    int m() const { return m_; }
    int edge_count() const { return 3 * p_ - 6; }
    int F(int k) const { return p_ + k - 2; }
    int B(int k) const { return 2 * p_ - 3 + k - 2; }
    const Triangulation& triangulation() const { return T_; }

    // R^n, rotation by 2 pi n / p taking side s to side s+n
    Weights rotate_R(Weights w, long n) const {
        long r = ((n % p_) + p_) % p_;
        if (r <= p_ / 2) {
            for (long i = 0; i < r; ++i) w = R_(std::move(w));
        } else {
            for (long i = r; i < p_; ++i) w = Rinv_(std::move(w));
        }
        return w;
    }

    // coordinates of I(a, t)
    Weights interval_coords(IntervalLabel L) const {
        if (L.t < 1 || L.t > p_ - 3) throw DomainError("interval size out of range");
        Weights w(edge_count(), 0);
        w[L.t] = 1;
        w[p_ - 1] = 1;
        for (int k = L.t + 1; k <= p_ - 2; ++k) {
            w[F(k)] = 1;
            w[B(k)] = 1;
        }
        return rotate_R(std::move(w), L.a);
    }

    // i(x, I(a,t))
    BigInt intersect_interval(const Weights& x, IntervalLabel L) const {
        return engines_[L.t - 1].intersection(rotate_R(x, -L.a));
    }

    // D_{c_s}^n (x)
    Weights twist_side(const Weights& x, int s, const BigInt& n) const {
        return rotate_R(engines_[0].twist(rotate_R(x, -s), n), s);
    }

    // Recognise the coordinates of an interval curve.  Interval curves are
    // unordered partitions, so I(a,t) and its complement coincide; the
    // representative with smaller t, then smaller a, is returned.
    std::optional<IntervalLabel> recognize(const Weights& w) const {
        std::call_once(table_once_, [this] {
            for (int t = 1; t <= p_ - 3; ++t)
                for (int a = 0; a < p_; ++a) {
                    auto c = interval_coords({a, t});
                    BigInt tot = 0;
                    for (const auto& x : c) tot += x;
                    if (tot > table_max_) table_max_ = tot;
                    if (!table_.count(c)) table_.emplace(c, IntervalLabel{a, t});
                }
        });
        BigInt total = 0;
        for (const auto& x : w) total += x;
        if (total > table_max_) return std::nullopt;
        auto it = table_.find(w);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    static std::vector<std::array<int, 3>> fan_triangles(int p) {
        auto F = [p](int k) { return p + k - 2; };
        auto B = [p](int k) { return 2 * p - 3 + k - 2; };
        std::vector<std::array<int, 3>> t;
        for (int k = 1; k <= p - 2; ++k)
            t.push_back({k == 1 ? 0 : F(k), k, k + 1 == p - 1 ? p - 1 : ~F(k + 1)});
        for (int k = 1; k <= p - 2; ++k)
            t.push_back({k + 1 == p - 1 ? ~(p - 1) : B(k + 1), ~k, k == 1 ? ~0 : ~B(k)});
        return t;
    }

private:
    int p_, m_;
    Triangulation T_;
    Encoding R_, Rinv_;
    std::vector<LoopEngine> engines_;
    mutable std::once_flag table_once_;
    mutable std::map<Weights, IntervalLabel> table_;
    mutable BigInt table_max_ = 0;
};

// Cached per p; models are immutable so references may be shared freely.
inline const SurfaceModel& build_surface(int p) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SurfaceModel>> cache;
    if (p < 5 || p % 2 == 0) throw DomainError("p must be odd and >= 5, got " + std::to_string(p));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot) slot = std::make_unique<SurfaceModel>(p);
    return *slot;
}

}  // namespace endlam
