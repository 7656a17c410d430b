#pragma once
// Ideal triangulations of the doubled p-gon and flip encodings acting on
// normal coordinates.  Edge labels follow the usual convention: e >= 0 is an
// oriented edge, ~e its reverse, and weights are indexed by idx(e).

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace endlam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Weights = std::vector<BigInt>;

inline int idx(int e) { return e >= 0 ? e : ~e; }

class Triangulation {
public:
    Triangulation() = default;
    Triangulation(int n_edges, std::vector<std::array<int, 3>> tris)
        : n_(n_edges), tris_(std::move(tris)) {
        build();
    }

    int edge_count() const { return n_; }
    const std::vector<std::array<int, 3>>& triangles() const { return tris_; }

    // corner(e) = (e, next, next-next) read counterclockwise inside the
    // triangle containing oriented edge e.
    const std::array<int, 3>& corner(int e) const { return corners_.at(e + n_); }

    std::array<int, 5> square(int e) const {
        const auto& A = corner(e);
        const auto& B = corner(~e);
        return {A[1], A[2], B[1], B[2], e};
    }

    Triangulation flip(int e) const {
        auto sq = square(e);
        int a = sq[0], b = sq[1], c = sq[2], d = sq[3];
        const auto& A = corner(e);
        const auto& B = corner(~e);
        std::vector<std::array<int, 3>> keep;
        auto same = [](std::array<int, 3> x, std::array<int, 3> y) {
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            return x == y;
        };
        for (const auto& t : tris_)
            if (!same(t, A) && !same(t, B)) keep.push_back(t);
        int f = e >= 0 ? e : ~e;
        if (e >= 0) {
            keep.push_back({f, d, a});
            keep.push_back({~f, b, c});
        } else {
            keep.push_back({f, d, a});
            keep.push_back({e, b, c});
        }
        return Triangulation(n_, std::move(keep));
    }

    // oriented edges leaving the vertex at the tail of x, in cyclic order
    std::vector<int> vertex(int x) const {
        std::vector<int> v{x};
        for (;;) {
            int n = ~corner(v.back())[2];
            if (n == v.front()) return v;
            v.push_back(n);
            if (v.size() > static_cast<size_t>(2 * n_)) throw std::logic_error("vertex cycle");
        }
    }

private:
    void build() {
        corners_.assign(2 * n_, {0, 0, 0});
        for (const auto& t : tris_)
            for (int r = 0; r < 3; ++r) corners_[t[r] + n_] = {t[r], t[(r + 1) % 3], t[(r + 2) % 3]};
    }

    int n_ = 0;
    std::vector<std::array<int, 3>> tris_;
    std::vector<std::array<int, 3>> corners_;
};

struct Step {
    bool is_flip = true;
    int edge = 0;
    std::array<int, 5> sq{};
    std::vector<int> perm;  // source index i goes to perm[i]
};

inline void apply_step(const Step& st, Weights& w) {
    if (st.is_flip) {
        const BigInt& a = w[idx(st.sq[0])];
        const BigInt& b = w[idx(st.sq[1])];
        const BigInt& c = w[idx(st.sq[2])];
        const BigInt& d = w[idx(st.sq[3])];
        BigInt s1 = a + c, s2 = b + d;
        BigInt& e = w[idx(st.edge)];
        e = (s1 > s2 ? s1 : s2) - e;
    } else {
        Weights nw(w.size());
        for (size_t i = 0; i < st.perm.size(); ++i) nw[st.perm[i]] = std::move(w[i]);
        w = std::move(nw);
    }
}

struct Encoding {
    std::vector<Step> steps;

    Weights operator()(Weights w) const {
        for (const auto& st : steps) apply_step(st, w);
        return w;
    }
};

inline std::pair<Triangulation, std::vector<Step>> flip_sequence(Triangulation T, const std::vector<int>& edges) {
    std::vector<Step> out;
    for (int e : edges) {
        out.push_back(Step{true, e, T.square(e), {}});
        T = T.flip(e);
    }
    return {T, out};
}

inline Step perm_step(std::vector<int> perm) {
    Step s;
    s.is_flip = false;
    s.perm = std::move(perm);
    return s;
}

// Inverse of a step list starting at T.  Flips are replayed to recover the
// intermediate triangulations.
inline std::vector<Step> inverse_steps(const Triangulation& T, const std::vector<Step>& steps) {
    std::vector<Triangulation> Ts{T};
    for (const auto& st : steps) Ts.push_back(st.is_flip ? Ts.back().flip(st.edge) : Ts.back());
    std::vector<Step> out;
    for (size_t i = steps.size(); i-- > 0;) {
        const auto& st = steps[i];
        if (st.is_flip) {
            out.push_back(Step{true, ~st.edge, Ts[i + 1].square(~st.edge), {}});
        } else {
            std::vector<int> q(st.perm.size());
            for (size_t a = 0; a < st.perm.size(); ++a) q[st.perm[a]] = static_cast<int>(a);
            out.push_back(perm_step(std::move(q)));
        }
    }
    return out;
}

}  // namespace endlam
