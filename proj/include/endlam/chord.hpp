#pragma once
// Explicit chord model of curves on the doubled polygon.
//
// A curve in minimal position with respect to the polygon sides is a cyclic
// word of side crossings.  Between crossing i and crossing i+1 the curve runs
// along a straight chord: in the back sheet when i is even, in the front
// sheet when i is odd.  This is the brute-force oracle; it never touches the
// flip engine.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "surface.hpp"

namespace endlam {

enum class Sheet { front, back };

struct OracleScaleExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Chord {
    Sheet sheet;
    int entry;      // side the chord starts on
    int exit;       // side it ends on
    int entry_ord;  // rank among strands on the entry side
    int exit_ord;
};

struct ChordCurve {
    int p = 0;
    std::vector<int> sides;  // cyclic crossing word, even length

    size_t size() const { return sides.size(); }
    bool operator==(const ChordCurve&) const = default;
};

namespace chord_detail {

inline Sheet sheet_after(long i) { return (i % 2 == 0) ? Sheet::back : Sheet::front; }

inline int ccw_order(int p, Sheet s, int x) { return s == Sheet::front ? x : (p - x) % p; }

inline long mod(long a, long p) { return ((a % p) + p) % p; }

}  // namespace chord_detail

// Cancel x,x backtracks, then cyclically.  Cyclic cancellation shifts the
// start by the number of removed pairs; an odd shift would swap the sheets
// so the word is rotated by one to compensate.
inline std::vector<int> reduce_cyclic(const std::vector<int>& w) {
    std::vector<int> st;
    st.reserve(w.size());
    for (int x : w) {
        if (!st.empty() && st.back() == x)
            st.pop_back();
        else
            st.push_back(x);
    }
    size_t i = 0, j = st.empty() ? 0 : st.size() - 1;
    while (j > i && st[i] == st[j]) {
        ++i;
        --j;
    }
    if (st.empty()) return {};
    std::vector<int> r(st.begin() + i, st.begin() + j + 1);
    if (i % 2 == 1 && !r.empty()) std::rotate(r.begin(), r.begin() + 1, r.end());
    return r;
}

inline ChordCurve side_chord_curve(int p, int s) {
    return {p, {static_cast<int>(chord_detail::mod(s - 1, p)), static_cast<int>(chord_detail::mod(s + 1, p))}};
}

inline ChordCurve rotate_chord(const ChordCurve& c, long n) {
    ChordCurve r{c.p, c.sides};
    for (int& x : r.sides) x = static_cast<int>(chord_detail::mod(x + n, c.p));
    return r;
}

// D_{c_s}^n by inserting turns around side s at every crossing of s.  The
// direction matches the flip engine's positive twist.
inline ChordCurve twist_chord(const ChordCurve& c, int s, long n) {
    if (n == 0) return c;
    const int p = c.p;
    std::vector<int> up{static_cast<int>(chord_detail::mod(s + 1, p)), static_cast<int>(chord_detail::mod(s - 1, p))};
    std::vector<int> dn{up[1], up[0]};
    std::vector<int> out;
    long k = n > 0 ? n : -n;
    for (size_t i = 0; i < c.sides.size(); ++i) {
        int x = c.sides[i];
        if (x != s) {
            out.push_back(x);
            continue;
        }
        const auto& blk = (n > 0) ? (i % 2 == 0 ? dn : up) : (i % 2 == 0 ? up : dn);
        for (long r = 0; r < k; ++r) out.insert(out.end(), blk.begin(), blk.end());
        out.push_back(s);
        for (long r = 0; r < k; ++r) out.insert(out.end(), blk.begin(), blk.end());
    }
    return {p, reduce_cyclic(out)};
}

inline Weights chord_coords(const ChordCurve& c) {
    const int p = c.p;
    const size_t L = c.sides.size();
    if (L % 2) throw std::invalid_argument("chord word must have even length");
    Weights w(3 * p - 6, 0);
    std::vector<long> cnt(3 * p - 6, 0);
    for (int x : c.sides) cnt[x] += 1;
    for (size_t i = 0; i < L; ++i) {
        int x = c.sides[i], y = c.sides[(i + 1) % L];
        int base = (i % 2 == 0) ? 2 * p - 3 : p;
        for (int k = 2; k <= p - 2; ++k)
            if ((x < k) != (y < k)) cnt[base + k - 2] += 1;
    }
    for (size_t i = 0; i < cnt.size(); ++i) w[i] = cnt[i];
    return w;
}

// Peripheral or trivial words do not represent essential curves.
inline bool chord_essential(const ChordCurve& c) {
    if (c.sides.empty()) return false;
    if (c.sides.size() == 2) {
        long d = chord_detail::mod(c.sides[1] - c.sides[0], c.p);
        if (d == 1 || d == c.p - 1) return false;
    }
    return true;
}

// Curve -> ChordCurve: trace normal arcs triangle by triangle.  Throws if the
// weights describe several components or violate the triangle inequalities.
inline ChordCurve trace_coords(const SurfaceModel& S, const Weights& w, size_t cap) {
    const int p = S.p();
    const int n = S.edge_count();
    BigInt total = 0;
    for (const auto& x : w) {
        if (x < 0) throw std::invalid_argument("negative weight");
        total += x;
    }
    if (total > BigInt(cap)) throw OracleScaleExceeded("oracle scale exceeded: weight total " + total.str());
    std::vector<long> W(n);
    for (int i = 0; i < n; ++i) W[i] = static_cast<long>(w[i]);
    std::vector<long> off(n + 1, 0);
    for (int i = 0; i < n; ++i) off[i + 1] = off[i] + W[i];
    const long N = off[n];
    // each point has two neighbours, one per adjacent triangle
    std::vector<std::array<long, 2>> nb(N, {-1, -1});
    auto link1 = [&](long a, long b) {
        auto put = [&](long x, long y) {
            if (nb[x][0] < 0)
                nb[x][0] = y;
            else if (nb[x][1] < 0)
                nb[x][1] = y;
            else
                throw std::invalid_argument("point used twice");
        };
        put(a, b);
        put(b, a);
    };
    // position on edge e counted from its endpoint v_0 side (diagonals) or
    // its first vertex (sides); flip when the other endpoint is meant
    auto pt = [&](int e, long pos, bool from_first) { return off[e] + (from_first ? pos : W[e] - 1 - pos); };
    for (int sheet = 0; sheet < 2; ++sheet) {
        for (int k = 1; k <= p - 2; ++k) {
            int L = (k == 1) ? 0 : (sheet == 0 ? S.F(k) : S.B(k));
            int Sd = k;
            int U = (k + 1 == p - 1) ? p - 1 : (sheet == 0 ? S.F(k + 1) : S.B(k + 1));
            long wL = W[L], wS = W[Sd], wU = W[U];
            long twice0 = wL + wU - wS, twicek = wL + wS - wU, twicek1 = wS + wU - wL;
            if (twice0 < 0 || twicek < 0 || twicek1 < 0 || (twice0 & 1))
                throw std::invalid_argument("weights violate triangle conditions");
            long c0 = twice0 / 2, ck = twicek / 2, ck1 = twicek1 / 2;
            // L measured from v_0; U from v_0 unless it is side p-1
            bool U_first_is_v0 = (U != p - 1);
            for (long j = 0; j < c0; ++j) link1(pt(L, j, true), pt(U, j, U_first_is_v0));
            for (long j = 0; j < ck; ++j) link1(pt(L, j, false), pt(Sd, j, true));
            for (long j = 0; j < ck1; ++j) link1(pt(Sd, j, false), pt(U, j, !U_first_is_v0));
        }
    }
    if (N == 0) return {p, {}};
    // start at a side point, leaving into the back sheet
    long start = -1;
    for (int s = 0; s < p && start < 0; ++s)
        if (W[s] > 0) start = off[s];
    if (start < 0) throw std::invalid_argument("curve misses every side");
    auto edge_of = [&](long x) {
        return static_cast<int>(std::upper_bound(off.begin(), off.end(), x) - off.begin()) - 1;
    };
    // neighbour 0 was set by the front sheet pass for side points
    std::vector<int> word;
    long prev = start, cur = nb[start][1];
    word.push_back(edge_of(start));
    long visited = 1;
    while (cur != start) {
        int e = edge_of(cur);
        if (e < p) word.push_back(e);
        long nx = (nb[cur][0] == prev) ? nb[cur][1] : nb[cur][0];
        prev = cur;
        cur = nx;
        if (++visited > N) throw std::logic_error("trace did not close");
    }
    if (visited != N) throw std::invalid_argument("weights describe a multicurve, not a single curve");
    return {p, word};
}

// Geometric intersection by counting linked chord pairs and linked shared
// segments.  Both words must be reduced.
inline BigInt oracle_intersection(const ChordCurve& A, const ChordCurve& B, size_t cap) {
    using namespace chord_detail;
    if (A.p != B.p) throw std::invalid_argument("mismatched surfaces");
    if (A.size() + B.size() > cap)
        throw OracleScaleExceeded("oracle scale exceeded: " + std::to_string(A.size() + B.size()) + " crossings");
    const int p = A.p;
    const long La = static_cast<long>(A.size()), Lb = static_cast<long>(B.size());
    if (La == 0 || Lb == 0) return 0;
    const auto& a = A.sides;
    const auto& b = B.sides;
    long tot = 0;
    auto between = [&](int lo, int x, int hi, Sheet f) {
        int oa = ccw_order(p, f, lo), ox = ccw_order(p, f, x), ob = ccw_order(p, f, hi);
        int dx = mod(ox - oa, p), db = mod(ob - oa, p);
        return 0 < dx && dx < db;
    };
    // chords of A and B in the same sheet with four distinct ends
    for (long i = 0; i < La; ++i) {
        Sheet fa = sheet_after(i);
        int x1 = a[i], y1 = a[(i + 1) % La];
        for (long j = 0; j < Lb; ++j) {
            if (sheet_after(j) != fa) continue;
            int x2 = b[j], y2 = b[(j + 1) % Lb];
            if (x2 == x1 || x2 == y1 || y2 == x1 || y2 == y1) continue;
            if (between(x1, x2, y1, fa) != between(x1, y2, y1, fa)) ++tot;
        }
    }
    // maximal shared runs: compare how the two curves arrive and leave
    auto first = [&](Sheet f, int ref, int u, int v) {
        int o0 = ccw_order(p, f, ref), o1 = ccw_order(p, f, u), o2 = ccw_order(p, f, v);
        return mod(o1 - o0, p) < mod(o2 - o0, p);
    };
    for (long i = 0; i < La; ++i) {
        for (long j = 0; j < Lb; ++j) {
            if (a[i] != b[j]) continue;
            for (int eps : {1, -1}) {
                Sheet fa_before = sheet_after(i - 1 + La);
                Sheet fb_before = eps == 1 ? sheet_after(j - 1 + Lb) : sheet_after(j);
                if (fa_before != fb_before) continue;
                int pa = a[mod(i - 1, La)], pb = b[mod(j - eps, Lb)];
                if (pa == pb) continue;
                long l = 1;
                bool wraps = false;
                while (a[mod(i + l, La)] == b[mod(j + eps * l, Lb)]) {
                    ++l;
                    if (l > La * Lb) {
                        wraps = true;
                        break;
                    }
                }
                if (wraps) continue;
                Sheet fe = sheet_after(i + l - 1);
                int x = a[i], y = a[mod(i + l - 1, La)];
                int na = a[mod(i + l, La)], nbv = b[mod(j + eps * l, Lb)];
                if (first(fa_before, x, pa, pb) == first(fe, y, na, nbv)) ++tot;
            }
        }
    }
    return tot;
}

}  // namespace endlam
