#pragma once
// Exact intersection numbers, the filling census and pants completion.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "chord.hpp"
#include "mcg.hpp"

namespace endlam {

inline constexpr size_t default_oracle_cap = 200000;

enum class Method { transport, oracle };

inline const char* method_name(Method m) { return m == Method::transport ? "transport" : "oracle"; }

struct Intersection {
    BigInt value;
    Method method;
};

inline ChordCurve to_chord(const Curve& c, size_t cap = default_oracle_cap) {
    return trace_coords(build_surface(c.p), c.coords, cap);
}

inline Curve from_chord(const ChordCurve& c) { return Curve{c.p, chord_coords(c), nullptr, {0, 1}}; }

inline size_t word_size(const Curve& c) { return c.word ? c.word->letters.size() : 0; }

// Interval curves are read directly by the loop engine.  Otherwise one side
// is pulled back to its base along its recorded word; pairs with neither
// fall back to the chord oracle.
inline Intersection intersection_detail(const Curve& a, const Curve& b, size_t cap = default_oracle_cap) {
    if (a.p != b.p) throw std::invalid_argument("mismatched surfaces");
    const auto& S = build_surface(a.p);
    if (auto L = S.recognize(b.coords)) return {S.intersect_interval(a.coords, *L), Method::transport};
    if (auto L = S.recognize(a.coords)) return {S.intersect_interval(b.coords, *L), Method::transport};
    const Curve* w = nullptr;
    const Curve* o = nullptr;
    if (a.word && (!b.word || word_size(a) <= word_size(b))) {
        w = &a;
        o = &b;
    } else if (b.word) {
        w = &b;
        o = &a;
    }
    if (w) {
        Weights y = apply_word_coords(S, inverse(*w->word, a.p), o->coords);
        return {S.intersect_interval(y, w->base), Method::transport};
    }
    try {
        return {oracle_intersection(to_chord(a, cap), to_chord(b, cap), cap), Method::oracle};
    } catch (const OracleScaleExceeded&) {
        throw UnsupportedError("unsupported pair: no provenance and beyond oracle scale");
    }
}

inline BigInt intersection_number(const Curve& a, const Curve& b, size_t cap = default_oracle_cap) {
    return intersection_detail(a, b, cap).value;
}

inline BigInt oracle_intersection(const Curve& a, const Curve& b, size_t cap = default_oracle_cap) {
    return oracle_intersection(to_chord(a, cap), to_chord(b, cap), cap);
}

// ---------------------------------------------------------------- census

enum class RegionKind { disk, punctured_disk, other };

inline const char* region_name(RegionKind k) {
    switch (k) {
        case RegionKind::disk: return "disk";
        case RegionKind::punctured_disk: return "once-punctured disk";
        default: return "other";
    }
}

struct Region {
    RegionKind kind;
    long euler;
    int punctures;
};

struct FillingCertificate {
    std::vector<Region> regions;
    long crossings = 0;  // vertices of the curve graph
    bool verdict = false;

    // regions plus the curve graph (chi = -crossings) recover chi(S) = 2 - p
    long euler_sum() const {
        long s = 0;
        for (const auto& r : regions) s += r.euler;
        return s;
    }
};

namespace census_detail {

struct Strand {
    int curve;
    long index;
};

struct DSU {
    std::vector<int> parent;
    explicit DSU(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace census_detail

// Complementary regions of a union of curves, computed in the chord model.
// Strands on each side are placed by comparing where they first diverge;
// the drawn crossing count is checked against the pairwise oracle values.
inline FillingCertificate is_filling(const std::vector<Curve>& input, size_t cap = default_oracle_cap) {
    using namespace census_detail;
    using chord_detail::mod;
    if (input.empty()) throw std::invalid_argument("is_filling needs at least one curve");
    const int p = input.front().p;
    std::vector<ChordCurve> cs;
    for (const auto& c : input) {
        if (c.p != p) throw std::invalid_argument("mismatched surfaces");
        auto ch = to_chord(c, cap);
        if (std::find(cs.begin(), cs.end(), ch) == cs.end()) {
            bool dup = false;
            for (const auto& o : cs)
                if (chord_coords(o) == chord_coords(ch)) dup = true;
            if (!dup) cs.push_back(std::move(ch));
        }
    }
    size_t total = 0;
    for (const auto& c : cs) total += c.size();
    if (total > cap) throw OracleScaleExceeded("oracle scale exceeded in census");

    // side of the l-th crossing along the ray that leaves (c,i) into the back sheet
    auto ray = [&](const Strand& s, long l) {
        const auto& w = cs[s.curve].sides;
        long L = static_cast<long>(w.size());
        bool fwd = (s.index % 2 == 0);
        return w[mod(fwd ? s.index + l : s.index - l, L)];
    };
    const long limit = static_cast<long>(2 * total + 4);
    auto larger = [&](const Strand& A, const Strand& B) {
        for (long l = 1; l < limit; ++l) {
            int ua = ray(A, l), ub = ray(B, l);
            if (ua == ub) continue;
            int z = ray(A, l - 1);
            bool a_near_next = mod(ua - z, p) < mod(ub - z, p);
            return a_near_next != ((l - 1) % 2 == 1);
        }
        throw std::logic_error("census: strands never diverge");
    };

    // order strands on each side; rank = position counted from v_s
    std::vector<std::vector<Strand>> on_side(p);
    for (int c = 0; c < static_cast<int>(cs.size()); ++c)
        for (long i = 0; i < static_cast<long>(cs[c].size()); ++i) on_side[cs[c].sides[i]].push_back({c, i});
    std::vector<std::vector<long>> rank(cs.size());
    for (size_t c = 0; c < cs.size(); ++c) rank[c].assign(cs[c].size(), 0);
    for (int s = 0; s < p; ++s) {
        auto& v = on_side[s];
        std::sort(v.begin(), v.end(), [&](const Strand& A, const Strand& B) {
            if (A.curve == B.curve && A.index == B.index) return false;
            return larger(B, A);
        });
        for (long r = 0; r < static_cast<long>(v.size()); ++r) rank[v[r].curve][v[r].index] = r;
    }
    // boundary parameter: side s occupies [base_s, base_s + 2 n_s + 1];
    // points at odd offsets, gaps at even ones
    std::vector<long> base(p + 1, 0);
    for (int s = 0; s < p; ++s) base[s + 1] = base[s] + 2 * static_cast<long>(on_side[s].size()) + 1;
    auto point_param = [&](int c, long i) { return base[cs[c].sides[i]] + 2 * rank[c][i] + 1; };

    struct Seg {
        long a, b;
        int curve;
    };
    std::vector<Seg> chords[2];  // 0 front, 1 back
    for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
        long L = static_cast<long>(cs[c].size());
        for (long i = 0; i < L; ++i) {
            long x = point_param(c, i), y = point_param(c, (i + 1) % L);
            chords[i % 2 == 0 ? 1 : 0].push_back({std::min(x, y), std::max(x, y), c});
        }
    }
    auto crosses = [](const Seg& u, const Seg& v) {
        bool in1 = u.a < v.a && v.a < u.b;
        bool in2 = u.a < v.b && v.b < u.b;
        return in1 != in2;
    };
    long X = 0;
    std::vector<long> X_sheet(2, 0);
    std::vector<std::vector<long>> pair_count(cs.size(), std::vector<long>(cs.size(), 0));
    for (int f = 0; f < 2; ++f) {
        const auto& ch = chords[f];
        for (size_t u = 0; u < ch.size(); ++u)
            for (size_t v = u + 1; v < ch.size(); ++v)
                if (crosses(ch[u], ch[v])) {
                    ++X_sheet[f];
                    int c1 = ch[u].curve, c2 = ch[v].curve;
                    pair_count[std::min(c1, c2)][std::max(c1, c2)] += 1;
                }
        X += X_sheet[f];
    }
    for (size_t c = 0; c < cs.size(); ++c) {
        if (pair_count[c][c] != 0) throw std::logic_error("census: drawn curve is not simple");
        for (size_t d = c + 1; d < cs.size(); ++d)
            if (BigInt(pair_count[c][d]) != oracle_intersection(cs[c], cs[d], cap))
                throw std::logic_error("census: strands not in minimal position");
    }

    // faces touching the boundary are identified by their side-signature
    // with respect to every chord of the sheet
    const long P = base[p];
    std::vector<int> face_of_gap[2];
    std::vector<int> face_base(3, 0);
    std::vector<long> face_total(2, 0);
    for (int f = 0; f < 2; ++f) {
        const auto& ch = chords[f];
        std::map<std::vector<bool>, int> ids;
        face_of_gap[f].assign(P, -1);
        for (long t = 0; t < P; ++t) {
            bool is_gap = true;
            for (int s = 0; s < p; ++s)
                if (t >= base[s] && t < base[s + 1]) is_gap = ((t - base[s]) % 2 == 0);
            if (!is_gap) continue;
            std::vector<bool> sig(ch.size());
            for (size_t u = 0; u < ch.size(); ++u) sig[u] = (ch[u].a < t && t < ch[u].b);
            auto it = ids.find(sig);
            if (it == ids.end()) it = ids.emplace(sig, static_cast<int>(ids.size())).first;
            face_of_gap[f][t] = it->second;
        }
        long interior = 1 + static_cast<long>(ch.size()) + X_sheet[f] - static_cast<long>(ids.size());
        if (interior < 0) throw std::logic_error("census: inconsistent face count");
        face_total[f] = interior;
        face_base[f + 1] = face_base[f] + static_cast<int>(ids.size());
    }
    const int NB = face_base[2];
    DSU dsu(NB);
    std::vector<long> glue_edges(NB, 0);
    // each gap on side s is one arc shared by the front and back faces
    std::vector<std::pair<int, int>> arcs;
    for (long t = 0; t < P; ++t) {
        if (face_of_gap[0][t] < 0) continue;
        int u = face_base[0] + face_of_gap[0][t], v = face_base[1] + face_of_gap[1][t];
        arcs.push_back({u, v});
        dsu.unite(u, v);
    }
    // puncture v_j sits between the last gap of side j-1 and the first of side j
    std::vector<int> puncture_face(p);
    for (int j = 0; j < p; ++j) puncture_face[j] = face_base[0] + face_of_gap[0][base[j]];
    std::map<int, Region> by_root;
    std::map<int, long> cells, edges;
    for (int u = 0; u < NB; ++u) cells[dsu.find(u)] += 1;
    for (const auto& a : arcs) edges[dsu.find(a.first)] += 1;
    std::map<int, int> punct;
    for (int j = 0; j < p; ++j) punct[dsu.find(puncture_face[j])] += 1;

    FillingCertificate cert;
    cert.crossings = X;
    for (const auto& [root, n] : cells) {
        long chi = n - edges[root];
        int k = punct.count(root) ? punct[root] : 0;
        RegionKind kind = RegionKind::other;
        if (chi == 1 && k == 0) kind = RegionKind::disk;
        if (chi == 0 && k == 1) kind = RegionKind::punctured_disk;
        cert.regions.push_back({kind, chi, k});
    }
    for (int f = 0; f < 2; ++f)
        for (long r = 0; r < face_total[f]; ++r) cert.regions.push_back({RegionKind::disk, 1, 0});
    if (cert.euler_sum() - X != 2 - p) throw std::logic_error("census: Euler characteristic mismatch");
    cert.verdict = std::all_of(cert.regions.begin(), cert.regions.end(),
                               [](const Region& r) { return r.kind != RegionKind::other; });
    return cert;
}

// ---------------------------------------------------------------- pants

struct PantsData {
    int k = 0;
    std::vector<Curve> sigma;
    std::vector<Curve> completion;
};

// Pull sigma back along a common word until every component is an interval
// curve, add interval curves greedily in (t, a) order, and push forward.
inline PantsData complete_to_pants(const std::vector<Curve>& sigma, int k = 0) {
    if (sigma.empty()) throw std::invalid_argument("empty multicurve");
    const int p = sigma.front().p;
    const auto& S = build_surface(p);
    if (static_cast<int>(sigma.size()) > p - 3) throw std::invalid_argument("too many components for a multicurve");
    for (const auto& c : sigma)
        if (c.p != p) throw std::invalid_argument("mismatched surfaces");
    // try the recorded words of the components, then the identity
    std::vector<MCWord> tries;
    for (const auto& c : sigma)
        if (c.word) tries.push_back(*c.word);
    tries.push_back(MCWord{});
    MCWord W;
    std::vector<IntervalLabel> have;
    bool found = false;
    for (const auto& cand : tries) {
        MCWord inv = inverse(cand, p);
        std::vector<IntervalLabel> labels;
        for (const auto& c : sigma) {
            auto L = S.recognize(apply_word_coords(S, inv, c.coords));
            if (!L) break;
            labels.push_back(*L);
        }
        if (labels.size() != sigma.size()) continue;
        W = cand;
        have = std::move(labels);
        found = true;
        break;
    }
    if (!found) throw UnsupportedError("multicurve is not a transported interval configuration");
    for (size_t i = 0; i < have.size(); ++i)
        if (std::find(have.begin(), have.begin() + i, have[i]) != have.begin() + i)
            throw std::invalid_argument("repeated component");
    for (size_t i = 0; i < have.size(); ++i)
        for (size_t j = i + 1; j < have.size(); ++j)
            if (S.intersect_interval(S.interval_coords(have[i]), have[j]) != 0)
                throw std::invalid_argument("sigma is not a multicurve");
    std::vector<IntervalLabel> added;
    for (int t = 1; t <= p - 3 && static_cast<int>(have.size()) < p - 3; ++t) {
        for (int a = 0; a < p && static_cast<int>(have.size()) < p - 3; ++a) {
            auto L = S.recognize(S.interval_coords({a, t}));
            if (std::find(have.begin(), have.end(), *L) != have.end()) continue;
            auto w = S.interval_coords(*L);
            bool ok = true;
            for (const auto& h : have)
                if (S.intersect_interval(w, h) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            have.push_back(*L);
            added.push_back(*L);
        }
    }
    if (static_cast<int>(have.size()) != p - 3) throw std::logic_error("pants completion failed");
    PantsData out;
    out.k = k;
    out.sigma = sigma;
    auto Wp = std::make_shared<const MCWord>(W);
    for (const auto& L : added)
        out.completion.push_back(Curve{p, apply_word_coords(S, W, S.interval_coords(L)), Wp, L});
    return out;
}

}  // namespace endlam
