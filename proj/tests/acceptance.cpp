// Acceptance run: one line per criterion, exit 1 if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <endlam/cli.hpp>

#include "oracle.hpp"

using namespace endlam;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
    std::ostringstream o;
    o.precision(3);
    o << s << "s";
    return o.str();
}

std::string dbl(double x) {
    std::ostringstream o;
    o.precision(3);
    o << x;
    return o.str();
}

// 1. condition P with b = b' = 2
Outcome condition_p() {
    Outcome r;
    auto t0 = Clock::now();
    std::ostringstream d;
    for (int p : {5, 7, 9}) {
        const int m = (p - 1) / 2;
        auto seq = build_sequence(p, make_schedule(16, 2, 4 * m), 3 * m);
        auto rep = verify_condition_P(seq);
        long fails = 0;
        for (const auto& row : rep.rows) fails += !row.pass;
        r.pass = r.pass && fails == 0 && seq.b == 2 && seq.bprime == 2;
        d << "p=" << p << " " << rep.rows.size() - fails << "/" << rep.rows.size() << " clauses; ";
    }
    double s = seconds_since(t0);
    r.pass = r.pass && s < 60;
    d << "b=b'=2; " << secs(s);
    r.detail = d.str();
    return r;
}

// 2. exact intersection identities and oracle agreement
Outcome intersection_identities() {
    Outcome r;
    auto t0 = Clock::now();
    long pairs = 0, bad = 0, twos = 0, bad_two = 0;
    for (int p : {5, 7, 9}) {
        const int m = (p - 1) / 2;
        for (auto [e0, a] : {std::pair<long, long>{16, 2}, {304, 2}, {1, 3}}) {
            auto seq = build_sequence(p, make_schedule(e0, a, 40), 30);
            IntersectionTable tab(seq);
            for (int k = 0; k + m <= seq.depth; ++k, ++twos) bad_two += tab(k, k + m) != 2;
        }
    }
    long bad_04 = 0;
    for (long e0 : {1L, 2L, 5L, 16L, 304L, 99991L}) {
        auto seq = build_sequence(5, make_schedule(e0, 2, 8), 5);
        bad_04 += intersection_number(seq.gamma[0], seq.gamma[4]) != 4 * seq.e(2);
    }
    // schedules with every exponent <= 8
    std::vector<std::vector<BigInt>> small{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                           {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
                                           {1, 2, 4, 8, 8, 8, 8, 8, 8, 8, 8},
                                           {3, 5, 8, 8, 8, 8, 8, 8, 8, 8, 8},
                                           {8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8}};
    for (int p : {5, 7}) {
        const int m = (p - 1) / 2, depth = 2 * m + 2;
        for (const auto& e : small) {
            auto sch = explicit_schedule(e);
            auto seq = build_sequence(p, sch, depth);
            auto g = oracle::chord_sequence(p, sch, depth);
            for (int i = 0; i <= depth; ++i)
                for (int k = i; k <= depth; ++k) {
                    BigInt v = intersection_number(seq.gamma[i], seq.gamma[k]);
                    BigInt o1 = oracle::inter(g[i], g[k]);
                    BigInt o2 = oracle_intersection(seq.gamma[i], seq.gamma[k]);
                    ++pairs;
                    bad += (v != o1) || (v != o2);
                }
        }
    }
    double s = seconds_since(t0);
    r.pass = bad == 0 && bad_two == 0 && bad_04 == 0 && s < 300;
    r.detail = "i(g_k,g_k+m)=2 on " + std::to_string(twos - bad_two) + "/" + std::to_string(twos) +
               "; i(g0,g4)=4e2 on " + std::to_string(6 - bad_04) + "/6 schedules; oracle agreement " +
               std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs; " + secs(s);
    return r;
}

// 3. |i(D_b^e(d'), d) - |e| i(d',b) i(d,b)| <= i(d,d')
Outcome twist_inequality() {
    Outcome r;
    std::mt19937_64 rng(20240611);
    long n = 0, bad = 0, nontrivial = 0;
    for (int p : {5, 7, 9}) {
        const int m = (p - 1) / 2;
        auto seq = build_sequence(p, make_schedule(2, 2, 4 * m + 2), 3 * m + 2);
        std::vector<const Curve*> pool;
        for (const auto& c : seq.gamma) pool.push_back(&c);
        for (const auto& c : seq.aux) pool.push_back(&c);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<long> ex(-60, 60);
        for (int t = 0; t < 400; ++t) {
            const Curve& b = *pool[pick(rng)];
            const Curve& d = *pool[pick(rng)];
            const Curve& d2 = *pool[pick(rng)];
            long e = ex(rng);
            BigInt lhs = intersection_number(dehn_twist(d2, b, e), d);
            BigInt main = BigInt(std::labs(e)) * intersection_number(d2, b) * intersection_number(d, b);
            BigInt diff = lhs > main ? BigInt(lhs - main) : BigInt(main - lhs);
            ++n;
            nontrivial += main != 0;
            bad += diff > intersection_number(d, d2);
        }
    }
    r.pass = bad == 0 && n >= 1000;
    r.detail = std::to_string(n - bad) + "/" + std::to_string(n) + " samples (" + std::to_string(nontrivial) +
               " with nonzero main term), integer arithmetic";
    return r;
}

// 4. growth ratios against A(i,k) and the ratio lemma
Outcome twist_products() {
    Outcome r;
    auto seq = build_sequence(5, make_schedule(16, 2, 16), 14);
    IntersectionTable tab(seq);
    auto rep = intersection_ratio_table(seq, tab);
    bool band = rep.kappa0_finite;
    long q = 0;
    for (const auto& row : rep.rows)
        if (row.qualifying) {
            ++q;
            band = band && row.ratio <= rep.kappa0 && row.ratio * rep.kappa0 >= 1;
        }
    // stabilisation: kappa0 moves with period m in the depth, so take its
    // increments over m steps ending at the final depth.  They contract by a
    // factor c < 1, so the limit is at most kappa0 + last * c / (1 - c)
    std::vector<Rational> inc;
    const auto& kd = rep.kappa0_by_depth;
    std::vector<int> depths;
    for (int d = seq.depth; d >= 0 && kd[d] > 0; d -= seq.m) depths.insert(depths.begin(), d);
    for (size_t i = 1; i < depths.size(); ++i) inc.push_back(kd[depths[i]] - kd[depths[i - 1]]);
    Rational c = 0;
    bool stable = inc.size() >= 3;
    for (size_t i = 1; i < inc.size(); ++i) {
        if (inc[i - 1] > 0)
            c = std::max(c, Rational(inc[i] / inc[i - 1]));
        else if (inc[i] > 0)
            stable = false;
    }
    stable = stable && c < 1;
    Rational limit = stable ? Rational(rep.kappa0 + inc.back() * c / (1 - c)) : Rational(0);
    auto lemma = check_ratio_lemma(seq);
    r.pass = band && rep.kappa0 <= 8 && stable && limit <= 8 && lemma.failed == 0;
    r.detail = "kappa0=" + dbl(rep.kappa0.convert_to<double>()) + " over " + std::to_string(q) +
               " qualifying pairs, increments contract by <= " + dbl(c.convert_to<double>()) + ", limit <= " +
               dbl(limit.convert_to<double>()) + "; ratio lemma " + std::to_string(lemma.checked - lemma.failed) +
               "/" + std::to_string(lemma.checked);
    return r;
}

// 5. twisted triples within 4 of e_k; estimator calibration
Outcome annular_coefficients() {
    Outcome r;
    long tw = 0, tw_bad = 0;
    long fam = 0, slope_miss = 0, ratio_miss = 0, ratio_fam = 0, ratio_fam_miss = 0;
    long ratio_max_dev = 0;
    std::vector<std::vector<BigInt>> scheds{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                            {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048},
                                            {2, 2, 3, 5, 8, 8, 8, 8, 8, 8, 8, 8},
                                            {3, 4, 6, 8, 8, 8, 8, 8, 8, 8, 8, 8},
                                            {8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8}};
    for (int p : {5, 7}) {
        const int m = (p - 1) / 2;
        for (const auto& e : scheds) {
            auto seq = build_sequence(p, explicit_schedule(e), 2 * m + 3);
            IntersectionTable tab(seq);
            SequenceCoeffs c(seq, tab);
            for (int k = m; k + m <= seq.depth; ++k) {
                if (seq.e(k) > 8) continue;
                AnnularCoeff d = c.exact(k, k - m, k + m);
                ++tw;
                tw_bad += abs_diff(d.value, seq.e(k)) > 4;
            }
            for (int k = 0; k <= seq.depth; ++k)
                for (int a = 0; a <= seq.depth; ++a)
                    for (int b = a; b <= seq.depth; ++b) {
                        if (a == k || b == k || tab(a, k) == 0 || tab(b, k) == 0) continue;
                        AnnularCoeff ex;
                        try {
                            ex = c.exact(k, a, b);
                        } catch (const OracleScaleExceeded&) {
                            continue;
                        }
                        ++fam;
                        AnnularCoeff sl = c.slope(k, a, b), ra = c.estimate(k, a, b);
                        slope_miss += ex.value < sl.lower() || ex.value > sl.upper();
                        bool rmiss = ex.value < ra.lower() || ex.value > ra.upper();
                        ratio_miss += rmiss;
                        if (a == k - m && b == k + m) {
                            ++ratio_fam;
                            ratio_fam_miss += rmiss;
                            ratio_max_dev = std::max(ratio_max_dev, static_cast<long>(abs_diff(ex.value, ra.value)));
                        }
                    }
        }
    }
    r.pass = tw > 0 && tw_bad == 0 && fam > 0 && slope_miss == 0 && ratio_fam_miss == 0;
    r.detail = "|d-e_k|<=4 on " + std::to_string(tw - tw_bad) + "/" + std::to_string(tw) +
               " twisted triples; twist-slope estimator (D=" + std::to_string(slope_delta) + ") brackets " +
               std::to_string(fam - slope_miss) + "/" + std::to_string(fam) +
               " of the small-scale family; ratio estimator (D=3) brackets " +
               std::to_string(ratio_fam - ratio_fam_miss) + "/" + std::to_string(ratio_fam) +
               " twisted triples (max dev " + std::to_string(ratio_max_dev) + "), " + std::to_string(fam - ratio_miss) +
               "/" + std::to_string(fam) + " of the full family";
    return r;
}

// 6. curve complex distance certificates
Outcome quasi_geodesic() {
    Outcome r;
    auto t0 = Clock::now();
    auto seq = build_sequence(5, make_schedule(304, 2, 64), 60);
    IntersectionTable tab(seq, 4);
    SequenceCoeffs coeff(seq, tab);
    const long K = qg_constant(seq.m);
    long n = 0, bad = 0, markers = 0, max_lower = 0;
    for (int i = 0; i <= 60; ++i)
        for (int j = i + 1; j <= 60; ++j) {
            auto b = cc_distance_bounds(seq, coeff, i, j);
            ++n;
            markers += b.markers_verified;
            max_lower = std::max(max_lower, b.lower);
            bad += !(K * b.lower >= (j - i) - K && b.upper == j - i && b.lower <= b.upper);
        }
    r.pass = K == 11 && bad == 0;
    r.detail = "K=C=" + std::to_string(K) + ", " + std::to_string(n - bad) + "/" + std::to_string(n) +
               " pairs up to depth 60, " + std::to_string(markers) + " markers certified, max lower " +
               std::to_string(max_lower) + "; " + secs(seconds_since(t0));
    return r;
}

// 7. ergodic splitting at p = 5
Outcome ergodic_splitting() {
    Outcome r;
    auto seq = build_sequence(5, make_schedule(16, 4, 16), 14);
    IntersectionTable tab(seq);
    auto ar = intersection_ratio_table(seq, tab);
    auto cr = convergence_report(seq, default_family(seq));
    std::ostringstream d;
    for (const auto& rc : cr.residues) {
        r.pass = r.pass && rc.decay_ok;
        d << "h=" << rc.h << " decay " << (rc.decay_ok ? "ok" : "FAIL") << " (bound " << dbl(rc.bound.convert_to<double>())
          << "); ";
    }
    for (auto [h, h2] : {std::pair<int, int>{0, 1}, {1, 0}}) {
        auto sr = singularity_ratios(seq, tab, h, h2, 6, ar.kappa0);
        bool ok = sr.band_ok && sr.cross_monotone && sr.monotone_steps >= 3;
        r.pass = r.pass && ok;
        d << "(" << h << "," << h2 << ") cross decreasing over " << sr.monotone_steps << " steps, same in band "
          << (sr.band_ok ? "yes" : "no") << "; ";
    }
    d << "kappa0=" << dbl(ar.kappa0.convert_to<double>());
    r.detail = d.str();
    return r;
}

// 8. model limit trace at p = 7
Outcome limit_trace_check() {
    Outcome r;
    auto t0 = Clock::now();
    auto seq = build_sequence(7, make_schedule(16, 4, 20), 15);
    LengthModelParams P;
    P.samples = 32;
    auto tr = limit_trace(seq, default_family(seq), P, 4);
    const int m = seq.m;
    std::map<int, double> res;
    std::map<int, double> c1;
    for (const auto& tp : tr.points) {
        res[tp.k] = std::max(res[tp.k], tp.residual);
        if (tp.regime == Regime::C1) c1[tp.k] = sup_distance(tp.projective, tr.vertices[tp.k % m]);
    }
    bool dec = true;
    for (auto [k, v] : res)
        if (res.count(k + m) && !(res[k + m] < v)) dec = false;
    double deepest = res.rbegin()->second;
    bool a = dec && deepest < 1e-2;
    // deepest C1 point of each residue
    bool b = true;
    std::ostringstream d;
    d << "residual decreasing per residue " << (dec ? "yes" : "no") << ", deepest " << dbl(deepest) << "; C1 dist";
    for (int h = 0; h < m; ++h) {
        int k = -1;
        for (auto [kk, v] : c1)
            if (kk % m == h) k = kk;
        double dist = k < 0 ? 1.0 : c1[k];
        b = b && dist <= 5e-2;
        d << " " << dbl(dist);
    }
    bool c = true;
    d << "; edge midpoints";
    for (int h = 0; h < m; ++h) {
        std::vector<double> mid(tr.vertices[h].size());
        for (size_t i = 0; i < mid.size(); ++i) mid[i] = tr.vertices[h][i] + tr.vertices[(h + 1) % m][i];
        mid = projectivize(mid);
        double best = 1e9;
        for (const auto& tp : tr.points) best = std::min(best, sup_distance(tp.projective, mid));
        c = c && best <= 1e-1;
        d << " " << dbl(best);
    }
    double s = seconds_since(t0);
    r.pass = a && b && c && s < 600;
    d << "; " << secs(s);
    r.detail = d.str();
    return r;
}

// 9. reruns of every subcommand are byte identical
Outcome determinism() {
    Outcome r;
    namespace fs = std::filesystem;
    fs::path dir = "acceptance_work";
    fs::create_directories(dir);
    auto P = [&](const std::string& f) { return (dir / f).string(); };
    write_file(P("triples.csv"), "k,i,j\n5,2,10\n6,3,9\n4,0,7\n3,2,5\n");
    std::vector<std::vector<std::string>> cmds{
        {"build", "--p", "5", "--e0", "16", "--ratio", "2", "--depth", "12", "--out", P("seq5.json")},
        {"build", "--p", "7", "--e0", "16", "--ratio", "4", "--depth", "13", "--out", P("seq7.json")},
        {"verify-p", "--seq", P("seq5.json"), "--out", P("verify.csv")},
        {"intersections", "--seq", P("seq5.json"), "--pairs", "all", "--out", P("table.csv")},
        {"annular", "--seq", P("seq5.json"), "--triples", P("triples.csv"), "--out", P("annular.csv")},
        {"annular", "--seq", P("seq5.json"), "--out", P("npo.csv"), "--behrstock-out", P("behrstock.csv")},
        {"distance", "--seq", P("seq5.json"), "--pairs", "all", "--out", P("distance.csv")},
        {"ergodic", "--seq", P("seq5.json"), "--out", P("split.csv")},
        {"limit-trace", "--seq", P("seq7.json"), "--p7", "--samples", "8", "--out", P("trace.csv"), "--emit-edges",
         P("edges.csv")},
    };
    auto invoke = [](std::vector<std::string> args, std::string& log) {
        args.insert(args.begin(), "endlam");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
        log = out.str() + err.str();
        return code;
    };
    long same = 0, files = 0;
    std::string bad;
    std::set<std::string> seen;
    for (const auto& cmd : cmds) {
        std::string out = cmd[std::find(cmd.begin(), cmd.end(), "--out") - cmd.begin() + 1];
        std::map<std::string, std::string> first;
        std::string log1, log2;
        int c1 = invoke(cmd, log1);
        auto snapshot = [&](std::map<std::string, std::string>& into) {
            auto man = json::parse(read_file(out + ".manifest.json"));
            into[out + ".manifest.json"] = read_file(out + ".manifest.json");
            for (const auto& o : man["outputs"]) into[o["path"]] = read_file(o["path"]);
        };
        snapshot(first);
        int c2 = invoke(cmd, log2);
        std::map<std::string, std::string> second;
        snapshot(second);
        seen.insert(cmd[0]);
        bool ok = c1 == c2 && c1 != 2 && log1 == log2 && first == second;
        files += static_cast<long>(first.size());
        if (ok)
            ++same;
        else
            bad += " " + cmd[0];
    }
    r.pass = same == static_cast<long>(cmds.size()) && seen.size() == 7;
    r.detail = std::to_string(same) + "/" + std::to_string(cmds.size()) + " invocations over " +
               std::to_string(seen.size()) + " subcommands identical (" + std::to_string(files) + " files each run)" +
               (bad.empty() ? "" : "; differing:" + bad);
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"condition P reproduction", condition_p},
        {"exact intersection identities", intersection_identities},
        {"twist intersection inequality", twist_inequality},
        {"twist-product asymptotics", twist_products},
        {"annular coefficients", annular_coefficients},
        {"quasi-geodesic certificates", quasi_geodesic},
        {"ergodic splitting", ergodic_splitting},
        {"limit trace", limit_trace_check},
        {"determinism", determinism},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
