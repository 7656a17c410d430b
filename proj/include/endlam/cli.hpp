#pragma once
// Command-line front end.  run() is the whole program; tools/endlam.cpp only
// forwards argv.  Exit codes: 0 success, 1 a checked property failed (the
// report is still written), 2 usage or domain error.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "ergodics.hpp"
#include "io.hpp"
#include "lengthmodel.hpp"
#include "subproj.hpp"

namespace endlam {

inline constexpr const char* artifact_version = "1.0.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int n = 0;
    EVP_Digest(data.data(), data.size(), md, &n, EVP_sha256(), nullptr);
    std::ostringstream o;
    for (unsigned i = 0; i < n; ++i) o << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return o.str();
}

namespace cli_detail {

struct Common {
    std::string constants_path;
    size_t oracle_cap = default_oracle_cap;
    int jobs = 1;
    std::string out;
};

inline void add_common(CLI::App* app, Common& c, const std::string& default_out) {
    c.out = default_out;
    app->add_option("--constants", c.constants_path, "key=value file with B0, G0");
    app->add_option("--oracle-cap", c.oracle_cap, "largest chord-word total handed to the oracle")->check(CLI::PositiveNumber);
    app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--out", c.out, "output path");
}

// Collects artifacts and the manifest for one invocation
class Run {
public:
    Run(std::string command, const Common& c, std::ostream& log)
        : command_(std::move(command)), common_(c), log_(log) {
        vc_ = c.constants_path.empty() ? VerifierConstants{} : load_constants(c.constants_path);
        if (!c.constants_path.empty()) input(c.constants_path);
    }

    const VerifierConstants& constants() const { return vc_; }

    void arg(const std::string& k, json v) { args_[k] = std::move(v); }

    void input(const std::string& path) {
        inputs_.push_back(json{{"path", path}, {"sha256", sha256_hex(read_file(path))}});
    }

    void output(const std::string& path, const std::string& text) {
        write_file(path, text);
        outputs_.push_back(json{{"path", path}, {"sha256", sha256_hex(text)}});
    }

    std::ostream& log() { return log_; }

    void finish(int status) {
        json m;
        m["artifact"] = "endlam";
        m["version"] = artifact_version;
        m["command"] = command_;
        m["args"] = args_;
        m["constants"] = constants_json(vc_);
        m["oracle_cap"] = common_.oracle_cap;
        m["inputs"] = inputs_;
        m["outputs"] = outputs_;
        m["status"] = status;
        write_file(common_.out + ".manifest.json", m.dump(1) + "\n");
    }

private:
    std::string command_;
    Common common_;
    std::ostream& log_;
    VerifierConstants vc_;
    json args_ = json::object();
    json inputs_ = json::array();
    json outputs_ = json::array();
};

inline std::vector<std::pair<int, int>> parse_pairs(const std::string& s, int depth) {
    std::vector<std::pair<int, int>> out;
    if (s == "all") {
        for (int i = 0; i <= depth; ++i)
            for (int j = i + 1; j <= depth; ++j) out.push_back({i, j});
        return out;
    }
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad index list: " + s);
        }
    }
    if (v.size() % 2) throw UsageError("pairs need an even number of indices");
    for (size_t i = 0; i < v.size(); i += 2) {
        if (v[i] < 0 || v[i + 1] < 0 || v[i] > depth || v[i + 1] > depth) throw UsageError("index outside the sequence");
        out.push_back({v[i], v[i + 1]});
    }
    return out;
}

inline std::string yes(bool b) { return b ? "pass" : "FAIL"; }

// ------------------------------------------------------------------ build

struct BuildOpts {
    int p = 0;
    std::string e0 = "16", ratio = "2", schedule;
    int depth = 0;
    bool strict = false;
};

inline int cmd_build(const BuildOpts& o, const Common& c, std::ostream& log) {
    Run run("build", c, log);
    run.arg("p", o.p);
    run.arg("depth", o.depth);
    const auto& S = build_surface(o.p);
    const int need = o.depth + S.m();
    TwistSchedule sch;
    if (!o.schedule.empty()) {
        std::vector<BigInt> e;
        std::stringstream ss(o.schedule);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                e.push_back(BigInt(tok));
            } catch (const std::exception&) {
                throw UsageError("bad schedule entry: " + tok);
            }
        }
        sch = explicit_schedule(e, run.constants());
        sch.gate = o.strict;
        run.arg("schedule", o.schedule);
    } else {
        sch = make_schedule(BigInt(o.e0), parse_rational(o.ratio), need - 1, o.strict, run.constants());
        run.arg("e0", o.e0);
        run.arg("ratio", o.ratio);
    }
    run.arg("strict", o.strict);
    if (o.strict && !sch.gate_ok()) throw DomainError("schedule below E0 = " + sch.E0.str());
    CurveSequence seq = build_sequence(o.p, sch, o.depth);
    run.output(c.out, sequence_to_json(seq).dump(1) + "\n");
    log << "built p=" << o.p << " m=" << seq.m << " depth=" << o.depth << " (" << seq.gamma.size() << " curves, "
        << seq.aux.size() << " auxiliary)\n";
    run.finish(0);
    return 0;
}

// --------------------------------------------------------------- verify-p

inline int cmd_verify(const std::string& seq_path, const Common& c, std::ostream& log) {
    Run run("verify-p", c, log);
    run.input(seq_path);
    CurveSequence seq = load_sequence(seq_path);
    ConditionReport rep = verify_condition_P(seq, c.oracle_cap);
    Csv csv({"clause", "k", "result", "detail"});
    int fails = 0;
    for (const auto& r : rep.rows) {
        csv.row({r.clause, std::to_string(r.k), yes(r.pass), r.detail});
        fails += !r.pass;
    }
    run.output(c.out, csv.str());
    log << "condition P, p=" << seq.p << " depth=" << seq.depth << " b=" << seq.b << " b'=" << seq.bprime << ": "
        << rep.rows.size() - fails << "/" << rep.rows.size() << " rows pass\n";
    int st = rep.all_pass() ? 0 : 1;
    run.finish(st);
    return st;
}

// ----------------------------------------------------------- intersections

inline int cmd_intersections(const std::string& seq_path, const std::string& pairs, const Common& c,
                             std::ostream& log) {
    Run run("intersections", c, log);
    run.input(seq_path);
    run.arg("pairs", pairs);
    CurveSequence seq = load_sequence(seq_path);
    auto ps = parse_pairs(pairs, seq.depth);
    Csv csv({"i", "j", "intersection", "method"});
    for (auto [i, j] : ps) {
        try {
            Intersection r = intersection_detail(seq.gamma[i], seq.gamma[j], c.oracle_cap);
            csv.row({std::to_string(i), std::to_string(j), r.value.str(), method_name(r.method)});
        } catch (const std::exception& e) {
            csv.row({std::to_string(i), std::to_string(j), "", std::string("skipped: ") + e.what()});
        }
    }
    run.output(c.out, csv.str());
    log << ps.size() << " pairs\n";
    run.finish(0);
    return 0;
}

// ----------------------------------------------------------------- annular

struct AnnularOpts {
    std::string seq, triples, mode = "auto", behrstock_out;
    long delta = 3;
};

inline std::string method_str(const AnnularCoeff& a) {
    return a.method == CoeffMethod::exact ? "exact" : "estimated";
}

inline int cmd_annular(const AnnularOpts& o, const Common& c, std::ostream& log) {
    Run run("annular", c, log);
    run.input(o.seq);
    run.arg("mode", o.mode);
    run.arg("delta", o.delta);
    CurveSequence seq = load_sequence(o.seq);
    IntersectionTable tab(seq, c.jobs);
    SequenceCoeffs coeff(seq, tab, c.oracle_cap, o.delta);
    int status = 0;
    if (!o.triples.empty()) {
        run.input(o.triples);
        Csv csv({"k", "i", "j", "value", "uncertainty", "method", "e_k"});
        for (const auto& row : read_csv(o.triples)) {
            if (row.size() != 3) throw UsageError("triples file needs k,i,j per line");
            if (row[0] == "k") continue;  // header
            int k, i, j;
            try {
                k = std::stoi(row[0]);
                i = std::stoi(row[1]);
                j = std::stoi(row[2]);
            } catch (const std::exception&) {
                throw UsageError("bad triple line");
            }
            for (int x : {k, i, j})
                if (x < 0 || x > seq.depth) throw UsageError("triple index outside the sequence");
            std::vector<std::string> f{row[0], row[1], row[2]};
            try {
                AnnularCoeff d;
                if (o.mode == "exact")
                    d = tab(i, k) == 0 || tab(j, k) == 0 ? throw DisjointFromAxis("curve disjoint from axis")
                                                         : coeff.exact(k, i, j);
                else if (o.mode == "estimate")
                    d = coeff.estimate(k, i, j);
                else if (o.mode == "slope")
                    d = tab(i, k) == 0 || tab(j, k) == 0 ? throw DisjointFromAxis("curve disjoint from axis")
                                                         : coeff.slope(k, i, j);
                else
                    d = coeff(k, i, j);
                f.insert(f.end(), {d.value.str(), d.uncertainty.str(), method_str(d)});
            } catch (const DisjointFromAxis& e) {
                f.insert(f.end(), {"", "", std::string("skipped: ") + e.what()});
            } catch (const OracleScaleExceeded& e) {
                f.insert(f.end(), {"", "", std::string("skipped: ") + e.what()});
            }
            f.push_back(seq.e(k).str());
            csv.row(f);
        }
        run.output(c.out, csv.str());
    } else {
        LocalGlobalReport rep = local_to_global_check(seq, run.constants(), tab, 2000, c.oracle_cap, o.delta);
        Csv csv({"i", "k", "j", "value", "uncertainty", "method", "e_k", "e_i", "result"});
        for (const auto& r : rep.rows)
            csv.row({std::to_string(r.i), std::to_string(r.k), std::to_string(r.j), r.d.value.str(),
                     r.d.uncertainty.str(), method_str(r.d), r.e_k.str(), r.e_i.str(), yes(r.pass)});
        run.output(c.out, csv.str());
        log << "nearly partial order |d - e_k| <= 2B0+4 = " << 2 * run.constants().B0 + 4 << ": "
            << yes(rep.all_pass()) << " on " << rep.rows.size() << " triples\n";
        if (!rep.hypothesis_met) log << "hypothesis unmet: e_0 < E0 = " << run.constants().E0() << "\n";
        if (!rep.all_pass()) status = 1;
    }
    if (!o.behrstock_out.empty()) {
        std::vector<std::pair<int, int>> sm;
        for (int k = 0; k <= seq.depth; ++k)
            for (int l = k + 1; l <= seq.depth; ++l) sm.push_back({k, l});
        BehrstockReport br = behrstock_check(seq, tab, sm, run.constants(), c.oracle_cap, o.delta);
        Csv csv({"k", "l", "side_kl", "side_lk", "method", "result"});
        for (const auto& r : br.rows)
            csv.row({std::to_string(r.k), std::to_string(r.l), r.side_kl.str(), r.side_lk.str(), r.method, yes(r.pass)});
        run.output(o.behrstock_out, csv.str());
        log << "behrstock min side <= B0 = " << br.B0 << ": " << yes(br.all_pass()) << ", empirical max "
            << br.empirical_max << ", " << br.skipped << " disjoint pairs skipped\n";
        if (!br.all_pass()) status = 1;
    }
    run.finish(status);
    return status;
}

// ---------------------------------------------------------------- distance

inline int cmd_distance(const std::string& seq_path, const std::string& pairs, const Common& c, std::ostream& log) {
    Run run("distance", c, log);
    run.input(seq_path);
    run.arg("pairs", pairs);
    CurveSequence seq = load_sequence(seq_path);
    IntersectionTable tab(seq, c.jobs);
    SequenceCoeffs coeff(seq, tab, c.oracle_cap);
    const long K = qg_constant(seq.m);
    Csv csv({"i", "j", "lower", "upper", "q", "markers_verified", "method", "linear_bound"});
    bool ok = true;
    for (auto [i, j] : parse_pairs(pairs, seq.depth)) {
        if (i >= j) throw UsageError("distance pairs need i < j");
        DistanceBounds b = cc_distance_bounds(seq, coeff, i, j, run.constants());
        bool lin = K * b.lower >= (j - i) - K && b.lower <= b.upper;
        ok = ok && lin;
        csv.row({std::to_string(i), std::to_string(j), std::to_string(b.lower), std::to_string(b.upper),
                 std::to_string(b.q), std::to_string(b.markers_verified), b.method, yes(lin)});
    }
    run.output(c.out, csv.str());
    log << "distance certificates with K = C = " << K << ": " << yes(ok) << "\n";
    run.finish(ok ? 0 : 1);
    return ok ? 0 : 1;
}

// ----------------------------------------------------------------- ergodic

inline std::string stem(const std::string& path) {
    auto dot = path.rfind('.');
    auto slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

inline int cmd_ergodic(const std::string& seq_path, int K, const Common& c, std::ostream& log) {
    Run run("ergodic", c, log);
    run.input(seq_path);
    CurveSequence seq = load_sequence(seq_path);
    const int m = seq.m;
    if (K < 0) K = (seq.depth - (m - 1)) / m;
    run.arg("proxy_depth", K);
    IntersectionTable tab(seq, c.jobs);
    AsymptoticsReport ar = intersection_ratio_table(seq, tab);
    RatioLemmaResult rl = check_ratio_lemma(seq);
    ConvergenceReport cr = convergence_report(seq, default_family(seq));
    bool ok = ar.kappa0_finite && rl.failed == 0;
    {
        Csv csv({"i", "k", "intersection", "A", "ratio", "qualifying"});
        for (const auto& r : ar.rows)
            csv.row({std::to_string(r.i), std::to_string(r.k), r.inter.str(), r.A.str(), rational_str(r.ratio),
                     r.qualifying ? "yes" : "no"});
        run.output(stem(c.out) + "_ratios.csv", csv.str());
    }
    {
        std::vector<std::string> hdr{"h", "k", "index"};
        for (const auto& n : cr.family_names) hdr.push_back(n);
        hdr.push_back("residual_to_next");
        Csv csv(hdr);
        for (const auto& rc : cr.residues) {
            for (size_t s = 0; s < rc.proxies.size(); ++s) {
                const auto& px = rc.proxies[s];
                std::vector<std::string> f{std::to_string(rc.h), std::to_string(px.k), std::to_string(rc.h + px.k * m)};
                for (const auto& v : px.vector) f.push_back(rational_str(v));
                f.push_back(s < rc.residuals.size() ? rational_str(rc.residuals[s]) : "");
                csv.row(f);
            }
            ok = ok && rc.decay_ok;
        }
        run.output(stem(c.out) + "_convergence.csv", csv.str());
    }
    Csv csv({"h", "hprime", "K", "i", "same", "cross"});
    bool sing_ok = true;
    for (int h = 0; h < m; ++h)
        for (int h2 = 0; h2 < m; ++h2) {
            if (h == h2) continue;
            try {
                SingularityReport sr = singularity_ratios(seq, tab, h, h2, K, ar.kappa0);
                for (const auto& r : sr.rows)
                    csv.row({std::to_string(h), std::to_string(h2), std::to_string(K), std::to_string(r.i),
                             rational_str(r.same), rational_str(r.cross)});
                sing_ok = sing_ok && sr.band_ok && sr.cross_monotone;
                log << "singularity h=" << h << " h'=" << h2 << ": band " << yes(sr.band_ok) << ", cross decreasing "
                    << yes(sr.cross_monotone) << " over " << sr.monotone_steps << " steps\n";
            } catch (const std::invalid_argument& e) {
                csv.row({std::to_string(h), std::to_string(h2), std::to_string(K), "", std::string("skipped: ") + e.what(), ""});
                sing_ok = false;
            }
        }
    run.output(c.out, csv.str());
    ok = ok && sing_ok;
    log << std::setprecision(6) << "kappa = " << ar.kappa.convert_to<double>() << ", kappa0 = "
        << ar.kappa0.convert_to<double>() << (ar.kappa0_finite ? "" : " (infinite)") << "\n";
    log << "ratio lemma: " << rl.checked - rl.failed << "/" << rl.checked << " triples\n";
    for (const auto& rc : cr.residues)
        log << "residue " << rc.h << ": residual decay " << yes(rc.decay_ok) << " (fit " << rc.fitted_rate
            << ", burn-in " << rc.burn_in << ")\n";
    for (const auto& e : cr.excluded) log << "notice: " << e << "\n";
    log << "distinctness verified at depth K=" << K << ": " << (cr.distinct ? "yes" : "no") << "\n";
    run.finish(ok ? 0 : 1);
    return ok ? 0 : 1;
}

// ------------------------------------------------------------- limit-trace

struct TraceOpts {
    std::string seq, eps = "scaled", edges_out;
    bool p7 = false;
    LengthModelParams params;
};

inline int cmd_trace(TraceOpts o, const Common& c, std::ostream& log) {
    Run run("limit-trace", c, log);
    run.input(o.seq);
    CurveSequence seq = load_sequence(o.seq);
    if (o.p7 && seq.p != 7) throw UsageError("--p7 given but the sequence lives on p = " + std::to_string(seq.p));
    if (o.eps == "literal")
        o.params.eps_model = EpsModel::literal;
    else if (o.eps != "scaled")
        throw UsageError("--eps must be scaled or literal");
    const auto& P = o.params;
    run.arg("samples", P.samples);
    run.arg("L0", fmt_double(P.L0));
    run.arg("eps", o.eps);
    run.arg("lambda", fmt_double(P.lambda));
    run.arg("rho_min", fmt_double(P.rho_min));
    run.arg("rho_max", fmt_double(P.rho_max));
    run.arg("k_min", P.k_min);
    auto fam = default_family(seq);
    LimitTrace tr = limit_trace(seq, fam, P, c.jobs);
    std::vector<std::string> hdr{"k", "u", "regime", "x_k", "y_k"};
    for (const auto& n : tr.family) hdr.push_back(n);
    hdr.insert(hdr.end(), {"residual", "error_scale"});
    Csv csv(hdr);
    double last_res = 0;
    for (const auto& tp : tr.points) {
        std::vector<std::string> f{std::to_string(tp.k), fmt_double(tp.u), std::string("model:") + regime_name(tp.regime),
                                   fmt_double(tp.x), fmt_double(tp.y)};
        for (double v : tp.projective) f.push_back(fmt_double(v));
        f.push_back(fmt_double(tp.residual));
        f.push_back(fmt_double(tp.error_scale));
        csv.row(f);
        last_res = std::max(tp.k == tr.points.back().k ? tp.residual : 0.0, last_res);
    }
    run.output(c.out, csv.str());
    if (!o.edges_out.empty()) {
        std::vector<std::string> eh{"vertex", "index"};
        for (const auto& n : tr.family) eh.push_back(n);
        Csv ec(eh);
        for (size_t h = 0; h < tr.vertices.size(); ++h) {
            std::vector<std::string> f{"nu" + std::to_string(h), std::to_string(tr.vertex_index[h])};
            for (double v : tr.vertices[h]) f.push_back(fmt_double(v));
            ec.row(f);
        }
        run.output(o.edges_out, ec.str());
    }
    log << "model trace: " << tr.points.size() << " points, deepest residual " << fmt_double(last_res) << "\n";
    run.finish(0);
    return 0;
}

}  // namespace cli_detail

inline int run(int argc, const char* const* argv, std::ostream& log = std::cout, std::ostream& err = std::cerr) {
    using namespace cli_detail;
    CLI::App app{"endlam: curve sequences, twisting and limit sets on punctured spheres", "endlam"};
    app.require_subcommand(1);
    Common common;

    BuildOpts bo;
    auto* build = app.add_subcommand("build", "build gamma_k, gamma'_k and Phi_k for a schedule");
    build->add_option("--p", bo.p, "number of punctures (odd, >= 5)")->required();
    build->add_option("--e0", bo.e0, "first twist exponent");
    build->add_option("--ratio", bo.ratio, "growth ratio a, integer or num/den");
    build->add_option("--depth", bo.depth, "last index k")->required();
    build->add_option("--schedule", bo.schedule, "explicit exponents e_0,e_1,...");
    build->add_flag("--strict", bo.strict, "require e_0 >= E0");
    add_common(build, common, "seq.json");

    std::string seq_path;
    auto* verify = app.add_subcommand("verify-p", "check condition P clause by clause");
    verify->add_option("--seq", seq_path)->required();
    add_common(verify, common, "verify_p.csv");

    std::string pairs = "all";
    auto* inter = app.add_subcommand("intersections", "intersection numbers between sequence curves");
    inter->add_option("--seq", seq_path)->required();
    inter->add_option("--pairs", pairs, "i,j[,i,j...] or all");
    add_common(inter, common, "table.csv");

    AnnularOpts ao;
    auto* ann = app.add_subcommand("annular", "annular coefficients; without --triples runs the nearly-partial-order check");
    ann->add_option("--seq", ao.seq)->required();
    ann->add_option("--triples", ao.triples, "CSV of k,i,j");
    ann->add_option("--mode", ao.mode)->check(CLI::IsMember({"exact", "estimate", "slope", "auto"}));
    ann->add_option("--delta", ao.delta, "ratio estimator half-width")->check(CLI::NonNegativeNumber);
    ann->add_option("--behrstock-out", ao.behrstock_out, "also run the Behrstock check and write it here");
    add_common(ann, common, "annular.csv");

    auto* dist = app.add_subcommand("distance", "curve complex distance certificates");
    dist->add_option("--seq", seq_path)->required();
    dist->add_option("--pairs", pairs, "i,j[,i,j...] or all");
    add_common(dist, common, "distance.csv");

    int K = -1;
    auto* erg = app.add_subcommand("ergodic", "growth ratios, convergence and singularity statistics");
    erg->add_option("--seq", seq_path)->required();
    erg->add_option("--proxy-depth", K, "K in gamma_{h+Km}");
    add_common(erg, common, "split.csv");

    TraceOpts to;
    auto* tr = app.add_subcommand("limit-trace", "model length trace in projective coordinates");
    tr->add_option("--seq", to.seq)->required();
    tr->add_flag("--p7", to.p7, "insist on a p = 7 sequence");
    tr->add_option("--samples", to.params.samples)->check(CLI::Range(2, 100000));
    tr->add_option("--L0", to.params.L0);
    tr->add_option("--eps", to.eps, "scaled or literal");
    tr->add_option("--lambda", to.params.lambda);
    tr->add_option("--rho-min", to.params.rho_min);
    tr->add_option("--rho-max", to.params.rho_max);
    tr->add_option("--k-min", to.params.k_min);
    tr->add_option("--emit-edges", to.edges_out, "write the proxy vertices here");
    add_common(tr, common, "trace.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        log << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "endlam: " << e.what() << "\n" << app.help();
        return 2;
    }
    try {
        if (*build) return cmd_build(bo, common, log);
        if (*verify) return cmd_verify(seq_path, common, log);
        if (*inter) return cmd_intersections(seq_path, pairs, common, log);
        if (*ann) return cmd_annular(ao, common, log);
        if (*dist) return cmd_distance(seq_path, pairs, common, log);
        if (*erg) return cmd_ergodic(seq_path, K, common, log);
        if (*tr) return cmd_trace(to, common, log);
    } catch (const UsageError& e) {
        err << "endlam: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "endlam: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << "endlam: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        err << "endlam: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "endlam: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "endlam: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "endlam: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace endlam
