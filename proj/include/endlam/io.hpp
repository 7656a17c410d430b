#pragma once
// JSON and CSV persistence.  Big integers are decimal strings and rationals
// "num/den" strings; nothing numeric that is asserted on goes through a float.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqgen.hpp"

namespace endlam {

using json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw FormatError("bad rational: " + s);
    }
}

inline std::string to_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt parse_bigint(const json& j) {
    if (!j.is_string()) throw FormatError("big integers must be decimal strings");
    try {
        return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
        throw FormatError("bad integer: " + j.get<std::string>());
    }
}

inline json word_to_json(const MCWord& w);

inline json curve_to_json(const Curve& c) {
    json j;
    j["p"] = c.p;
    json co = json::array();
    for (const auto& x : c.coords) co.push_back(x.str());
    j["coords"] = co;
    if (c.word) {
        j["word"] = word_to_json(*c.word);
        j["base"] = {c.base.a, c.base.t};
    }
    return j;
}

inline json word_to_json(const MCWord& w) {
    json arr = json::array();
    for (const auto& L : w.letters) {
        json e;
        if (L.rho)
            e["gen"] = "rho";
        else
            e["gen"] = json{{"twist", curve_to_json(*L.axis)}};
        e["exp"] = L.exp.str();
        arr.push_back(e);
    }
    return arr;
}

inline MCWord word_from_json(const json& j, int p);

inline Curve curve_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("coords")) throw FormatError("curve needs p and coords");
    Curve c;
    c.p = j.at("p").get<int>();
    const auto& S = build_surface(c.p);
    for (const auto& x : j.at("coords")) c.coords.push_back(parse_bigint(x));
    if (static_cast<int>(c.coords.size()) != S.edge_count()) throw FormatError("coords has the wrong length");
    for (const auto& x : c.coords)
        if (x < 0) throw FormatError("negative coordinate");
    if (j.contains("word")) {
        c.word = std::make_shared<const MCWord>(word_from_json(j.at("word"), c.p));
        if (j.contains("base")) c.base = {j.at("base").at(0).get<int>(), j.at("base").at(1).get<int>()};
    }
    return c;
}

inline MCWord word_from_json(const json& j, int p) {
    if (!j.is_array()) throw FormatError("word must be an array");
    MCWord w;
    for (const auto& e : j) {
        Letter L;
        L.exp = parse_bigint(e.at("exp"));
        const auto& g = e.at("gen");
        if (g.is_string() && g.get<std::string>() == "rho") {
            L.rho = true;
        } else if (g.is_object() && g.contains("twist")) {
            L.rho = false;
            L.axis = std::make_shared<const Curve>(curve_from_json(g.at("twist")));
            if (L.axis->p != p) throw FormatError("twist axis on another surface");
        } else {
            throw FormatError("unknown generator");
        }
        w.letters.push_back(std::move(L));
    }
    return w;
}

inline json schedule_to_json(const TwistSchedule& s) {
    json e = json::array();
    for (const auto& x : s.e) e.push_back(x.str());
    return json{{"e", e}, {"a", to_str(s.a)}, {"E0", s.E0.str()}, {"gate", s.gate}};
}

inline TwistSchedule schedule_from_json(const json& j) {
    TwistSchedule s;
    for (const auto& x : j.at("e")) s.e.push_back(parse_bigint(x));
    s.a = parse_rational(j.at("a").get<std::string>());
    s.E0 = parse_bigint(j.at("E0"));
    s.gate = j.value("gate", false);
    return s;
}

inline json sequence_to_json(const CurveSequence& seq) {
    json j;
    j["p"] = seq.p;
    j["m"] = seq.m;
    j["b"] = seq.b;
    j["bprime"] = seq.bprime;
    j["depth"] = seq.depth;
    j["schedule"] = schedule_to_json(seq.schedule);
    json cs = json::array(), ax = json::array(), ws = json::array();
    for (const auto& c : seq.gamma) cs.push_back(curve_to_json(c));
    for (const auto& c : seq.aux) ax.push_back(curve_to_json(c));
    for (const auto& w : seq.words) ws.push_back(word_to_json(w));
    j["curves"] = cs;
    j["aux"] = ax;
    j["words"] = ws;
    return j;
}

inline CurveSequence sequence_from_json(const json& j) {
    CurveSequence seq;
    seq.p = j.at("p").get<int>();
    const auto& S = build_surface(seq.p);
    seq.m = S.m();
    seq.b = j.value("b", 2);
    seq.bprime = j.value("bprime", 2);
    seq.schedule = schedule_from_json(j.at("schedule"));
    for (const auto& c : j.at("curves")) seq.gamma.push_back(curve_from_json(c));
    for (const auto& c : j.at("aux")) seq.aux.push_back(curve_from_json(c));
    for (const auto& w : j.at("words")) seq.words.push_back(word_from_json(w, seq.p));
    seq.depth = static_cast<int>(seq.gamma.size()) - 1;
    if (j.contains("depth") && j.at("depth").get<int>() != seq.depth) throw FormatError("depth does not match curves");
    if (seq.words.size() != seq.gamma.size()) throw FormatError("one word per curve expected");
    int want_aux = std::max(0, seq.depth - 2 * seq.m + 1);
    if (static_cast<int>(seq.aux.size()) != want_aux) throw FormatError("aux curve count mismatch");
    return seq;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

inline CurveSequence load_sequence(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
    try {
        return sequence_from_json(j);
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

inline void save_sequence(const std::string& path, const CurveSequence& seq) {
    write_file(path, sequence_to_json(seq).dump(1) + "\n");
}

// RFC 4180 style quoting where needed
class Csv {
public:
    explicit Csv(std::vector<std::string> header) : cols_(header.size()) { row(std::move(header)); }

    void row(std::vector<std::string> fields) {
        if (fields.size() != cols_) throw std::logic_error("csv row width");
        for (size_t i = 0; i < fields.size(); ++i) {
            out_ << (i ? "," : "");
            const std::string& f = fields[i];
            if (f.find_first_of(",\"\n") == std::string::npos) {
                out_ << f;
                continue;
            }
            out_ << '"';
            for (char c : f) out_ << (c == '"' ? "\"\"" : std::string(1, c));
            out_ << '"';
        }
        out_ << "\n";
    }

    std::string str() const { return out_.str(); }

private:
    size_t cols_;
    std::ostringstream out_;
};

// 15 significant digits, fixed across platforms
inline std::string fmt_double(double x) {
    std::ostringstream o;
    o.precision(15);
    o << x;
    return o.str();
}

inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        rows.push_back(std::move(f));
    }
    return rows;
}

// key=value lines, '#' comments
inline VerifierConstants load_constants(const std::string& path) {
    VerifierConstants vc;
    std::istringstream in(read_file(path));
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw FormatError(path + ":" + std::to_string(n) + ": expected key=value");
        std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        long val;
        try {
            size_t used;
            val = std::stol(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
        } catch (const std::exception&) {
            throw FormatError(path + ":" + std::to_string(n) + ": bad value " + v);
        }
        if (val <= 0) throw FormatError(path + ":" + std::to_string(n) + ": constants must be positive");
        if (k == "B0")
            vc.B0 = val;
        else if (k == "G0")
            vc.G0 = val;
        else
            throw FormatError(path + ":" + std::to_string(n) + ": unknown constant " + k);
    }
    return vc;
}

inline json constants_json(const VerifierConstants& vc) {
    return json{{"B0", vc.B0}, {"G0", vc.G0}, {"B", vc.B()}, {"E0", vc.E0()}};
}

}  // namespace endlam
