#pragma once

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphcode/bch.hpp"
#include "graphcode/codes.hpp"
#include "graphcode/constructions.hpp"
#include "graphcode/exact.hpp"
#include "graphcode/family.hpp"
#include "graphcode/verify.hpp"

namespace graphcode {

using nlohmann::json;

// -- graphs -----------------------------------------------------------------

inline json graph_to_json(const LabeledGraph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edge_list()) edges.push_back(json::array({i, j}));
    return json{{"n", g.n}, {"edges", edges}};
}

inline LabeledGraph graph_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    LabeledGraph g(n);
    std::set<std::pair<int, int>> seen;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::domain_error("graph JSON: edge must be a pair");
        const int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || a >= b || b >= n)
            throw std::domain_error("graph JSON: edge must satisfy 0 <= i < j < n");
        if (!seen.insert({a, b}).second)
            throw std::domain_error("graph JSON: duplicate edge");
        g.set_edge(a, b);
    }
    return g;
}

// -- codes ------------------------------------------------------------------

inline json provenance_to_json(const Provenance& p) {
    json params = json::object();
    for (const auto& [k, v] : p.params) params[k] = v;
    return json{{"kind", p.kind}, {"params", params}};
}

inline Provenance provenance_from_json(const json& j) {
    Provenance p;
    p.kind = j.at("kind").get<std::string>();
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
        p.params.emplace_back(it.key(), it.value().get<std::int64_t>());
    return p;
}

inline json code_to_json(const LinearGraphCode& code) {
    json rows = json::array();
    for (const BitVec& r : code.parity.rows) rows.push_back(r.to_hex());
    return json{{"n", code.n},
                {"type", "linear"},
                {"provenance", provenance_to_json(code.provenance)},
                {"parity_rows", rows}};
}

inline json code_to_json(const ExplicitGraphCode& code) {
    json members = json::array();
    for (const LabeledGraph& g : code.members) members.push_back(graph_to_json(g));
    return json{{"n", code.n}, {"type", "explicit"}, {"members", members}};
}

inline LinearGraphCode linear_code_from_json(const json& j) {
    LinearGraphCode code;
    code.n = j.at("n").get<int>();
    const std::size_t ncols = edge_slots(code.n);
    code.parity.cols = ncols;
    for (const json& row : j.at("parity_rows"))
        code.parity.rows.push_back(BitVec::from_hex(row.get<std::string>(), ncols));
    if (j.contains("provenance")) code.provenance = provenance_from_json(j.at("provenance"));
    return code;
}

inline ExplicitGraphCode explicit_code_from_json(const json& j) {
    ExplicitGraphCode code;
    code.n = j.at("n").get<int>();
    for (const json& m : j.at("members")) {
        LabeledGraph g = graph_from_json(m);
        if (g.n != code.n)
            throw std::domain_error("code JSON: member on different vertex count");
        code.members.push_back(std::move(g));
    }
    return code;
}

// -- BCH column sets --------------------------------------------------------

inline json columns_to_json(const ColumnSet& cs) {
    json cols = json::array();
    for (const BitVec& c : cs.columns) cols.push_back(c.to_hex());
    return json{{"s", cs.s},
                {"t", cs.t},
                {"augmented", cs.parity_augmented},
                {"modulus", cs.modulus},
                {"columns", cols}};
}

// -- certificates -----------------------------------------------------------

inline json certificate_to_json(const CliqueCertificate& cert) {
    json copies = json::array();
    for (const LabeledGraph& c : cert.copies) copies.push_back(graph_to_json(c));
    return json{{"hprime", graph_to_json(cert.hprime)},
                {"indep", cert.indep},
                {"n", cert.n},
                {"m", cert.m},
                {"copies", copies},
                {"bound", "1/" + std::to_string(cert.m)}};
}

// -- reports ----------------------------------------------------------------

inline json report_to_json(const VerificationReport& rep) {
    json mode;
    if (rep.mode.kind == VerifyMode::Kind::Exhaustive)
        mode = json{{"kind", "exhaustive"}};
    else
        mode = json{{"kind", "sampled"}, {"seed", rep.mode.seed}, {"count", rep.mode.count}};
    json violations = json::array();
    for (const Violation& v : rep.violations) {
        json entry{{"copy", graph_to_json(v.copy)}};
        if (v.pair)
            entry["pair"] = json::array({graph_to_json(v.pair->first), graph_to_json(v.pair->second)});
        violations.push_back(std::move(entry));
    }
    return json{{"family", rep.family},
                {"mode", mode},
                {"copies_checked", rep.copies_checked},
                {"violation_count", rep.violation_count},
                {"violations", violations},
                {"passed", rep.passed}};
}

// elapsed time is deliberately left out of serialized results so repeated
// runs with the same seed produce byte-identical files
inline json result_to_json(const MaxCodeResult& r) {
    return json{{"value", r.value},
                {"status", r.status == SearchStatus::Proven ? "proven" : "time_limited_lower_bound"},
                {"witness", code_to_json(r.witness)},
                {"stats", json{{"nodes", r.stats.nodes}}}};
}

inline json result_to_json(const MinCodimResult& r) {
    return json{{"value", r.codim},
                {"status", "proven"},
                {"witness", code_to_json(r.witness)},
                {"stats", json{{"nodes", r.stats.nodes}}}};
}

inline json witness_to_json(const CliqueWitness& w) {
    return json{{"found", w.found}, {"subset", w.subset}, {"parities", w.parities}};
}

// -- files ------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

// -- family spec grammar ----------------------------------------------------

/// star:<t> | matching:<t> | cliques | cliques<=r | iso:<graph file> |
/// explicit:<code file>
inline ForbiddenFamily parse_family_spec(const std::string& spec) {
    auto int_suffix = [&](std::size_t at) {
        const std::string tail = spec.substr(at);
        std::size_t used = 0;
        const int v = std::stoi(tail, &used);
        if (used != tail.size()) throw std::domain_error("family spec: bad integer in " + spec);
        return v;
    };
    if (spec.rfind("star:", 0) == 0) return ForbiddenFamily::star(int_suffix(5));
    if (spec.rfind("matching:", 0) == 0) return ForbiddenFamily::matching(int_suffix(9));
    if (spec == "cliques") return ForbiddenFamily::all_cliques();
    if (spec.rfind("cliques<=", 0) == 0) return ForbiddenFamily::cliques_up_to(int_suffix(9));
    if (spec.rfind("iso:", 0) == 0)
        return ForbiddenFamily::iso_copies_of(graph_from_json(load_json_file(spec.substr(4))));
    if (spec.rfind("explicit:", 0) == 0) {
        const json j = load_json_file(spec.substr(9));
        std::vector<LabeledGraph> members;
        if (j.is_array())
            for (const json& g : j) members.push_back(graph_from_json(g));
        else
            members = explicit_code_from_json(j).members;
        return ForbiddenFamily::explicit_list(std::move(members));
    }
    throw std::domain_error("family spec: unrecognized " + spec);
}

}  // namespace graphcode
