#pragma once

#include <string>

#include <json.hpp>

#include "peri/algebra.hpp"
#include "peri/cells.hpp"
#include "peri/diagrams.hpp"
#include "peri/partitions.hpp"
#include "peri/repthy.hpp"

namespace peri {

using nlohmann::json;

inline json partition_to_json(const Partition& p) { return json(p); }

inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::runtime_error("partition must be a JSON array");
    Partition p;
    for (auto& x : j) {
        if (!x.is_number_integer()) throw std::runtime_error("partition parts must be integers");
        p.push_back(x.get<int>());
    }
    if (!is_partition(p)) throw std::runtime_error("parts must be weakly decreasing and positive");
    return p;
}

inline json diagram_to_json(const BrauerDiagram& d) {
    json pairs = json::array();
    for (auto& p : d.pairs) pairs.push_back({dot_name(d, p.first), dot_name(d, p.second)});
    return json{{"source", d.src}, {"target", d.tgt}, {"pairs", pairs}};
}

inline BrauerDiagram diagram_from_json(const json& j) {
    if (!j.contains("source") || !j.contains("target") || !j.contains("pairs"))
        throw std::runtime_error("diagram needs source, target and pairs");
    BrauerDiagram d;
    d.src = j.at("source").get<int>();
    d.tgt = j.at("target").get<int>();
    if (d.src < 0 || d.tgt < 0) throw std::runtime_error("negative arity");
    auto parse_dot = [&](const std::string& s) {
        if (s.size() < 2 || (s[0] != 'B' && s[0] != 'T'))
            throw std::runtime_error("dot names look like B1 or T3");
        int k = std::stoi(s.substr(1));
        if (s[0] == 'B') {
            if (k < 1 || k > d.src) throw std::runtime_error("bottom dot out of range");
            return k - 1;
        }
        if (k < 1 || k > d.tgt) throw std::runtime_error("top dot out of range");
        return d.src + k - 1;
    };
    for (auto& pr : j.at("pairs")) {
        if (!pr.is_array() || pr.size() != 2) throw std::runtime_error("pairs are 2-element arrays");
        d.pairs.push_back({parse_dot(pr[0].get<std::string>()), parse_dot(pr[1].get<std::string>())});
    }
    d.canonicalize();
    if ((int)d.pairs.size() * 2 != d.src + d.tgt) throw std::runtime_error("not a perfect matching");
    std::vector<int> seen(d.src + d.tgt, 0);
    for (auto& p : d.pairs) {
        if (p.first == p.second) throw std::runtime_error("dot paired with itself");
        ++seen[p.first];
        ++seen[p.second];
    }
    for (int s : seen)
        if (s != 1) throw std::runtime_error("every dot pairs exactly once");
    return d;
}

inline json signed_to_json(const SignedDiagram& s) {
    if (s.is_zero()) return json{{"zero", true}};
    json j = diagram_to_json(s.diagram);
    j["sign"] = s.sign;
    return j;
}

template <class K>
json expression_to_json(const Expression<K>& e) {
    json terms = json::array();
    for (auto& [d, c] : e.terms)
        terms.push_back(json{{"coeff", scalar_str(c)}, {"diagram", diagram_to_json(d)}});
    return terms;
}

inline Expression<Rational> expression_from_json(const json& j, int src, int tgt) {
    Expression<Rational> e = Expression<Rational>::zero(src, tgt);
    if (!j.is_array()) throw std::runtime_error("expression must be a JSON array of terms");
    for (auto& term : j) {
        BrauerDiagram d = diagram_from_json(term.at("diagram"));
        if (d.src != src || d.tgt != tgt)
            throw std::runtime_error("all terms of an expression share one hom type");
        e.add(d, rational_from_string(term.at("coeff").get<std::string>()));
    }
    return e;
}

inline json reports_to_json(const std::vector<CheckReport>& reps) {
    json out = json::array();
    for (auto& r : reps) {
        json e{{"name", r.name}, {"pass", r.pass}};
        if (!r.witness.empty()) e["witness"] = r.witness;
        out.push_back(e);
    }
    return out;
}

inline json reports_to_json(const std::vector<RelationCheck>& reps) {
    json out = json::array();
    for (auto& r : reps) {
        json e{{"name", r.name}, {"pass", r.pass}};
        if (!r.witness.empty()) e["witness"] = r.witness;
        out.push_back(e);
    }
    return out;
}

template <class K>
json decomposition_to_json(const DecompositionTable<K>& t) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (auto& r : t.rows) rows.push_back(partition_to_json(r));
    for (auto& c : t.cols) cols.push_back(partition_to_json(c));
    for (auto& r : t.rows) {
        json line = json::array();
        for (auto& c : t.cols) line.push_back(t(r, c));
        entries.push_back(line);
    }
    json dims = json::array();
    for (auto& c : t.cols) dims.push_back(t.simple_dim.at(c));
    return json{{"n", t.n},
                {"rows", rows},
                {"cols", cols},
                {"matrix", entries},
                {"simple_dims", dims}};
}

template <class K>
std::string decomposition_to_csv(const DecompositionTable<K>& t) {
    auto label = [](const Partition& p) {
        std::string s = "(";
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
        return s + ")";
    };
    std::string out = "W\\L";
    for (auto& c : t.cols) out += "," + label(c);
    out += "\n";
    for (auto& r : t.rows) {
        out += label(r);
        for (auto& c : t.cols) out += "," + std::to_string(t(r, c));
        out += "\n";
    }
    return out;
}

inline json bratteli_to_json(int rows) {
    json jrows = json::array(), jedges = json::array();
    for (int k = 1; k <= rows; ++k) {
        json row = json::array();
        for (auto& p : bratteli_row(k)) row.push_back(partition_to_json(p));
        jrows.push_back(row);
    }
    for (int k = 1; k < rows; ++k) {
        json level = json::array();
        for (auto& e : bratteli_edges(k)) level.push_back({e.first, e.second});
        jedges.push_back(level);
    }
    return json{{"rows", jrows}, {"edges", jedges}};
}

inline std::string bratteli_to_dot(int rows) {
    auto label = [](const Partition& p) {
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        return s;
    };
    std::string out = "digraph bratteli {\n  rankdir=TB;\n  node [shape=plaintext];\n";
    for (int k = 1; k <= rows; ++k) {
        auto row = bratteli_row(k);
        out += "  { rank=same;";
        for (int t = 0; t < (int)row.size(); ++t)
            out += " r" + std::to_string(k) + "v" + std::to_string(t) + " [label=\"(" +
                   label(row[t]) + ")\"];";
        out += " }\n";
    }
    for (int k = 1; k < rows; ++k)
        for (auto& e : bratteli_edges(k))
            out += "  r" + std::to_string(k) + "v" + std::to_string(e.first) + " -> r" +
                   std::to_string(k + 1) + "v" + std::to_string(e.second) + ";\n";
    out += "}\n";
    return out;
}

} // namespace peri
