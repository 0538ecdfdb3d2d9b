#include "ualg/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace ualg {

FiniteAlgebra algebra_from_json(const json& j) {
    try {
        std::string name = j.at("name").get<std::string>();
        int size = j.at("size").get<int>();
        std::vector<Operation> ops;
        for (const auto& oj : j.at("operations")) {
            Operation op;
            op.symbol = oj.at("symbol").get<std::string>();
            op.arity = oj.at("arity").get<int>();
            op.table = oj.at("table").get<std::vector<int>>();
            ops.push_back(std::move(op));
        }
        return FiniteAlgebra(std::move(name), size, std::move(ops));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad algebra JSON: ") + e.what());
    }
}

json algebra_to_json(const FiniteAlgebra& a) {
    json ops = json::array();
    for (const Operation& op : a.operations())
        ops.push_back({{"symbol", op.symbol}, {"arity", op.arity}, {"table", op.table}});
    return {{"name", a.name()}, {"size", a.size()}, {"operations", ops}};
}

Term term_from_json(const json& j) {
    try {
        if (!j.is_array() || j.empty()) throw ParseError("term must be a nonempty array");
        std::string tag = j.at(0).get<std::string>();
        if (tag == "x") return Term::var(j.at(1).get<int>());
        if (tag == "ap") {
            std::string symbol = j.at(1).get<std::string>();
            std::vector<Term> children;
            for (std::size_t i = 2; i < j.size(); ++i) children.push_back(term_from_json(j[i]));
            return Term::apply(std::move(symbol), std::move(children));
        }
        throw ParseError("unknown term tag: " + tag);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad term JSON: ") + e.what());
    }
}

json term_to_json(const Term& t) {
    if (t.is_var()) return json::array({"x", t.var_index()});
    json out = json::array({"ap", t.symbol()});
    for (const Term& c : t.children()) out.push_back(term_to_json(c));
    return out;
}

Congruence congruence_from_json(const json& j, int n) {
    try {
        auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        return Congruence::from_blocks(n, blocks);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad congruence JSON: ") + e.what());
    }
}

json congruence_to_json(const Congruence& c) {
    return {{"blocks", c.blocks()}};
}

json tupleset_to_json(const TupleSet4& s) {
    json out = json::array();
    for (const Matrix2x2& m : s.members()) out.push_back({m.a, m.b, m.c, m.d});
    return out;
}

MaltsevTree tree_from_json(const json& j) {
    try {
        MaltsevTree tree;
        tree.root = j.value("root", 0);
        for (const auto& vj : j.at("vertices")) {
            MaltsevTree::Vertex v;
            std::string color = vj.at("color").get<std::string>();
            if (color == "b")
                v.color = MaltsevTree::Color::B;
            else if (color == "g")
                v.color = MaltsevTree::Color::G;
            else
                throw ParseError("vertex color must be 'b' or 'g'");
            v.children = vj.value("children", std::vector<int>{});
            tree.vertices[vj.at("id").get<int>()] = std::move(v);
        }
        return tree;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad tree JSON: ") + e.what());
    }
}

TermFamily family_from_json(const json& j) {
    try {
        TermFamily fam;
        fam.p = term_from_json(j.at("p"));
        for (const auto& [key, value] : j.items()) {
            if (key == "p") continue;
            fam.pairs.emplace(std::stoi(key),
                              std::make_pair(term_from_json(value.at(0)),
                                             term_from_json(value.at(1))));
        }
        return fam;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad term family JSON: ") + e.what());
    }
}

json trace_to_json(const CommutatorTrace& trace, const Congruence& alpha,
                   const Congruence& beta) {
    json stages = json::array();
    for (std::size_t i = 0; i < trace.xsets.size(); ++i) {
        json xs = json::array();
        for (auto [r, s] : trace.xsets[i]) xs.push_back({r, s});
        stages.push_back({{"X", xs}, {"delta", trace.deltas[i + 1].blocks()}});
    }
    return {{"alpha", alpha.blocks()},
            {"beta", beta.blocks()},
            {"stages", stages},
            {"commutator", trace.result.blocks()}};
}

json report_to_json(const CheckReport& r, bool include_timing) {
    json out;
    out["check"] = r.check;
    out["inputs"] = r.inputs;
    switch (r.verdict) {
        case CheckReport::Verdict::Pass:
            out["verdict"] = r.sampled ? "pass (sampled)" : "pass";
            break;
        case CheckReport::Verdict::Fail:
            out["verdict"] = "fail";
            break;
        case CheckReport::Verdict::Skipped:
            out["verdict"] = "skipped";
            out["reason"] = r.skip_reason;
            break;
    }
    if (!r.detail.empty()) out["detail"] = r.detail;
    if (!r.witnesses.empty()) out["witnesses"] = r.witnesses;
    if (!r.stats.empty()) out["stats"] = r.stats;
    if (include_timing) out["wall_ms"] = r.wall_ms;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace ualg
