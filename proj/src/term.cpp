#include "ualg/term.hpp"

#include <algorithm>

namespace ualg {

Term Term::var(int index) {
    if (index < 0) throw VariableOutOfRange("negative variable index");
    auto node = std::make_shared<Node>();
    node->var = index;
    return Term(std::move(node));
}

Term Term::apply(std::string symbol, std::vector<Term> children) {
    auto node = std::make_shared<Node>();
    node->symbol = std::move(symbol);
    node->children = std::move(children);
    return Term(std::move(node));
}

int Term::max_var() const {
    if (is_var()) return node_->var;
    int m = -1;
    for (const Term& c : node_->children) m = std::max(m, c.max_var());
    return m;
}

int Term::depth() const {
    if (is_var()) return 0;
    int m = 0;
    for (const Term& c : node_->children) m = std::max(m, c.depth());
    return m + 1;
}

int Term::count_symbol(const std::string& symbol) const {
    if (is_var()) return 0;
    int c = node_->symbol == symbol ? 1 : 0;
    for (const Term& child : node_->children) c += child.count_symbol(symbol);
    return c;
}

int Term::eval(const FiniteAlgebra& a, std::span<const int> env) const {
    if (is_var()) {
        if (node_->var >= static_cast<int>(env.size()))
            throw VariableOutOfRange("environment does not cover x" +
                                     std::to_string(node_->var));
        return env[node_->var];
    }
    int op = a.op_index(node_->symbol);
    if (static_cast<int>(node_->children.size()) != a.operations()[op].arity)
        throw ArityMismatch("term applies " + node_->symbol + " with wrong arity");
    std::vector<int> args;
    args.reserve(node_->children.size());
    for (const Term& c : node_->children) args.push_back(c.eval(a, env));
    return a.apply(op, args);
}

Term Term::substitute(std::span<const Term> subs) const {
    if (is_var()) {
        if (node_->var >= static_cast<int>(subs.size()))
            throw VariableOutOfRange("substitution does not cover x" +
                                     std::to_string(node_->var));
        return subs[node_->var];
    }
    std::vector<Term> children;
    children.reserve(node_->children.size());
    for (const Term& c : node_->children) children.push_back(c.substitute(subs));
    return Term::apply(node_->symbol, std::move(children));
}

std::string Term::to_string() const {
    if (is_var()) return "x" + std::to_string(node_->var);
    std::string s = node_->symbol + "(";
    for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (i) s += ",";
        s += node_->children[i].to_string();
    }
    return s + ")";
}

namespace vars {
Term x() { return Term::var(0); }
Term y() { return Term::var(1); }
Term z() { return Term::var(2); }
Term w() { return Term::var(3); }
}  // namespace vars

IdentityResult check_identity(const FiniteAlgebra& a, const Term& lhs, const Term& rhs,
                              int nvars) {
    if (lhs.max_var() >= nvars || rhs.max_var() >= nvars)
        throw VariableOutOfRange("identity uses a variable beyond nvars");
    const int n = a.size();
    std::int64_t total = 1;
    for (int i = 0; i < nvars; ++i) total *= n;
    std::vector<int> env(nvars, 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t rest = idx;
        for (int j = nvars - 1; j >= 0; --j) {
            env[j] = static_cast<int>(rest % n);
            rest /= n;
        }
        if (lhs.eval(a, env) != rhs.eval(a, env)) return IdentityResult{false, env};
    }
    return IdentityResult{true, {}};
}

std::vector<int> term_table(const FiniteAlgebra& a, const Term& t, int nvars) {
    const int n = a.size();
    std::int64_t total = 1;
    for (int i = 0; i < nvars; ++i) total *= n;
    std::vector<int> table(static_cast<std::size_t>(total));
    std::vector<int> env(nvars, 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t rest = idx;
        for (int j = nvars - 1; j >= 0; --j) {
            env[j] = static_cast<int>(rest % n);
            rest /= n;
        }
        table[static_cast<std::size_t>(idx)] = t.eval(a, env);
    }
    return table;
}

}  // namespace ualg
