#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// A finitary term tree over operation symbols and variables x0, x1, ...
/// Shared immutable nodes; cheap to copy.
class Term {
public:
    static Term var(int index);
    static Term apply(std::string symbol, std::vector<Term> children);

    bool is_var() const { return node_->var >= 0; }
    int var_index() const { return node_->var; }
    const std::string& symbol() const { return node_->symbol; }
    const std::vector<Term>& children() const { return node_->children; }

    /// Largest variable index occurring, or -1 for a variable-free term.
    int max_var() const;
    int depth() const;
    /// Number of Apply nodes with the given symbol.
    int count_symbol(const std::string& symbol) const;

    /// Bottom-up evaluation from tables; env[i] is the value of xi.
    int eval(const FiniteAlgebra& a, std::span<const int> env) const;

    /// Substitute subs[i] for xi (every occurring variable must be covered).
    Term substitute(std::span<const Term> subs) const;

    std::string to_string() const;

private:
    struct Node {
        int var = -1;
        std::string symbol;
        std::vector<Term> children;
    };
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Convenience: variables x, y, z, w as terms 0..3.
namespace vars {
Term x();
Term y();
Term z();
Term w();
}  // namespace vars

/// Exhaustive identity check: lhs == rhs on all n^nvars environments.
/// On failure carries the first witness environment in enumeration order.
struct IdentityResult {
    bool holds = true;
    std::vector<int> witness;  // empty when the identity holds
};
IdentityResult check_identity(const FiniteAlgebra& a, const Term& lhs, const Term& rhs,
                              int nvars);

/// The full value table of a term on A over n^nvars environments
/// (environments in lexicographic order, first variable most significant).
std::vector<int> term_table(const FiniteAlgebra& a, const Term& t, int nvars);

}  // namespace ualg
