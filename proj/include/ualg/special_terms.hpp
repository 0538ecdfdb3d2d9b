#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ualg/commutator.hpp"
#include "ualg/term.hpp"

namespace ualg {

/// The 4-ary term q(x,y,z,w) = p(p(x,z,z), p(y,w,z), z) built from a
/// ternary p.  Purely syntactic.
Term lipparini(const Term& p);

struct TermVerdict {
    bool ok = true;
    std::string failed_condition;      // e.g. "(I)", "(II)"
    std::vector<int> witness;          // environment or tuple exhibiting the failure
    std::string detail;
};

struct VerifyOptions {
    /// Also check on all quotients of A and on all subalgebras (closures of
    /// subsets of the universe) -- the desk-scale stand-in for "holds in V".
    bool check_variety_level = false;
    int lattice_bound = 8;
};

/// Difference term check: (I) p(x,x,y) ~ y on A; (II) for every theta in
/// Con(A) and (a,b) in theta, (p(a,b,b), a) in [theta,theta].
TermVerdict is_difference_term(const FiniteAlgebra& a, const Term& p,
                               const VerifyOptions& opts = {});

/// Kiss term check: (I) q(x,x,y,y) ~ y and q(x,y,x,y) ~ x on A; (II) for all
/// alpha,beta in Con(A) and (a,b,c,d),(a,b,c',d) in R(alpha,beta),
/// (q(a,b,c,d), q(a,b,c',d)) in [alpha,beta].
TermVerdict is_kiss_term(const FiniteAlgebra& a, const Term& q,
                         const VerifyOptions& opts = {});

/// The vertex-labeled tree of the difference-term Maltsev condition: rooted
/// at 0, root colored b, child colors alternate, children totally ordered.
struct MaltsevTree {
    enum class Color { B, G };
    struct Vertex {
        Color color = Color::B;
        std::vector<int> children;  // in order
    };
    std::map<int, Vertex> vertices;
    int root = 0;

    /// Throws MalformedTree if the shape or coloring is wrong.
    void validate() const;
    bool is_leaf(int i) const;
    int parent(int i) const;                 // -1 for the root
    int first_child(int i) const;            // alpha(i)
    int last_child(int i) const;             // omega(i)
    std::optional<int> next_sibling(int i) const;  // suc(i)
};

/// Ternary term pair (f_i, g_i) per tree vertex, plus the difference term p.
struct TermFamily {
    std::map<int, std::pair<Term, Term>> pairs;
    Term p = Term::var(2);
};

struct AxiomFailure {
    std::string axiom;        // "ax1" .. "ax12", or "idempotence"
    int vertex = -1;          // -1 when not vertex-specific
    std::vector<int> witness; // environment on which the identity fails
};

struct TreeVerdict {
    bool ok = true;
    std::vector<AxiomFailure> failures;
};

/// Evaluates every applicable identity of the Maltsev condition on A and
/// reports the violated axiom tags with witness environments.
TreeVerdict verify_maltsev_tree(const FiniteAlgebra& a, const MaltsevTree& tree,
                                const TermFamily& fam);

/// Bounded-depth enumeration of ternary terms over A's basic operations,
/// deduplicated by value table, returning the first difference term found.
/// Deterministic order: breadth-first by depth, then lexical by symbol.
std::optional<Term> search_difference_term(const FiniteAlgebra& a, int max_depth,
                                           std::int64_t max_candidates = 100000);

}  // namespace ualg
