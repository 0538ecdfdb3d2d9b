#include "ualg/special_terms.hpp"

#include <algorithm>
#include <set>

namespace ualg {

Term lipparini(const Term& p) {
    if (p.max_var() > 2) throw ArityMismatch("lipparini needs a ternary term");
    const Term x = Term::var(0), y = Term::var(1), z = Term::var(2), w = Term::var(3);
    std::vector<Term> left_subs{x, z, z};
    std::vector<Term> mid_subs{y, w, z};
    Term left = p.substitute(left_subs);
    Term mid = p.substitute(mid_subs);
    std::vector<Term> outer{left, mid, z};
    return p.substitute(outer);
}

namespace {

// Shared context for the (II)-style conditions: congruence lattice plus the
// commutator of every pair, computed once per algebra.
struct CommutatorContext {
    std::vector<Congruence> lattice;
    // commutators[i][j] = [lattice[i], lattice[j]]
    std::vector<std::vector<Congruence>> commutators;

    CommutatorContext(const FiniteAlgebra& a, int lattice_bound)
        : lattice(con_lattice(a, lattice_bound)) {
        commutators.reserve(lattice.size());
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            std::vector<Congruence> row;
            row.reserve(lattice.size());
            for (std::size_t j = 0; j < lattice.size(); ++j)
                row.push_back(tc_commutator(a, lattice[i], lattice[j]).result);
            commutators.push_back(std::move(row));
        }
    }
};

TermVerdict difference_term_on(const FiniteAlgebra& a, const Term& p,
                               const CommutatorContext& ctx) {
    std::vector<Term> subs{Term::var(0), Term::var(0), Term::var(1)};
    auto cond1 = check_identity(a, p.substitute(subs), Term::var(1), 2);
    if (!cond1.holds)
        return TermVerdict{false, "(I)", cond1.witness, "p(x,x,y) ~ y fails"};

    std::vector<int> env(3);
    for (std::size_t t = 0; t < ctx.lattice.size(); ++t) {
        const Congruence& theta = ctx.lattice[t];
        const Congruence& gamma = ctx.commutators[t][t];
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y) {
                if (!theta.related(x, y)) continue;
                env = {x, y, y};
                int v = p.eval(a, env);
                if (!gamma.related(v, x))
                    return TermVerdict{false, "(II)", {x, y, v},
                                       "p(a,b,b) not congruent to a mod [theta,theta]"};
            }
    }
    return TermVerdict{};
}

TermVerdict kiss_term_on(const FiniteAlgebra& a, const Term& q,
                         const CommutatorContext& ctx) {
    std::vector<Term> s1{Term::var(0), Term::var(0), Term::var(1), Term::var(1)};
    auto cond1a = check_identity(a, q.substitute(s1), Term::var(1), 2);
    if (!cond1a.holds)
        return TermVerdict{false, "(I)", cond1a.witness, "q(x,x,y,y) ~ y fails"};
    std::vector<Term> s2{Term::var(0), Term::var(1), Term::var(0), Term::var(1)};
    auto cond1b = check_identity(a, q.substitute(s2), Term::var(0), 2);
    if (!cond1b.holds)
        return TermVerdict{false, "(I)", cond1b.witness, "q(x,y,x,y) ~ x fails"};

    const int n = a.size();
    std::vector<int> qtable = term_table(a, q, 4);
    auto qval = [&](int x, int y, int z, int w) {
        return qtable[((static_cast<std::size_t>(x) * n + y) * n + z) * n + w];
    };
    for (std::size_t i = 0; i < ctx.lattice.size(); ++i)
        for (std::size_t j = 0; j < ctx.lattice.size(); ++j) {
            const Congruence& gamma = ctx.commutators[i][j];
            TupleSet4 r = r_rel(a, ctx.lattice[i], ctx.lattice[j]);
            // group members of R by (a,b,d) and compare all third entries
            std::map<std::tuple<int, int, int>, std::vector<int>> groups;
            for (const Matrix2x2& m : r.members())
                groups[{m.a, m.b, m.d}].push_back(m.c);
            for (const auto& [key, cs] : groups) {
                auto [x, y, w] = key;
                for (std::size_t u = 0; u < cs.size(); ++u)
                    for (std::size_t v = u + 1; v < cs.size(); ++v)
                        if (!gamma.related(qval(x, y, cs[u], w), qval(x, y, cs[v], w)))
                            return TermVerdict{false, "(II)",
                                               {x, y, cs[u], cs[v], w},
                                               "q values differ mod [alpha,beta]"};
            }
        }
    return TermVerdict{};
}

// All subuniverses of A (as sorted element lists), by closing every subset.
std::vector<std::vector<int>> all_subuniverses(const FiniteAlgebra& a) {
    std::set<std::vector<int>> found;
    const int n = a.size();
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> gens;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) gens.push_back(i);
        found.insert(subuniverse_closure(a, gens));
    }
    return {found.begin(), found.end()};
}

template <typename CheckFn>
TermVerdict variety_level_check(const FiniteAlgebra& a, const VerifyOptions& opts,
                                CheckFn check) {
    CommutatorContext ctx(a, opts.lattice_bound);
    TermVerdict v = check(a, ctx);
    if (!v.ok || !opts.check_variety_level) return v;
    for (const Congruence& theta : ctx.lattice) {
        if (theta.is_equality()) continue;
        FiniteAlgebra q = quotient(a, theta).algebra;
        CommutatorContext qctx(q, opts.lattice_bound);
        v = check(q, qctx);
        if (!v.ok) {
            v.detail += " (on quotient of " + a.name() + ")";
            return v;
        }
    }
    for (const auto& elems : all_subuniverses(a)) {
        if (static_cast<int>(elems.size()) == a.size()) continue;
        FiniteAlgebra sub = induced_subalgebra(a, elems);
        CommutatorContext sctx(sub, opts.lattice_bound);
        v = check(sub, sctx);
        if (!v.ok) {
            v.detail += " (on subalgebra of " + a.name() + ")";
            return v;
        }
    }
    return v;
}

}  // namespace

TermVerdict is_difference_term(const FiniteAlgebra& a, const Term& p,
                               const VerifyOptions& opts) {
    if (p.max_var() > 2) throw ArityMismatch("difference term must be ternary");
    return variety_level_check(a, opts, [&](const FiniteAlgebra& alg,
                                            const CommutatorContext& ctx) {
        return difference_term_on(alg, p, ctx);
    });
}

TermVerdict is_kiss_term(const FiniteAlgebra& a, const Term& q, const VerifyOptions& opts) {
    if (q.max_var() > 3) throw ArityMismatch("Kiss term must be 4-ary");
    return variety_level_check(
        a, opts,
        [&](const FiniteAlgebra& alg, const CommutatorContext& ctx) {
            return kiss_term_on(alg, q, ctx);
        });
}

void MaltsevTree::validate() const {
    auto root_it = vertices.find(root);
    if (root_it == vertices.end()) throw MalformedTree("root vertex missing");
    if (root_it->second.color != Color::B) throw MalformedTree("root must be colored b");
    std::map<int, int> parent_of;
    for (const auto& [id, v] : vertices)
        for (int c : v.children) {
            if (!vertices.count(c))
                throw MalformedTree("child vertex " + std::to_string(c) + " undeclared");
            if (parent_of.count(c))
                throw MalformedTree("vertex " + std::to_string(c) + " has two parents");
            if (vertices.at(c).color == v.color)
                throw MalformedTree("child " + std::to_string(c) +
                                    " must have the opposite color of its parent");
            parent_of[c] = id;
        }
    if (parent_of.count(root)) throw MalformedTree("root has a parent");
    // reachability from the root
    std::vector<int> stack{root};
    std::set<int> seen{root};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int c : vertices.at(i).children)
            if (seen.insert(c).second) stack.push_back(c);
    }
    if (seen.size() != vertices.size()) throw MalformedTree("tree is not connected");
}

bool MaltsevTree::is_leaf(int i) const { return vertices.at(i).children.empty(); }

int MaltsevTree::parent(int i) const {
    for (const auto& [id, v] : vertices)
        if (std::find(v.children.begin(), v.children.end(), i) != v.children.end())
            return id;
    return -1;
}

int MaltsevTree::first_child(int i) const { return vertices.at(i).children.front(); }
int MaltsevTree::last_child(int i) const { return vertices.at(i).children.back(); }

std::optional<int> MaltsevTree::next_sibling(int i) const {
    int par = parent(i);
    if (par < 0) return std::nullopt;
    const auto& sib = vertices.at(par).children;
    auto it = std::find(sib.begin(), sib.end(), i);
    if (it == sib.end() || it + 1 == sib.end()) return std::nullopt;
    return *(it + 1);
}

namespace {

Term sub3(const Term& t, const Term& a, const Term& b, const Term& c) {
    std::vector<Term> subs{a, b, c};
    return t.substitute(subs);
}

void check_axiom(const FiniteAlgebra& alg, const std::string& tag, int vertex,
                 const Term& lhs, const Term& rhs, int nvars, TreeVerdict& out) {
    auto r = check_identity(alg, lhs, rhs, nvars);
    if (!r.holds) {
        out.ok = false;
        out.failures.push_back({tag, vertex, r.witness});
    }
}

}  // namespace

TreeVerdict verify_maltsev_tree(const FiniteAlgebra& a, const MaltsevTree& tree,
                                const TermFamily& fam) {
    tree.validate();
    for (const auto& [id, v] : tree.vertices)
        if (!fam.pairs.count(id))
            throw MissingVertexTerms("no term pair for vertex " + std::to_string(id));

    const Term x = Term::var(0), y = Term::var(1), z = Term::var(2);
    TreeVerdict out;

    for (const auto& [i, pair] : fam.pairs) {
        const auto& [f, g] = pair;
        if (f.max_var() > 2 || g.max_var() > 2)
            throw ArityMismatch("vertex terms must be ternary");
        check_axiom(a, "idempotence", i, sub3(f, x, x, x), x, 1, out);
        check_axiom(a, "idempotence", i, sub3(g, x, x, x), x, 1, out);
    }

    using Color = MaltsevTree::Color;
    for (const auto& [i, v] : tree.vertices) {
        const auto& [f, g] = fam.pairs.at(i);
        check_axiom(a, "ax1", i, sub3(f, x, y, x), sub3(g, x, y, x), 2, out);
        if (tree.is_leaf(i)) {
            if (v.color == Color::B)
                check_axiom(a, "ax3", i, sub3(f, x, x, y), sub3(g, x, x, y), 2, out);
            else
                check_axiom(a, "ax4", i, sub3(f, x, y, y), sub3(g, x, y, y), 2, out);
        } else {
            const auto& [fa, ga_unused] = fam.pairs.at(tree.first_child(i));
            const auto& [fo_unused, go] = fam.pairs.at(tree.last_child(i));
            if (v.color == Color::B) {
                check_axiom(a, "ax5", i, sub3(f, x, x, y), sub3(fa, x, x, y), 2, out);
                check_axiom(a, "ax6", i, sub3(g, x, x, y), sub3(go, x, x, y), 2, out);
            } else {
                check_axiom(a, "ax7", i, sub3(f, x, y, y), sub3(fa, x, y, y), 2, out);
                check_axiom(a, "ax8", i, sub3(g, x, y, y), sub3(go, x, y, y), 2, out);
            }
        }
        if (i != tree.root) {
            int par = tree.parent(i);
            auto suc = tree.next_sibling(i);
            if (suc) {
                const auto& [fs, gs_unused] = fam.pairs.at(*suc);
                if (tree.vertices.at(par).color == Color::B)
                    check_axiom(a, "ax9", i, sub3(g, x, x, y), sub3(fs, x, x, y), 2, out);
                else
                    check_axiom(a, "ax10", i, sub3(g, x, y, y), sub3(fs, x, y, y), 2, out);
            }
        }
    }

    const auto& [f0, g0] = fam.pairs.at(tree.root);
    check_axiom(a, "ax2", tree.root, f0, x, 3, out);
    check_axiom(a, "ax11", tree.root, sub3(g0, x, y, y), sub3(fam.p, x, y, y), 2, out);
    check_axiom(a, "ax12", -1, sub3(fam.p, x, x, y), y, 2, out);
    return out;
}

std::optional<Term> search_difference_term(const FiniteAlgebra& a, int max_depth,
                                           std::int64_t max_candidates) {
    if (max_depth < 1) throw Error("max_depth must be >= 1");
    CommutatorContext ctx(a, 8);

    struct Candidate {
        Term term;
        std::vector<int> table;
        int depth;
    };
    std::vector<Candidate> pool;
    std::set<std::vector<int>> seen;

    auto consider = [&](const Term& t, int depth) -> std::optional<Term> {
        std::vector<int> table = term_table(a, t, 3);
        if (!seen.insert(table).second) return std::nullopt;  // semantic duplicate
        if (static_cast<std::int64_t>(seen.size()) > max_candidates)
            throw SizeBoundExceeded("term search candidate bound exceeded");
        pool.push_back({t, std::move(table), depth});
        if (difference_term_on(a, t, ctx).ok) return t;
        return std::nullopt;
    };

    for (int v = 0; v < 3; ++v)
        if (auto hit = consider(Term::var(v), 0)) return hit;

    std::vector<int> op_order(a.operations().size());
    for (std::size_t i = 0; i < op_order.size(); ++i) op_order[i] = static_cast<int>(i);
    std::sort(op_order.begin(), op_order.end(), [&](int i, int j) {
        return a.operations()[i].symbol < a.operations()[j].symbol;
    });

    for (int depth = 1; depth <= max_depth; ++depth) {
        const std::size_t pool_size = pool.size();
        for (int oi : op_order) {
            const Operation& f = a.operations()[oi];
            if (f.arity == 0) {
                if (auto hit = consider(Term::apply(f.symbol, {}), depth)) return hit;
                continue;
            }
            // argument tuples over existing terms with at least one child of
            // depth exactly depth-1
            std::vector<std::size_t> counter(f.arity, 0);
            bool done = false;
            while (!done) {
                bool has_deep = false;
                for (int j = 0; j < f.arity; ++j)
                    if (pool[counter[j]].depth == depth - 1) has_deep = true;
                if (has_deep) {
                    std::vector<Term> children;
                    children.reserve(f.arity);
                    for (int j = 0; j < f.arity; ++j) children.push_back(pool[counter[j]].term);
                    if (auto hit = consider(Term::apply(f.symbol, std::move(children)), depth))
                        return hit;
                }
                int j = f.arity - 1;
                while (j >= 0 && ++counter[j] == pool_size) counter[j--] = 0;
                if (j < 0) done = true;
            }
        }
    }
    return std::nullopt;
}

}  // namespace ualg
