#include "ualg/corpus.hpp"

#include <array>

namespace ualg {
namespace corpus {

FiniteAlgebra two_element_semilattice() {
    return FiniteAlgebra("semilattice2", 2,
                         {{"meet", 2, {0, 0, 0, 1}}});
}

FiniteAlgebra two_element_lattice() {
    return FiniteAlgebra("lattice2", 2,
                         {{"meet", 2, {0, 0, 0, 1}}, {"join", 2, {0, 1, 1, 1}}});
}

FiniteAlgebra two_element_set() {
    return FiniteAlgebra("set2", 2, {});
}

FiniteAlgebra cyclic_group(int n) {
    Operation plus{"+", 2, std::vector<int>(static_cast<std::size_t>(n) * n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) plus.table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    return FiniteAlgebra("Z" + std::to_string(n), n, {std::move(plus)});
}

FiniteAlgebra symmetric_group_s3() {
    // Permutations of {0,1,2} listed lexicographically:
    // 0:(012) 1:(021) 2:(102) 3:(120) 4:(201) 5:(210)
    // Even permutations (the A3 cosets) are {0,3,4}.
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    Operation mul{"*", 2, std::vector<int>(36)};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> comp;  // (p_i o p_j)(x) = p_i(p_j(x))
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            mul.table[static_cast<std::size_t>(i) * 6 + j] = index_of(comp);
        }
    return FiniteAlgebra("S3", 6, {std::move(mul)});
}

Term cyclic_maltsev_term(int n) {
    // x - y + z in Z_n, written with + only: x + (n-1)*y + z
    Term t = Term::var(0);
    for (int i = 0; i < n - 1; ++i) t = Term::apply("+", {t, Term::var(1)});
    return Term::apply("+", {t, Term::var(2)});
}

Term s3_maltsev_term() {
    // x * y^-1 * z where y^-1 = y^5 in S3
    Term y5 = Term::var(1);
    for (int i = 0; i < 4; ++i) y5 = Term::apply("*", {y5, Term::var(1)});
    return Term::apply("*", {Term::apply("*", {Term::var(0), y5}), Term::var(2)});
}

std::vector<Entry> all() {
    std::vector<Entry> entries;
    entries.push_back({two_element_semilattice(), {"sd-meet"}, Term::var(2), Term::var(2)});
    entries.push_back({two_element_lattice(), {"sd-meet"}, Term::var(2), Term::var(2)});
    entries.push_back({two_element_set(), {}, std::nullopt, std::nullopt});
    // Z2's Maltsev term x+y+z gives the direct Kiss term x+y+w.
    entries.push_back({cyclic_group(2),
                       {"group"},
                       cyclic_maltsev_term(2),
                       Term::apply("+", {Term::apply("+", {Term::var(0), Term::var(1)}),
                                         Term::var(3)})});
    entries.push_back({cyclic_group(3), {"group"}, cyclic_maltsev_term(3), std::nullopt});
    entries.push_back({cyclic_group(4), {"group"}, cyclic_maltsev_term(4), std::nullopt});
    entries.push_back({symmetric_group_s3(), {"group"}, s3_maltsev_term(), std::nullopt});
    return entries;
}

}  // namespace corpus
}  // namespace ualg
