#include <doctest.h>

#include <algorithm>

#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"

using namespace ualg;

TEST_CASE("partition constructors and canonical form") {
    Congruence e = Congruence::equality(3);
    CHECK(e.is_equality());
    CHECK(e.block_count() == 3);
    Congruence f = Congruence::full(3);
    CHECK(f.is_full());
    CHECK(f.block_count() == 1);
    Congruence c = Congruence::from_blocks(4, {{2, 0}, {3, 1}});
    CHECK(c.representative(2) == 0);
    CHECK(c.representative(3) == 1);
    CHECK(c.related(0, 2));
    CHECK(!c.related(0, 1));
    CHECK(c.blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK(c.pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

    CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}}), BadPartition);
    CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}, {1, 2}}), BadPartition);
    CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1, 2, 3}}), BadPartition);
}

TEST_CASE("partition order and meet") {
    Congruence e = Congruence::equality(4);
    Congruence f = Congruence::full(4);
    Congruence c = Congruence::from_blocks(4, {{0, 2}, {1, 3}});
    CHECK(e.leq(c));
    CHECK(c.leq(f));
    CHECK(!c.leq(e));
    CHECK(c.meet(f) == c);
    CHECK(c.meet(Congruence::from_blocks(4, {{0, 1}, {2, 3}})) == e);
}

TEST_CASE("congruence generation on Z4") {
    FiniteAlgebra z4 = corpus::cyclic_group(4);
    CHECK(cg(z4, {{0, 2}}) == Congruence::from_blocks(4, {{0, 2}, {1, 3}}));
    CHECK(cg(z4, {{0, 1}}).is_full());
    CHECK(cg(z4, {}).is_equality());
}

TEST_CASE("compatibility check produces a violation witness") {
    FiniteAlgebra s3 = corpus::symmetric_group_s3();
    Congruence pi = Congruence::from_blocks(6, {{0, 1}, {2, 3}, {4, 5}});
    auto v = check_congruence(s3, pi);
    REQUIRE(v.has_value());
    // The witness re-validates against the raw table.
    CHECK(pi.related(v->args_left[0], v->args_right[0]));
    CHECK(pi.related(v->args_left[1], v->args_right[1]));
    CHECK(v->out_left == s3.apply(0, v->args_left));
    CHECK(v->out_right == s3.apply(0, v->args_right));
    CHECK(!pi.related(v->out_left, v->out_right));

    CHECK(is_congruence(s3, Congruence::from_blocks(6, {{0, 3, 4}, {1, 2, 5}})));
}

TEST_CASE("congruence lattices of the corpus") {
    CHECK(con_lattice(corpus::cyclic_group(2)).size() == 2);
    CHECK(con_lattice(corpus::cyclic_group(3)).size() == 2);
    CHECK(con_lattice(corpus::cyclic_group(4)).size() == 3);
    CHECK(con_lattice(corpus::symmetric_group_s3()).size() == 3);
    CHECK(con_lattice(corpus::two_element_semilattice()).size() == 2);
    CHECK(con_lattice(corpus::two_element_lattice()).size() == 2);
    CHECK(con_lattice(corpus::two_element_set()).size() == 2);
    FiniteAlgebra one("one", 1, {});
    CHECK(con_lattice(one).size() == 1);

    // Join stays inside the computed lattice.
    FiniteAlgebra z4 = corpus::cyclic_group(4);
    auto lat = con_lattice(z4);
    for (const Congruence& x : lat)
        for (const Congruence& y : lat) {
            Congruence j = con_join(z4, x, y);
            CHECK(x.leq(j));
            CHECK(y.leq(j));
            CHECK(std::find(lat.begin(), lat.end(), j) != lat.end());
        }
}

TEST_CASE("lattice enumeration respects the size bound") {
    CHECK_THROWS_AS(con_lattice(corpus::two_element_set(), 1), SizeBoundExceeded);
}
