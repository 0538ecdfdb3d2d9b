#include <doctest.h>

#include <random>

#include "ualg/checks.hpp"
#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"

using namespace ualg;

TEST_CASE("abelian groups have zero commutators everywhere") {
    for (int n : {2, 3, 4}) {
        FiniteAlgebra zn = corpus::cyclic_group(n);
        for (const Congruence& alpha : con_lattice(zn))
            for (const Congruence& beta : con_lattice(zn)) {
                CHECK(tc_commutator(zn, alpha, beta).result.is_equality());
                CHECK(commutator_is_zero(zn, alpha, beta));
            }
    }
}

TEST_CASE("the full commutator of S3 is the coset partition of its derived subgroup") {
    FiniteAlgebra s3 = corpus::symmetric_group_s3();
    Congruence full = Congruence::full(6);
    Congruence a3 = Congruence::from_blocks(6, {{0, 3, 4}, {1, 2, 5}});
    CommutatorTrace tr = tc_commutator(s3, full, full);
    CHECK(tr.result == a3);
    CHECK(tr.deltas.front().is_equality());
    CHECK(tr.deltas.back() == tr.result);
    CHECK(!tr.xsets.empty());
    // [a3, a3] = 0 since the derived subgroup is abelian.
    CHECK(tc_commutator(s3, a3, a3).result.is_equality());
}

TEST_CASE("the semilattice has a nonzero commutator at the top") {
    FiniteAlgebra sl = corpus::two_element_semilattice();
    Congruence full = Congruence::full(2);
    CHECK(tc_commutator(sl, full, full).result.is_full());
    CHECK(!commutator_is_zero(sl, full, full));
}

TEST_CASE("commutator with the equality congruence is zero") {
    for (const corpus::Entry& e : corpus::all()) {
        Congruence eq = Congruence::equality(e.algebra.size());
        Congruence full = Congruence::full(e.algebra.size());
        CHECK(tc_commutator(e.algebra, eq, full).result.is_equality());
        CHECK(tc_commutator(e.algebra, full, eq).result.is_equality());
    }
}

TEST_CASE("the commutator is below the meet") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> dist(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> table(16);
        for (int& v : table) v = dist(rng);
        FiniteAlgebra a("rand", 4, {{"f", 2, std::move(table)}});
        auto lattice = con_lattice(a);
        for (const Congruence& alpha : lattice)
            for (const Congruence& beta : lattice) {
                CommutatorTrace tr = tc_commutator(a, alpha, beta);
                CHECK(tr.result.leq(alpha.meet(beta)));
                CHECK(tr.result.is_equality() == commutator_is_zero(a, alpha, beta));
            }
    }
}

TEST_CASE("the gluing-closure variant never exceeds the commutator") {
    for (const corpus::Entry& e : corpus::all()) {
        auto lattice = con_lattice(e.algebra);
        for (const Congruence& alpha : lattice)
            for (const Congruence& beta : lattice) {
                Congruence hyper = hypercommutator(e.algebra, alpha, beta);
                Congruence comm = tc_commutator(e.algebra, alpha, beta).result;
                CHECK(comm.leq(hyper));
                if (e.kiss_term || e.difference_term) CHECK(hyper == comm);
            }
    }
}

TEST_CASE("saturation test") {
    TupleSet4 s(2);
    Congruence full = Congruence::full(2);
    Congruence eq = Congruence::equality(2);
    s.insert({0, 0, 0, 0});
    CHECK(is_saturated(s, eq));
    CHECK(!is_saturated(s, full));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) s.insert({a, b, c, d});
    CHECK(is_saturated(s, full));
}
