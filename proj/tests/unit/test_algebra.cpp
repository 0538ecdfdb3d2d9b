#include <doctest.h>

#include <cstdlib>

#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"

using namespace ualg;

TEST_CASE("operation tables are validated on construction") {
    CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {{"f", 1, {0, 5}}}), Error);
    CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {{"f", 2, {0, 1, 0}}}), Error);
    CHECK_THROWS_AS(FiniteAlgebra("bad", 0, {}), Error);
    FiniteAlgebra ok("ok", 3, {{"f", 0, {1}}, {"g", 2, std::vector<int>(9, 2)}});
    CHECK(ok.size() == 3);
    CHECK(ok.apply(ok.op_index("f"), {}) == 1);
    int args[] = {1, 2};
    CHECK(ok.apply(ok.op_index("g"), args) == 2);
    CHECK_THROWS_AS(ok.op_index("h"), UnknownSymbol);
}

TEST_CASE("power codec round-trips with the first coordinate most significant") {
    PowerCodec codec(3, 4);
    CHECK(codec.count() == 81);
    int t[] = {2, 0, 1, 2};
    CHECK(codec.encode(t) == 2 * 27 + 0 * 9 + 1 * 3 + 2);
    for (std::int64_t i = 0; i < codec.count(); ++i)
        CHECK(codec.encode(codec.decode(i)) == i);
    CHECK_THROWS_AS(PowerCodec(10, 9, 1000), SizeBoundExceeded);
}

TEST_CASE("direct powers act coordinatewise") {
    FiniteAlgebra z3 = corpus::cyclic_group(3);
    PowerAlgebra p = power(z3, 2);
    CHECK(p.algebra.size() == 9);
    // (1,2) + (2,2) = (0,1)
    int a = static_cast<int>(p.codec.encode(std::vector<int>{1, 2}));
    int b = static_cast<int>(p.codec.encode(std::vector<int>{2, 2}));
    int args[] = {a, b};
    int c = p.algebra.apply(0, args);
    CHECK(p.codec.decode(c) == std::vector<int>{0, 1});
}

TEST_CASE("the power size bound honors CLAB_MAX_POWER") {
    setenv("CLAB_MAX_POWER", "10", 1);
    CHECK(power_size_bound() == 10);
    CHECK_THROWS_AS(power(corpus::cyclic_group(4), 2), SizeBoundExceeded);
    unsetenv("CLAB_MAX_POWER");
    CHECK(power_size_bound() == PowerCodec::kDefaultBound);
}

TEST_CASE("subuniverse closure") {
    FiniteAlgebra z4 = corpus::cyclic_group(4);
    CHECK(subuniverse_closure(z4, {1}) == std::vector<int>{0, 1, 2, 3});
    CHECK(subuniverse_closure(z4, {2}) == std::vector<int>{0, 2});
    FiniteAlgebra sl = corpus::two_element_semilattice();
    CHECK(subuniverse_closure(sl, {1}) == std::vector<int>{1});
}

TEST_CASE("quotient by a congruence is well defined and compatible") {
    FiniteAlgebra z4 = corpus::cyclic_group(4);
    Congruence theta = Congruence::from_blocks(4, {{0, 2}, {1, 3}});
    QuotientResult q = quotient(z4, theta);
    CHECK(q.algebra.size() == 2);
    // bar(1) + bar(1) = bar(2) = bar(0)
    int args[] = {q.bar[1], q.bar[1]};
    CHECK(q.algebra.apply(0, args) == q.bar[0]);
    Congruence bogus = Congruence::from_blocks(4, {{0, 1}, {2}, {3}});
    CHECK_THROWS_AS(quotient(z4, bogus), NotACongruence);
}

TEST_CASE("induced subalgebra re-indexes tables") {
    FiniteAlgebra z4 = corpus::cyclic_group(4);
    FiniteAlgebra sub = induced_subalgebra(z4, {0, 2});
    CHECK(sub.size() == 2);
    int args[] = {1, 1};  // 2 + 2 = 0
    CHECK(sub.apply(0, args) == 0);
}
