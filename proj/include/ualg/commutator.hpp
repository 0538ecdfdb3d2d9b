#pragma once

#include <utility>
#include <vector>

#include "ualg/congruence.hpp"
#include "ualg/twodim.hpp"

namespace ualg {

/// Trace of the term-condition commutator iteration: an increasing chain of
/// congruences delta_0 <= delta_1 <= ... stabilizing at the result, with the
/// pair set X_{i+1} harvested from M(alpha,beta) at each stage.
struct CommutatorTrace {
    std::vector<Congruence> deltas;
    std::vector<std::vector<std::pair<int, int>>> xsets;
    Congruence result;
};

/// [alpha,beta] via the delta iteration: delta_0 = equality,
/// X_{i+1} = bottom rows of M-matrices whose top row lies in delta_i,
/// delta_{i+1} = Cg(X_{i+1} union delta_i), iterated to fixpoint.
CommutatorTrace tc_commutator(const FiniteAlgebra& a, const Congruence& alpha,
                              const Congruence& beta);

/// Zero-test: true iff every matrix [a c; b d] in M(alpha,beta) with b = d
/// also has a = c.
bool commutator_is_zero(const FiniteAlgebra& a, const Congruence& alpha,
                        const Congruence& beta);

/// Least congruence delta with: (a,c) in delta implies (b,d) in delta for
/// every [a c; b d] in M*(alpha,beta).
Congruence hypercommutator(const FiniteAlgebra& a, const Congruence& alpha,
                           const Congruence& beta);

/// True iff S is a union of theta^4-classes.
bool is_saturated(const TupleSet4& s, const Congruence& theta);

}  // namespace ualg
