#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ualg/commutator.hpp"
#include "ualg/special_terms.hpp"

namespace ualg {

/// Outcome of one theorem-instance check.  A fail always carries at least
/// one witness tuple that re-validates against the raw definitions; a skip
/// carries the violated hypothesis.
struct CheckReport {
    enum class Verdict { Pass, Fail, Skipped };

    std::string check;
    std::string inputs;  // algebra / congruence-pair / term digest
    Verdict verdict = Verdict::Pass;
    std::string skip_reason;
    std::string detail;
    std::vector<std::vector<int>> witnesses;
    std::map<std::string, std::int64_t> stats;  // set sizes, stage counts, ...
    bool sampled = false;
    double wall_ms = 0.0;  // not part of the deterministic report body

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }
};

/// For every [a c; b d] in R(alpha,beta), [a q(a,b,c,d); b d] lies in
/// M*(alpha,beta).  Requires p to verify as a difference term (q is built
/// from it); skipped unless [alpha,beta] = 0.
CheckReport check_crucial(const FiniteAlgebra& a, const Term& p, const Congruence& alpha,
                          const Congruence& beta);

/// q restricted to R(alpha,beta) commutes with every basic operation;
/// skipped unless [alpha,beta] = 0.  Exhaustive up to |R|^arity <= 10^6
/// argument tuples, then seeded sampling.
CheckReport check_main(const FiniteAlgebra& a, const Term& q, const Congruence& alpha,
                       const Congruence& beta);

/// The biconditional: [alpha,beta] = 0 iff (q is a homomorphism on R and
/// independent of its third variable on R).
CheckReport check_lemma62(const FiniteAlgebra& a, const Term& q, const Congruence& alpha,
                          const Congruence& beta);

/// Third-variable independence of q on R(alpha,beta); skipped unless
/// [alpha,beta] = 0.
CheckReport check_indep_lemma(const FiniteAlgebra& a, const Term& q,
                              const Congruence& alpha, const Congruence& beta);

/// Two Kiss terms agree pointwise on R(alpha,beta); skipped unless
/// [alpha,beta] = 0.
CheckReport check_kiss_agreement(const FiniteAlgebra& a, const Term& q1, const Term& q2,
                                 const Congruence& alpha, const Congruence& beta);

/// M*(alpha,beta) is the graph of q^-; when alpha <= beta and p is given,
/// q^- agrees with p and M* is the graph of p.
CheckReport check_qminus_graph(const FiniteAlgebra& a, const Term& q,
                               const std::optional<Term>& p, const Congruence& alpha,
                               const Congruence& beta);

/// M*(alpha,beta) = { m in R : q(m) = c-entry of m }; skipped unless
/// [alpha,beta] = 0.
CheckReport check_cor_delta(const FiniteAlgebra& a, const Term& q, const Congruence& alpha,
                            const Congruence& beta);

/// Hypothesis-free: (1) (a,b) in [alpha,beta] puts [a a; a b] in M*;
/// (2) M* is [alpha,beta]-saturated.
CheckReport check_arbitrary(const FiniteAlgebra& a, const Congruence& alpha,
                            const Congruence& beta);

/// With gamma = [alpha,beta]: (1) M* = { m in R : q(m) ~ c mod gamma };
/// (2) [a q(m); b d] in M* for all m in R; (3) gamma = { (a,b) :
/// [a a; a b] in M* }; plus the quotient cross-check
/// bar(M*(alpha,beta)) = M*(bar alpha, bar beta) in A/gamma.
CheckReport check_quotient(const FiniteAlgebra& a, const Term& q, const Congruence& alpha,
                           const Congruence& beta);

/// R(alpha,beta) = M*(alpha,beta); applicable when the projection z
/// verifies as a Kiss term on A.
CheckReport check_sdmeet(const FiniteAlgebra& a, const Congruence& alpha,
                         const Congruence& beta);

}  // namespace ualg
