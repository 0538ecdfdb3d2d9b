#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/term.hpp"

namespace ualg {
namespace corpus {

/// The fixed desk-scale corpus: small algebras with known special terms.
struct Entry {
    FiniteAlgebra algebra;
    std::vector<std::string> tags;       // "group", "sd-meet", ...
    std::optional<Term> difference_term;
    std::optional<Term> kiss_term;       // a direct Kiss term when one is known
};

FiniteAlgebra two_element_semilattice();
FiniteAlgebra two_element_lattice();
FiniteAlgebra two_element_set();   // no operations
FiniteAlgebra cyclic_group(int n); // ({0..n-1}, +)
FiniteAlgebra symmetric_group_s3();

/// x + (n-1)y + z as a term over "+" (the Maltsev term of Z_n).
Term cyclic_maltsev_term(int n);
/// x * y^5 * z over "*" (the Maltsev term of S3; every element order divides 6).
Term s3_maltsev_term();

std::vector<Entry> all();

}  // namespace corpus
}  // namespace ualg
