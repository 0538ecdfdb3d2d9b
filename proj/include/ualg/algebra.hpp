#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ualg/errors.hpp"

namespace ualg {

/// A finitary operation given by its full table.  The table is flat,
/// row-major over argument tuples in lexicographic order: the value of
/// f(a1,...,ak) sits at index a1*n^(k-1) + a2*n^(k-2) + ... + ak.
struct Operation {
    std::string symbol;
    int arity = 0;
    std::vector<int> table;
};

/// A finite algebra on the universe {0,...,size-1}.
/// Immutable after construction; safe to share across threads.
class FiniteAlgebra {
public:
    FiniteAlgebra(std::string name, int size, std::vector<Operation> ops);

    const std::string& name() const { return name_; }
    int size() const { return size_; }
    const std::vector<Operation>& operations() const { return ops_; }

    /// Index of the operation with the given symbol, or throws UnknownSymbol.
    int op_index(const std::string& symbol) const;
    bool has_op(const std::string& symbol) const;

    /// Apply the op at index `op` to the argument tuple `args`.
    int apply(int op, std::span<const int> args) const;

private:
    std::string name_;
    int size_;
    std::vector<Operation> ops_;
};

/// Bijective index codec between {0,...,n^k-1} and tuples in {0..n-1}^k.
/// The first coordinate is most significant, matching table order.
class PowerCodec {
public:
    PowerCodec(int base, int width, std::int64_t max_indexable = kDefaultBound);

    int base() const { return base_; }
    int width() const { return width_; }
    std::int64_t count() const { return count_; }

    std::int64_t encode(std::span<const int> tuple) const;
    std::vector<int> decode(std::int64_t index) const;
    void decode_into(std::int64_t index, std::span<int> out) const;

    static constexpr std::int64_t kDefaultBound = 10'000'000;

private:
    int base_;
    int width_;
    std::int64_t count_;
};

/// Size bound for power() and the tables it materializes.  Reads the
/// CLAB_MAX_POWER environment variable, falling back to the default.
std::int64_t power_size_bound();

/// The k-th direct power of A, acting coordinatewise on A^k, together
/// with the index codec that identifies its universe with tuples.
struct PowerAlgebra {
    FiniteAlgebra algebra;
    PowerCodec codec;
};
PowerAlgebra power(const FiniteAlgebra& a, int k,
                   std::int64_t size_bound = power_size_bound());

/// Least subset of the universe containing `generators` and closed under
/// every operation of A.  Worklist fixpoint; output sorted.
std::vector<int> subuniverse_closure(const FiniteAlgebra& a, std::vector<int> generators);

class Congruence;

/// Quotient algebra on the blocks of theta, plus the natural map
/// element -> block index.  Verifies compatibility; throws NotACongruence.
struct QuotientResult {
    FiniteAlgebra algebra;
    std::vector<int> bar;  // element -> block index in the quotient
};
QuotientResult quotient(const FiniteAlgebra& a, const Congruence& theta);

/// The subalgebra of A induced on `elements` (must be sorted, closed under
/// all operations), with tables re-indexed to 0..|elements|-1.
FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, const std::vector<int>& elements);

}  // namespace ualg
