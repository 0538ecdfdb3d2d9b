#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// A partition of {0..n-1} in canonical form: each element maps to the
/// least element of its block.  Values are immutable.
class Congruence {
public:
    /// Equality congruence (all singleton blocks).
    static Congruence equality(int n);
    /// Full congruence (one block).
    static Congruence full(int n);
    /// From an element->representative map; canonicalized.
    static Congruence from_map(std::vector<int> rep);
    /// From explicit blocks covering 0..n-1 exactly once; throws BadPartition.
    static Congruence from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    int size() const { return static_cast<int>(rep_.size()); }
    int representative(int x) const { return rep_[x]; }
    bool related(int x, int y) const { return rep_[x] == rep_[y]; }
    const std::vector<int>& rep_map() const { return rep_; }

    std::vector<std::vector<int>> blocks() const;
    int block_count() const;
    /// All related pairs (x, y) with x < y.
    std::vector<std::pair<int, int>> pairs() const;

    bool is_equality() const;
    bool is_full() const;

    /// Partition order: this refines other (every block inside a block of other).
    bool leq(const Congruence& other) const;
    /// Partition intersection.
    Congruence meet(const Congruence& other) const;

    bool operator==(const Congruence& other) const { return rep_ == other.rep_; }
    auto operator<=>(const Congruence& other) const { return rep_ <=> other.rep_; }

private:
    explicit Congruence(std::vector<int> rep) : rep_(std::move(rep)) {}
    std::vector<int> rep_;
};

/// Witness for a compatibility failure: operation symbol, the two pointwise
/// related argument tuples, and the unrelated outputs.
struct CompatibilityViolation {
    std::string symbol;
    std::vector<int> args_left;
    std::vector<int> args_right;
    int out_left = 0;
    int out_right = 0;
};

/// nullopt when pi is compatible with every operation of A.
std::optional<CompatibilityViolation> check_congruence(const FiniteAlgebra& a,
                                                       const Congruence& pi);
inline bool is_congruence(const FiniteAlgebra& a, const Congruence& pi) {
    return !check_congruence(a, pi).has_value();
}

/// Least congruence of A containing the given pairs.  Maltsev-style
/// alternation of unary-polynomial closure and union-find merging.
Congruence cg(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs);

/// Join in Con(A): cg of the union of the pairs of both congruences.
Congruence con_join(const FiniteAlgebra& a, const Congruence& x, const Congruence& y);

/// All congruences of A, sorted by representative map (so the full
/// congruence comes first and equality last).  Throws SizeBoundExceeded
/// above the enumeration bound.
std::vector<Congruence> con_lattice(const FiniteAlgebra& a, int max_size = 8);

}  // namespace ualg
