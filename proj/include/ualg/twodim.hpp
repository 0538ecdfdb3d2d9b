#pragma once

#include <optional>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

namespace ualg {

/// A 4-tuple (a,b,c,d) viewed as the matrix [a c; b d]: columns (a,b) and
/// (c,d), rows (a,c) and (b,d).
struct Matrix2x2 {
    int a = 0, b = 0, c = 0, d = 0;
    bool operator==(const Matrix2x2&) const = default;
    auto operator<=>(const Matrix2x2&) const = default;
};

/// Dense membership set over A^4, indexed by the tuple codec
/// (a,b,c,d) -> ((a*n+b)*n+c)*n+d.  Immutable snapshot once returned
/// from the closure routines.
class TupleSet4 {
public:
    explicit TupleSet4(int n);

    int universe_size() const { return n_; }
    std::int64_t count() const { return count_; }

    bool contains(const Matrix2x2& m) const { return bits_[index(m)]; }
    bool contains(int a, int b, int c, int d) const { return bits_[index({a, b, c, d})]; }
    /// Returns true if the matrix was newly inserted.
    bool insert(const Matrix2x2& m);

    bool is_subset_of(const TupleSet4& other) const;
    bool operator==(const TupleSet4& other) const { return bits_ == other.bits_; }

    /// Sorted list of members.
    std::vector<Matrix2x2> members() const;

    std::int64_t index(const Matrix2x2& m) const;
    Matrix2x2 matrix_at(std::int64_t index) const;

private:
    int n_;
    std::int64_t count_ = 0;
    std::vector<bool> bits_;
};

/// Horizontal gluing: [a a'; b b'] * [a' a''; b' b''] -> [a a''; b b''],
/// defined only when the middle columns match.
std::optional<Matrix2x2> glue_h(const Matrix2x2& m1, const Matrix2x2& m2);
/// Vertical gluing: [a a'; b b'] over [b b'; c c'] -> [a a'; c c'].
std::optional<Matrix2x2> glue_v(const Matrix2x2& m1, const Matrix2x2& m2);

/// R(alpha,beta): all matrices with columns in alpha and rows in beta.
TupleSet4 r_rel(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta);

/// G(alpha,beta): column-constant alpha-matrices plus row-constant
/// beta-matrices (the generators of M).
TupleSet4 g_generators(const FiniteAlgebra& a, const Congruence& alpha,
                       const Congruence& beta);

/// M(alpha,beta): the subalgebra of A^4 generated by G(alpha,beta).
TupleSet4 m_rel(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta);

/// The horizontal-and-vertical gluing closure of M(alpha,beta).
TupleSet4 mstar(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta);

/// Staged construction: stage 0 is M, odd stages glue horizontally, even
/// stages vertically; iterated until the alternation stabilizes, then one
/// joint-gluing fixpoint.  `stages` holds the stabilized stage count.
struct MStarTrace {
    std::vector<TupleSet4> stages;
    TupleSet4 result;
    int stage_count = 0;
};
MStarTrace mstar_staged(const FiniteAlgebra& a, const Congruence& alpha,
                        const Congruence& beta);

/// Elementwise (a,b,c,d) -> (a,c,b,d).
TupleSet4 transpose_set(const TupleSet4& s);
/// Elementwise (a,b,c,d) -> (b,a,d,c).
TupleSet4 swap_rows(const TupleSet4& s);
/// Elementwise (a,b,c,d) -> (c,d,a,b).
TupleSet4 swap_columns(const TupleSet4& s);

/// True when re-closing S under every operation of A^4 adds nothing.
bool is_subuniverse4(const FiniteAlgebra& a, const TupleSet4& s);

}  // namespace ualg
