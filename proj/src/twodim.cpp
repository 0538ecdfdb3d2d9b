#include "ualg/twodim.hpp"

#include <algorithm>
#include <map>

namespace ualg {

TupleSet4::TupleSet4(int n) : n_(n) {
    std::int64_t total = static_cast<std::int64_t>(n) * n * n * n;
    if (total > power_size_bound())
        throw SizeBoundExceeded("fourth-power universe exceeds size bound");
    bits_.assign(static_cast<std::size_t>(total), false);
}

std::int64_t TupleSet4::index(const Matrix2x2& m) const {
    return ((static_cast<std::int64_t>(m.a) * n_ + m.b) * n_ + m.c) * n_ + m.d;
}

Matrix2x2 TupleSet4::matrix_at(std::int64_t index) const {
    Matrix2x2 m;
    m.d = static_cast<int>(index % n_);
    index /= n_;
    m.c = static_cast<int>(index % n_);
    index /= n_;
    m.b = static_cast<int>(index % n_);
    index /= n_;
    m.a = static_cast<int>(index);
    return m;
}

bool TupleSet4::insert(const Matrix2x2& m) {
    auto idx = static_cast<std::size_t>(index(m));
    if (bits_[idx]) return false;
    bits_[idx] = true;
    ++count_;
    return true;
}

bool TupleSet4::is_subset_of(const TupleSet4& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i]) return false;
    return true;
}

std::vector<Matrix2x2> TupleSet4::members() const {
    std::vector<Matrix2x2> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(matrix_at(static_cast<std::int64_t>(i)));
    return out;
}

std::optional<Matrix2x2> glue_h(const Matrix2x2& m1, const Matrix2x2& m2) {
    if (m1.c != m2.a || m1.d != m2.b) return std::nullopt;
    return Matrix2x2{m1.a, m1.b, m2.c, m2.d};
}

std::optional<Matrix2x2> glue_v(const Matrix2x2& m1, const Matrix2x2& m2) {
    if (m1.b != m2.a || m1.d != m2.c) return std::nullopt;
    return Matrix2x2{m1.a, m2.b, m1.c, m2.d};
}

TupleSet4 r_rel(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta) {
    const int n = a.size();
    TupleSet4 s(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!alpha.related(x, y)) continue;  // column (x,y) in alpha
            for (int c = 0; c < n; ++c) {
                if (!beta.related(x, c)) continue;  // top row in beta
                for (int d = 0; d < n; ++d)
                    if (alpha.related(c, d) && beta.related(y, d))
                        s.insert({x, y, c, d});
            }
        }
    return s;
}

TupleSet4 g_generators(const FiniteAlgebra& a, const Congruence& alpha,
                       const Congruence& beta) {
    const int n = a.size();
    TupleSet4 s(n);
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            if (alpha.related(c, d)) s.insert({c, d, c, d});  // [c c; d d]
    for (int x = 0; x < n; ++x)
        for (int c = 0; c < n; ++c)
            if (beta.related(x, c)) s.insert({x, x, c, c});  // [x c; x c]
    return s;
}

namespace {

Matrix2x2 apply_coordinatewise(const FiniteAlgebra& a, int op,
                               std::span<const Matrix2x2> args, std::vector<int>& scratch) {
    const int k = static_cast<int>(args.size());
    scratch.resize(k);
    Matrix2x2 out;
    for (int j = 0; j < k; ++j) scratch[j] = args[j].a;
    out.a = a.apply(op, scratch);
    for (int j = 0; j < k; ++j) scratch[j] = args[j].b;
    out.b = a.apply(op, scratch);
    for (int j = 0; j < k; ++j) scratch[j] = args[j].c;
    out.c = a.apply(op, scratch);
    for (int j = 0; j < k; ++j) scratch[j] = args[j].d;
    out.d = a.apply(op, scratch);
    return out;
}

// Closes `s` under all operations of A acting coordinatewise on A^4.
void close_under_operations(const FiniteAlgebra& a, TupleSet4& s) {
    std::vector<Matrix2x2> members = s.members();
    std::size_t frontier_start = 0;
    std::vector<int> scratch;
    while (frontier_start < members.size()) {
        const std::size_t frontier_end = members.size();
        for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
            const Operation& f = a.operations()[oi];
            if (f.arity == 0) {
                int v = f.table[0];
                Matrix2x2 m{v, v, v, v};
                if (s.insert(m)) members.push_back(m);
                continue;
            }
            std::vector<std::size_t> counter(f.arity, 0);
            std::vector<Matrix2x2> args(f.arity);
            bool done = false;
            while (!done) {
                bool touches = false;
                for (int j = 0; j < f.arity; ++j)
                    if (counter[j] >= frontier_start) touches = true;
                if (touches) {
                    for (int j = 0; j < f.arity; ++j) args[j] = members[counter[j]];
                    Matrix2x2 m =
                        apply_coordinatewise(a, static_cast<int>(oi), args, scratch);
                    if (s.insert(m)) members.push_back(m);
                }
                int j = f.arity - 1;
                while (j >= 0 && ++counter[j] == frontier_end) counter[j--] = 0;
                if (j < 0) done = true;
            }
        }
        frontier_start = frontier_end;
    }
}

using ColumnBuckets = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;

// Matrices that arise by horizontally gluing two members of `s`.
TupleSet4 h_stage(const TupleSet4& s) {
    ColumnBuckets by_left;  // left column (a,b) -> right columns (c,d)
    for (const Matrix2x2& m : s.members())
        by_left[{m.a, m.b}].emplace_back(m.c, m.d);
    TupleSet4 out(s.universe_size());
    for (const Matrix2x2& m : s.members()) {
        auto it = by_left.find({m.c, m.d});
        if (it == by_left.end()) continue;
        for (auto [c2, d2] : it->second) out.insert({m.a, m.b, c2, d2});
    }
    return out;
}

// Matrices that arise by vertically gluing two members of `s`.
TupleSet4 v_stage(const TupleSet4& s) {
    ColumnBuckets by_top;  // top row (a,c) -> bottom rows (b,d)
    for (const Matrix2x2& m : s.members())
        by_top[{m.a, m.c}].emplace_back(m.b, m.d);
    TupleSet4 out(s.universe_size());
    for (const Matrix2x2& m : s.members()) {
        auto it = by_top.find({m.b, m.d});
        if (it == by_top.end()) continue;
        for (auto [b2, d2] : it->second) out.insert({m.a, b2, m.c, d2});
    }
    return out;
}

}  // namespace

TupleSet4 m_rel(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta) {
    TupleSet4 s = g_generators(a, alpha, beta);
    close_under_operations(a, s);
    return s;
}

MStarTrace mstar_staged(const FiniteAlgebra& a, const Congruence& alpha,
                        const Congruence& beta) {
    MStarTrace trace{{}, TupleSet4(a.size()), 0};
    trace.stages.push_back(m_rel(a, alpha, beta));
    // Alternate horizontal (odd stages) and vertical (even stages) gluing
    // until two consecutive stages add nothing.
    int unchanged_streak = 0;
    while (unchanged_streak < 2) {
        const TupleSet4& prev = trace.stages.back();
        int n = static_cast<int>(trace.stages.size());  // stage number being built
        TupleSet4 next = (n % 2 == 1) ? h_stage(prev) : v_stage(prev);
        if (next == prev) {
            ++unchanged_streak;
        } else {
            unchanged_streak = 0;
        }
        trace.stages.push_back(std::move(next));
    }
    // Final joint-gluing fixpoint guarantees closure under both rules at once.
    TupleSet4 result = trace.stages.back();
    for (;;) {
        TupleSet4 grown = result;
        TupleSet4 h = h_stage(result);
        TupleSet4 v = v_stage(result);
        for (const Matrix2x2& m : h.members()) grown.insert(m);
        for (const Matrix2x2& m : v.members()) grown.insert(m);
        if (grown == result) break;
        result = std::move(grown);
    }
    trace.stage_count = static_cast<int>(trace.stages.size()) - 1;
    trace.result = std::move(result);
    return trace;
}

TupleSet4 mstar(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta) {
    return mstar_staged(a, alpha, beta).result;
}

TupleSet4 transpose_set(const TupleSet4& s) {
    TupleSet4 out(s.universe_size());
    for (const Matrix2x2& m : s.members()) out.insert({m.a, m.c, m.b, m.d});
    return out;
}

TupleSet4 swap_rows(const TupleSet4& s) {
    TupleSet4 out(s.universe_size());
    for (const Matrix2x2& m : s.members()) out.insert({m.b, m.a, m.d, m.c});
    return out;
}

TupleSet4 swap_columns(const TupleSet4& s) {
    TupleSet4 out(s.universe_size());
    for (const Matrix2x2& m : s.members()) out.insert({m.c, m.d, m.a, m.b});
    return out;
}

bool is_subuniverse4(const FiniteAlgebra& a, const TupleSet4& s) {
    TupleSet4 copy = s;
    close_under_operations(a, copy);
    return copy == s;
}

}  // namespace ualg
