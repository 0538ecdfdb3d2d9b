#include "ualg/commutator.hpp"

#include <map>

namespace ualg {

namespace {

// Shared fixpoint driver over a matrix set: seed with equality, repeatedly
// harvest (b,d) from matrices whose top row (a,c) is delta-related, close
// under Cg.  Returns the full stage trace.
CommutatorTrace delta_iteration(const FiniteAlgebra& a, const TupleSet4& matrices) {
    // Index matrices by top row; one scan per stage with a delta probe.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_top;
    for (const Matrix2x2& m : matrices.members())
        by_top[{m.a, m.c}].emplace_back(m.b, m.d);

    CommutatorTrace trace{{}, {}, Congruence::equality(a.size())};
    Congruence delta = Congruence::equality(a.size());
    trace.deltas.push_back(delta);
    for (;;) {
        std::vector<std::pair<int, int>> x;
        for (const auto& [top, bottoms] : by_top) {
            if (!delta.related(top.first, top.second)) continue;
            for (auto [r, s] : bottoms)
                if (!delta.related(r, s)) x.emplace_back(r, s);
        }
        auto seed = delta.pairs();
        seed.insert(seed.end(), x.begin(), x.end());
        Congruence next = cg(a, seed);
        if (next == delta) break;
        trace.xsets.push_back(std::move(x));
        trace.deltas.push_back(next);
        delta = std::move(next);
    }
    trace.result = delta;
    return trace;
}

}  // namespace

CommutatorTrace tc_commutator(const FiniteAlgebra& a, const Congruence& alpha,
                              const Congruence& beta) {
    return delta_iteration(a, m_rel(a, alpha, beta));
}

bool commutator_is_zero(const FiniteAlgebra& a, const Congruence& alpha,
                        const Congruence& beta) {
    TupleSet4 m = m_rel(a, alpha, beta);
    for (const Matrix2x2& mat : m.members())
        if (mat.b == mat.d && mat.a != mat.c) return false;
    return true;
}

Congruence hypercommutator(const FiniteAlgebra& a, const Congruence& alpha,
                           const Congruence& beta) {
    return delta_iteration(a, mstar(a, alpha, beta)).result;
}

bool is_saturated(const TupleSet4& s, const Congruence& theta) {
    const int n = s.universe_size();
    for (const Matrix2x2& m : s.members()) {
        // Changing one entry within its theta-class must preserve membership;
        // entry-at-a-time suffices for theta^4-saturation.
        for (int v = 0; v < n; ++v) {
            if (theta.related(m.a, v) && !s.contains(v, m.b, m.c, m.d)) return false;
            if (theta.related(m.b, v) && !s.contains(m.a, v, m.c, m.d)) return false;
            if (theta.related(m.c, v) && !s.contains(m.a, m.b, v, m.d)) return false;
            if (theta.related(m.d, v) && !s.contains(m.a, m.b, m.c, v)) return false;
        }
    }
    return true;
}

}  // namespace ualg
