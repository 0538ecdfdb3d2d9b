#include "ualg/checks.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <tuple>

namespace ualg {

namespace {

constexpr std::int64_t kExhaustiveCap = 1'000'000;
constexpr int kSampleCount = 100'000;
constexpr std::uint64_t kSampleSeed = 0xC1AB5EEDULL;

std::string blocks_string(const Congruence& c) {
    std::string s;
    bool first_block = true;
    for (const auto& block : c.blocks()) {
        if (!first_block) s += "|";
        first_block = false;
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(block[i]);
        }
    }
    return s;
}

std::string digest(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta,
                   const std::string& terms = "") {
    std::ostringstream os;
    os << a.name() << "; alpha=" << blocks_string(alpha) << "; beta=" << blocks_string(beta);
    if (!terms.empty()) os << "; " << terms;
    return os.str();
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

CheckReport skipped(CheckReport r, std::string reason) {
    r.verdict = CheckReport::Verdict::Skipped;
    r.skip_reason = std::move(reason);
    return r;
}

CheckReport failed_precondition(CheckReport r, const std::string& what,
                                const TermVerdict& tv) {
    r.verdict = CheckReport::Verdict::Fail;
    r.detail = what + " failed " + tv.failed_condition + ": " + tv.detail;
    r.witnesses.push_back(tv.witness);
    return r;
}

std::vector<int> q_table4(const FiniteAlgebra& a, const Term& q) {
    return term_table(a, q, 4);
}

int q_at(const std::vector<int>& table, int n, const Matrix2x2& m) {
    // q(a,b,c,d) for the matrix [a c; b d]
    return table[((static_cast<std::size_t>(m.a) * n + m.b) * n + m.c) * n + m.d];
}

/// Homomorphism scan for q on R: exhaustive up to the cap, then seeded
/// pseudorandom sampling.  Returns nullopt on success, else a witness
/// (op index followed by the flattened argument matrices).
struct HomScan {
    bool ok = true;
    bool sampled = false;
    std::string op_symbol;
    std::vector<int> witness;
};
HomScan homomorphism_scan(const FiniteAlgebra& a, const std::vector<int>& qtab,
                          const TupleSet4& r) {
    const int n = a.size();
    const auto members = r.members();
    const std::int64_t m = static_cast<std::int64_t>(members.size());
    HomScan scan;
    std::vector<int> coord(0);
    for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
        const Operation& f = a.operations()[oi];
        std::int64_t tuples = 1;
        bool exhaustive = true;
        for (int i = 0; i < f.arity; ++i) {
            tuples *= m;
            if (tuples > kExhaustiveCap) {
                exhaustive = false;
                break;
            }
        }
        std::vector<Matrix2x2> args(f.arity);
        std::vector<int> scratch(f.arity);
        std::vector<int> qvals(f.arity);
        auto test_tuple = [&]() -> bool {
            Matrix2x2 fm;
            for (int j = 0; j < f.arity; ++j) scratch[j] = args[j].a;
            fm.a = a.apply(static_cast<int>(oi), scratch);
            for (int j = 0; j < f.arity; ++j) scratch[j] = args[j].b;
            fm.b = a.apply(static_cast<int>(oi), scratch);
            for (int j = 0; j < f.arity; ++j) scratch[j] = args[j].c;
            fm.c = a.apply(static_cast<int>(oi), scratch);
            for (int j = 0; j < f.arity; ++j) scratch[j] = args[j].d;
            fm.d = a.apply(static_cast<int>(oi), scratch);
            for (int j = 0; j < f.arity; ++j) qvals[j] = q_at(qtab, n, args[j]);
            return q_at(qtab, n, fm) == a.apply(static_cast<int>(oi), qvals);
        };
        auto record_witness = [&]() {
            scan.ok = false;
            scan.op_symbol = f.symbol;
            scan.witness.clear();
            scan.witness.push_back(static_cast<int>(oi));
            for (const Matrix2x2& arg : args) {
                scan.witness.push_back(arg.a);
                scan.witness.push_back(arg.b);
                scan.witness.push_back(arg.c);
                scan.witness.push_back(arg.d);
            }
        };
        if (f.arity == 0) {
            // a constant is a homomorphism target iff q fixes it; covered by
            // the arity-0 tuple below
            int v = f.table[0];
            Matrix2x2 cm{v, v, v, v};
            if (q_at(qtab, n, cm) != v) {
                scan.ok = false;
                scan.op_symbol = f.symbol;
                scan.witness = {static_cast<int>(oi), v};
                return scan;
            }
            continue;
        }
        if (exhaustive) {
            std::vector<std::int64_t> counter(f.arity, 0);
            bool done = (m == 0);
            while (!done) {
                for (int j = 0; j < f.arity; ++j)
                    args[j] = members[static_cast<std::size_t>(counter[j])];
                if (!test_tuple()) {
                    record_witness();
                    return scan;
                }
                int j = f.arity - 1;
                while (j >= 0 && ++counter[j] == m) counter[j--] = 0;
                if (j < 0) done = true;
            }
        } else {
            scan.sampled = true;
            std::mt19937_64 rng(kSampleSeed);
            std::uniform_int_distribution<std::int64_t> pick(0, m - 1);
            for (int s = 0; s < kSampleCount; ++s) {
                for (int j = 0; j < f.arity; ++j)
                    args[j] = members[static_cast<std::size_t>(pick(rng))];
                if (!test_tuple()) {
                    record_witness();
                    return scan;
                }
            }
        }
    }
    return scan;
}

/// Third-variable independence of q on R; returns nullopt on success, else
/// the witness (a, b, c, c', d, q(a,b,c,d), q(a,b,c',d)).
std::optional<std::vector<int>> independence_witness(const FiniteAlgebra& a,
                                                     const std::vector<int>& qtab,
                                                     const TupleSet4& r) {
    const int n = a.size();
    std::map<std::tuple<int, int, int>, std::vector<int>> groups;
    for (const Matrix2x2& m : r.members()) groups[{m.a, m.b, m.d}].push_back(m.c);
    for (const auto& [key, cs] : groups) {
        auto [x, y, w] = key;
        for (std::size_t u = 0; u < cs.size(); ++u)
            for (std::size_t v = u + 1; v < cs.size(); ++v) {
                int q1 = q_at(qtab, n, {x, y, cs[u], w});
                int q2 = q_at(qtab, n, {x, y, cs[v], w});
                if (q1 != q2) return std::vector<int>{x, y, cs[u], cs[v], w, q1, q2};
            }
    }
    return std::nullopt;
}

std::optional<Matrix2x2> set_difference_witness(const TupleSet4& lhs, const TupleSet4& rhs) {
    for (const Matrix2x2& m : lhs.members())
        if (!rhs.contains(m)) return m;
    for (const Matrix2x2& m : rhs.members())
        if (!lhs.contains(m)) return m;
    return std::nullopt;
}

}  // namespace

CheckReport check_crucial(const FiniteAlgebra& a, const Term& p, const Congruence& alpha,
                          const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "crucial";
    r.inputs = digest(a, alpha, beta, "p=" + p.to_string());
    TermVerdict pv = is_difference_term(a, p);
    if (!pv.ok) return failed_precondition(std::move(r), "difference term", pv);
    if (!commutator_is_zero(a, alpha, beta)) {
        r = skipped(std::move(r), "[alpha,beta] != 0");
        r.wall_ms = timer.ms();
        return r;
    }
    Term q = lipparini(p);
    auto qtab = q_table4(a, q);
    TupleSet4 rset = r_rel(a, alpha, beta);
    TupleSet4 star = mstar(a, alpha, beta);
    r.stats["R"] = rset.count();
    r.stats["Mstar"] = star.count();
    for (const Matrix2x2& m : rset.members()) {
        int cprime = q_at(qtab, a.size(), m);
        if (!star.contains(m.a, m.b, cprime, m.d)) {
            r.verdict = CheckReport::Verdict::Fail;
            r.witnesses.push_back({m.a, m.b, m.c, m.d, cprime});
            r.detail = "[a q(a,b,c,d); b d] escapes M*";
            break;
        }
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_main(const FiniteAlgebra& a, const Term& q, const Congruence& alpha,
                       const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "main";
    r.inputs = digest(a, alpha, beta, "q=" + q.to_string());
    TermVerdict qv = is_kiss_term(a, q);
    if (!qv.ok) return failed_precondition(std::move(r), "Kiss term", qv);
    if (!commutator_is_zero(a, alpha, beta)) {
        r = skipped(std::move(r), "[alpha,beta] != 0");
        r.wall_ms = timer.ms();
        return r;
    }
    auto qtab = q_table4(a, q);
    TupleSet4 rset = r_rel(a, alpha, beta);
    r.stats["R"] = rset.count();
    HomScan scan = homomorphism_scan(a, qtab, rset);
    r.sampled = scan.sampled;
    if (!scan.ok) {
        r.verdict = CheckReport::Verdict::Fail;
        r.witnesses.push_back(scan.witness);
        r.detail = "q does not commute with " + scan.op_symbol + " on R";
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_lemma62(const FiniteAlgebra& a, const Term& q, const Congruence& alpha,
                          const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "lemma62";
    r.inputs = digest(a, alpha, beta, "q=" + q.to_string());
    TermVerdict qv = is_kiss_term(a, q);
    if (!qv.ok) return failed_precondition(std::move(r), "Kiss term", qv);

    const bool lhs = commutator_is_zero(a, alpha, beta);
    auto qtab = q_table4(a, q);
    TupleSet4 rset = r_rel(a, alpha, beta);
    r.stats["R"] = rset.count();

    HomScan scan = homomorphism_scan(a, qtab, rset);
    r.sampled = scan.sampled;
    auto indep = independence_witness(a, qtab, rset);
    const bool rhs = scan.ok && !indep.has_value();

    if (lhs != rhs) {
        r.verdict = CheckReport::Verdict::Fail;
        r.detail = lhs ? "[alpha,beta]=0 but RHS fails" : "RHS holds but [alpha,beta]!=0";
        if (!scan.ok) r.witnesses.push_back(scan.witness);
        if (indep) r.witnesses.push_back(*indep);
        if (r.witnesses.empty()) {
            // RHS holds but commutator is nonzero: ship an M-matrix with
            // b = d and a != c as the raw-definition witness.
            for (const Matrix2x2& m : m_rel(a, alpha, beta).members())
                if (m.b == m.d && m.a != m.c) {
                    r.witnesses.push_back({m.a, m.b, m.c, m.d});
                    break;
                }
        }
    } else if (!lhs) {
        // both sides false: report the RHS witness so it can be re-validated
        r.detail = "both sides false";
        if (!scan.ok) r.witnesses.push_back(scan.witness);
        if (indep) r.witnesses.push_back(*indep);
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_indep_lemma(const FiniteAlgebra& a, const Term& q,
                              const Congruence& alpha, const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "indep";
    r.inputs = digest(a, alpha, beta, "q=" + q.to_string());
    TermVerdict qv = is_kiss_term(a, q);
    if (!qv.ok) return failed_precondition(std::move(r), "Kiss term", qv);
    if (!commutator_is_zero(a, alpha, beta)) {
        r = skipped(std::move(r), "[alpha,beta] != 0");
        r.wall_ms = timer.ms();
        return r;
    }
    auto qtab = q_table4(a, q);
    TupleSet4 rset = r_rel(a, alpha, beta);
    r.stats["R"] = rset.count();
    if (auto w = independence_witness(a, qtab, rset)) {
        r.verdict = CheckReport::Verdict::Fail;
        r.witnesses.push_back(*w);
        r.detail = "q depends on its third variable on R";
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_kiss_agreement(const FiniteAlgebra& a, const Term& q1, const Term& q2,
                                 const Congruence& alpha, const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "kiss_agreement";
    r.inputs = digest(a, alpha, beta, "q1=" + q1.to_string() + "; q2=" + q2.to_string());
    TermVerdict v1 = is_kiss_term(a, q1);
    if (!v1.ok) return failed_precondition(std::move(r), "Kiss term q1", v1);
    TermVerdict v2 = is_kiss_term(a, q2);
    if (!v2.ok) return failed_precondition(std::move(r), "Kiss term q2", v2);
    if (!commutator_is_zero(a, alpha, beta)) {
        r = skipped(std::move(r), "[alpha,beta] != 0");
        r.wall_ms = timer.ms();
        return r;
    }
    auto t1 = q_table4(a, q1);
    auto t2 = q_table4(a, q2);
    TupleSet4 rset = r_rel(a, alpha, beta);
    r.stats["R"] = rset.count();
    for (const Matrix2x2& m : rset.members()) {
        int u = q_at(t1, a.size(), m);
        int v = q_at(t2, a.size(), m);
        if (u != v) {
            r.verdict = CheckReport::Verdict::Fail;
            r.witnesses.push_back({m.a, m.b, m.c, m.d, u, v});
            r.detail = "Kiss terms disagree on R";
            break;
        }
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_qminus_graph(const FiniteAlgebra& a, const Term& q,
                               const std::optional<Term>& p, const Congruence& alpha,
                               const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "qminus_graph";
    r.inputs = digest(a, alpha, beta, "q=" + q.to_string());
    TermVerdict qv = is_kiss_term(a, q);
    if (!qv.ok) return failed_precondition(std::move(r), "Kiss term", qv);
    if (p) {
        TermVerdict pv = is_difference_term(a, *p);
        if (!pv.ok) return failed_precondition(std::move(r), "difference term", pv);
    }
    if (!commutator_is_zero(a, alpha, beta)) {
        r = skipped(std::move(r), "[alpha,beta] != 0");
        r.wall_ms = timer.ms();
        return r;
    }
    const int n = a.size();
    auto qtab = q_table4(a, q);
    TupleSet4 rset = r_rel(a, alpha, beta);
    TupleSet4 star = mstar(a, alpha, beta);
    r.stats["R"] = rset.count();
    r.stats["Mstar"] = star.count();

    TupleSet4 graph(n);
    for (const Matrix2x2& m : rset.members())
        graph.insert({m.a, m.b, q_at(qtab, n, m), m.d});
    if (auto w = set_difference_witness(star, graph)) {
        r.verdict = CheckReport::Verdict::Fail;
        r.witnesses.push_back({w->a, w->b, w->c, w->d});
        r.detail = "M* differs from the graph of q^-";
        r.wall_ms = timer.ms();
        return r;
    }

    if (p && alpha.leq(beta)) {
        r.stats["p_graph_checked"] = 1;
        std::vector<int> ptab = term_table(a, *p, 3);
        auto pval = [&](int x, int y, int z) {
            return ptab[(static_cast<std::size_t>(x) * n + y) * n + z];
        };
        TupleSet4 pgraph(n);
        for (const Matrix2x2& m : rset.members()) {
            int qv4 = q_at(qtab, n, m);
            int pv3 = pval(m.a, m.b, m.d);  // q^-(a,b,d) vs p(a,b,d)
            if (qv4 != pv3) {
                r.verdict = CheckReport::Verdict::Fail;
                r.witnesses.push_back({m.a, m.b, m.d, qv4, pv3});
                r.detail = "q^- disagrees with p on R^-";
                r.wall_ms = timer.ms();
                return r;
            }
            pgraph.insert({m.a, m.b, pv3, m.d});
        }
        if (auto w = set_difference_witness(star, pgraph)) {
            r.verdict = CheckReport::Verdict::Fail;
            r.witnesses.push_back({w->a, w->b, w->c, w->d});
            r.detail = "M* differs from the graph of p";
        }
    } else {
        r.stats["p_graph_checked"] = 0;
        if (p) r.detail = "alpha not below beta; p-graph part not applicable";
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_cor_delta(const FiniteAlgebra& a, const Term& q, const Congruence& alpha,
                            const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "cor_delta";
    r.inputs = digest(a, alpha, beta, "q=" + q.to_string());
    TermVerdict qv = is_kiss_term(a, q);
    if (!qv.ok) return failed_precondition(std::move(r), "Kiss term", qv);
    if (!commutator_is_zero(a, alpha, beta)) {
        r = skipped(std::move(r), "[alpha,beta] != 0");
        r.wall_ms = timer.ms();
        return r;
    }
    auto qtab = q_table4(a, q);
    TupleSet4 rset = r_rel(a, alpha, beta);
    TupleSet4 star = mstar(a, alpha, beta);
    r.stats["R"] = rset.count();
    r.stats["Mstar"] = star.count();
    TupleSet4 fixed(a.size());
    for (const Matrix2x2& m : rset.members())
        if (q_at(qtab, a.size(), m) == m.c) fixed.insert(m);
    if (auto w = set_difference_witness(star, fixed)) {
        r.verdict = CheckReport::Verdict::Fail;
        r.witnesses.push_back({w->a, w->b, w->c, w->d});
        r.detail = "M* differs from the q-fixed-point set";
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_arbitrary(const FiniteAlgebra& a, const Congruence& alpha,
                            const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "arbitrary";
    r.inputs = digest(a, alpha, beta);
    Congruence gamma = tc_commutator(a, alpha, beta).result;
    TupleSet4 star = mstar(a, alpha, beta);
    r.stats["Mstar"] = star.count();
    r.stats["commutator_blocks"] = gamma.block_count();
    for (int x = 0; x < a.size() && r.passed(); ++x)
        for (int y = 0; y < a.size(); ++y) {
            if (!gamma.related(x, y)) continue;
            if (!star.contains(x, x, x, y)) {
                r.verdict = CheckReport::Verdict::Fail;
                r.witnesses.push_back({x, y});
                r.detail = "(a,b) in [alpha,beta] but [a a; a b] not in M*";
                break;
            }
        }
    if (r.passed() && !is_saturated(star, gamma)) {
        r.verdict = CheckReport::Verdict::Fail;
        r.detail = "M* is not [alpha,beta]-saturated";
        // find an explicit witness: a member and a gamma-shift that escapes
        for (const Matrix2x2& m : star.members()) {
            for (int v = 0; v < a.size(); ++v) {
                if (gamma.related(m.a, v) && !star.contains(v, m.b, m.c, m.d)) {
                    r.witnesses.push_back({m.a, m.b, m.c, m.d, 0, v});
                    return r;
                }
                if (gamma.related(m.b, v) && !star.contains(m.a, v, m.c, m.d)) {
                    r.witnesses.push_back({m.a, m.b, m.c, m.d, 1, v});
                    return r;
                }
                if (gamma.related(m.c, v) && !star.contains(m.a, m.b, v, m.d)) {
                    r.witnesses.push_back({m.a, m.b, m.c, m.d, 2, v});
                    return r;
                }
                if (gamma.related(m.d, v) && !star.contains(m.a, m.b, m.c, v)) {
                    r.witnesses.push_back({m.a, m.b, m.c, m.d, 3, v});
                    return r;
                }
            }
        }
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_quotient(const FiniteAlgebra& a, const Term& q, const Congruence& alpha,
                           const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "quotient";
    r.inputs = digest(a, alpha, beta, "q=" + q.to_string());
    TermVerdict qv = is_kiss_term(a, q);
    if (!qv.ok) return failed_precondition(std::move(r), "Kiss term", qv);

    const int n = a.size();
    auto qtab = q_table4(a, q);
    Congruence gamma = tc_commutator(a, alpha, beta).result;
    TupleSet4 rset = r_rel(a, alpha, beta);
    TupleSet4 star = mstar(a, alpha, beta);
    r.stats["R"] = rset.count();
    r.stats["Mstar"] = star.count();
    r.stats["commutator_blocks"] = gamma.block_count();

    // (1) M* = { m in R : q(m) ~ c mod gamma }
    TupleSet4 rhs1(n);
    for (const Matrix2x2& m : rset.members())
        if (gamma.related(q_at(qtab, n, m), m.c)) rhs1.insert(m);
    if (auto w = set_difference_witness(star, rhs1)) {
        r.verdict = CheckReport::Verdict::Fail;
        r.witnesses.push_back({w->a, w->b, w->c, w->d});
        r.detail = "part (1): M* differs from the mod-[alpha,beta] fixed-point set";
        r.wall_ms = timer.ms();
        return r;
    }

    // (2) [a q(m); b d] in M* for every m in R
    for (const Matrix2x2& m : rset.members()) {
        int cprime = q_at(qtab, n, m);
        if (!star.contains(m.a, m.b, cprime, m.d)) {
            r.verdict = CheckReport::Verdict::Fail;
            r.witnesses.push_back({m.a, m.b, m.c, m.d, cprime});
            r.detail = "part (2): [a q(a,b,c,d); b d] escapes M*";
            r.wall_ms = timer.ms();
            return r;
        }
    }

    // (3) gamma = { (a,b) : [a a; a b] in M* }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool in_gamma = gamma.related(x, y);
            bool in_star = star.contains(x, x, x, y);
            if (in_gamma != in_star) {
                r.verdict = CheckReport::Verdict::Fail;
                r.witnesses.push_back({x, y});
                r.detail = "part (3): element test disagrees with [alpha,beta]";
                r.wall_ms = timer.ms();
                return r;
            }
        }

    // Cross-check against the quotient algebra: bar(M*) = M*(bar alpha, bar beta).
    QuotientResult quo = quotient(a, gamma);
    const auto& bar = quo.bar;
    auto bar_congruence = [&](const Congruence& c) {
        std::vector<int> block_elem(quo.algebra.size(), -1);
        for (int e = 0; e < n; ++e)
            if (block_elem[bar[e]] < 0) block_elem[bar[e]] = e;
        std::vector<int> rep(quo.algebra.size());
        for (int b = 0; b < quo.algebra.size(); ++b) {
            rep[b] = b;
            for (int b2 = 0; b2 < b; ++b2)
                if (c.related(block_elem[b], block_elem[b2])) {
                    rep[b] = rep[b2];
                    break;
                }
        }
        return Congruence::from_map(std::move(rep));
    };
    TupleSet4 star_quo = mstar(quo.algebra, bar_congruence(alpha), bar_congruence(beta));
    TupleSet4 bar_star(quo.algebra.size());
    for (const Matrix2x2& m : star.members())
        bar_star.insert({bar[m.a], bar[m.b], bar[m.c], bar[m.d]});
    if (auto w = set_difference_witness(bar_star, star_quo)) {
        r.verdict = CheckReport::Verdict::Fail;
        r.witnesses.push_back({w->a, w->b, w->c, w->d});
        r.detail = "quotient cross-check: bar(M*) differs from M* in A/[alpha,beta]";
    }
    r.wall_ms = timer.ms();
    return r;
}

CheckReport check_sdmeet(const FiniteAlgebra& a, const Congruence& alpha,
                         const Congruence& beta) {
    Timer timer;
    CheckReport r;
    r.check = "sdmeet";
    r.inputs = digest(a, alpha, beta);
    TermVerdict zv = is_kiss_term(a, Term::var(2));
    if (!zv.ok) {
        r = skipped(std::move(r), "projection z is not a Kiss term on this algebra");
        r.wall_ms = timer.ms();
        return r;
    }
    TupleSet4 rset = r_rel(a, alpha, beta);
    TupleSet4 star = mstar(a, alpha, beta);
    r.stats["R"] = rset.count();
    r.stats["Mstar"] = star.count();
    if (auto w = set_difference_witness(rset, star)) {
        r.verdict = CheckReport::Verdict::Fail;
        r.witnesses.push_back({w->a, w->b, w->c, w->d});
        r.detail = "R differs from M*";
    }
    r.wall_ms = timer.ms();
    return r;
}

}  // namespace ualg
