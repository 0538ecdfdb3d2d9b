#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "ualg/corpus.hpp"
#include "ualg/json_io.hpp"
#include "ualg/suite.hpp"

using namespace ualg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceBound = 3;

FiniteAlgebra load_algebra(const std::string& path) {
    return algebra_from_json(load_json_file(path));
}

// Congruences are accepted either as block notation ("0,2|1,3") or as a
// lattice index from `con` output.
Congruence parse_congruence(const FiniteAlgebra& a, const std::string& text) {
    if (text.find('|') == std::string::npos && text.find(',') == std::string::npos) {
        try {
            std::size_t pos = 0;
            int idx = std::stoi(text, &pos);
            if (pos == text.size()) {
                auto lattice = con_lattice(a);
                if (idx < 0 || idx >= static_cast<int>(lattice.size()))
                    throw ConfigError("lattice index out of range: " + text);
                return lattice[static_cast<std::size_t>(idx)];
            }
        } catch (const std::invalid_argument&) {
            // falls through to block notation
        }
    }
    return parse_block_notation(text, a.size());
}

int cmd_con(const std::string& path, bool as_json) {
    FiniteAlgebra a = load_algebra(path);
    auto lattice = con_lattice(a);
    if (as_json) {
        json out = json::array();
        for (const Congruence& c : lattice) out.push_back(congruence_to_json(c));
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }
    std::cout << a.name() << ": " << lattice.size() << " congruences\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        std::cout << "#" << i << "  " << block_notation(lattice[i]);
        if (lattice[i].is_equality()) std::cout << "   (equality)";
        if (lattice[i].is_full()) std::cout << "   (full)";
        std::cout << "\n";
    }
    std::cout << "covers:";
    bool any = false;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t j = 0; j < lattice.size(); ++j) {
            if (i == j || !lattice[i].leq(lattice[j])) continue;
            bool cover = true;
            for (std::size_t k = 0; k < lattice.size() && cover; ++k)
                if (k != i && k != j && lattice[i].leq(lattice[k]) &&
                    lattice[k].leq(lattice[j]))
                    cover = false;
            if (cover) {
                std::cout << (any ? ", " : " ") << "#" << i << " -< #" << j;
                any = true;
            }
        }
    std::cout << (any ? "\n" : " none\n");
    return kExitPass;
}

int cmd_commutator(const std::string& path, const std::string& alpha_s,
                   const std::string& beta_s, bool hyper, bool as_json) {
    FiniteAlgebra a = load_algebra(path);
    Congruence alpha = parse_congruence(a, alpha_s);
    Congruence beta = parse_congruence(a, beta_s);
    CommutatorTrace trace = tc_commutator(a, alpha, beta);
    json out = trace_to_json(trace, alpha, beta);
    if (hyper) out["hypercommutator"] = hypercommutator(a, alpha, beta).blocks();
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }
    std::cout << "[" << block_notation(alpha) << ", " << block_notation(beta)
              << "] on " << a.name() << "\n";
    for (std::size_t i = 0; i < trace.xsets.size(); ++i) {
        std::cout << "  stage " << i + 1 << ": |X| = " << trace.xsets[i].size()
                  << ", delta = " << block_notation(trace.deltas[i + 1]) << "\n";
    }
    std::cout << "commutator = " << block_notation(trace.result) << "\n";
    if (hyper)
        std::cout << "hypercommutator = "
                  << block_notation(hypercommutator(a, alpha, beta)) << "\n";
    return kExitPass;
}

int cmd_mstar(const std::string& path, const std::string& alpha_s, const std::string& beta_s,
              bool stages, bool as_json) {
    FiniteAlgebra a = load_algebra(path);
    Congruence alpha = parse_congruence(a, alpha_s);
    Congruence beta = parse_congruence(a, beta_s);
    MStarTrace trace = mstar_staged(a, alpha, beta);
    TupleSet4 r = r_rel(a, alpha, beta);
    json summary = {{"count", trace.result.count()},
                    {"isSubuniverse", is_subuniverse4(a, trace.result)},
                    {"equalsR", trace.result == r}};
    if (as_json) {
        json out = {{"tuples", tupleset_to_json(trace.result)}, {"summary", summary}};
        if (stages) {
            json sj = json::array();
            for (const TupleSet4& s : trace.stages) sj.push_back(s.count());
            out["stageCounts"] = sj;
        }
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }
    std::cout << "M*(" << block_notation(alpha) << ", " << block_notation(beta) << ") on "
              << a.name() << ": " << trace.result.count() << " tuples\n";
    std::cout << "summary: " << summary.dump() << "\n";
    if (stages) {
        std::cout << "stages (" << trace.stage_count << "):";
        for (const TupleSet4& s : trace.stages) std::cout << " " << s.count();
        std::cout << "\n";
    }
    for (const Matrix2x2& m : trace.result.members())
        std::cout << "  [" << m.a << " " << m.c << "; " << m.b << " " << m.d << "]\n";
    return kExitPass;
}

int cmd_check_term(const std::string& kind, const std::string& alg_path,
                   const std::vector<std::string>& files, bool variety_level) {
    FiniteAlgebra a = load_algebra(alg_path);
    VerifyOptions opts;
    opts.check_variety_level = variety_level;
    if (kind == "difference" || kind == "kiss") {
        if (files.size() != 1) throw ConfigError(kind + " check takes one term file");
        Term t = term_from_json(load_json_file(files[0]));
        TermVerdict v = kind == "difference" ? is_difference_term(a, t, opts)
                                             : is_kiss_term(a, t, opts);
        if (v.ok) {
            std::cout << "pass: " << t.to_string() << " is a " << kind << " term for "
                      << a.name() << "\n";
            return kExitPass;
        }
        std::cout << "fail: condition " << v.failed_condition << " (" << v.detail
                  << "), witness " << json(v.witness).dump() << "\n";
        return kExitCheckFailure;
    }
    if (kind == "maltsev-tree") {
        if (files.size() != 2)
            throw ConfigError("maltsev-tree check takes a tree file and a family file");
        MaltsevTree tree = tree_from_json(load_json_file(files[0]));
        TermFamily fam = family_from_json(load_json_file(files[1]));
        TreeVerdict v = verify_maltsev_tree(a, tree, fam);
        if (v.ok) {
            std::cout << "pass: all tree identities hold on " << a.name() << "\n";
            return kExitPass;
        }
        for (const AxiomFailure& f : v.failures)
            std::cout << "fail: " << f.axiom << " at vertex " << f.vertex << ", witness "
                      << json(f.witness).dump() << "\n";
        return kExitCheckFailure;
    }
    throw ConfigError("unknown term kind: " + kind);
}

int cmd_verify(const std::string& config_path, int jobs, bool as_json) {
    json config = load_json_file(config_path);
    std::string base_dir = ".";
    if (auto slash = config_path.find_last_of('/'); slash != std::string::npos)
        base_dir = config_path.substr(0, slash);
    SuiteOptions opts;
    opts.jobs = jobs;
    std::vector<CheckReport> reports = run_suite(config, base_dir, opts);

    int passed = 0, failures = 0, skips = 0;
    json out = json::array();
    for (const CheckReport& r : reports) {
        out.push_back(report_to_json(r));
        if (r.failed())
            ++failures;
        else if (r.verdict == CheckReport::Verdict::Skipped)
            ++skips;
        else
            ++passed;
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckReport& r : reports) {
            const char* verdict = r.failed() ? "FAIL"
                                 : r.verdict == CheckReport::Verdict::Skipped ? "skip"
                                                                              : "pass";
            std::cout << verdict << "  " << r.check << "  [" << r.inputs << "]";
            if (r.failed()) std::cout << "  " << r.detail;
            if (!r.skip_reason.empty()) std::cout << "  (" << r.skip_reason << ")";
            std::cout << "\n";
        }
        if (reports.empty())
            std::cout << "no checks\n";
        else
            std::cout << passed << " passed, " << failures << " failed, " << skips
                      << " skipped\n";
    }
    return failures == 0 ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite universal-algebra commutator laboratory"};
    app.require_subcommand(1);

    std::string alg_path, alpha_s, beta_s, config_path, kind, term_path;
    std::vector<std::string> term_files;
    bool as_json = false, hyper = false, stages = false, variety_level = false;
    int jobs = 1, max_depth = 2;

    auto* con = app.add_subcommand("con", "print the congruence lattice");
    con->add_option("algebra", alg_path)->required();
    con->add_flag("--json", as_json);

    auto* comm = app.add_subcommand("commutator", "term-condition commutator trace");
    comm->add_option("algebra", alg_path)->required();
    comm->add_option("alpha", alpha_s)->required();
    comm->add_option("beta", beta_s)->required();
    comm->add_flag("--hyper", hyper);
    comm->add_flag("--json", as_json);

    auto* ms = app.add_subcommand("mstar", "gluing closure M*(alpha,beta)");
    ms->add_option("algebra", alg_path)->required();
    ms->add_option("alpha", alpha_s)->required();
    ms->add_option("beta", beta_s)->required();
    ms->add_flag("--stages", stages);
    ms->add_flag("--json", as_json);

    auto* ct = app.add_subcommand("check-term", "verify a difference/Kiss term or tree witness");
    ct->add_option("kind", kind, "difference | kiss | maltsev-tree")->required();
    ct->add_option("algebra", alg_path)->required();
    ct->add_option("files", term_files, "term file (or tree + family files)")->required();
    ct->add_flag("--variety-level", variety_level);

    auto* lip = app.add_subcommand("lipparini", "build the 4-ary term from a ternary one");
    lip->add_option("term", term_path)->required();

    auto* st = app.add_subcommand("search-term", "bounded-depth difference term search");
    st->add_option("algebra", alg_path)->required();
    st->add_option("--max-depth", max_depth);

    auto* ver = app.add_subcommand("verify", "run a suite config");
    ver->add_option("config", config_path)->required();
    ver->add_option("--jobs", jobs);
    ver->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (con->parsed()) return cmd_con(alg_path, as_json);
        if (comm->parsed()) return cmd_commutator(alg_path, alpha_s, beta_s, hyper, as_json);
        if (ms->parsed()) return cmd_mstar(alg_path, alpha_s, beta_s, stages, as_json);
        if (ct->parsed()) return cmd_check_term(kind, alg_path, term_files, variety_level);
        if (lip->parsed()) {
            Term p = term_from_json(load_json_file(term_path));
            std::cout << term_to_json(lipparini(p)).dump() << "\n";
            return kExitPass;
        }
        if (st->parsed()) {
            FiniteAlgebra a = load_algebra(alg_path);
            auto found = search_difference_term(a, max_depth);
            if (found) {
                std::cout << term_to_json(*found).dump() << "\n";
                return kExitPass;
            }
            std::cout << "no difference term up to depth " << max_depth << "\n";
            return kExitCheckFailure;
        }
        if (ver->parsed()) return cmd_verify(config_path, jobs, as_json);
    } catch (const SizeBoundExceeded& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitResourceBound;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
