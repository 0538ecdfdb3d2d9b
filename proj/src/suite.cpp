#include "ualg/suite.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "ualg/json_io.hpp"

namespace ualg {

namespace fs = std::filesystem;

Congruence parse_block_notation(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks;
    std::stringstream blocks_in(text);
    std::string block;
    while (std::getline(blocks_in, block, '|')) {
        std::vector<int> elems;
        std::stringstream elems_in(block);
        std::string elem;
        while (std::getline(elems_in, elem, ',')) {
            try {
                elems.push_back(std::stoi(elem));
            } catch (const std::exception&) {
                throw ParseError("bad block notation: " + text);
            }
        }
        blocks.push_back(std::move(elems));
    }
    return Congruence::from_blocks(n, blocks);
}

std::string block_notation(const Congruence& c) {
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

namespace {

Term load_term(const json& value, const std::string& base_dir) {
    if (value.is_string())
        return term_from_json(
            load_json_file((fs::path(base_dir) / value.get<std::string>()).string()));
    return term_from_json(value);
}

struct EntryContext {
    FiniteAlgebra algebra;
    std::optional<Term> p;
    std::optional<Term> q;
    std::optional<Term> q2;
    std::vector<std::string> checks;
    std::vector<std::pair<Congruence, Congruence>> pairs;
};

EntryContext expand_entry(const json& entry, const std::string& base_dir) {
    if (!entry.contains("algebra")) throw ConfigError("suite entry without \"algebra\"");
    std::string alg_path =
        (fs::path(base_dir) / entry.at("algebra").get<std::string>()).string();
    EntryContext ctx{algebra_from_json(load_json_file(alg_path)), {}, {}, {}, {}, {}};

    if (entry.contains("terms")) {
        const json& terms = entry.at("terms");
        if (terms.contains("p")) ctx.p = load_term(terms.at("p"), base_dir);
        if (terms.contains("q")) ctx.q = load_term(terms.at("q"), base_dir);
        if (terms.contains("q2")) ctx.q2 = load_term(terms.at("q2"), base_dir);
    }
    if (!ctx.q && ctx.p) ctx.q = lipparini(*ctx.p);
    if (!ctx.q2) {
        if (entry.contains("terms") && entry.at("terms").contains("q") && ctx.p)
            ctx.q2 = lipparini(*ctx.p);  // a second, independently built Kiss term
        else
            ctx.q2 = ctx.q;
    }

    if (!entry.contains("checks")) throw ConfigError("suite entry without \"checks\"");
    ctx.checks = entry.at("checks").get<std::vector<std::string>>();

    if (entry.contains("congruences")) {
        for (const auto& pair : entry.at("congruences")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ConfigError("congruence filter entries must be [alpha, beta]");
            ctx.pairs.emplace_back(
                parse_block_notation(pair.at(0).get<std::string>(), ctx.algebra.size()),
                parse_block_notation(pair.at(1).get<std::string>(), ctx.algebra.size()));
        }
    } else {
        auto lattice = con_lattice(ctx.algebra);
        for (const Congruence& alpha : lattice)
            for (const Congruence& beta : lattice) ctx.pairs.emplace_back(alpha, beta);
    }
    return ctx;
}

CheckReport run_one(const EntryContext& ctx, const std::string& check,
                    const Congruence& alpha, const Congruence& beta) {
    const FiniteAlgebra& a = ctx.algebra;
    auto need_q = [&]() -> const Term& {
        if (!ctx.q) throw ConfigError("check '" + check + "' needs a Kiss term (q or p)");
        return *ctx.q;
    };
    if (check == "crucial") {
        if (!ctx.p) throw ConfigError("check 'crucial' needs a difference term p");
        return check_crucial(a, *ctx.p, alpha, beta);
    }
    if (check == "main") return check_main(a, need_q(), alpha, beta);
    if (check == "lemma62") return check_lemma62(a, need_q(), alpha, beta);
    if (check == "indep") return check_indep_lemma(a, need_q(), alpha, beta);
    if (check == "kiss_agreement")
        return check_kiss_agreement(a, need_q(), ctx.q2 ? *ctx.q2 : need_q(), alpha, beta);
    if (check == "qminus_graph") return check_qminus_graph(a, need_q(), ctx.p, alpha, beta);
    if (check == "cor_delta") return check_cor_delta(a, need_q(), alpha, beta);
    if (check == "arbitrary") return check_arbitrary(a, alpha, beta);
    if (check == "quotient") return check_quotient(a, need_q(), alpha, beta);
    if (check == "sdmeet") return check_sdmeet(a, alpha, beta);
    throw ConfigError("unknown check name: " + check);
}

}  // namespace

std::vector<CheckReport> run_suite(const nlohmann::json& config, const std::string& base_dir,
                                   const SuiteOptions& opts) {
    if (!config.is_array()) throw ConfigError("suite config must be a JSON array");
    struct Job {
        const EntryContext* ctx;
        std::string check;
        const Congruence* alpha;
        const Congruence* beta;
    };
    std::vector<EntryContext> contexts;
    contexts.reserve(config.size());
    for (const auto& entry : config) contexts.push_back(expand_entry(entry, base_dir));

    std::vector<Job> jobs;
    for (const EntryContext& ctx : contexts)
        for (const std::string& check : ctx.checks)
            for (const auto& [alpha, beta] : ctx.pairs)
                jobs.push_back({&ctx, check, &alpha, &beta});

    std::vector<CheckReport> reports(jobs.size());
    const int nthreads = std::max(1, opts.jobs);
    if (nthreads == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            reports[i] = run_one(*jobs[i].ctx, jobs[i].check, *jobs[i].alpha, *jobs[i].beta);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                reports[i] =
                    run_one(*jobs[i].ctx, jobs[i].check, *jobs[i].alpha, *jobs[i].beta);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    // Report order is already the deterministic job order (algebra, check,
    // alpha, beta); keep it stable regardless of thread interleaving.
    return reports;
}

}  // namespace ualg
