#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <nlohmann/json.hpp>

#include "ualg/corpus.hpp"
#include "ualg/json_io.hpp"
#include "ualg/suite.hpp"

using namespace ualg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("ualg_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const json& j) {
        std::ofstream(path / name) << j.dump();
        return name;
    }
};

}  // namespace

TEST_CASE("block notation round-trips") {
    Congruence c = parse_block_notation("0,2|1,3", 4);
    CHECK(c == Congruence::from_blocks(4, {{0, 2}, {1, 3}}));
    CHECK(block_notation(c) == "0,2|1,3");
    CHECK(parse_block_notation("0|1|2", 3).is_equality());
    CHECK_THROWS_AS(parse_block_notation("0,x|1", 2), ParseError);
    CHECK_THROWS_AS(parse_block_notation("0|0,1", 2), BadPartition);
}

TEST_CASE("algebra and term json round-trips") {
    FiniteAlgebra s3 = corpus::symmetric_group_s3();
    FiniteAlgebra back = algebra_from_json(algebra_to_json(s3));
    CHECK(back.name() == s3.name());
    CHECK(back.size() == s3.size());
    CHECK(back.operations()[0].table == s3.operations()[0].table);

    Term p = corpus::s3_maltsev_term();
    CHECK(term_from_json(term_to_json(p)).to_string() == p.to_string());

    Congruence c = Congruence::from_blocks(4, {{0, 2}, {1, 3}});
    CHECK(congruence_from_json(congruence_to_json(c), 4) == c);

    CHECK_THROWS_AS(term_from_json(json::array({"nope"})), ParseError);
    CHECK_THROWS_AS(algebra_from_json(json{{"size", 2}}), ParseError);
}

TEST_CASE("tree and family json") {
    json tree_j = {{"root", 0},
                   {"vertices",
                    json::array({{{"id", 0}, {"color", "b"}, {"children", {1}}},
                                 {{"id", 1}, {"color", "g"}, {"children", json::array()}}})}};
    MaltsevTree tree = tree_from_json(tree_j);
    CHECK(tree.vertices.size() == 2);
    CHECK(tree.vertices.at(0).color == MaltsevTree::Color::B);

    json fam_j = {{"p", json::array({"x", 2})},
                  {"0", json::array({json::array({"x", 0}), json::array({"x", 0})})},
                  {"1", json::array({json::array({"x", 0}), json::array({"x", 0})})}};
    TermFamily fam = family_from_json(fam_j);
    CHECK(fam.pairs.size() == 2);
    CHECK(fam.p.to_string() == "x2");
}

TEST_CASE("suite runner executes configured checks") {
    TempDir tmp;
    tmp.write("z2.json", algebra_to_json(corpus::cyclic_group(2)));
    tmp.write("p.json", term_to_json(corpus::cyclic_maltsev_term(2)));
    json config = json::array(
        {{{"algebra", "z2.json"},
          {"terms", {{"p", "p.json"}}},
          {"checks", {"crucial", "main", "lemma62"}}}});
    auto reports = run_suite(config, tmp.path.string());
    // 3 checks x 4 congruence pairs (2-element lattice squared).
    CHECK(reports.size() == 12);
    for (const CheckReport& r : reports) CHECK(!r.failed());
    // Deterministic order and content.
    auto again = run_suite(config, tmp.path.string(), {.jobs = 4});
    REQUIRE(again.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i)
        CHECK(report_to_json(reports[i]) == report_to_json(again[i]));
}

TEST_CASE("suite runner respects congruence filters and inline terms") {
    TempDir tmp;
    tmp.write("sl.json", algebra_to_json(corpus::two_element_semilattice()));
    json config = json::array({{{"algebra", "sl.json"},
                                {"terms", {{"q", json::array({"x", 2})}}},
                                {"checks", {"lemma62", "sdmeet"}},
                                {"congruences", json::array({json::array({"0,1", "0,1"})})}}});
    auto reports = run_suite(config, tmp.path.string());
    CHECK(reports.size() == 2);
    for (const CheckReport& r : reports) CHECK(!r.failed());
}

TEST_CASE("bad configs raise config errors") {
    CHECK_THROWS_AS(run_suite(json::object(), "."), ConfigError);
    json missing = json::array({{{"algebra", "nope.json"}, {"checks", {"main"}}}});
    CHECK_THROWS_AS(run_suite(missing, "/nonexistent"), Error);
    TempDir tmp;
    tmp.write("z2.json", algebra_to_json(corpus::cyclic_group(2)));
    json unknown = json::array(
        {{{"algebra", "z2.json"}, {"checks", {"no_such_check"}}}});
    CHECK_THROWS_AS(run_suite(unknown, tmp.path.string()), ConfigError);
    json no_term = json::array({{{"algebra", "z2.json"}, {"checks", {"main"}}}});
    CHECK_THROWS_AS(run_suite(no_term, tmp.path.string()), ConfigError);
}

TEST_CASE("empty config yields no checks") {
    CHECK(run_suite(json::array(), ".").empty());
}
