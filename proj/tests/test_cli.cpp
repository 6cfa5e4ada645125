#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "thickset/cli.hpp"
#include "thickset/json_io.hpp"
#include "thickset/k_theory.hpp"

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = thickset::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data_path(const std::string& name) {
    return std::string(THICKSET_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void check_golden(const RunResult& result, const std::string& golden_name) {
    CHECK(result.status == 0);
    CHECK(result.out == slurp(data_path("golden/" + golden_name)));
}

}  // namespace

TEST_CASE("decompose the A1 example") {
    auto result = run({"decompose", "--model", "A1", "--mode", "punctured", "--support",
                       R"(["p0","p1","m"])"});
    check_golden(result, "decompose_a1_punctured.json");

    auto parsed = thickset::io::json::parse(result.out);
    CHECK(parsed.at("components").size() == 2);
}

TEST_CASE("decompose emits DOT graphs") {
    auto result = run({"decompose", "--model", "A1", "--mode", "punctured", "--support",
                       R"(["p0","p1","m"])", "--format", "dot"});
    check_golden(result, "decompose_a1_punctured.dot");
}

TEST_CASE("decompose over Spec Z") {
    auto result = run({"decompose", "--model", "Z", "--support", "[2,3,5]"});
    CHECK(result.status == 0);
    auto parsed = thickset::io::json::parse(result.out);
    CHECK(parsed.at("components").size() == 3);
}

TEST_CASE("splitting a Moore complex from a file") {
    auto result = run({"complex", "split", "--input", data_path("m6.json")});
    check_golden(result, "split_m6.json");

    auto parsed = thickset::io::json::parse(result.out);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].at("primes") == thickset::io::json::array({2}));
    CHECK(parsed[1].at("primes") == thickset::io::json::array({3}));
}

TEST_CASE("enumerate the A1 lattice") {
    auto result = run({"enumerate", "--model", "A1", "--nonempty"});
    check_golden(result, "enumerate_a1_nonempty.json");
    auto parsed = thickset::io::json::parse(result.out);
    CHECK(parsed.at("supports").size() == 5);

    auto table = run({"enumerate", "--model", "A1", "--nonempty", "--format", "table"});
    check_golden(table, "enumerate_a1_nonempty.txt");
}

TEST_CASE("complex pipelines") {
    auto homology = run({"complex", "homology", "--input", data_path("m6.json")});
    check_golden(homology, "homology_m6.json");

    auto support = run({"complex", "support", "--input", data_path("m6.json")});
    CHECK(support.status == 0);
    CHECK(thickset::io::json::parse(support.out) ==
          thickset::io::json::parse(R"({"primes": [2, 3]})"));

    auto dual = run({"complex", "dual", "--input", data_path("m6.json")});
    CHECK(dual.status == 0);
    auto c = thickset::io::complex_from_json(thickset::io::json::parse(dual.out));
    CHECK(c.rank(-1) == 1);
    CHECK(c.rank(0) == 1);

    auto k0 = run({"complex", "k0", "--input", data_path("m6.json"), "--support", "[2,3]"});
    check_golden(k0, "k0_m6.json");
}

TEST_CASE("spectra pipelines") {
    auto decomposed =
        run({"spectra", "decompose", "--input", R"({"heights": {"2": 3, "5": 1}})"});
    check_golden(decomposed, "spectra_decompose.json");

    auto meet = run({"spectra", "intersect", "--input",
                     R"({"a": {"heights": {"2": 1}}, "b": {"heights": {"3": 1}}})"});
    CHECK(meet.status == 0);
    CHECK(thickset::io::json::parse(meet.out) ==
          thickset::io::json::parse(R"({"heights": {}})"));

    auto contains = run({"spectra", "contains", "--input",
                         R"({"a": {"whole": true}, "b": {"heights": {"2": 4}}})"});
    CHECK(contains.status == 0);
    CHECK(thickset::io::json::parse(contains.out).at("contains") == true);
}

TEST_CASE("catalog list") {
#if defined(_WIN32)
#else
    unsetenv("THICKSET_CATALOG_DIR");
#endif
    auto result = run({"catalog", "list"});
    check_golden(result, "catalog_list.json");
}

TEST_CASE("user catalog directory") {
    setenv("THICKSET_CATALOG_DIR", data_path("user_catalog").c_str(), 1);
    auto result = run({"catalog", "list"});
    CHECK(result.status == 0);
    CHECK(result.out.find("\"chain3\"") != std::string::npos);

    auto decomposed = run({"decompose", "--model", "chain3", "--support", R"(["a","b","c"])"});
    CHECK(decomposed.status == 0);
    unsetenv("THICKSET_CATALOG_DIR");
}

TEST_CASE("verify accepts what decompose emits") {
    auto decomposed = run({"decompose", "--model", "A1", "--mode", "punctured", "--support",
                           R"(["p0","p1","m"])"});
    REQUIRE(decomposed.status == 0);
    auto verified = run({"verify", "--model", "A1", "--input", decomposed.out});
    CHECK(verified.status == 0);
    CHECK(thickset::io::json::parse(verified.out).at("ok") == true);

    // tampered components must be rejected
    auto payload = thickset::io::json::parse(decomposed.out);
    payload["components"] = thickset::io::json::array(
        {thickset::io::json::parse(R"({"points": ["m","p0","p1"]})")});
    auto rejected = run({"verify", "--model", "A1", "--input", payload.dump()});
    CHECK(rejected.status == 1);
    CHECK(thickset::io::json::parse(rejected.out).at("ok") == false);
}

TEST_CASE("custom poset files work through --poset") {
    auto result = run({"decompose", "--poset", data_path("user_catalog/chain3.json"), "--mode",
                       "punctured", "--support", R"(["b","c"])"});
    CHECK(result.status == 0);
    auto parsed = thickset::io::json::parse(result.out);
    CHECK(parsed.at("components").size() == 1);

    // a declared cone point must sit on top of the poset
    auto bad = thickset::io::json::parse(
        R"json({"elements": ["a", "b"], "relations": [], "cone_point": "a"})json");
    CHECK_THROWS_AS(thickset::io::poset_from_json(bad), thickset::io::JsonFormatError);
}

TEST_CASE("json round trips") {
    gen::Rng rng(0xCA11);
    for (int trial = 0; trial < 25; ++trial) {
        auto c = gen::random_complex_with_profile(
            rng, gen::random_profile(rng, {2, 3, 5}, -2, 2, true));
        CHECK(thickset::io::complex_from_json(thickset::io::complex_to_json(c)) == c);
    }

    thickset::ModelRef z = thickset::ModelRef::spec_z();
    for (const auto& s :
         {thickset::ThickSupport::whole(z),
          thickset::ThickSupport::closed_points({thickset::Int(2), thickset::Int(11)}),
          thickset::ThickSupport::closed_points({})}) {
        CHECK(thickset::io::support_from_json(z, thickset::io::support_to_json(s)) == s);
    }

    for (const auto& t :
         {thickset::SpectraThick::whole(), thickset::SpectraThick::zero(),
          thickset::SpectraThick::torsion({{2, 3}, {7, 1}})}) {
        CHECK(thickset::io::spectra_from_json(thickset::io::spectra_to_json(t)) == t);
    }
}

TEST_CASE("integers beyond 64 bits travel as decimal strings") {
    thickset::Int big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 100);
    auto j = thickset::io::int_to_json(big);
    CHECK(j.is_string());
    CHECK(thickset::io::int_from_json(j) == big);

    thickset::IntMatrix m(1, 1);
    m(0, 0) = big;
    CHECK(thickset::io::matrix_from_json(thickset::io::matrix_to_json(m)) == m);

    // a Moore-style complex at 2^100 still supports and splits at (2)
    thickset::PerfectComplexZ c({{0, 1}, {1, 1}}, {{1, m}});
    CHECK(thickset::support(c) ==
          thickset::ThickSupport::closed_points({thickset::Int(2)}));
    auto k = thickset::k0_class(c, thickset::support(c));
    CHECK(k.torsion_lengths.at(2) == 100);
}

TEST_CASE("help and usage") {
    auto help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("Usage") != std::string::npos);

    auto bare = run({});
    CHECK(bare.status == 2);
}

TEST_CASE("exit codes") {
    // malformed JSON: 2, with a position in the message
    auto bad_json = run({"decompose", "--model", "A1", "--support", "[\"p0\""});
    CHECK(bad_json.status == 2);
    CHECK(bad_json.err.find("input error") != std::string::npos);

    // domain errors: 1, carrying the error name
    auto not_closed = run({"decompose", "--model", "A1", "--support", R"(["p0"])"});
    CHECK(not_closed.status == 1);
    CHECK(not_closed.err.find("NotUpClosed") != std::string::npos);

    auto unknown_model = run({"decompose", "--model", "nope", "--support", "[2]"});
    CHECK(unknown_model.status == 1);
    CHECK(unknown_model.err.find("UnknownCatalogEntry") != std::string::npos);

    auto not_a_complex = run({"complex", "homology", "--input",
                              R"({"ranks": {"0":1,"1":1,"2":1},
                                  "differentials": {"1": [[2]], "2": [[3]]}})"});
    CHECK(not_a_complex.status == 1);
    CHECK(not_a_complex.err.find("NotAComplex") != std::string::npos);

    auto missing_file = run({"complex", "homology", "--input", data_path("no_such.json")});
    CHECK(missing_file.status == 2);

    // usage problems: 2
    auto no_support = run({"decompose", "--model", "A1"});
    CHECK(no_support.status == 2);
    auto both_models = run({"enumerate", "--model", "A1", "--poset", data_path("m6.json")});
    CHECK(both_models.status == 2);
}
