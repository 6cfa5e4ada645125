#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracles.hpp"
#include "thickset/ks_engine.hpp"

using thickset::DecompositionMode;
using thickset::FinitePrimePoset;
using thickset::Int;
using thickset::KSDecomposition;
using thickset::ModelRef;
using thickset::ThickSupport;

namespace {

ModelRef catalog_model(const std::string& name) {
    for (const auto& entry : thickset::builtin_catalog())
        if (entry.name == name)
            return ModelRef::finite(entry.poset);
    throw std::runtime_error("missing catalog entry " + name);
}

ThickSupport spec_z_points(std::initializer_list<long> ps) {
    std::set<Int> set;
    for (long p : ps)
        set.emplace(p);
    return ThickSupport::closed_points(set);
}

// equality as unordered families of point sets
bool same_family(std::vector<ThickSupport> a, std::vector<ThickSupport> b) {
    auto key = [](const ThickSupport& s) { return s.points(); };
    std::sort(a.begin(), a.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    std::sort(b.begin(), b.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    return a == b;
}

void check_uniqueness_by_brute_force(const ModelRef& model, const DecompositionMode& mode) {
    for (const ThickSupport& s : thickset::enumerate_thick_supports(model, true)) {
        if (mode.is_punctured() && s.points() == std::set<std::string>{mode.cone_point})
            continue;  // the zero category: nothing to decompose
        auto found = oracles::brute_force_decompositions(s, mode);
        REQUIRE(found.size() == 1);
        CHECK(same_family(found.front(), thickset::ks_decompose(s, mode).components));
    }
}

}  // namespace

TEST_CASE("minimal primes") {
    CHECK(thickset::minimal_primes(ThickSupport::whole(ModelRef::spec_z())) ==
          std::vector<std::string>{"(0)"});
    CHECK(thickset::minimal_primes(spec_z_points({2, 3, 5})) ==
          std::vector<std::string>{"(2)", "(3)", "(5)"});

    ModelRef a1 = catalog_model("A1");
    ThickSupport s = ThickSupport::of_points(a1, {"p0", "p1", "m"});
    CHECK(thickset::minimal_primes(s, DecompositionMode::punctured("m")) ==
          std::vector<std::string>{"p0", "p1"});
    CHECK(thickset::minimal_primes(ThickSupport::whole(a1)) == std::vector<std::string>{"(h1)"});

    CHECK_THROWS_AS(thickset::minimal_primes(ThickSupport::closed_points({})),
                    thickset::EmptySupport);
    CHECK_THROWS_AS(thickset::minimal_primes(ThickSupport::of_points(a1, {"m"}),
                                             DecompositionMode::punctured("m")),
                    thickset::EmptySupport);
}

TEST_CASE("support graphs") {
    ModelRef a1 = catalog_model("A1");
    ThickSupport full = ThickSupport::whole(a1);
    auto g = thickset::support_graph(full, DecompositionMode::plain());
    CHECK(g.vertices == std::vector<std::string>{"(h1)"});
    CHECK(g.edges.empty());
    CHECK(g.components.size() == 1);

    ThickSupport s = ThickSupport::of_points(a1, {"p0", "p1", "m"});
    auto punctured = thickset::support_graph(s, DecompositionMode::punctured("m"));
    CHECK(punctured.vertices.size() == 2);
    CHECK(punctured.edges.empty());
    CHECK(punctured.components.size() == 2);

    auto plain = thickset::support_graph(s, DecompositionMode::plain());
    CHECK(plain.vertices.size() == 2);
    CHECK(plain.edges.size() == 1);  // closures meet in m
    CHECK(plain.components.size() == 1);
}

TEST_CASE("ks decomposition over Spec Z") {
    KSDecomposition d = thickset::ks_decompose(spec_z_points({2, 3, 5}));
    REQUIRE(d.components.size() == 3);
    CHECK(d.components[0] == spec_z_points({2}));
    CHECK(d.components[1] == spec_z_points({3}));
    CHECK(d.components[2] == spec_z_points({5}));

    ThickSupport whole = ThickSupport::whole(ModelRef::spec_z());
    KSDecomposition w = thickset::ks_decompose(whole);
    REQUIRE(w.components.size() == 1);
    CHECK(w.components[0].is_whole());
    CHECK(thickset::is_indecomposable(whole));

    // connected in the Zariski topology, decomposable all the same
    CHECK(thickset::ks_decompose(spec_z_points({2, 3})).components.size() == 2);
    CHECK_FALSE(thickset::is_indecomposable(spec_z_points({2, 3})));

    CHECK_THROWS_AS(thickset::ks_decompose(ThickSupport::closed_points({})),
                    thickset::EmptySupport);
}

TEST_CASE("ks decomposition of the A1 lattice") {
    ModelRef a1 = catalog_model("A1");
    ThickSupport s = ThickSupport::of_points(a1, {"p0", "p1", "m"});
    DecompositionMode punctured = DecompositionMode::punctured("m");

    KSDecomposition d = thickset::ks_decompose(s, punctured);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0] == ThickSupport::of_points(a1, {"p0", "m"}));
    CHECK(d.components[1] == ThickSupport::of_points(a1, {"p1", "m"}));

    CHECK(thickset::is_indecomposable(s, DecompositionMode::plain()));
    CHECK(thickset::is_indecomposable(ThickSupport::whole(a1), DecompositionMode::plain()));

    // the trivial subcategory decomposes into nothing
    ThickSupport trivial = ThickSupport::of_points(a1, {"m"});
    CHECK(thickset::ks_decompose(trivial, punctured).components.empty());
    CHECK_FALSE(thickset::is_indecomposable(trivial, punctured));

    // punctured mode needs the cone point on top
    CHECK_THROWS_AS(thickset::ks_decompose(s, DecompositionMode::punctured("p0")),
                    thickset::InvalidArgument);
}

TEST_CASE("joins") {
    ModelRef z = ModelRef::spec_z();
    CHECK(thickset::join_supports(z, {spec_z_points({2}), spec_z_points({3})}) ==
          spec_z_points({2, 3}));
    CHECK(thickset::join_supports(z, {}) == ThickSupport::closed_points({}));
    CHECK_THROWS_AS(thickset::join_supports(z, {spec_z_points({2}), spec_z_points({2, 3})}),
                    thickset::NotDisjoint);
    try {
        thickset::join_supports(z, {spec_z_points({2}), spec_z_points({2, 3})});
    } catch (const thickset::NotDisjoint& e) {
        CHECK(std::string(e.what()).find("(2)") != std::string::npos);
    }

    ModelRef a1 = catalog_model("A1");
    DecompositionMode punctured = DecompositionMode::punctured("m");
    ThickSupport p0m = ThickSupport::of_points(a1, {"p0", "m"});
    ThickSupport p1m = ThickSupport::of_points(a1, {"p1", "m"});
    CHECK(thickset::join_supports(a1, {p0m, p1m}, punctured) ==
          ThickSupport::of_points(a1, {"p0", "p1", "m"}));
    CHECK_THROWS_AS(
        thickset::join_supports(a1, {p0m, ThickSupport::of_points(a1, {"p0", "p1", "m"})},
                                punctured),
        thickset::NotDisjoint);
}

TEST_CASE("round trip join of a decomposition") {
    for (const char* name : {"A0", "A1", "artinian3", "pidfan3"}) {
        ModelRef model = catalog_model(name);
        for (const ThickSupport& s : thickset::enumerate_thick_supports(model, true)) {
            CHECK(thickset::join_supports(
                      model, thickset::ks_decompose(s).components) == s);
        }
    }
}

TEST_CASE("all_supports_indecomposable on the catalog") {
    CHECK(thickset::all_supports_indecomposable(catalog_model("A0"), DecompositionMode::plain()));
    CHECK(thickset::all_supports_indecomposable(catalog_model("A0"),
                                                DecompositionMode::punctured("(h0)")));
    CHECK(thickset::all_supports_indecomposable(catalog_model("A1"), DecompositionMode::plain()));
    CHECK_FALSE(thickset::all_supports_indecomposable(catalog_model("A1"),
                                                      DecompositionMode::punctured("m")));

    auto witness = thickset::find_decomposable_support(catalog_model("A1"),
                                                       DecompositionMode::punctured("m"));
    REQUIRE(witness.has_value());
    CHECK(witness->points() == std::set<std::string>{"m", "p0", "p1"});

    CHECK_FALSE(
        thickset::all_supports_indecomposable(catalog_model("artinian3"),
                                              DecompositionMode::plain()));
    CHECK_FALSE(
        thickset::all_supports_indecomposable(catalog_model("pidfan3"),
                                              DecompositionMode::plain()));
}

TEST_CASE("plain-mode law on random posets") {
    gen::Rng rng(0xDEC0);
    for (int trial = 0; trial < 60; ++trial) {
        auto poset = std::make_shared<FinitePrimePoset>(gen::random_poset(rng, 1 + rng() % 5));
        ModelRef model = ModelRef::finite(poset);
        // all_supports_indecomposable cross-checks the greatest-element law
        // internally and throws on disagreement
        CHECK(thickset::all_supports_indecomposable(model, DecompositionMode::plain()) ==
              poset->greatest().has_value());
    }
}

TEST_CASE("uniqueness against brute-force partition search") {
    check_uniqueness_by_brute_force(catalog_model("A0"), DecompositionMode::plain());
    check_uniqueness_by_brute_force(catalog_model("A0"), DecompositionMode::punctured("(h0)"));
    check_uniqueness_by_brute_force(catalog_model("A1"), DecompositionMode::plain());
    check_uniqueness_by_brute_force(catalog_model("A1"), DecompositionMode::punctured("m"));
    check_uniqueness_by_brute_force(catalog_model("artinian3"), DecompositionMode::plain());
    check_uniqueness_by_brute_force(catalog_model("pidfan3"), DecompositionMode::plain());

    gen::Rng rng(0xDEC1);
    for (int trial = 0; trial < 10; ++trial) {
        auto poset = std::make_shared<FinitePrimePoset>(gen::random_poset(rng, 5));
        check_uniqueness_by_brute_force(ModelRef::finite(poset), DecompositionMode::plain());
    }
}

TEST_CASE("components are indecomposable and maximal") {
    gen::Rng rng(0xDEC2);
    for (int trial = 0; trial < 20; ++trial) {
        auto poset = std::make_shared<FinitePrimePoset>(gen::random_poset(rng, 6));
        ModelRef model = ModelRef::finite(poset);
        for (const ThickSupport& s : thickset::enumerate_thick_supports(model, true)) {
            for (const ThickSupport& piece : thickset::ks_decompose(s).components) {
                CHECK(thickset::is_indecomposable(piece));
                CHECK(thickset::support_graph(piece, DecompositionMode::plain())
                          .components.size() == 1);
            }
        }
    }
}

TEST_CASE("dot export") {
    ModelRef a1 = catalog_model("A1");
    ThickSupport s = ThickSupport::of_points(a1, {"p0", "p1", "m"});
    std::string dot = thickset::to_dot(thickset::support_graph(s, DecompositionMode::punctured("m")));
    CHECK(dot.find("subgraph cluster_0") != std::string::npos);
    CHECK(dot.find("subgraph cluster_1") != std::string::npos);
    CHECK(dot.find("\"p0\";") != std::string::npos);
    CHECK(dot.find("--") == std::string::npos);

    std::string joined = thickset::to_dot(thickset::support_graph(s, DecompositionMode::plain()));
    CHECK(joined.find("\"p0\" -- \"p1\";") != std::string::npos);
}
