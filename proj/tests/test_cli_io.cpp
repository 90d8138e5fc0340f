#include <catch2/catch_amalgamated.hpp>

#include "hwb/json_io.hpp"
#include "hwb/selftest.hpp"

using namespace hwb;

TEST_CASE("algebra JSON round trip preserves the structure constants") {
    for (auto& a : {truncated_poly(Field::make(2, 1), {4}),
                    truncated_poly(Field::make(2, 2), {2}), finite_field_algebra(3, 2)}) {
        json j = algebra_to_json(a);
        Algebra b = algebra_from_json(j);
        CHECK(b.dim == a.dim);
        CHECK(b.unit == a.unit);
        CHECK(b.mul == a.mul);
        CHECK(b.name == a.name);
        CHECK(*b.field == *a.field);
    }
}

TEST_CASE("scalar entries are accepted over the prime field only") {
    json j = algebra_to_json(truncated_poly(Field::make(2, 1), {2}));
    j["unit"] = json::array({1, 0});  // bare ints instead of coordinate vectors
    CHECK_NOTHROW(algebra_from_json(j));
    json j4 = algebra_to_json(truncated_poly(Field::make(2, 2), {2}));
    j4["unit"][0] = 1;
    CHECK_THROWS_AS(algebra_from_json(j4), ValidationError);
}

TEST_CASE("malformed algebra specs are rejected with diagnostics") {
    json good = algebra_to_json(truncated_poly(Field::make(2, 1), {2}));
    SECTION("missing field") {
        json j = good;
        j.erase("mul");
        CHECK_THROWS_AS(algebra_from_json(j), ValidationError);
    }
    SECTION("coordinate out of range") {
        json j = good;
        j["mul"][1][1][0] = 5;
        CHECK_THROWS_AS(algebra_from_json(j), ValidationError);
    }
    SECTION("table violating associativity or the unit law") {
        json j = good;
        j["mul"][0][1] = json::array({1, 1});  // 1 * x != x
        CHECK_THROWS_AS(algebra_from_json(j), ValidationError);
    }
    SECTION("ragged mul table") {
        json j = good;
        j["mul"][0].erase(1);
        CHECK_THROWS_AS(algebra_from_json(j), ValidationError);
    }
}

TEST_CASE("module JSON round trip validates the action") {
    Algebra a = truncated_poly(Field::make(2, 1), {2});
    LeftModule m = regular_module(a);
    json j = module_to_json(a, m);
    LeftModule m2 = module_from_json(a, j);
    CHECK(m2.dim == m.dim);
    for (std::size_t i = 0; i < a.dim; ++i) CHECK(m2.act[i] == m.act[i]);
    j["act"][0][0][0] = 0;  // unit no longer acts as identity
    CHECK_THROWS_AS(module_from_json(a, j), ValidationError);
}

TEST_CASE("cosimplicial JSON round trip re-validates the identities") {
    CosimplicialSet y = simplex_cosimplicial(1, 3);
    json j = cosimplicial_to_json(y);
    CosimplicialSet z = cosimplicial_from_json(j);
    CHECK(z.sizes == y.sizes);
    CHECK(z.coface == y.coface);
    j["coface"][2][0][1] = 0;
    CHECK_THROWS_AS(cosimplicial_from_json(j), ValidationError);
}

TEST_CASE("homology report JSON: stable output omits timings") {
    Algebra a = truncated_poly(Field::make(2, 1), {2});
    HomologyReport rep = hh_homology(a, phi_twist(a, regular_module(a), 2), 4);
    json stable = homology_report_to_json(rep, true);
    json timed = homology_report_to_json(rep, false);
    CHECK(!stable.contains("ms_per_degree"));
    CHECK(timed.contains("ms_per_degree"));
    CHECK(stable["degrees"][0]["dim"] == 1);
    CHECK(stable["n"] == 2);
    // the JSON numbers equal the library outputs exactly
    for (std::size_t i = 0; i < rep.dims.size(); ++i)
        CHECK(stable["degrees"][i]["dim"].get<std::size_t>() == rep.dims[i]);
}

TEST_CASE("selftest fingerprint is reproducible for a fixed seed") {
    CHECK(selftest_fingerprint(7) == selftest_fingerprint(7));
    CHECK(selftest_fingerprint(7) != selftest_fingerprint(8));  // seed actually matters
}

TEST_CASE("selftest subset runner honours the criterion filter") {
    SelftestReport rep = run_selftest(7, {2, 4});
    REQUIRE(rep.results.size() == 2);
    CHECK(rep.results[0].id == 2);
    CHECK(rep.results[1].id == 4);
    CHECK(rep.pass);
    json j = selftest_to_json(rep, 7);
    CHECK(j["criteria"].size() == 2);
    CHECK(j["pass"] == true);
}
