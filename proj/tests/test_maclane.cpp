#include <catch2/catch_amalgamated.hpp>

#include "hwb/maclane.hpp"

using namespace hwb;

TEST_CASE("finite-field coefficients: alternating pattern") {
    for (std::size_t i = 0; i <= 9; ++i) {
        CHECK(hml_fp(i, 3) == ((i % 2 == 0) ? 3u : 0u));
        CHECK(hml_fp(i, 1) == ((i % 2 == 0) ? 1u : 0u));
    }
}

TEST_CASE("twist coefficients: psi quotient in even degrees, zero in odd") {
    Algebra a = truncated_poly(Field::make(2, 1), {4});
    for (std::size_t i = 0; i <= 8; ++i) {
        HmlAnswer ans = hml_phi(a, 2, i);
        CHECK(ans.dim == ((i % 2 == 0) ? 1u : 0u));
        CHECK(ans.caveats.empty());
    }
    // extension-field algebra: dimensions reported over the prime field
    Algebra f4 = ground_field_algebra(Field::make(2, 2));
    CHECK(hml_phi(f4, 2, 0).dim == 2);  // psi^2(F_4) = F_4, dim 2 over F_2
    CHECK(hml_phi(f4, 1, 0).dim == 0);
    CHECK(hml_phi(f4, 2, 5).dim == 0);
    CHECK_THROWS_AS(hml_phi(a, 0, 0), ValidationError);
}

TEST_CASE("n = 1 answers carry a caveat flag") {
    Algebra a = truncated_poly(Field::make(2, 1), {2});
    CHECK(!hml_phi(a, 1, 0).caveats.empty());
    CHECK(hml_phi(a, 2, 0).caveats.empty());
}

TEST_CASE("divided-power coefficients: support only at d = p^n, period 2p^n") {
    Algebra f2 = ground_field_algebra(Field::make(2, 1));
    for (std::size_t i = 0; i <= 16; ++i) {
        CHECK(hml_gamma(f2, 2, i).dim == ((i % 4 == 0) ? 1u : 0u));
        CHECK(hml_gamma(f2, 4, i).dim == ((i % 8 == 0) ? 1u : 0u));
        CHECK(hml_gamma(f2, 3, i).dim == 0);  // 3 is not a power of 2
        CHECK(hml_gamma(f2, 6, i).dim == 0);
    }
    Algebra f3 = ground_field_algebra(Field::make(3, 1));
    for (std::size_t i = 0; i <= 12; ++i)
        CHECK(hml_gamma(f3, 3, i).dim == ((i % 6 == 0) ? 1u : 0u));
    CHECK_THROWS_AS(hml_gamma(f2, 1, 0), ValidationError);
    CHECK_THROWS_AS(hml_gamma(f2, 0, 0), ValidationError);
}

TEST_CASE("gamma answers see the psi quotient of the algebra") {
    // d = 4 = 2^2: the degree-0 answer is psi^2, e.g. all of F_4
    Algebra f4 = ground_field_algebra(Field::make(2, 2));
    CHECK(hml_gamma(f4, 4, 0).dim == 2);
    CHECK(hml_gamma(f4, 2, 0).dim == 0);  // psi^1(F_4) = 0
}

TEST_CASE("cardinality vanishing criterion") {
    CHECK(!hml_vanishing(*Field::make(2, 1), 2));
    CHECK(hml_vanishing(*Field::make(2, 2), 2));
    CHECK(hml_vanishing(*Field::make(2, 2), 3));
    CHECK(!hml_vanishing(*Field::make(2, 2), 4));
    CHECK(hml_vanishing(*Field::make(3, 2), 8));
    CHECK_THROWS_AS(hml_vanishing(*Field::make(2, 1), 1), ValidationError);
}

TEST_CASE("closed forms agree with the chain engine in degrees 0 and 1") {
    for (auto& a : {truncated_poly(Field::make(2, 1), {2}),
                    truncated_poly(Field::make(3, 1), {3}),
                    ground_field_algebra(Field::make(2, 2)),
                    truncated_poly(Field::make(2, 2), {2})})
        for (unsigned n : {2u, 3u}) {
            CrosscheckReport cc = hml_hh_crosscheck(a, n);
            INFO(a.name << " n=" << n);
            CHECK(cc.pass);
            CHECK(cc.hml1 == 0);
        }
}
