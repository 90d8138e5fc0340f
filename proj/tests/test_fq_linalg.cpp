#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "hwb/fq_matrix.hpp"

using namespace hwb;

TEST_CASE("default moduli are the lexicographically smallest irreducibles") {
    // frozen values, checked by hand against the enumeration order
    CHECK(Field::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1
    CHECK(Field::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
    CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2+1
}

TEST_CASE("field axioms by enumeration") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        FieldPtr f = Field::make(p, k);
        std::uint64_t q = f->card();
        INFO("q = " << q);
        for (Elt a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, q) == a);  // q-th power map is the identity
            for (Elt b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                // Frobenius is a ring homomorphism
                CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
                CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
                for (Elt c = 0; c < std::min<std::uint64_t>(q, 8); ++c) {
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                }
            }
        }
    }
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(Field::make(4, 1), ValidationError);   // p not prime
    CHECK_THROWS_AS(Field::make(2, 0), ValidationError);   // k out of range
    CHECK_THROWS_AS(Field::make(2, 2, {0, 1, 1}), ValidationError);  // not monic... constant 0 -> reducible
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), ValidationError);  // x^2+1 = (x+1)^2 over F_2
}

namespace {

FqMatrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    FqMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() % f->card());
    return m;
}

// independent byte-wise GF(2) rank, sharing nothing with the packed path
std::size_t naive_gf2_rank(const FqMatrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = int(m.get(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && !a[piv][col]) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != rank && a[i][col])
                for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] ^= a[rank][j];
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("packed GF(2) rank matches a naive byte reference") {
    std::mt19937_64 rng(11);
    FieldPtr f2 = Field::make(2, 1);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + rng() % 96, c = 1 + rng() % 96;
        FqMatrix m = random_matrix(f2, r, c, rng);
        CHECK(rank_of(m) == naive_gf2_rank(m));
    }
}

TEST_CASE("rank is transpose-invariant") {
    std::mt19937_64 rng(12);
    for (FieldPtr f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
        for (int trial = 0; trial < 8; ++trial) {
            std::size_t r = 1 + rng() % 200, c = 1 + rng() % 200;
            FqMatrix m = random_matrix(f, r, c, rng);
            CHECK(rank_of(m) == rank_of(m.transpose()));
        }
    }
}

TEST_CASE("echelon kernel: M k = 0 and rank-nullity") {
    std::mt19937_64 rng(13);
    for (FieldPtr f : {Field::make(2, 1), Field::make(3, 1), Field::make(5, 1),
                       Field::make(2, 3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
            FqMatrix m = random_matrix(f, r, c, rng);
            auto ech = echelon_analyze(m);
            CHECK(ech.rank == rank_of(m));
            CHECK(ech.rank + ech.kernel.size() == c);
            for (auto& k : ech.kernel) {
                Vec img = m.apply(k);
                for (Elt e : img) CHECK(e == 0);
                bool nonzero = false;
                for (Elt e : k) nonzero = nonzero || e;
                CHECK(nonzero);
            }
            // kernel vectors are linearly independent
            CHECK(from_columns(f, c, ech.kernel).cols() == ech.kernel.size());
            CHECK(rank_of(from_columns(f, c, ech.kernel)) == ech.kernel.size());
        }
    }
}

TEST_CASE("matrix product agrees with entry-wise definition") {
    std::mt19937_64 rng(14);
    for (FieldPtr f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
        FqMatrix a = random_matrix(f, 17, 23, rng);
        FqMatrix b = random_matrix(f, 23, 9, rng);
        FqMatrix c = a * b;
        for (std::size_t i = 0; i < 17; ++i)
            for (std::size_t j = 0; j < 9; ++j) {
                Elt want = 0;
                for (std::size_t t = 0; t < 23; ++t)
                    want = f->add(want, f->mul(a.get(i, t), b.get(t, j)));
                CHECK(c.get(i, j) == want);
            }
        // apply is the column action
        Vec v(9);
        for (auto& e : v) e = rng() % f->card();
        Vec lhs = c.apply(v), rhs = a.apply(b.apply(v));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("fields beyond byte storage are rejected by the matrix layer") {
    FieldPtr f = Field::make(2, 9);  // q = 512 > 256
    CHECK_THROWS_AS(FqMatrix(f, 2, 2), CapExceeded);
}
