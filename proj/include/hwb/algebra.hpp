#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fq_matrix.hpp"

namespace hwb {


// In-place Gauss-Jordan on the rows; returns the pivot columns. Rows below
// the rank end up zero, rows 0..rank-1 are the reduced row-space basis.
inline std::vector<std::size_t> rref_rows(FqMatrix& m) {
    const Field& F = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.get(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        Elt inv = F.inv(m.get(r, c));
        if (inv != 1) m.scale_row(r, inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Elt v = m.get(i, c);
            if (v) m.row_axpy(i, r, F.neg(v), c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Reduce v against reduced rows; the remainder is supported on non-pivot columns.
inline Vec reduce_against(const FqMatrix& rr, const std::vector<std::size_t>& pivots, Vec v) {
    const Field& F = *rr.field();
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        Elt c = v[pivots[j]];
        if (!c) continue;
        for (std::size_t t = 0; t < v.size(); ++t) {
            Elt w = rr.get(j, t);
            if (w) v[t] = F.sub(v[t], F.mul(c, w));
        }
    }
    return v;
}

// A finite-dimensional unital commutative F_q-algebra given by a basis and
// structure constants: mul[i][j] holds the coordinates of b_i * b_j.
struct Algebra {
    FieldPtr field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    Vec unit;
    std::vector<std::vector<Vec>> mul;
    std::string name;

    Vec basis_vector(std::size_t i) const {
        Vec v(dim, 0);
        v[i] = 1;
        return v;
    }

    Vec multiply(const Vec& u, const Vec& v) const {
        const Field& F = *field;
        Vec r(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!u[i]) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (!v[j]) continue;
                Elt c = F.mul(u[i], v[j]);
                const Vec& m = mul[i][j];
                for (std::size_t t = 0; t < dim; ++t)
                    if (m[t]) r[t] = F.add(r[t], F.mul(c, m[t]));
            }
        }
        return r;
    }

    Vec element_pow(Vec x, std::uint64_t e) const {
        Vec r = unit;
        while (e) {
            if (e & 1) r = multiply(r, x);
            x = multiply(x, x);
            e >>= 1;
        }
        return r;
    }

    // x^(p^n) via n applications of x -> x^p.
    Vec frobenius_element(Vec x, unsigned n) const {
        for (unsigned i = 0; i < n; ++i) x = element_pow(x, field->p());
        return x;
    }

    // Matrix of left multiplication by basis element i.
    FqMatrix left_mult_matrix(std::size_t i) const {
        FqMatrix m(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t t = 0; t < dim; ++t)
                if (mul[i][j][t]) m.set(t, j, mul[i][j][t]);
        return m;
    }

    FqMatrix left_mult_matrix(const Vec& x) const {
        FqMatrix m(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Vec col = multiply(x, basis_vector(j));
            for (std::size_t t = 0; t < dim; ++t)
                if (col[t]) m.set(t, j, col[t]);
        }
        return m;
    }

    void validate() const {
        if (dim == 0) throw ValidationError("algebra: dim must be >= 1");
        if (unit.size() != dim) throw ValidationError("algebra: unit vector has wrong length");
        if (mul.size() != dim) throw ValidationError("algebra: mul table has wrong shape");
        for (std::size_t i = 0; i < dim; ++i) {
            if (mul[i].size() != dim) throw ValidationError("algebra: mul table has wrong shape");
            for (std::size_t j = 0; j < dim; ++j)
                if (mul[i][j].size() != dim)
                    throw ValidationError("algebra: mul table has wrong shape");
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                if (mul[i][j] != mul[j][i])
                    throw ValidationError("algebra: commutativity fails at basis pair (" +
                                          std::to_string(i) + ", " + std::to_string(j) + ")");
        for (std::size_t i = 0; i < dim; ++i) {
            Vec u = multiply(unit, basis_vector(i));
            if (u != basis_vector(i))
                throw ValidationError("algebra: unit law fails at basis element " +
                                      std::to_string(i));
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t l = 0; l < dim; ++l) {
                    Vec lhs = multiply(mul[i][j], basis_vector(l));
                    Vec rhs = multiply(basis_vector(i), mul[j][l]);
                    if (lhs != rhs)
                        throw ValidationError("algebra: associativity fails at triple (" +
                                              std::to_string(i) + ", " + std::to_string(j) +
                                              ", " + std::to_string(l) + ")");
                }
    }
};

// Validated load path for externally supplied structure-constant tables.
inline Algebra algebra_from_structure(Algebra a) {
    a.validate();
    return a;
}

namespace detail {

inline std::string monomial_name(const std::vector<unsigned>& e, std::size_t nvars) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += (nvars == 1) ? "x" : "x" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace detail

// F_q[x_1..x_d] / (x_1^{e_1}, ..., x_d^{e_d}), monomial basis in graded-lex order.
inline Algebra truncated_poly(FieldPtr field, const std::vector<unsigned>& exponents,
                              std::size_t dim_cap = 4096) {
    if (exponents.empty()) throw ValidationError("truncated_poly: need at least one exponent");
    std::size_t dim = 1;
    for (unsigned e : exponents) {
        if (e < 2) throw ValidationError("truncated_poly: exponents must be >= 2");
        dim *= e;
        if (dim > dim_cap)
            throw CapExceeded("truncated_poly: dimension exceeds cap " + std::to_string(dim_cap));
    }
    std::size_t d = exponents.size();
    std::vector<std::vector<unsigned>> monomials;
    std::vector<unsigned> cur(d, 0);
    for (std::size_t n = 0; n < dim; ++n) {
        monomials.push_back(cur);
        for (std::size_t i = d; i-- > 0;) {
            if (++cur[i] < exponents[i]) break;
            cur[i] = 0;
        }
    }
    std::sort(monomials.begin(), monomials.end(),
              [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
                  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
                  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
                  if (da != db) return da < db;
                  return a < b;
              });
    auto index_of = [&](const std::vector<unsigned>& m) -> long {
        for (std::size_t i = 0; i < monomials.size(); ++i)
            if (monomials[i] == m) return static_cast<long>(i);
        return -1;
    };
    Algebra a;
    a.field = std::move(field);
    a.dim = dim;
    a.unit.assign(dim, 0);
    a.unit[0] = 1;
    for (auto& m : monomials) a.basis_names.push_back(detail::monomial_name(m, d));
    a.mul.assign(dim, std::vector<Vec>(dim, Vec(dim, 0)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<unsigned> s(d);
            bool dead = false;
            for (std::size_t t = 0; t < d; ++t) {
                s[t] = monomials[i][t] + monomials[j][t];
                if (s[t] >= exponents[t]) dead = true;
            }
            if (!dead) a.mul[i][j][static_cast<std::size_t>(index_of(s))] = 1;
        }
    a.name = "F" + std::to_string(a.field->card()) + "[x]/(";
    for (std::size_t i = 0; i < d; ++i)
        a.name += (i ? "," : "") + std::string("x") +
                  (d == 1 ? "" : std::to_string(i + 1)) + "^" + std::to_string(exponents[i]);
    a.name += ")";
    a.validate();
    return a;
}

// K itself as a one-dimensional K-algebra.
inline Algebra ground_field_algebra(FieldPtr field) {
    Algebra a;
    a.field = std::move(field);
    a.dim = 1;
    a.unit = {1};
    a.basis_names = {"1"};
    a.mul = {{{1}}};
    a.name = "F" + std::to_string(a.field->card());
    a.validate();
    return a;
}

// F_{p^d} presented as a d-dimensional algebra over F_p with power basis.
inline Algebra finite_field_algebra(std::uint64_t p, int d) {
    FieldPtr big = Field::make(p, d);
    Algebra a;
    a.field = Field::make(p, 1);
    a.dim = static_cast<std::size_t>(d);
    a.unit.assign(a.dim, 0);
    a.unit[0] = 1;
    for (int i = 0; i < d; ++i)
        a.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "w" : "w^" + std::to_string(i)));
    a.mul.assign(a.dim, std::vector<Vec>(a.dim, Vec(a.dim, 0)));
    Elt w = big->generator();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Elt prod = big->mul(big->pow(w, i), big->pow(w, j));
            auto dg = big->digits(prod);
            for (int t = 0; t < d; ++t) a.mul[i][j][t] = dg[t];
        }
    a.name = "F" + std::to_string(big->card()) + (d > 1 ? "/F" + std::to_string(p) : "");
    a.validate();
    return a;
}

// Tensor product over the common ground field; basis ordered by (i, j) pairs.
inline Algebra algebra_tensor(const Algebra& A, const Algebra& B) {
    if (!(*A.field == *B.field))
        throw ValidationError("algebra_tensor: ground fields differ");
    const Field& F = *A.field;
    Algebra t;
    t.field = A.field;
    t.dim = A.dim * B.dim;
    t.unit.assign(t.dim, 0);
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < B.dim; ++j) {
            t.basis_names.push_back(A.basis_names[i] + "(x)" + B.basis_names[j]);
            t.unit[i * B.dim + j] = F.mul(A.unit[i], B.unit[j]);
        }
    t.mul.assign(t.dim, std::vector<Vec>(t.dim, Vec(t.dim, 0)));
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < B.dim; ++j)
            for (std::size_t k = 0; k < A.dim; ++k)
                for (std::size_t l = 0; l < B.dim; ++l) {
                    const Vec& ma = A.mul[i][k];
                    const Vec& mb = B.mul[j][l];
                    Vec& out = t.mul[i * B.dim + j][k * B.dim + l];
                    for (std::size_t s = 0; s < A.dim; ++s) {
                        if (!ma[s]) continue;
                        for (std::size_t u = 0; u < B.dim; ++u)
                            if (mb[u])
                                out[s * B.dim + u] =
                                    F.add(out[s * B.dim + u], F.mul(ma[s], mb[u]));
                    }
                }
    t.name = A.name + " (x) " + B.name;
    t.validate();
    return t;
}

// View an F_{p^k}-algebra (k > 1) as an F_p-algebra of dimension dim*k with
// basis w^j b_i ordered i-major. The Frobenius twist is only F_p-linear, so
// the Hochschild engine works on this restriction.
inline Algebra restrict_scalars(const Algebra& A) {
    const Field& F = *A.field;
    int k = F.k();
    if (k == 1) return A;
    FieldPtr Fp = Field::make(F.p(), 1);
    Algebra r;
    r.field = Fp;
    r.dim = A.dim * k;
    auto restrict_vec = [&](const Vec& v) {
        Vec out(r.dim, 0);
        for (std::size_t i = 0; i < A.dim; ++i) {
            auto dg = F.digits(v[i]);
            for (int j = 0; j < k; ++j) out[i * k + j] = dg[j];
        }
        return out;
    };
    r.unit = restrict_vec(A.unit);
    Elt w = F.generator();
    for (std::size_t i = 0; i < A.dim; ++i)
        for (int j = 0; j < k; ++j)
            r.basis_names.push_back((j == 0 ? "" : "w^" + std::to_string(j) + "*") +
                                    A.basis_names[i]);
    r.mul.assign(r.dim, std::vector<Vec>(r.dim, Vec(r.dim, 0)));
    for (std::size_t i = 0; i < A.dim; ++i)
        for (int j = 0; j < k; ++j)
            for (std::size_t i2 = 0; i2 < A.dim; ++i2)
                for (int j2 = 0; j2 < k; ++j2) {
                    Vec x(A.dim, 0), y(A.dim, 0);
                    x[i] = F.pow(w, j);
                    y[i2] = F.pow(w, j2);
                    r.mul[i * k + j][i2 * k + j2] = restrict_vec(A.multiply(x, y));
                }
    r.name = A.name + "|F" + std::to_string(F.p());
    r.validate();
    return r;
}

// Matrix of a -> a^(p^n). F_q-linear when k == 1; for k > 1 the map is only
// F_p-linear and is returned on the scalar restriction of A.
inline FqMatrix frobenius_matrix(const Algebra& A, unsigned n) {
    if (n > 32) throw ValidationError("frobenius_matrix: n must be <= 32");
    if (A.field->prime_field()) {
        FqMatrix m(A.field, A.dim, A.dim);
        for (std::size_t i = 0; i < A.dim; ++i) {
            Vec img = A.frobenius_element(A.basis_vector(i), n);
            for (std::size_t t = 0; t < A.dim; ++t)
                if (img[t]) m.set(t, i, img[t]);
        }
        return m;
    }
    return frobenius_matrix(restrict_scalars(A), n);
}

// The quotient ring psi^n(A) = A / (a - a^(p^n)) with its induced A-action.
// Generators are the images of an F_p-spanning set of A (the w^j b_i), which
// suffices because a -> a - a^(p^n) is additive in characteristic p and fixes
// F_p-scalars; the closure loop multiplies by basis elements until stable.
struct PsiQuotient {
    unsigned n = 0;
    std::size_t quotient_dim = 0;
    std::vector<Vec> ideal_basis;          // reduced row basis of the ideal
    std::vector<std::size_t> pivot_cols;   // pivots of the reduced basis
    std::vector<std::size_t> free_cols;    // quotient coordinates (as columns of A)
    Vec quotient_unit;
    std::vector<FqMatrix> action;          // induced action of each algebra basis element

    Vec project(const FieldPtr& field, Vec v) const {
        const Field& F = *field;
        for (std::size_t j = 0; j < ideal_basis.size(); ++j) {
            Elt c = v[pivot_cols[j]];
            if (!c) continue;
            for (std::size_t t = 0; t < v.size(); ++t)
                if (ideal_basis[j][t]) v[t] = F.sub(v[t], F.mul(c, ideal_basis[j][t]));
        }
        Vec out(free_cols.size(), 0);
        for (std::size_t t = 0; t < free_cols.size(); ++t) out[t] = v[free_cols[t]];
        return out;
    }
};

inline PsiQuotient psi(const Algebra& A, unsigned n) {
    if (n < 1) throw ValidationError("psi: n must be >= 1");
    const Field& F = *A.field;
    std::vector<Vec> rows;
    Elt w = F.generator();
    for (std::size_t i = 0; i < A.dim; ++i)
        for (int j = 0; j < F.k(); ++j) {
            Vec x(A.dim, 0);
            x[i] = F.pow(w, j);
            Vec g = x;
            Vec fx = A.frobenius_element(x, n);
            for (std::size_t t = 0; t < A.dim; ++t) g[t] = F.sub(g[t], fx[t]);
            rows.push_back(std::move(g));
        }
    FqMatrix rr(A.field, 0, 0);
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (;;) {
        FqMatrix m(A.field, rows.size(), A.dim);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t t = 0; t < A.dim; ++t)
                if (rows[i][t]) m.set(i, t, rows[i][t]);
        pivots = rref_rows(m);
        rank = pivots.size();
        rows.clear();
        for (std::size_t i = 0; i < rank; ++i) {
            Vec v(A.dim, 0);
            for (std::size_t t = 0; t < A.dim; ++t) v[t] = m.get(i, t);
            rows.push_back(std::move(v));
        }
        rr = std::move(m);
        bool grew = false;
        std::size_t base = rows.size();
        for (std::size_t i = 0; i < base; ++i)
            for (std::size_t b = 0; b < A.dim; ++b) {
                Vec prod = A.multiply(A.basis_vector(b), rows[i]);
                Vec rem = reduce_against(rr, pivots, prod);
                bool nz = false;
                for (Elt e : rem) nz |= (e != 0);
                if (nz) {
                    rows.push_back(std::move(prod));
                    grew = true;
                }
            }
        if (!grew) break;
    }
    PsiQuotient q;
    q.n = n;
    q.ideal_basis = rows;
    q.pivot_cols = pivots;
    q.quotient_dim = A.dim - rank;
    std::vector<bool> is_piv(A.dim, false);
    for (auto c : pivots) is_piv[c] = true;
    for (std::size_t c = 0; c < A.dim; ++c)
        if (!is_piv[c]) q.free_cols.push_back(c);
    q.quotient_unit = q.project(A.field, A.unit);
    for (std::size_t b = 0; b < A.dim; ++b) {
        FqMatrix act(A.field, q.quotient_dim, q.quotient_dim);
        for (std::size_t c = 0; c < q.free_cols.size(); ++c) {
            Vec col = q.project(A.field, A.multiply(A.basis_vector(b),
                                                    A.basis_vector(q.free_cols[c])));
            for (std::size_t t = 0; t < q.quotient_dim; ++t)
                if (col[t]) act.set(t, c, col[t]);
        }
        q.action.push_back(std::move(act));
    }
    return q;
}

}  // namespace hwb
