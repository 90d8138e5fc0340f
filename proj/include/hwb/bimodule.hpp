#pragma once

#include "algebra.hpp"

namespace hwb {

// A finite-dimensional left A-module by action matrices, one per basis element.
struct LeftModule {
    std::size_t dim = 0;
    std::vector<FqMatrix> act;
    std::string name;
};

namespace detail {

inline FqMatrix scaled_sum(const FieldPtr& field, std::size_t dim,
                           const std::vector<FqMatrix>& mats, const Vec& coeffs) {
    const Field& F = *field;
    FqMatrix out(field, dim, dim);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (!coeffs[m]) continue;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Elt v = mats[m].get(i, j);
                if (v) out.set(i, j, F.add(out.get(i, j), F.mul(coeffs[m], v)));
            }
    }
    return out;
}

}  // namespace detail

inline void validate_left_module(const Algebra& A, const LeftModule& M) {
    const Field& F = *A.field;
    if (M.act.size() != A.dim) throw ValidationError("module: one action matrix per basis element required");
    for (std::size_t i = 0; i < A.dim; ++i)
        if (M.act[i].rows() != M.dim || M.act[i].cols() != M.dim)
            throw ValidationError("module: action matrix shape mismatch at index " + std::to_string(i));
    FqMatrix unit_act = detail::scaled_sum(A.field, M.dim, M.act, A.unit);
    if (unit_act != FqMatrix::identity(A.field, M.dim))
        throw ValidationError("module: unit does not act as identity");
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            FqMatrix lhs = M.act[i] * M.act[j];
            FqMatrix rhs = detail::scaled_sum(A.field, M.dim, M.act, A.mul[i][j]);
            if (lhs != rhs)
                throw ValidationError("module: action is not multiplicative at pair (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    (void)F;
}

// A as a left module over itself.
inline LeftModule regular_module(const Algebra& A) {
    LeftModule m;
    m.dim = A.dim;
    for (std::size_t i = 0; i < A.dim; ++i) m.act.push_back(A.left_mult_matrix(i));
    m.name = A.name;
    return m;
}

// One-dimensional module through an algebra character chi (chi[i] = scalar by
// which b_i acts); validated.
inline LeftModule character_module(const Algebra& A, const Vec& chi) {
    LeftModule m;
    m.dim = 1;
    for (std::size_t i = 0; i < A.dim; ++i) {
        FqMatrix a(A.field, 1, 1);
        a.set(0, 0, chi[i]);
        m.act.push_back(std::move(a));
    }
    m.name = "char";
    validate_left_module(A, m);
    return m;
}

// The module structure of a psi quotient (A acting through the quotient map).
inline LeftModule psi_module(const Algebra& A, const PsiQuotient& q) {
    LeftModule m;
    m.dim = q.quotient_dim;
    m.act = q.action;
    m.name = "psi^" + std::to_string(q.n) + "(" + A.name + ")";
    return m;
}

// An A-A-bimodule as explicit left/right action tables over a commutative A.
struct Bimodule {
    std::size_t dim = 0;
    std::vector<FqMatrix> left, right;
    std::string name;
    unsigned twist = 0;  // phi-twist exponent used to build it, 0 = untwisted
};

inline void validate_bimodule(const Algebra& A, const Bimodule& B) {
    LeftModule l{B.dim, B.left, ""};
    validate_left_module(A, l);
    LeftModule r{B.dim, B.right, ""};
    validate_left_module(A, r);  // over commutative A the right axioms read the same
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j)
            if (B.left[i] * B.right[j] != B.right[j] * B.left[i])
                throw ValidationError("bimodule: actions do not commute at pair (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
}

// A as a bimodule over itself, both actions by multiplication.
inline Bimodule regular_bimodule(const Algebra& A) {
    Bimodule b;
    b.dim = A.dim;
    for (std::size_t i = 0; i < A.dim; ++i) {
        b.left.push_back(A.left_mult_matrix(i));
        b.right.push_back(A.left_mult_matrix(i));
    }
    b.name = A.name;
    return b;
}

// The Frobenius twist Phi^n(M): left action unchanged, right action of b_i is
// the left action of b_i^(p^n). For n >= 1 the twist is only F_p-linear in
// the algebra argument, so A must be presented over its prime field
// (restrict_scalars gives that presentation).
inline Bimodule phi_twist(const Algebra& A, const LeftModule& M, unsigned n) {
    validate_left_module(A, M);
    if (n >= 1 && !A.field->prime_field())
        throw ValidationError(
            "phi_twist: twisted coefficients need A presented over F_p; apply restrict_scalars first");
    Bimodule b;
    b.dim = M.dim;
    b.left = M.act;
    b.twist = n;
    for (std::size_t i = 0; i < A.dim; ++i) {
        Vec img = A.frobenius_element(A.basis_vector(i), n);
        b.right.push_back(detail::scaled_sum(A.field, M.dim, M.act, img));
    }
    b.name = n == 0 ? M.name : "Phi^" + std::to_string(n) + "(" + M.name + ")";
    return b;
}

}  // namespace hwb
