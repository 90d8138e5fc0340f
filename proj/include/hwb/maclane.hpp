#pragma once

#include "hochschild.hpp"

namespace hwb {

// A closed-form answer: dimension over the prime field F_p, the formula that
// produced it, and any applicability caveats.
struct HmlAnswer {
    std::size_t dim = 0;
    std::size_t degree = 0;
    std::string formula;
    std::vector<std::string> caveats;
};

// HML_i(B, B) for B a finite field seen over F_p: dim_Fp B in every even
// degree, zero in every odd degree.
inline std::size_t hml_fp(std::size_t i, std::size_t b_dim_over_fp) {
    return (i % 2 == 0) ? b_dim_over_fp : 0;
}

// HML_i(A, Phi^n(A)): the psi quotient in every even degree, zero in odd
// degrees. Dimensions are reported over the prime field.
inline HmlAnswer hml_phi(const Algebra& A, unsigned n, std::size_t i) {
    if (n == 0) throw ValidationError("hml_phi: twist exponent n must be >= 1");
    PsiQuotient q = psi(A, n);
    HmlAnswer ans;
    ans.degree = i;
    ans.dim = (i % 2 == 0) ? std::size_t(A.field->k()) * q.quotient_dim : 0;
    ans.formula = (i % 2 == 0) ? "even degree: dim_Fp of the psi^n quotient"
                               : "odd degree: zero";
    if (n == 1)
        ans.caveats.push_back(
            "n = 1: the closed form needs the stronger degree-bound input; flagged, not proven "
            "by the implemented argument");
    return ans;
}

// HML_i(A, Gamma^d applied to the regular coefficient): zero unless d is a
// power p^n of the characteristic, in which case the answer is the psi^n
// quotient in degrees divisible by 2 p^n and zero otherwise.
inline HmlAnswer hml_gamma(const Algebra& A, std::uint64_t d, std::size_t i) {
    if (d <= 1) throw ValidationError("hml_gamma: degree d must be >= 2");
    HmlAnswer ans;
    ans.degree = i;
    std::uint64_t p = A.field->p();
    unsigned n = 0;
    std::uint64_t pw = 1;
    while (pw < d) {
        pw *= p;
        ++n;
    }
    if (pw != d) {
        ans.dim = 0;
        ans.formula = "d is not a power of the characteristic: zero in all degrees";
        return ans;
    }
    std::uint64_t period = 2 * pw;
    if (i % period == 0) {
        PsiQuotient q = psi(A, n);
        ans.dim = std::size_t(A.field->k()) * q.quotient_dim;
        ans.formula = "d = p^n, degree divisible by 2p^n: dim_Fp of the psi^n quotient";
    } else {
        ans.dim = 0;
        ans.formula = "d = p^n, degree not divisible by 2p^n: zero";
    }
    return ans;
}

// Vanishing criterion: for Card(K) > d > 1 the Gamma^d-coefficient MacLane
// homology of any commutative K-algebra vanishes in all degrees.
inline bool hml_vanishing(const Field& k, std::uint64_t d) {
    if (d <= 1) throw ValidationError("hml_vanishing: degree d must be >= 2");
    return k.card() > d;
}

// Low-degree consistency check of the closed forms against the chain-level
// engine: in degrees 0 and 1 MacLane and Hochschild homology with the same
// twisted coefficients agree.
struct CrosscheckReport {
    std::size_t hml0 = 0, hml1 = 0;
    std::size_t hh0 = 0, hh1 = 0;
    bool pass = false;
    std::vector<std::string> caveats;
};

inline CrosscheckReport hml_hh_crosscheck(const Algebra& A, unsigned n,
                                          const EngineLimits& lim = {}) {
    CrosscheckReport rep;
    rep.hml0 = hml_phi(A, n, 0).dim;
    rep.hml1 = hml_phi(A, n, 1).dim;
    Algebra ar = A.field->prime_field() ? A : restrict_scalars(A);
    Bimodule b = phi_twist(ar, regular_module(ar), n);
    HomologyReport hh = hh_homology(ar, b, 3, lim);
    rep.hh0 = hh.dims[0];
    rep.hh1 = hh.dims[1];
    rep.caveats = hh.caveats;
    rep.pass = rep.hml0 == rep.hh0 && rep.hml1 == rep.hh1;
    return rep;
}

}  // namespace hwb
