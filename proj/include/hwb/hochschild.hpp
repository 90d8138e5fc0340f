#pragma once

#include <cmath>

#include "bimodule.hpp"
#include "complex.hpp"

namespace hwb {

// Size/work limits for complex construction. entry_cap bounds the largest
// chain space; the work budgets bound the estimated elimination cost of the
// top boundary matrix when a truncation is chosen automatically.
struct EngineLimits {
    std::uint64_t entry_cap = 5'000'000;
    double work_budget_gf2 = 7.7e12;
    double work_budget_bytes = 1.5e11;
    std::size_t max_truncation = 12;
};

namespace detail {

inline std::uint64_t pow_sz(std::uint64_t b, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / (b ? b : 1)) return cap + 1;
        r *= b;
    }
    return r;
}

inline Elt sign_scalar(const Field& F, std::size_t i) {
    return (i % 2 == 0) ? F.one() : F.neg(F.one());
}

}  // namespace detail

// Largest admissible truncation for a chain complex with space sizes
// dim_B * dim_A^n under the given limits.
inline std::size_t default_truncation(std::size_t dim_a, std::size_t dim_b, std::uint64_t q,
                                      const EngineLimits& lim = {}) {
    std::size_t best = 1;
    for (std::size_t N = 1; N <= lim.max_truncation; ++N) {
        std::uint64_t top = detail::pow_sz(dim_a, N, lim.entry_cap);
        if (top > lim.entry_cap / (dim_b ? dim_b : 1)) break;
        double rows = double(dim_b) * std::pow(double(dim_a), double(N) - 1.0);
        double cols = rows * double(dim_a);
        double ops = rows * rows * cols;
        double budget = (q == 2) ? lim.work_budget_gf2 : lim.work_budget_bytes;
        if (dim_a > 1 && ops > budget) break;
        best = N;
    }
    return best;
}

// The Hochschild chain complex C_*(A, B) up to degree N. Degree n is
// B (x) A^{(x)n} with mixed-radix basis indexing: module coordinate most
// significant, tensor slots left to right. The boundary is the alternating
// face sum; face 0 uses the left action, inner faces the multiplication
// table, face n the right action (for Phi^n that is multiplication by
// r_n^{p^n} on the left).
inline BoundedComplex hh_complex(const Algebra& A, const Bimodule& B, std::size_t N,
                                 const EngineLimits& lim = {}) {
    const Field& F = *A.field;
    std::uint64_t top = detail::pow_sz(A.dim, N, lim.entry_cap);
    if (B.dim == 0) throw ValidationError("hh_complex: zero-dimensional bimodule");
    if (top > lim.entry_cap / B.dim) {
        std::size_t maxN = 0;
        while (detail::pow_sz(A.dim, maxN + 1, lim.entry_cap) <= lim.entry_cap / B.dim &&
               maxN + 1 <= 64)
            ++maxN;
        throw CapExceeded("hh_complex: entry cap " + std::to_string(lim.entry_cap) +
                          " exceeded; maximal admissible truncation is N = " +
                          std::to_string(maxN));
    }
    BoundedComplex cx;
    cx.field = A.field;
    cx.dims.resize(N + 1);
    std::vector<std::uint64_t> apow(N + 2, 1);
    for (std::size_t i = 1; i < apow.size(); ++i) apow[i] = apow[i - 1] * A.dim;
    for (std::size_t n = 0; n <= N; ++n) cx.dims[n] = B.dim * apow[n];
    cx.boundaries.resize(N + 1);
    std::vector<std::size_t> slots;
    for (std::size_t n = 1; n <= N; ++n) {
        FqMatrix d(A.field, cx.dims[n - 1], cx.dims[n]);
        for (std::size_t c = 0; c < cx.dims[n]; ++c) {
            std::size_t m = c / apow[n];
            slots.assign(n, 0);
            for (std::size_t j = 1; j <= n; ++j)
                slots[j - 1] = (c / apow[n - j]) % A.dim;
            // face 0: left action of the first slot on the module coordinate
            {
                std::size_t rest = c % apow[n - 1];
                const FqMatrix& L = B.left[slots[0]];
                for (std::size_t m2 = 0; m2 < B.dim; ++m2) {
                    Elt v = L.get(m2, m);
                    if (v) d.add_at(m2 * apow[n - 1] + rest, c, v);
                }
            }
            // inner faces: multiply adjacent slots
            for (std::size_t i = 1; i + 1 <= n; ++i) {
                std::size_t prefix = c / apow[n - i + 1];
                std::size_t low = c % apow[n - i - 1];
                Elt sgn = detail::sign_scalar(F, i);
                const Vec& prod = A.mul[slots[i - 1]][slots[i]];
                for (std::size_t s = 0; s < A.dim; ++s) {
                    if (!prod[s]) continue;
                    std::size_t idx = prefix * apow[n - i] + s * apow[n - i - 1] + low;
                    d.add_at(idx, c, F.mul(sgn, prod[s]));
                }
            }
            // face n: right action of the last slot
            {
                std::size_t middle = (c / A.dim) % apow[n - 1];
                Elt sgn = detail::sign_scalar(F, n);
                const FqMatrix& R = B.right[slots[n - 1]];
                for (std::size_t m2 = 0; m2 < B.dim; ++m2) {
                    Elt v = R.get(m2, m);
                    if (v) d.add_at(m2 * apow[n - 1] + middle, c, F.mul(sgn, v));
                }
            }
        }
        cx.boundaries[n] = std::move(d);
    }
    cx.verify_dd_zero();
    return cx;
}

inline HomologyReport hh_homology(const Algebra& A, const Bimodule& B, std::size_t N,
                                  const EngineLimits& lim = {}) {
    BoundedComplex cx = hh_complex(A, B, N, lim);
    HomologyReport rep;
    rep.label = "HH(" + A.name + ", " + B.name + ")";
    rep.twist = B.twist;
    rep.truncation = N;
    rep.complex_dims = cx.dims;
    rep.dims = cx.homology_dims(&rep.ms_per_degree);
    for (auto dsz : cx.dims) rep.entry_count += dsz;
    if (B.twist == 1) rep.caveats.push_back("n=1 is outside the stated range n>1");
    return rep;
}

// The Hochschild cochain complex Hom(A^{(x)n}, B) with the standard
// differential, assembled from the same face data transposed. Cohomology is
// reported for degrees 0..N-1.
inline HomologyReport hh_cohomology(const Algebra& A, const Bimodule& B, std::size_t N,
                                    const EngineLimits& lim = {}) {
    const Field& F = *A.field;
    std::uint64_t top = detail::pow_sz(A.dim, N, lim.entry_cap);
    if (top > lim.entry_cap / B.dim)
        throw CapExceeded("hh_cohomology: entry cap exceeded at truncation N = " +
                          std::to_string(N));
    std::vector<std::uint64_t> apow(N + 2, 1);
    for (std::size_t i = 1; i < apow.size(); ++i) apow[i] = apow[i - 1] * A.dim;
    std::vector<std::size_t> dims(N + 1);
    for (std::size_t n = 0; n <= N; ++n) dims[n] = B.dim * apow[n];
    // delta[n] : C^n -> C^{n+1}, n = 0..N-1
    std::vector<FqMatrix> delta(N);
    std::vector<std::size_t> slots;
    for (std::size_t n = 0; n < N; ++n) {
        FqMatrix d(A.field, dims[n + 1], dims[n]);
        for (std::size_t c = 0; c < dims[n]; ++c) {
            std::size_t m = c / apow[n];
            std::size_t tau = c % apow[n];
            slots.assign(n, 0);
            for (std::size_t j = 1; j <= n; ++j)
                slots[j - 1] = (c / apow[n - j]) % A.dim;
            // (delta f)(a_1..a_{n+1}) = a_1 f(a_2..) + sum (-1)^i f(..a_i a_{i+1}..)
            //                           + (-1)^{n+1} f(a_1..a_n) a_{n+1}
            for (std::size_t s1 = 0; s1 < A.dim; ++s1) {
                const FqMatrix& L = B.left[s1];
                for (std::size_t m2 = 0; m2 < B.dim; ++m2) {
                    Elt v = L.get(m2, m);
                    if (v) d.add_at((m2 * A.dim + s1) * apow[n] + tau, c, v);
                }
            }
            for (std::size_t i = 1; i <= n; ++i) {
                Elt sgn = detail::sign_scalar(F, i);
                std::size_t prefix = c / apow[n - i + 1];  // m, tau_1..tau_{i-1}
                std::size_t low = c % apow[n - i];         // tau_{i+1}..tau_n
                std::size_t ti = slots[i - 1];
                for (std::size_t u = 0; u < A.dim; ++u)
                    for (std::size_t v = 0; v < A.dim; ++v) {
                        Elt coeff = A.mul[u][v][ti];
                        if (!coeff) continue;
                        std::size_t idx =
                            ((prefix * A.dim + u) * A.dim + v) * apow[n - i] + low;
                        d.add_at(idx, c, F.mul(sgn, coeff));
                    }
            }
            {
                Elt sgn = detail::sign_scalar(F, n + 1);
                for (std::size_t v = 0; v < A.dim; ++v) {
                    const FqMatrix& R = B.right[v];
                    for (std::size_t m2 = 0; m2 < B.dim; ++m2) {
                        Elt w = R.get(m2, m);
                        if (w) d.add_at((m2 * apow[n] + tau) * A.dim + v, c, F.mul(sgn, w));
                    }
                }
            }
        }
        delta[n] = std::move(d);
    }
    for (std::size_t n = 0; n + 1 < N; ++n) {
        double ops = double(delta[n + 1].rows()) * delta[n + 1].cols() * delta[n].cols();
        if (F.card() == 2) ops /= 64.0;
        if (ops <= 2e9) {
            if (!(delta[n + 1] * delta[n]).is_zero())
                throw ValidationError("cochain: delta.delta != 0 at degree " + std::to_string(n));
        }
    }
    HomologyReport rep;
    rep.label = "HH^*(" + A.name + ", " + B.name + ")";
    rep.twist = B.twist;
    rep.truncation = N;
    rep.cochain = true;
    rep.complex_dims = dims;
    rep.dims.resize(N);
    rep.ms_per_degree.assign(N + 1, 0.0);
    std::vector<std::size_t> ranks(N + 1, 0);  // ranks[n] = rank delta[n], n < N
    for (std::size_t n = 0; n < N; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        ranks[n] = rank_of(delta[n]);
        auto t1 = std::chrono::steady_clock::now();
        rep.ms_per_degree[n] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t ker = dims[i] - ranks[i];
        std::size_t im = (i == 0) ? 0 : ranks[i - 1];
        rep.dims[i] = ker - im;
    }
    for (auto dsz : dims) rep.entry_count += dsz;
    if (B.twist == 1) rep.caveats.push_back("n=1 is outside the stated range n>1");
    return rep;
}

// Step-1 oracle: F_p[x] on the window of polynomials of degree < W, with
// u = multiplication by x^{p^n} - x. H1 = ker(u) on inputs whose image stays
// inside the window; H0 = dim coker(u) on the stable range.
struct Step1Result {
    std::size_t h0_dim = 0;
    std::size_t h1_dim = 0;
    std::size_t window = 0;
};

inline Step1Result step1_poly(std::uint64_t p, unsigned n, std::size_t window) {
    FieldPtr F = Field::make(p, 1);
    std::uint64_t pn = 1;
    for (unsigned i = 0; i < n; ++i) {
        pn *= p;
        if (pn > 100000) throw CapExceeded("step1_poly: p^n too large");
    }
    if (window > 10000) throw CapExceeded("step1_poly: window capped at 10^4");
    if (window < pn + 1)
        throw ValidationError("step1_poly: window too small to contain x^(p^n)");
    std::size_t dom = window - static_cast<std::size_t>(pn);
    FqMatrix u(F, window, dom);
    for (std::size_t j = 0; j < dom; ++j) {
        u.set(j + pn, j, 1);
        u.add_at(j, j, F->neg(1));
    }
    auto ech = echelon_analyze(u);
    Step1Result r;
    r.window = window;
    r.h1_dim = ech.kernel.size();
    r.h0_dim = window - ech.rank;
    return r;
}

// Two-sided bar complex psi^n(A) (x) A^{(x)s} (x) M with the alternating face
// differential. The basis index puts the quotient coordinate most significant
// and the module coordinate least significant; the assembly shares no code
// with hh_complex, so it serves as an independent Tor oracle.
inline std::vector<std::size_t> tor_via_bar(const Algebra& A, const LeftModule& M, unsigned n,
                                            std::size_t smax, const EngineLimits& lim = {}) {
    validate_left_module(A, M);
    PsiQuotient q = psi(A, n);
    const Field& F = *A.field;
    std::size_t qd = q.quotient_dim;
    std::vector<std::uint64_t> apow(smax + 2, 1);
    for (std::size_t i = 1; i < apow.size(); ++i) apow[i] = apow[i - 1] * A.dim;
    if (qd * M.dim != 0 &&
        apow[smax] > lim.entry_cap / std::max<std::uint64_t>(1, qd * M.dim))
        throw CapExceeded("tor_via_bar: entry cap exceeded");
    BoundedComplex cx;
    cx.field = A.field;
    cx.dims.resize(smax + 1);
    for (std::size_t s = 0; s <= smax; ++s) cx.dims[s] = qd * apow[s] * M.dim;
    cx.boundaries.resize(smax + 1);
    for (std::size_t s = 1; s <= smax; ++s) {
        FqMatrix d(A.field, cx.dims[s - 1], cx.dims[s]);
        std::uint64_t block = apow[s] * M.dim;       // size below the quotient coordinate
        std::uint64_t block_lo = apow[s - 1] * M.dim;
        for (std::size_t c = 0; c < cx.dims[s]; ++c) {
            std::size_t qi = c / block;
            std::size_t mi = c % M.dim;
            std::vector<std::size_t> t(s);
            for (std::size_t j = 1; j <= s; ++j)
                t[j - 1] = (c / (apow[s - j] * M.dim)) % A.dim;
            // face 0: first tensor slot acts on the quotient coordinate
            {
                std::size_t rest = c % block_lo;
                const FqMatrix& act = q.action[t[0]];
                for (std::size_t q2 = 0; q2 < qd; ++q2) {
                    Elt v = act.get(q2, qi);
                    if (v) d.add_at(q2 * block_lo + rest, c, v);
                }
            }
            // inner faces: multiply adjacent slots
            for (std::size_t i = 1; i + 1 <= s; ++i) {
                Elt sgn = detail::sign_scalar(F, i);
                std::size_t hi = c / (apow[s - i + 1] * M.dim);   // q, t_1..t_{i-1}
                std::size_t lo = c % (apow[s - i - 1] * M.dim);   // t_{i+2}.., m
                const Vec& prod = A.mul[t[i - 1]][t[i]];
                for (std::size_t u = 0; u < A.dim; ++u) {
                    if (!prod[u]) continue;
                    std::size_t idx = (hi * A.dim + u) * (apow[s - i - 1] * M.dim) + lo;
                    d.add_at(idx, c, F.mul(sgn, prod[u]));
                }
            }
            // face s: last slot acts on the module coordinate
            {
                Elt sgn = detail::sign_scalar(F, s);
                std::size_t hi = c / (A.dim * M.dim);  // q, t_1..t_{s-1}
                const FqMatrix& act = M.act[t[s - 1]];
                for (std::size_t m2 = 0; m2 < M.dim; ++m2) {
                    Elt v = act.get(m2, mi);
                    if (v) d.add_at(hi * M.dim + m2, c, F.mul(sgn, v));
                }
            }
        }
        cx.boundaries[s] = std::move(d);
    }
    cx.verify_dd_zero();
    return cx.homology_dims();
}

// Kunneth comparison: per-degree dims of HH(A (x) B, Phi^n) against the
// graded tensor product of the factors' homology.
struct KunnethReport {
    std::vector<std::size_t> product_dims;   // H_k(A (x) B)
    std::vector<std::size_t> expected_dims;  // sum_{i+j=k} dims_A[i] * dims_B[j]
    std::vector<bool> degree_pass;
    bool pass = true;
};

inline KunnethReport kunneth_check(const Algebra& A, const Algebra& B_alg, unsigned n,
                                   std::size_t N, const EngineLimits& lim = {}) {
    Algebra AB = algebra_tensor(A, B_alg);
    auto hh = [&](const Algebra& X) {
        return hh_homology(X, phi_twist(X, regular_module(X), n), N, lim).dims;
    };
    auto ha = hh(A);
    auto hb = hh(B_alg);
    auto hab = hh(AB);
    KunnethReport rep;
    rep.product_dims = hab;
    rep.expected_dims.assign(hab.size(), 0);
    for (std::size_t k = 0; k < hab.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i)
            if (i < ha.size() && k - i < hb.size())
                rep.expected_dims[k] += ha[i] * hb[k - i];
    for (std::size_t k = 0; k < hab.size(); ++k) {
        bool ok = rep.product_dims[k] == rep.expected_dims[k];
        rep.degree_pass.push_back(ok);
        rep.pass = rep.pass && ok;
    }
    return rep;
}

}  // namespace hwb
