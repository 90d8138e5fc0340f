#pragma once

#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace hwb {

// A finite unital ring presented by basis and structure constants. Unlike
// Algebra, no commutativity (and optionally no associativity) is assumed:
// the multiplication table carries no symmetry.
struct LevelRing {
    FieldPtr field;
    std::size_t dim = 0;
    Vec unit;
    std::vector<std::vector<Vec>> mul;

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
                for (std::size_t t = 0; t < dim; ++t)
                    if (mul[i][j][t]) r[t] = F.add(r[t], F.mul(c, mul[i][j][t]));
            }
        }
        return r;
    }

    Vec power(const Vec& x, unsigned m) const {
        // left-normed power x(x(x...)); the rings here are associative in
        // practice, but no associativity is required to evaluate this
        Vec r = x;
        for (unsigned i = 1; i < m; ++i) r = multiply(x, r);
        return r;
    }

    void check_unital() const {
        for (std::size_t i = 0; i < dim; ++i) {
            if (multiply(unit, basis_vector(i)) != basis_vector(i) ||
                multiply(basis_vector(i), unit) != basis_vector(i))
                throw ValidationError("ring: unit law fails at basis element " + std::to_string(i));
        }
    }
};

inline LevelRing ring_from_field(const FieldPtr& coeff) {
    LevelRing r;
    r.field = coeff;
    r.dim = 1;
    r.unit = {1};
    r.mul = {{{1}}};
    return r;
}

inline LevelRing ring_from_algebra(const Algebra& a) {
    return LevelRing{a.field, a.dim, a.unit, a.mul};
}

// Levels 0..L of finite rings with face/degeneracy ring homomorphisms.
struct SimplicialRing {
    std::vector<LevelRing> levels;
    // face[n][i] : level n -> level n-1 (1 <= n <= L, 0 <= i <= n)
    std::vector<std::vector<FqMatrix>> face;
    // degen[n][i] : level n -> level n+1 (0 <= n <= L-1, 0 <= i <= n)
    std::vector<std::vector<FqMatrix>> degen;
    std::string name;

    std::size_t top_level() const { return levels.size() - 1; }
};

namespace detail {

inline bool is_ring_hom(const LevelRing& src, const LevelRing& dst, const FqMatrix& t) {
    if (t.apply(src.unit) != dst.unit) return false;
    for (std::size_t i = 0; i < src.dim; ++i)
        for (std::size_t j = 0; j < src.dim; ++j) {
            Vec lhs = t.apply(src.mul[i][j]);
            Vec rhs = dst.multiply(t.apply(src.basis_vector(i)), t.apply(src.basis_vector(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace detail

// Checks every simplicial identity and every homomorphism property in range;
// returns the list of violations (empty means valid).
inline std::vector<std::string> simplicial_validate(const SimplicialRing& s) {
    std::vector<std::string> bad;
    std::size_t L = s.top_level();
    auto tag = [](const std::string& what, std::size_t n, std::size_t i, std::size_t j) {
        return what + " at level " + std::to_string(n) + " (i=" + std::to_string(i) +
               ", j=" + std::to_string(j) + ")";
    };
    for (std::size_t n = 2; n <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                if (s.face[n - 1][i] * s.face[n][j] != s.face[n - 1][j - 1] * s.face[n][i])
                    bad.push_back(tag("d_i d_j != d_{j-1} d_i", n, i, j));
    for (std::size_t n = 0; n + 2 <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                if (s.degen[n + 1][i] * s.degen[n][j] != s.degen[n + 1][j + 1] * s.degen[n][i])
                    bad.push_back(tag("s_i s_j != s_{j+1} s_i", n, i, j));
    for (std::size_t n = 0; n + 1 <= L; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i) {
                FqMatrix lhs = s.face[n + 1][i] * s.degen[n][j];
                if (i == j || i == j + 1) {
                    if (lhs != FqMatrix::identity(s.levels[n].field, s.levels[n].dim))
                        bad.push_back(tag("d_i s_j != id", n, i, j));
                } else if (i < j) {
                    if (n == 0 || lhs != s.degen[n - 1][j - 1] * s.face[n][i])
                        bad.push_back(tag("d_i s_j != s_{j-1} d_i", n, i, j));
                } else {  // i > j + 1
                    if (n == 0 || lhs != s.degen[n - 1][j] * s.face[n][i - 1])
                        bad.push_back(tag("d_i s_j != s_j d_{i-1}", n, i, j));
                }
            }
    for (std::size_t n = 1; n <= L; ++n)
        for (std::size_t i = 0; i < s.face[n].size(); ++i)
            if (!detail::is_ring_hom(s.levels[n], s.levels[n - 1], s.face[n][i]))
                bad.push_back("face " + std::to_string(i) + " at level " + std::to_string(n) +
                              " is not a ring homomorphism");
    for (std::size_t n = 0; n + 1 <= L; ++n)
        for (std::size_t i = 0; i < s.degen[n].size(); ++i)
            if (!detail::is_ring_hom(s.levels[n], s.levels[n + 1], s.degen[n][i]))
                bad.push_back("degeneracy " + std::to_string(i) + " at level " +
                              std::to_string(n) + " is not a ring homomorphism");
    return bad;
}

// Moore complex N_n = intersection of ker d_i, i > 0, with boundary d_0.
struct MooreReport {
    std::size_t up_to = 0;
    std::vector<std::size_t> level_dims;
    std::vector<std::size_t> moore_dims;  // dim N_n, 0 <= n <= up_to + 1
    std::vector<std::size_t> pi;          // homotopy dimensions, 0 <= n <= up_to
};

namespace detail {

// Basis matrix (columns) of N_n inside level n.
inline FqMatrix moore_subspace(const SimplicialRing& s, std::size_t n) {
    const LevelRing& lev = s.levels[n];
    if (n == 0) return FqMatrix::identity(lev.field, lev.dim);
    std::vector<const FqMatrix*> parts;
    for (std::size_t i = 1; i <= n; ++i) parts.push_back(&s.face[n][i]);
    FqMatrix stacked = vstack(parts);
    auto ech = echelon_analyze(stacked);
    return from_columns(lev.field, lev.dim, ech.kernel);
}

}  // namespace detail

inline MooreReport moore_homotopy(const SimplicialRing& s, std::size_t up_to) {
    std::size_t L = s.top_level();
    if (up_to + 1 > L)
        throw ValidationError("moore_homotopy: truncation too short; need up_to <= L-1");
    MooreReport rep;
    rep.up_to = up_to;
    for (auto& lev : s.levels) rep.level_dims.push_back(lev.dim);
    std::vector<FqMatrix> basis(up_to + 2);
    for (std::size_t n = 0; n <= up_to + 1; ++n) {
        basis[n] = detail::moore_subspace(s, n);
        rep.moore_dims.push_back(basis[n].cols());
    }
    rep.pi.resize(up_to + 1);
    for (std::size_t n = 0; n <= up_to; ++n) {
        std::size_t ker;
        if (n == 0)
            ker = basis[0].cols();
        else
            ker = basis[n].cols() - rank_of(s.face[n][0] * basis[n]);
        std::size_t im = rank_of(s.face[n + 1][0] * basis[n + 1]);
        rep.pi[n] = ker - im;
    }
    return rep;
}

// A cosimplicial finite set truncated at L: level sizes plus coface and
// codegeneracy index tables.
struct CosimplicialSet {
    std::vector<std::size_t> sizes;  // |Y_n|, 0 <= n <= L
    // coface[n][i] : Y_{n-1} -> Y_n (1 <= n <= L, 0 <= i <= n)
    std::vector<std::vector<std::vector<std::size_t>>> coface;
    // codegen[n][i] : Y_{n+1} -> Y_n (0 <= n <= L-1, 0 <= i <= n)
    std::vector<std::vector<std::vector<std::size_t>>> codegen;
    std::string name;

    std::size_t top_level() const { return sizes.size() - 1; }
};

inline void validate_cosimplicial(const CosimplicialSet& y) {
    std::size_t L = y.top_level();
    if (y.coface.size() != L + 1 || y.codegen.size() + 1 < 1)
        throw ValidationError("cosimplicial: table shape mismatch");
    auto in_range = [](const std::vector<std::size_t>& f, std::size_t dom, std::size_t cod) {
        if (f.size() != dom) return false;
        for (auto v : f)
            if (v >= cod) return false;
        return true;
    };
    for (std::size_t n = 1; n <= L; ++n) {
        if (y.coface[n].size() != n + 1)
            throw ValidationError("cosimplicial: need n+1 cofaces into level " + std::to_string(n));
        for (auto& f : y.coface[n])
            if (!in_range(f, y.sizes[n - 1], y.sizes[n]))
                throw ValidationError("cosimplicial: coface out of range at level " +
                                      std::to_string(n));
    }
    for (std::size_t n = 0; n + 1 <= L; ++n) {
        if (y.codegen[n].size() != n + 1)
            throw ValidationError("cosimplicial: need n+1 codegeneracies from level " +
                                  std::to_string(n + 1));
        for (auto& f : y.codegen[n])
            if (!in_range(f, y.sizes[n + 1], y.sizes[n]))
                throw ValidationError("cosimplicial: codegeneracy out of range at level " +
                                      std::to_string(n));
    }
    auto comp = [](const std::vector<std::size_t>& g, const std::vector<std::size_t>& f) {
        std::vector<std::size_t> h(f.size());
        for (std::size_t x = 0; x < f.size(); ++x) h[x] = g[f[x]];
        return h;
    };
    // d^j d^i = d^i d^{j-1} for i < j
    for (std::size_t n = 1; n + 1 <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n + 1; ++j)
                if (comp(y.coface[n + 1][j], y.coface[n][i]) !=
                    comp(y.coface[n + 1][i], y.coface[n][j - 1]))
                    throw ValidationError("cosimplicial: coface identity fails at level " +
                                          std::to_string(n));
    // s^j s^i = s^i s^{j+1} for i <= j
    for (std::size_t n = 0; n + 2 <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                if (comp(y.codegen[n][i], y.codegen[n + 1][j + 1]) !=
                    comp(y.codegen[n][j], y.codegen[n + 1][i]))
                    throw ValidationError("cosimplicial: codegeneracy identity fails at level " +
                                          std::to_string(n));
    // s^j d^i rules
    for (std::size_t n = 0; n + 1 <= L; ++n) {
        std::vector<std::size_t> id(y.sizes[n]);
        for (std::size_t x = 0; x < id.size(); ++x) id[x] = x;
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i) {
                auto lhs = comp(y.codegen[n][j], y.coface[n + 1][i]);
                if (i == j || i == j + 1) {
                    if (lhs != id)
                        throw ValidationError("cosimplicial: s^j d^i != id at level " +
                                              std::to_string(n));
                } else if (i < j) {
                    if (n >= 1 && lhs != comp(y.coface[n][i], y.codegen[n - 1][j - 1]))
                        throw ValidationError("cosimplicial: mixed identity fails (i<j)");
                } else {
                    if (n >= 1 && lhs != comp(y.coface[n][i - 1], y.codegen[n - 1][j]))
                        throw ValidationError("cosimplicial: mixed identity fails (i>j+1)");
                }
            }
    }
}

namespace detail {

inline std::vector<std::vector<unsigned>> monotone_maps(unsigned m, unsigned n) {
    // weakly increasing (m+1)-tuples with values in 0..n, lexicographic
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(m + 1, 0);
    for (;;) {
        out.push_back(cur);
        int i = static_cast<int>(m);
        while (i >= 0 && cur[i] == n) --i;
        if (i < 0) break;
        unsigned v = cur[i] + 1;
        for (unsigned j = static_cast<unsigned>(i); j <= m; ++j) cur[j] = v;
    }
    return out;
}

}  // namespace detail

// The cosimplicial set n |-> Hom([m], [n]) of monotone tuples; m = 0 is the
// standard preset Y_n = {0..n}. Cofaces/codegeneracies act by postcomposition.
inline CosimplicialSet simplex_cosimplicial(unsigned m, std::size_t L) {
    CosimplicialSet y;
    std::vector<std::vector<std::vector<unsigned>>> tuples(L + 1);
    for (std::size_t n = 0; n <= L; ++n) {
        tuples[n] = detail::monotone_maps(m, static_cast<unsigned>(n));
        y.sizes.push_back(tuples[n].size());
    }
    auto index_of = [&](std::size_t n, const std::vector<unsigned>& t) {
        auto it = std::lower_bound(tuples[n].begin(), tuples[n].end(), t);
        return static_cast<std::size_t>(it - tuples[n].begin());
    };
    y.coface.resize(L + 1);
    for (std::size_t n = 1; n <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            std::vector<std::size_t> f(y.sizes[n - 1]);
            for (std::size_t x = 0; x < f.size(); ++x) {
                std::vector<unsigned> t = tuples[n - 1][x];
                for (auto& v : t)
                    if (v >= i) ++v;  // delta^i skips value i
                f[x] = index_of(n, t);
            }
            y.coface[n].push_back(std::move(f));
        }
    y.codegen.resize(L);
    for (std::size_t n = 0; n + 1 <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            std::vector<std::size_t> f(y.sizes[n + 1]);
            for (std::size_t x = 0; x < f.size(); ++x) {
                std::vector<unsigned> t = tuples[n + 1][x];
                for (auto& v : t)
                    if (v > i) --v;  // sigma^i collapses i, i+1
                f[x] = index_of(n, t);
            }
            y.codegen[n].push_back(std::move(f));
        }
    y.name = "simplex(" + std::to_string(m) + ")";
    validate_cosimplicial(y);
    return y;
}

inline CosimplicialSet standard_cosimplicial(std::size_t L) { return simplex_cosimplicial(0, L); }

inline CosimplicialSet constant_cosimplicial(std::size_t L) {
    CosimplicialSet y;
    y.sizes.assign(L + 1, 1);
    y.coface.resize(L + 1);
    for (std::size_t n = 1; n <= L; ++n)
        y.coface[n].assign(n + 1, std::vector<std::size_t>{0});
    y.codegen.resize(L);
    for (std::size_t n = 0; n + 1 <= L; ++n)
        y.codegen[n].assign(n + 1, std::vector<std::size_t>{0});
    y.name = "constant";
    validate_cosimplicial(y);
    return y;
}

// Level n is the ring of R-valued functions on Y_n with pointwise operations;
// faces and degeneracies are precomposition with Y's cofaces/codegeneracies.
inline SimplicialRing function_simplicial_ring(const CosimplicialSet& y, const LevelRing& r) {
    validate_cosimplicial(y);
    r.check_unital();
    std::size_t L = y.top_level();
    std::size_t rd = r.dim;
    SimplicialRing s;
    s.name = "Fun(" + y.name + ", q=" + std::to_string(r.field->card()) + ")";
    for (std::size_t n = 0; n <= L; ++n) {
        LevelRing lev;
        lev.field = r.field;
        lev.dim = y.sizes[n] * rd;
        lev.unit.assign(lev.dim, 0);
        for (std::size_t p = 0; p < y.sizes[n]; ++p)
            for (std::size_t t = 0; t < rd; ++t) lev.unit[p * rd + t] = r.unit[t];
        lev.mul.assign(lev.dim, std::vector<Vec>(lev.dim, Vec(lev.dim, 0)));
        for (std::size_t p = 0; p < y.sizes[n]; ++p)
            for (std::size_t t = 0; t < rd; ++t)
                for (std::size_t t2 = 0; t2 < rd; ++t2)
                    for (std::size_t u = 0; u < rd; ++u)
                        lev.mul[p * rd + t][p * rd + t2][p * rd + u] = r.mul[t][t2][u];
        s.levels.push_back(std::move(lev));
    }
    // precomposition: (d_i f)(y') = f(delta^i y')
    s.face.resize(L + 1);
    for (std::size_t n = 1; n <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            FqMatrix m(r.field, y.sizes[n - 1] * rd, y.sizes[n] * rd);
            for (std::size_t p = 0; p < y.sizes[n - 1]; ++p)
                for (std::size_t t = 0; t < rd; ++t)
                    m.set(p * rd + t, y.coface[n][i][p] * rd + t, 1);
            s.face[n].push_back(std::move(m));
        }
    s.degen.resize(L);
    for (std::size_t n = 0; n + 1 <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            FqMatrix m(r.field, y.sizes[n + 1] * rd, y.sizes[n] * rd);
            for (std::size_t p = 0; p < y.sizes[n + 1]; ++p)
                for (std::size_t t = 0; t < rd; ++t)
                    m.set(p * rd + t, y.codegen[n][i][p] * rd + t, 1);
            s.degen[n].push_back(std::move(m));
        }
    return s;
}

// Full-enumeration check of the identity x^m = x over the whole ring.
inline bool power_identity_check(const LevelRing& r, unsigned m, std::uint64_t card_cap = 1000000) {
    if (m < 2) throw ValidationError("power_identity_check: m must be >= 2");
    std::uint64_t q = r.field->card();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r.dim; ++i) {
        if (total > card_cap / q)
            throw CapExceeded("power_identity_check: ring has more than " +
                              std::to_string(card_cap) + " elements; unverifiable by enumeration");
        total *= q;
    }
    Vec x(r.dim, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < r.dim; ++i) {
            x[i] = c % q;
            c /= q;
        }
        if (r.power(x, m) != x) return false;
    }
    return true;
}

// The explicit element z = s_0(xy) - s_1(x) s_0(y) for x, y in N_n with x a
// cycle: z lies in N_{n+1} and its Moore boundary is xy.
struct WitnessReport {
    Vec z;
    Vec xy;
    bool ok = true;
    std::vector<std::string> failures;
};

inline WitnessReport lemma21_witness(const SimplicialRing& s, std::size_t n, const Vec& x,
                                     const Vec& y) {
    if (n < 1) throw ValidationError("lemma21_witness: need n >= 1");
    if (n + 1 > s.top_level())
        throw ValidationError("lemma21_witness: level n+1 not present in the truncation");
    const Field& F = *s.levels[n].field;
    for (std::size_t i = 1; i <= n; ++i) {
        auto zero_or = [&](const Vec& v, const std::string& who) {
            for (Elt e : s.face[n][i].apply(v))
                if (e)
                    throw ValidationError("lemma21_witness: " + who +
                                          " is not in the Moore subspace (face " +
                                          std::to_string(i) + " nonzero)");
        };
        zero_or(x, "x");
        zero_or(y, "y");
    }
    for (Elt e : s.face[n][0].apply(x))
        if (e) throw ValidationError("lemma21_witness: x is not a cycle (face 0 nonzero)");
    const LevelRing& up = s.levels[n + 1];
    Vec xy = s.levels[n].multiply(x, y);
    Vec z = up.multiply(s.degen[n][1].apply(x), s.degen[n][0].apply(y));
    Vec s0xy = s.degen[n][0].apply(xy);
    for (std::size_t t = 0; t < z.size(); ++t) z[t] = F.sub(s0xy[t], z[t]);
    WitnessReport rep;
    rep.z = z;
    rep.xy = xy;
    for (std::size_t i = 1; i <= n + 1; ++i) {
        Vec img = s.face[n + 1][i].apply(z);
        for (Elt e : img)
            if (e) {
                rep.ok = false;
                rep.failures.push_back("face " + std::to_string(i) + " of z is nonzero");
                break;
            }
    }
    if (s.face[n + 1][0].apply(z) != xy) {
        rep.ok = false;
        rep.failures.push_back("face 0 of z differs from x*y");
    }
    return rep;
}

// Randomized witness trials: sample cycles x in N_n and elements y in N_n.
struct WitnessTrialSummary {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;  // cycle space was zero-dimensional
    std::size_t cycle_dim = 0;
    std::size_t moore_dim = 0;
};

inline WitnessTrialSummary lemma21_trials(const SimplicialRing& s, std::size_t n,
                                          std::size_t trials, std::uint64_t seed) {
    const LevelRing& lev = s.levels[n];
    const Field& F = *lev.field;
    std::vector<const FqMatrix*> parts;
    for (std::size_t i = 1; i <= n; ++i) parts.push_back(&s.face[n][i]);
    FqMatrix moore_basis =
        n == 0 ? FqMatrix::identity(lev.field, lev.dim)
               : from_columns(lev.field, lev.dim, echelon_analyze(vstack(parts)).kernel);
    parts.insert(parts.begin(), &s.face[n][0]);
    FqMatrix cycle_basis = from_columns(lev.field, lev.dim, echelon_analyze(vstack(parts)).kernel);
    WitnessTrialSummary sum;
    sum.trials = trials;
    sum.cycle_dim = cycle_basis.cols();
    sum.moore_dim = moore_basis.cols();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elt> dist(0, F.card() - 1);
    auto sample = [&](const FqMatrix& basis) {
        std::vector<Elt> coeff(basis.cols());
        for (auto& c : coeff) c = dist(rng);
        return basis.apply(coeff);
    };
    for (std::size_t t = 0; t < trials; ++t) {
        if (cycle_basis.cols() == 0) {
            ++sum.skipped;
            ++sum.passed;  // z = 0 trivially satisfies every face equation
            continue;
        }
        Vec x = sample(cycle_basis);
        Vec y = sample(moore_basis);
        if (lemma21_witness(s, n, x, y).ok) ++sum.passed;
    }
    return sum;
}

}  // namespace hwb
