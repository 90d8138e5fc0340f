#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fq_matrix.hpp"

namespace hwb {

enum class FunctorKind { gamma, sym, tensor };

inline FunctorKind functor_kind_from(const std::string& s) {
    if (s == "gamma") return FunctorKind::gamma;
    if (s == "sym") return FunctorKind::sym;
    if (s == "tensor") return FunctorKind::tensor;
    throw ValidationError("functor kind must be gamma, sym or tensor (got '" + s + "')");
}

inline const char* functor_kind_name(FunctorKind k) {
    switch (k) {
        case FunctorKind::gamma: return "gamma";
        case FunctorKind::sym: return "sym";
        default: return "tensor";
    }
}

namespace detail {

constexpr unsigned kMaxFunctorDegree = 6;

inline void check_functor_args(unsigned d, std::size_t m) {
    if (d == 0 || d > kMaxFunctorDegree)
        throw ValidationError("functor degree d must satisfy 1 <= d <= " +
                              std::to_string(kMaxFunctorDegree));
    double size = 1;
    for (unsigned i = 0; i < d; ++i) size *= double(m);
    if (size > 5e6) throw CapExceeded("functor: m^d too large to enumerate");
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// all d-tuples with entries in 0..m-1, lexicographic
inline std::vector<std::vector<unsigned>> all_tuples(unsigned d, std::size_t m) {
    std::vector<std::vector<unsigned>> out;
    if (m == 0) return out;
    std::vector<unsigned> cur(d, 0);
    for (;;) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] + 1 == m) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

// weakly increasing d-tuples (canonical multiset representatives), lexicographic
inline std::vector<std::vector<unsigned>> multiset_reps(unsigned d, std::size_t m) {
    std::vector<std::vector<unsigned>> out;
    if (m == 0) return out;
    std::vector<unsigned> cur(d, 0);
    for (;;) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] + 1 == m) --i;
        if (i < 0) break;
        unsigned v = cur[i] + 1;
        for (unsigned j = i; j < d; ++j) cur[j] = v;
    }
    return out;
}

inline std::size_t multiset_index(const std::vector<std::vector<unsigned>>& reps,
                                  std::vector<unsigned> t) {
    std::sort(t.begin(), t.end());
    auto it = std::lower_bound(reps.begin(), reps.end(), t);
    return static_cast<std::size_t>(it - reps.begin());
}

}  // namespace detail

// dim F(V) for dim V = m: m^d for the tensor power, C(m+d-1, d) for both the
// symmetric and the divided power.
inline std::size_t functor_dim(FunctorKind kind, unsigned d, std::size_t m) {
    detail::check_functor_args(d, m);
    if (kind == FunctorKind::tensor) {
        std::size_t r = 1;
        for (unsigned i = 0; i < d; ++i) r *= m;
        return r;
    }
    return detail::binomial(m + d - 1, d);
}

// The map F(f) on basis coordinates for a linear map f : V -> W.
//
//   tensor: (f tensor ... tensor f) on the tuple basis.
//   sym:    coinvariants of the tuple basis; columns/rows indexed by sorted
//           representatives, S(f)[nu, mu] = sum over tuples t with
//           multiset(t) = nu of prod_i f[t_i, rep(mu)_i].
//   gamma:  invariants, expressed in the orbit-sum basis (characteristic-free,
//           no division): G(f)[nu, mu] = sum over tuples t with
//           multiset(t) = mu of prod_i f[rep(nu)_i, t_i].
inline FqMatrix functor_apply(FunctorKind kind, unsigned d, const FqMatrix& f) {
    std::size_t m = f.cols(), w = f.rows();
    detail::check_functor_args(d, std::max(m, w));
    const Field& F = *f.field();
    auto prod = [&](const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) {
        Elt p = 1;
        for (unsigned i = 0; i < d && p; ++i) p = F.mul(p, f.get(rows[i], cols[i]));
        return p;
    };
    if (kind == FunctorKind::tensor) {
        auto src = detail::all_tuples(d, m);
        auto dst = detail::all_tuples(d, w);
        FqMatrix out(f.field(), dst.size(), src.size());
        for (std::size_t r = 0; r < dst.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c) {
                Elt p = prod(dst[r], src[c]);
                if (p) out.set(r, c, p);
            }
        return out;
    }
    auto src_reps = detail::multiset_reps(d, m);
    auto dst_reps = detail::multiset_reps(d, w);
    FqMatrix out(f.field(), dst_reps.size(), src_reps.size());
    if (kind == FunctorKind::sym) {
        // iterate over all target tuples and fold them onto their sorted class
        auto dst_all = detail::all_tuples(d, w);
        for (auto& t : dst_all) {
            std::size_t r = detail::multiset_index(dst_reps, t);
            for (std::size_t c = 0; c < src_reps.size(); ++c) {
                Elt p = prod(t, src_reps[c]);
                if (p) out.add_at(r, c, p);
            }
        }
    } else {
        // iterate over all source tuples grouped by orbit
        auto src_all = detail::all_tuples(d, m);
        for (auto& t : src_all) {
            std::size_t c = detail::multiset_index(src_reps, t);
            for (std::size_t r = 0; r < dst_reps.size(); ++r) {
                Elt p = prod(dst_reps[r], t);
                if (p) out.add_at(r, c, p);
            }
        }
    }
    return out;
}

// The pairing Gamma^d(V) x S^d(V*) -> F on the orbit-sum / representative
// bases: P[mu, nu] counts tuples in the orbit of mu equal to rep(nu). Returns
// the matrix; the duality check asks for invertibility.
inline FqMatrix gamma_sym_pairing(const FieldPtr& field, unsigned d, std::size_t m) {
    detail::check_functor_args(d, m);
    auto reps = detail::multiset_reps(d, m);
    FqMatrix p(field, reps.size(), reps.size());
    for (auto& t : detail::all_tuples(d, m)) {
        std::size_t mu = detail::multiset_index(reps, t);
        auto it = std::lower_bound(reps.begin(), reps.end(), t);
        if (it != reps.end() && *it == t)
            p.add_at(mu, static_cast<std::size_t>(it - reps.begin()), 1);
    }
    return p;
}

inline bool gamma_sym_duality_check(const FieldPtr& field, unsigned d, std::size_t m) {
    FqMatrix p = gamma_sym_pairing(field, d, m);
    return rank_of(p) == p.rows();
}

}  // namespace hwb
