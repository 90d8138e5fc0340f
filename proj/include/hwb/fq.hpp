#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hwb {

// Encoded element of F_{p^k}: base-p digit i is the coefficient of w^i in the
// power basis of the modulus polynomial, code = sum c_i * p^i.
using Elt = std::uint64_t;
using Vec = std::vector<Elt>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as low-to-high coefficient vectors, trailing zeros trimmed.
using PolyFp = std::vector<std::uint32_t>;

inline void poly_trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic nonconstant.
inline PolyFp poly_mod(PolyFp a, const PolyFp& b, std::uint64_t p) {
    poly_trim(a);
    while (a.size() >= b.size()) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>(
                (a[shift + i] + p - std::uint64_t(lead) * b[i] % p) % p);
        poly_trim(a);
    }
    return a;
}

inline PolyFp poly_mul(const PolyFp& a, const PolyFp& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyFp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return c;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool poly_irreducible(const PolyFp& f, std::uint64_t p) {
    std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        // enumerate monic divisor candidates of degree d
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            PolyFp g(d + 1, 0);
            std::uint64_t tt = t;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(tt % p);
                tt /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

// An extension field F_{p^k} with a fixed monic irreducible modulus polynomial.
// The default modulus is the lexicographically smallest monic irreducible of
// degree k (coefficients compared from the highest non-leading one down), so
// field construction is fully deterministic.
class Field {
public:
    static constexpr int kMaxDegree = 16;

    static FieldPtr make(std::uint64_t p, int k) {
        return std::shared_ptr<const Field>(new Field(p, k, smallest_irreducible(p, k)));
    }

    static FieldPtr make(std::uint64_t p, int k, std::vector<std::uint32_t> modulus) {
        return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
    }

    std::uint64_t p() const { return p_; }
    int k() const { return k_; }
    std::uint64_t card() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool prime_field() const { return k_ == 1; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    // The power-basis generator w (equals p as a code); for k == 1 this is
    // just the scalar 1.
    Elt generator() const { return k_ == 1 ? 1 : static_cast<Elt>(p_); }

    Elt from_int(std::uint64_t n) const { return n % p_; }

    std::vector<std::uint32_t> digits(Elt a) const {
        std::vector<std::uint32_t> d(k_);
        for (int i = 0; i < k_; ++i) {
            d[i] = static_cast<std::uint32_t>(a % p_);
            a /= p_;
        }
        return d;
    }

    Elt encode(const std::vector<std::uint32_t>& d) const {
        Elt a = 0;
        for (int i = k_ - 1; i >= 0; --i) a = a * p_ + (d[i] % p_);
        return a;
    }

    Elt add(Elt a, Elt b) const {
        if (p_ == 2) return a ^ b;
        Elt r = 0, m = 1;
        for (int i = 0; i < k_; ++i) {
            r += m * ((a % p_ + b % p_) % p_);
            a /= p_;
            b /= p_;
            m *= p_;
        }
        return r;
    }

    Elt neg(Elt a) const {
        if (p_ == 2) return a;
        Elt r = 0, m = 1;
        for (int i = 0; i < k_; ++i) {
            r += m * ((p_ - a % p_) % p_);
            a /= p_;
            m *= p_;
        }
        return r;
    }

    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

    Elt mul(Elt a, Elt b) const {
        if (mul_table_.size()) return mul_table_[a * q_ + b];
        return mul_slow(a, b);
    }

    Elt pow(Elt a, std::uint64_t e) const {
        Elt r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Frobenius a -> a^p applied n times.
    Elt frobenius(Elt a, unsigned n = 1) const {
        for (unsigned i = 0; i < n; ++i) a = pow(a, p_);
        return a;
    }

    Elt inv(Elt a) const {
        if (a == 0) throw ValidationError("field: inverse of zero");
        if (inv_table_.size()) return inv_table_[a];
        return pow(a, q_ - 2);
    }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

    std::string name() const {
        return "F" + std::to_string(q_);
    }

private:
    Field(std::uint64_t p, int k, std::vector<std::uint32_t> modulus)
        : p_(p), k_(k), modulus_(std::move(modulus)) {
        if (!detail::is_prime(p_))
            throw ValidationError("field: p = " + std::to_string(p_) + " is not prime");
        if (k_ < 1 || k_ > kMaxDegree)
            throw ValidationError("field: extension degree k must be in [1, 16]");
        if (modulus_.size() != static_cast<std::size_t>(k_) + 1 || modulus_.back() != 1)
            throw ValidationError("field: modulus must be monic of degree k");
        for (auto& c : modulus_) c %= static_cast<std::uint32_t>(p_);
        if (k_ > 1 && !detail::poly_irreducible(modulus_, p_))
            throw ValidationError("field: modulus polynomial is reducible");
        q_ = 1;
        for (int i = 0; i < k_; ++i) {
            if (q_ > (std::uint64_t(1) << 62) / p_)
                throw ValidationError("field: p^k does not fit in 62 bits");
            q_ *= p_;
        }
        if (q_ <= 256) {
            mul_table_.resize(q_ * q_);
            for (Elt a = 0; a < q_; ++a)
                for (Elt b = 0; b < q_; ++b)
                    mul_table_[a * q_ + b] = static_cast<std::uint8_t>(mul_slow(a, b));
            inv_table_.resize(q_);
            for (Elt a = 1; a < q_; ++a) inv_table_[a] = static_cast<std::uint8_t>(pow_slow(a, q_ - 2));
        }
    }

    Elt mul_slow(Elt a, Elt b) const {
        // polynomial product of digit vectors reduced mod modulus
        std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            std::uint64_t lead = prod[d];
            if (!lead) continue;
            prod[d] = 0;
            for (int i = 0; i < k_; ++i)
                prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - lead * modulus_[i] % p_)) % p_;
        }
        Elt r = 0;
        for (int i = k_ - 1; i >= 0; --i) r = r * p_ + prod[i];
        return r;
    }

    Elt pow_slow(Elt a, std::uint64_t e) const {
        Elt r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }

    static std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, int k) {
        if (!detail::is_prime(p)) throw ValidationError("field: p is not prime");
        if (k < 1 || k > kMaxDegree) throw ValidationError("field: k out of range [1, 16]");
        if (k == 1) return {0, 1};  // x
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            // t's base-p digits, most significant first, are the coefficients
            // c_{k-1} ... c_0, so smaller t means lexicographically smaller
            // polynomial when read from the top coefficient down.
            std::vector<std::uint32_t> f(k + 1, 0);
            f[k] = 1;
            std::uint64_t tt = t;
            for (int i = 0; i < k; ++i) {
                f[i] = static_cast<std::uint32_t>(tt % p);
                tt /= p;
            }
            if (detail::poly_irreducible(f, p)) return f;
        }
        throw ValidationError("field: no irreducible polynomial found");  // unreachable
    }

    std::uint64_t p_;
    int k_;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t q_ = 0;
    std::vector<std::uint8_t> mul_table_;
    std::vector<std::uint8_t> inv_table_;
};

}  // namespace hwb
