#pragma once

#include <cstdint>
#include <cstring>
#include <random>
#include <vector>

#include "fq.hpp"

namespace hwb {

// Dense matrix over F_q, q <= 256. Storage is bit-packed 64 entries per word
// when q == 2 and one byte per entry otherwise. All homology in the project
// reduces to ranks/kernels of these.
class FqMatrix {
public:
    FqMatrix() = default;

    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols) {
        if (field_->card() > 256)
            throw CapExceeded("FqMatrix: fields with q > 256 are not supported (q = " +
                              std::to_string(field_->card()) + ")");
        if (gf2()) {
            wpr_ = (cols_ + 63) / 64;
            bits_.assign(rows_ * wpr_, 0);
        } else {
            bytes_.assign(rows_ * cols_, 0);
        }
    }

    static FqMatrix identity(FieldPtr field, std::size_t n) {
        FqMatrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static FqMatrix random(FieldPtr field, std::size_t rows, std::size_t cols,
                           std::mt19937_64& rng) {
        FqMatrix m(field, rows, cols);
        std::uniform_int_distribution<Elt> dist(0, field->card() - 1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, dist(rng));
        return m;
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool gf2() const { return field_->card() == 2; }

    Elt get(std::size_t i, std::size_t j) const {
        if (gf2()) return (bits_[i * wpr_ + j / 64] >> (j % 64)) & 1;
        return bytes_[i * cols_ + j];
    }

    void set(std::size_t i, std::size_t j, Elt v) {
        if (gf2()) {
            std::uint64_t& w = bits_[i * wpr_ + j / 64];
            std::uint64_t mask = std::uint64_t(1) << (j % 64);
            w = (v & 1) ? (w | mask) : (w & ~mask);
        } else {
            bytes_[i * cols_ + j] = static_cast<std::uint8_t>(v);
        }
    }

    void add_at(std::size_t i, std::size_t j, Elt v) { set(i, j, field_->add(get(i, j), v)); }

    bool is_zero() const {
        if (gf2()) {
            for (auto w : bits_)
                if (w) return false;
            return true;
        }
        for (auto b : bytes_)
            if (b) return false;
        return true;
    }

    bool operator==(const FqMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (get(i, j) != o.get(i, j)) return false;
        return true;
    }
    bool operator!=(const FqMatrix& o) const { return !(*this == o); }

    FqMatrix transpose() const {
        FqMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, get(i, j));
        return t;
    }

    FqMatrix operator*(const FqMatrix& b) const {
        if (cols_ != b.rows_) throw ValidationError("FqMatrix: shape mismatch in product");
        FqMatrix c(field_, rows_, b.cols_);
        if (gf2()) {
            for (std::size_t i = 0; i < rows_; ++i) {
                std::uint64_t* ci = &c.bits_[i * c.wpr_];
                for (std::size_t k = 0; k < cols_; ++k)
                    if (get(i, k)) {
                        const std::uint64_t* bk = &b.bits_[k * b.wpr_];
                        for (std::size_t w = 0; w < b.wpr_; ++w) ci[w] ^= bk[w];
                    }
            }
        } else {
            const Field& F = *field_;
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t k = 0; k < cols_; ++k) {
                    Elt a = get(i, k);
                    if (!a) continue;
                    for (std::size_t j = 0; j < b.cols_; ++j) {
                        Elt bv = b.get(k, j);
                        if (bv) c.set(i, j, F.add(c.get(i, j), F.mul(a, bv)));
                    }
                }
        }
        return c;
    }

    std::vector<Elt> apply(const std::vector<Elt>& v) const {
        if (v.size() != cols_) throw ValidationError("FqMatrix: vector length mismatch");
        std::vector<Elt> r(rows_, 0);
        const Field& F = *field_;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!v[j]) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                Elt a = get(i, j);
                if (a) r[i] = F.add(r[i], F.mul(a, v[j]));
            }
        }
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        if (gf2())
            for (std::size_t w = 0; w < wpr_; ++w) std::swap(bits_[a * wpr_ + w], bits_[b * wpr_ + w]);
        else
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(bytes_[a * cols_ + j], bytes_[b * cols_ + j]);
    }

    // row[dst] += c * row[src], starting at column `from`.
    void row_axpy(std::size_t dst, std::size_t src, Elt c, std::size_t from) {
        if (!c) return;
        if (gf2()) {
            std::uint64_t* d = &bits_[dst * wpr_];
            const std::uint64_t* s = &bits_[src * wpr_];
            for (std::size_t w = from / 64; w < wpr_; ++w) d[w] ^= s[w];
            return;
        }
        std::uint8_t* d = &bytes_[dst * cols_ + from];
        const std::uint8_t* s = &bytes_[src * cols_ + from];
        std::size_t n = cols_ - from;
        const std::uint64_t p = field_->p();
        if (field_->prime_field() && p == 3) {
            // branchless mod-3 accumulate, written so the compiler vectorizes it
            if (c == 1) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::uint8_t t = static_cast<std::uint8_t>(d[j] + s[j]);
                    d[j] = static_cast<std::uint8_t>(t - 3 * (t >= 3));
                }
            } else {  // c == 2
                for (std::size_t j = 0; j < n; ++j) {
                    std::uint8_t t = static_cast<std::uint8_t>(d[j] + 2 * s[j]);
                    t = static_cast<std::uint8_t>(t - 3 * (t >= 3));
                    d[j] = static_cast<std::uint8_t>(t - 3 * (t >= 3));
                }
            }
            return;
        }
        if (field_->prime_field()) {
            for (std::size_t j = 0; j < n; ++j)
                d[j] = static_cast<std::uint8_t>((d[j] + std::uint64_t(c) * s[j]) % p);
            return;
        }
        const Field& F = *field_;
        for (std::size_t j = 0; j < n; ++j)
            if (s[j]) d[j] = static_cast<std::uint8_t>(F.add(d[j], F.mul(c, s[j])));
    }

    void scale_row(std::size_t i, Elt c) {
        const Field& F = *field_;
        if (c == 1) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            Elt v = get(i, j);
            if (v) set(i, j, F.mul(v, c));
        }
    }

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint8_t> bytes_;
};

struct EchelonResult {
    std::size_t rank = 0;
    // kernel vectors (length = cols), linearly independent, M * v = 0
    std::vector<std::vector<Elt>> kernel;
};

// Rank only: forward elimination on a working copy. Pivoting picks the first
// row with a nonzero entry in column order; arithmetic is exact, so there is
// no tolerance anywhere.
inline std::size_t rank_of(FqMatrix m) {
    const Field& F = *m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.get(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        Elt inv = F.inv(m.get(r, c));
        if (inv != 1) m.scale_row(r, inv);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            Elt v = m.get(i, c);
            if (v) m.row_axpy(i, r, F.neg(v), c);
        }
        ++r;
    }
    return r;
}

// Full reduced echelon analysis: rank and a basis of the right kernel.
inline EchelonResult echelon_analyze(FqMatrix m) {
    const Field& F = *m.field();
    std::vector<std::size_t> pivot_col;
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
        pivot_col.push_back(c);
        ++r;
    }
    EchelonResult res;
    res.rank = r;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Elt> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t j = 0; j < pivot_col.size(); ++j) v[pivot_col[j]] = F.neg(m.get(j, f));
        res.kernel.push_back(std::move(v));
    }
    return res;
}

inline std::size_t kernel_dim(const FqMatrix& m) { return m.cols() - rank_of(m); }

// Stack matrices vertically (same column count).
inline FqMatrix vstack(const std::vector<const FqMatrix*>& parts) {
    if (parts.empty()) throw ValidationError("vstack: no parts");
    std::size_t rows = 0, cols = parts[0]->cols();
    for (auto* p : parts) {
        if (p->cols() != cols) throw ValidationError("vstack: column mismatch");
        rows += p->rows();
    }
    FqMatrix m(parts[0]->field(), rows, cols);
    std::size_t off = 0;
    for (auto* p : parts) {
        for (std::size_t i = 0; i < p->rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                Elt v = p->get(i, j);
                if (v) m.set(off + i, j, v);
            }
        off += p->rows();
    }
    return m;
}

// Matrix whose columns are the given vectors.
inline FqMatrix from_columns(const FieldPtr& field, std::size_t dim,
                             const std::vector<std::vector<Elt>>& cols) {
    FqMatrix m(field, dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim) throw ValidationError("from_columns: length mismatch");
        for (std::size_t i = 0; i < dim; ++i)
            if (cols[j][i]) m.set(i, j, cols[j][i]);
    }
    return m;
}

}  // namespace hwb
