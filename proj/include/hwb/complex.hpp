#pragma once

#include <chrono>

#include "fq_matrix.hpp"

namespace hwb {

// A finite run of F_q vector spaces with boundary maps d_i : degree i -> i-1.
struct BoundedComplex {
    FieldPtr field;
    std::vector<std::size_t> dims;      // degrees 0..N
    std::vector<FqMatrix> boundaries;   // index 1..N; [0] is unused

    std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }

    // d_i . d_{i+1} = 0. Products above the work budget are checked on
    // deterministic pseudo-random columns instead of the full matrix product.
    void verify_dd_zero(double exact_budget = 2e9) const {
        for (std::size_t i = 1; i + 1 <= top_degree(); ++i) {
            const FqMatrix& a = boundaries[i];
            const FqMatrix& b = boundaries[i + 1];
            double ops = double(a.rows()) * double(a.cols()) * double(b.cols());
            if (field->card() == 2) ops /= 64.0;
            if (ops <= exact_budget) {
                if (!(a * b).is_zero())
                    throw ValidationError("complex: d_" + std::to_string(i) + " . d_" +
                                          std::to_string(i + 1) + " != 0");
            } else {
                std::mt19937_64 rng(0x5eedULL ^ (b.cols() * 2654435761ULL));
                std::uniform_int_distribution<Elt> dist(0, field->card() - 1);
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<Elt> v(b.cols());
                    for (auto& e : v) e = dist(rng);
                    std::vector<Elt> w = a.apply(b.apply(v));
                    for (Elt e : w)
                        if (e)
                            throw ValidationError("complex: d.d != 0 at degree " +
                                                  std::to_string(i) + " (random probe)");
                }
            }
        }
    }

    // Homology dimensions for degrees 0..N-1 (degree N lacks an incoming
    // boundary, so its homology is not certified). Optionally records
    // wall-clock milliseconds per degree.
    std::vector<std::size_t> homology_dims(std::vector<double>* ms_per_degree = nullptr) const {
        std::size_t N = top_degree();
        std::vector<std::size_t> ranks(N + 2, 0);  // ranks[i] = rank d_i, d_0 = d_{N+1} = 0
        std::vector<double> ms(N + 1, 0.0);
        for (std::size_t i = 1; i <= N; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            ranks[i] = rank_of(boundaries[i]);
            auto t1 = std::chrono::steady_clock::now();
            ms[i] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        std::vector<std::size_t> h(N);
        for (std::size_t i = 0; i < N; ++i) {
            std::size_t ker = dims[i] - ranks[i];  // rank d_0 = 0
            h[i] = ker - ranks[i + 1];
        }
        if (ms_per_degree) *ms_per_degree = std::move(ms);
        return h;
    }
};

// Per-degree homology dimensions plus provenance metadata.
struct HomologyReport {
    std::string label;
    unsigned twist = 0;
    std::size_t truncation = 0;
    bool cochain = false;
    std::vector<std::size_t> dims;          // homology, degrees 0..N-1
    std::vector<std::size_t> complex_dims;  // chain space sizes, degrees 0..N
    std::vector<double> ms_per_degree;
    std::uint64_t entry_count = 0;
    std::vector<std::string> caveats;
};

}  // namespace hwb
