#pragma once

#include "json_io.hpp"
#include "polyfunctor.hpp"

namespace hwb {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<CriterionResult> results;
    bool pass = true;
};

// The fixed algebra test collection. Extension-field members are presented
// over their own ground field; prime_presentation gives the F_p form the
// twisted chain engine needs.
struct ZooEntry {
    std::string key;
    Algebra a;
};

inline std::vector<ZooEntry> algebra_zoo() {
    FieldPtr f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    FieldPtr f4 = Field::make(2, 2), f8 = Field::make(2, 3), f9 = Field::make(3, 2);
    std::vector<ZooEntry> zoo;
    zoo.push_back({"F2[x]/(x^2)", truncated_poly(f2, {2})});
    zoo.push_back({"F2[x]/(x^4)", truncated_poly(f2, {4})});
    zoo.push_back({"F3[x]/(x^3)", truncated_poly(f3, {3})});
    zoo.push_back({"F2[x,y]/(x^2,y^2)", truncated_poly(f2, {2, 2})});
    zoo.push_back({"F4", ground_field_algebra(f4)});
    zoo.push_back({"F8", ground_field_algebra(f8)});
    zoo.push_back({"F9", ground_field_algebra(f9)});
    zoo.push_back({"F4[x]/(x^2)", truncated_poly(f4, {2})});
    return zoo;
}

inline Algebra prime_presentation(const Algebra& a) {
    return a.field->prime_field() ? a : restrict_scalars(a);
}

namespace selftest_detail {

inline std::string dims_string(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// the simplicial test collection: function rings over F_2 and F_4 on several
// cosimplicial sets, sized so full power-identity enumeration stays in cap
struct SimplicialEntry {
    std::string key;
    SimplicialRing ring;
    unsigned power;  // every level satisfies x^power = x
};

inline std::vector<SimplicialEntry> simplicial_zoo() {
    FieldPtr f2 = Field::make(2, 1), f4 = Field::make(2, 2);
    std::vector<SimplicialEntry> zoo;
    zoo.push_back({"Fun(simplex(0),L=6,F2)",
                   function_simplicial_ring(simplex_cosimplicial(0, 6), ring_from_field(f2)), 2});
    zoo.push_back({"Fun(simplex(1),L=4,F2)",
                   function_simplicial_ring(simplex_cosimplicial(1, 4), ring_from_field(f2)), 2});
    zoo.push_back({"Fun(simplex(2),L=2,F2)",
                   function_simplicial_ring(simplex_cosimplicial(2, 2), ring_from_field(f2)), 2});
    zoo.push_back({"Fun(simplex(0),L=5,F4)",
                   function_simplicial_ring(simplex_cosimplicial(0, 5), ring_from_field(f4)), 4});
    zoo.push_back({"Fun(simplex(1),L=2,F4)",
                   function_simplicial_ring(simplex_cosimplicial(1, 2), ring_from_field(f4)), 4});
    return zoo;
}

}  // namespace selftest_detail

// 1. Twisted-coefficient vanishing over the algebra collection: H_0 matches
// the psi quotient and all computable higher degrees vanish, for n = 2, 3.
inline CriterionResult criterion_vanishing_suite() {
    CriterionResult r{1, "twisted vanishing suite (zoo, n=2,3)", true, ""};
    for (auto& z : algebra_zoo()) {
        Algebra ar = prime_presentation(z.a);
        for (unsigned n : {2u, 3u}) {
            std::size_t N = default_truncation(ar.dim, ar.dim, ar.field->card());
            if (ar.dim == 2 && N < 12) {
                r.pass = false;
                r.detail += z.key + ": truncation " + std::to_string(N) + " < 12 at dim 2; ";
                continue;
            }
            HomologyReport rep = hh_homology(ar, phi_twist(ar, regular_module(ar), n), N);
            std::size_t want0 = std::size_t(z.a.field->k()) * psi(z.a, n).quotient_dim;
            bool ok = rep.dims[0] == want0;
            for (std::size_t i = 1; i < rep.dims.size(); ++i) ok = ok && rep.dims[i] == 0;
            if (!ok) {
                r.pass = false;
                r.detail += z.key + " n=" + std::to_string(n) + ": dims " +
                            selftest_detail::dims_string(rep.dims) + " (want H0=" +
                            std::to_string(want0) + ", rest 0); ";
            }
        }
    }
    if (r.pass) r.detail = "16 algebra/twist pairs, H0 = dim psi^n, higher degrees all zero";
    return r;
}

// 2. psi^n of finite fields: dim d over F_p exactly when d divides n.
inline CriterionResult criterion_psi_table() {
    CriterionResult r{2, "psi of finite fields table", true, ""};
    for (std::uint64_t p : {2ull, 3ull})
        for (int d = 1; d <= 3; ++d) {
            Algebra a = finite_field_algebra(p, d);
            for (unsigned n = 1; n <= 6; ++n) {
                std::size_t want = (n % unsigned(d) == 0) ? std::size_t(d) : 0;
                std::size_t got = psi(a, n).quotient_dim;
                if (got != want) {
                    r.pass = false;
                    r.detail += "p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                " n=" + std::to_string(n) + ": got " + std::to_string(got) +
                                " want " + std::to_string(want) + "; ";
                }
            }
        }
    if (r.pass) r.detail = "36 (p,d,n) cases match dim = d when d | n else 0";
    return r;
}

// 3. psi^n vanishes whenever the ground field has more than p^n elements.
inline CriterionResult criterion_psi_large_field() {
    CriterionResult r{3, "psi vanishing over large ground fields", true, ""};
    auto zoo = algebra_zoo();
    std::size_t checked = 0;
    for (auto& z : zoo) {
        std::uint64_t q = z.a.field->card(), p = z.a.field->p();
        for (unsigned n : {1u, 2u}) {
            std::uint64_t pn = 1;
            for (unsigned i = 0; i < n; ++i) pn *= p;
            if (q <= pn) continue;  // criterion applies only when Card(K) > p^n
            ++checked;
            std::size_t got = psi(z.a, n).quotient_dim;
            if (got != 0) {
                r.pass = false;
                r.detail += z.key + " n=" + std::to_string(n) + ": psi dim " +
                            std::to_string(got) + " != 0; ";
            }
        }
    }
    if (r.pass)
        r.detail = std::to_string(checked) + " (A, n) cases with Card(K) > p^n all vanish";
    return r;
}

// 4. Polynomial-ring window oracle: multiplication by x^{p^n} - x on F_p[x]
// has cokernel of dimension p^n and no kernel.
inline CriterionResult criterion_step1() {
    CriterionResult r{4, "polynomial window oracle (H0, H1) = (p^n, 0)", true, ""};
    struct Case {
        std::uint64_t p;
        unsigned n;
    };
    for (Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}}) {
        std::uint64_t pn = 1;
        for (unsigned i = 0; i < c.n; ++i) pn *= c.p;
        Step1Result s = step1_poly(c.p, c.n, 64);
        if (s.h0_dim != pn || s.h1_dim != 0) {
            r.pass = false;
            r.detail += "p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + ": got (" +
                        std::to_string(s.h0_dim) + "," + std::to_string(s.h1_dim) + "); ";
        }
    }
    if (r.pass) r.detail = "(2,1), (2,2), (3,1) all give (p^n, 0)";
    return r;
}

// 5. Twisted Hochschild homology equals Tor against the psi quotient, with
// the two sides assembled independently.
inline CriterionResult criterion_tor_agreement() {
    CriterionResult r{5, "twisted homology equals Tor (independent assembly)", true, ""};
    FieldPtr f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    Algebra f2x2 = truncated_poly(f2, {2});
    Algebra f2x4 = truncated_poly(f2, {4});
    Algebra f3x3 = truncated_poly(f3, {3});
    Algebra f4r = prime_presentation(ground_field_algebra(Field::make(2, 2)));
    Vec chi2(f2x2.dim, 0);
    chi2[0] = 1;  // x acts by zero
    Vec chi3(f3x3.dim, 0);
    chi3[0] = 1;
    struct Triple {
        const Algebra* a;
        LeftModule m;
        unsigned n;
        std::string key;
    };
    std::vector<Triple> triples;
    triples.push_back({&f2x2, regular_module(f2x2), 2, "F2[x]/(x^2), A, n=2"});
    triples.push_back({&f2x2, character_module(f2x2, chi2), 2, "F2[x]/(x^2), char, n=2"});
    triples.push_back({&f2x2, character_module(f2x2, chi2), 3, "F2[x]/(x^2), char, n=3"});
    triples.push_back({&f2x4, regular_module(f2x4), 2, "F2[x]/(x^4), A, n=2"});
    triples.push_back({&f3x3, character_module(f3x3, chi3), 2, "F3[x]/(x^3), char, n=2"});
    triples.push_back({&f4r, regular_module(f4r), 2, "F4 over F2, A, n=2"});
    for (auto& t : triples) {
        HomologyReport hh = hh_homology(*t.a, phi_twist(*t.a, t.m, t.n), 6);
        std::vector<std::size_t> tor = tor_via_bar(*t.a, t.m, t.n, 6);
        bool ok = true;
        for (std::size_t i = 0; i <= 4; ++i) ok = ok && hh.dims[i] == tor[i];
        if (!ok) {
            r.pass = false;
            r.detail += t.key + ": hh " + selftest_detail::dims_string(hh.dims) + " vs tor " +
                        selftest_detail::dims_string(tor) + "; ";
        }
    }
    if (r.pass) r.detail = "6 (A, M, n) triples agree in degrees 0..4";
    return r;
}

// 6. Negative control: the untwisted regular bimodule does not vanish.
inline CriterionResult criterion_negative_control() {
    CriterionResult r{6, "untwisted negative control", true, ""};
    Algebra a = truncated_poly(Field::make(2, 1), {2});
    HomologyReport rep = hh_homology(a, regular_bimodule(a), 7);
    for (std::size_t i = 1; i <= 5; ++i)
        if (rep.dims[i] == 0) {
            r.pass = false;
            r.detail += "degree " + std::to_string(i) + " vanished; ";
        }
    if (r.pass)
        r.detail = "H_i(F2[x]/(x^2), A) nonzero for 1 <= i <= 5: " +
                   selftest_detail::dims_string(rep.dims);
    return r;
}

// 7. Kunneth comparison on three tensor-product pairs.
inline CriterionResult criterion_kunneth() {
    CriterionResult r{7, "Kunneth comparison on 3 pairs", true, ""};
    FieldPtr f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    Algebra f2x2 = truncated_poly(f2, {2});
    Algebra f2xy = truncated_poly(f2, {2, 2});
    Algebra f3x3 = truncated_poly(f3, {3});
    struct Pair {
        const Algebra *a, *b;
        unsigned n;
        std::size_t N;
        std::string key;
    };
    std::vector<Pair> pairs = {{&f2x2, &f2x2, 2, 5, "x^2 (x) x^2"},
                               {&f2x2, &f2xy, 2, 4, "x^2 (x) xy"},
                               {&f3x3, &f3x3, 2, 3, "x^3 (x) x^3"}};
    for (auto& p : pairs) {
        KunnethReport rep = kunneth_check(*p.a, *p.b, p.n, p.N);
        if (!rep.pass) {
            r.pass = false;
            r.detail += p.key + ": product " + selftest_detail::dims_string(rep.product_dims) +
                        " expected " + selftest_detail::dims_string(rep.expected_dims) + "; ";
        }
    }
    if (r.pass) r.detail = "3 pairs match the graded tensor of factor homologies";
    return r;
}

// 8. Simplicial witness trials and homotopy vanishing over the simplicial
// ring collection.
inline CriterionResult criterion_simplicial(std::uint64_t seed) {
    CriterionResult r{8, "simplicial witness trials and pi vanishing", true, ""};
    for (auto& z : selftest_detail::simplicial_zoo()) {
        auto bad = simplicial_validate(z.ring);
        if (!bad.empty()) {
            r.pass = false;
            r.detail += z.key + ": " + bad.front() + "; ";
            continue;
        }
        bool power_ok = true;
        for (auto& lev : z.ring.levels) power_ok = power_ok && power_identity_check(lev, z.power);
        if (!power_ok) {
            r.pass = false;
            r.detail += z.key + ": power identity fails; ";
            continue;
        }
        std::size_t L = z.ring.top_level();
        std::size_t total = 0, passed = 0;
        for (std::size_t n = 1; n + 1 <= L; ++n) {
            auto sum = lemma21_trials(z.ring, n, 100, seed + n);
            total += sum.trials;
            passed += sum.passed;
        }
        if (passed != total) {
            r.pass = false;
            r.detail += z.key + ": " + std::to_string(total - passed) + " witness failures; ";
        }
        MooreReport moore = moore_homotopy(z.ring, L - 1);
        for (std::size_t i = 1; i <= L - 1; ++i)
            if (moore.pi[i] != 0) {
                r.pass = false;
                r.detail += z.key + ": pi_" + std::to_string(i) + " = " +
                            std::to_string(moore.pi[i]) + " != 0; ";
            }
    }
    if (r.pass) r.detail = "5 rings over F2/F4: all witnesses pass, pi_i = 0 for 1 <= i <= L-1";
    return r;
}

// 9. Polynomial functor calculator: dimension formula, homogeneity,
// functoriality, duality.
inline CriterionResult criterion_polyfunctor(std::uint64_t seed) {
    CriterionResult r{9, "polynomial functor calculator", true, ""};
    for (unsigned d = 1; d <= 4; ++d)
        for (std::size_t m = 1; m <= 4; ++m) {
            std::size_t byenum = detail::multiset_reps(d, m).size();
            if (functor_dim(FunctorKind::gamma, d, m) != byenum ||
                functor_dim(FunctorKind::sym, d, m) != byenum) {
                r.pass = false;
                r.detail += "dim mismatch at d=" + std::to_string(d) + " m=" + std::to_string(m) + "; ";
            }
        }
    for (FieldPtr f : {Field::make(2, 2), Field::make(3, 2)})
        for (unsigned d = 1; d <= 4; ++d)
            for (std::size_t m = 1; m <= 3; ++m)
                for (Elt a = 0; a < f->card(); ++a) {
                    FqMatrix scal(f, m, m);
                    for (std::size_t i = 0; i < m; ++i) scal.set(i, i, a);
                    FqMatrix img = functor_apply(FunctorKind::gamma, d, scal);
                    FqMatrix want(f, img.rows(), img.cols());
                    Elt ad = f->pow(a, d);
                    for (std::size_t i = 0; i < img.rows(); ++i) want.set(i, i, ad);
                    if (img != want) {
                        r.pass = false;
                        r.detail += "homogeneity fails q=" + std::to_string(f->card()) +
                                    " d=" + std::to_string(d) + "; ";
                    }
                }
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
        FieldPtr f = (trial % 2) ? Field::make(3, 1) : Field::make(2, 1);
        unsigned d = 1 + unsigned(rng() % 3);
        std::size_t m1 = 1 + rng() % 3, m2 = 1 + rng() % 3, m3 = 1 + rng() % 3;
        auto rnd = [&](std::size_t rows, std::size_t cols) {
            FqMatrix x(f, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) x.set(i, j, rng() % f->card());
            return x;
        };
        FqMatrix fm = rnd(m2, m1), gm = rnd(m3, m2);
        FqMatrix gf = gm * fm;
        for (FunctorKind k : {FunctorKind::gamma, FunctorKind::sym, FunctorKind::tensor})
            if (functor_apply(k, d, gf) != functor_apply(k, d, gm) * functor_apply(k, d, fm)) {
                r.pass = false;
                r.detail += std::string("functoriality fails for ") + functor_kind_name(k) +
                            " at trial " + std::to_string(trial) + "; ";
            }
    }
    for (unsigned d = 1; d <= 3; ++d)
        for (std::size_t m = 1; m <= 3; ++m)
            for (FieldPtr f : {Field::make(2, 1), Field::make(3, 1)})
                if (!gamma_sym_duality_check(f, d, m)) {
                    r.pass = false;
                    r.detail += "duality fails d=" + std::to_string(d) + " m=" + std::to_string(m) + "; ";
                }
    if (r.pass) r.detail = "dims, homogeneity over F4/F9, 50 functoriality pairs, duality all pass";
    return r;
}

// 10. Closed-form calculator: divided-power periodicity, non-p-power
// vanishing, cardinality criterion, and low-degree chain-engine agreement.
inline CriterionResult criterion_maclane() {
    CriterionResult r{10, "closed-form calculator checks", true, ""};
    Algebra f2 = ground_field_algebra(Field::make(2, 1));
    for (std::size_t i = 0; i <= 12; ++i) {
        std::size_t want = (i % 4 == 0) ? 1 : 0;
        if (hml_gamma(f2, 2, i).dim != want) {
            r.pass = false;
            r.detail += "gamma d=2 degree " + std::to_string(i) + "; ";
        }
        if (hml_gamma(f2, 3, i).dim != 0) {
            r.pass = false;
            r.detail += "gamma d=3 degree " + std::to_string(i) + " nonzero; ";
        }
    }
    if (hml_vanishing(*Field::make(2, 1), 2) != false ||
        hml_vanishing(*Field::make(2, 2), 2) != true ||
        hml_vanishing(*Field::make(3, 2), 8) != true) {
        r.pass = false;
        r.detail += "cardinality vanishing truth table; ";
    }
    for (auto& z : algebra_zoo())
        for (unsigned n : {2u, 3u}) {
            CrosscheckReport cc = hml_hh_crosscheck(z.a, n);
            if (!cc.pass) {
                r.pass = false;
                r.detail += z.key + " n=" + std::to_string(n) + ": closed form (" +
                            std::to_string(cc.hml0) + "," + std::to_string(cc.hml1) +
                            ") vs engine (" + std::to_string(cc.hh0) + "," +
                            std::to_string(cc.hh1) + "); ";
            }
        }
    if (r.pass) r.detail = "periodicity, vanishing table, 16 engine crosschecks all pass";
    return r;
}

// Deterministic fingerprint over the seeded and report-producing paths;
// criterion 11 requires two runs to serialize identically byte for byte.
inline std::string selftest_fingerprint(std::uint64_t seed) {
    json j;
    {
        json t = json::array();
        for (std::uint64_t p : {2ull, 3ull})
            for (int d = 1; d <= 3; ++d)
                for (unsigned n = 1; n <= 4; ++n)
                    t.push_back(psi(finite_field_algebra(p, d), n).quotient_dim);
        j["psi_table"] = std::move(t);
    }
    {
        Step1Result s = step1_poly(2, 2, 64);
        j["step1"] = {s.h0_dim, s.h1_dim};
    }
    {
        Algebra a = truncated_poly(Field::make(2, 1), {2});
        HomologyReport rep = hh_homology(a, phi_twist(a, regular_module(a), 2), 6);
        j["hh"] = homology_report_to_json(rep, /*stable=*/true);
        j["psi_report"] = psi_to_json(a, psi(a, 2));
    }
    {
        auto ring = function_simplicial_ring(simplex_cosimplicial(1, 3),
                                             ring_from_field(Field::make(2, 1)));
        auto sum = lemma21_trials(ring, 1, 50, seed);
        j["trials"] = {sum.trials, sum.passed, sum.skipped, sum.cycle_dim, sum.moore_dim};
        j["moore"] = moore_to_json(ring.name, moore_homotopy(ring, 2));
    }
    {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        FieldPtr f = Field::make(3, 1);
        FqMatrix m(f, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) m.set(i, k, rng() % 3);
        FqMatrix g = functor_apply(FunctorKind::gamma, 3, m);
        json rows = json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(g.get(i, k));
            rows.push_back(std::move(row));
        }
        j["functor"] = std::move(rows);
    }
    return j.dump();
}

inline CriterionResult criterion_determinism(std::uint64_t seed) {
    CriterionResult r{11, "byte-identical reruns", true, ""};
    std::string a = selftest_fingerprint(seed);
    std::string b = selftest_fingerprint(seed);
    if (a != b) {
        r.pass = false;
        r.detail = "two runs with the same seed produced different report bytes";
    } else {
        r.detail = "two seeded runs serialized to identical bytes (" +
                   std::to_string(a.size()) + " bytes)";
    }
    return r;
}

inline SelftestReport run_selftest(std::uint64_t seed, const std::vector<int>& only = {}) {
    auto wanted = [&](int id) {
        return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
    };
    SelftestReport rep;
    auto push = [&](CriterionResult c) {
        rep.pass = rep.pass && c.pass;
        rep.results.push_back(std::move(c));
    };
    if (wanted(1)) push(criterion_vanishing_suite());
    if (wanted(2)) push(criterion_psi_table());
    if (wanted(3)) push(criterion_psi_large_field());
    if (wanted(4)) push(criterion_step1());
    if (wanted(5)) push(criterion_tor_agreement());
    if (wanted(6)) push(criterion_negative_control());
    if (wanted(7)) push(criterion_kunneth());
    if (wanted(8)) push(criterion_simplicial(seed));
    if (wanted(9)) push(criterion_polyfunctor(seed));
    if (wanted(10)) push(criterion_maclane());
    if (wanted(11)) push(criterion_determinism(seed));
    return rep;
}

inline json selftest_to_json(const SelftestReport& rep, std::uint64_t seed) {
    json j;
    j["seed"] = seed;
    j["pass"] = rep.pass;
    json arr = json::array();
    for (auto& c : rep.results)
        arr.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["criteria"] = std::move(arr);
    return j;
}

}  // namespace hwb
