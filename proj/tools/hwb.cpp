// hwb: workbench for twisted Hochschild homology of finite-dimensional
// commutative algebras over finite fields, with a simplicial-ring lab, a
// polynomial functor calculator, and closed-form stable homology answers.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "hwb/selftest.hpp"

namespace {

using hwb::json;

struct RunConfig {
    std::string format = "json";
    bool stable = false;
    std::uint64_t seed = 7;
    hwb::EngineLimits limits;
};

void emit(const RunConfig& cfg, const json& j) {
    if (cfg.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        // lossy projection: degree/dim pairs when present, else flat key,value
        if (j.contains("degrees")) {
            std::cout << "degree,dim\n";
            for (auto& d : j.at("degrees"))
                std::cout << d.at("i").get<std::size_t>() << ","
                          << d.at("dim").get<std::size_t>() << "\n";
        } else {
            std::cout << "key,value\n";
            for (auto& [k, v] : j.items())
                if (v.is_primitive()) std::cout << k << "," << v.dump() << "\n";
        }
        return;
    }
    // pretty: human-oriented, no stability guarantee
    std::function<void(const json&, int)> walk = [&](const json& node, int indent) {
        std::string pad(std::size_t(indent) * 2, ' ');
        if (node.is_object()) {
            for (auto& [k, v] : node.items()) {
                if (v.is_primitive())
                    std::cout << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                              << "\n";
                else {
                    std::cout << pad << k << ":\n";
                    walk(v, indent + 1);
                }
            }
        } else if (node.is_array()) {
            bool flat = true;
            for (auto& v : node) flat = flat && v.is_primitive();
            if (flat)
                std::cout << pad << node.dump() << "\n";
            else
                for (auto& v : node) walk(v, indent);
        }
    };
    walk(j, 0);
}

hwb::Algebra load_algebra(const std::string& path) {
    return hwb::algebra_from_json(hwb::load_json_file(path));
}

// cosimplicial argument: a JSON file, or a preset "simplex:<m>:<L>" /
// "constant:<L>"
hwb::CosimplicialSet load_cosimplicial(const std::string& spec) {
    if (spec.rfind("simplex:", 0) == 0) {
        auto rest = spec.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw hwb::ValidationError("preset syntax: simplex:<m>:<L>");
        return hwb::simplex_cosimplicial(unsigned(std::stoul(rest.substr(0, colon))),
                                         std::stoul(rest.substr(colon + 1)));
    }
    if (spec.rfind("constant:", 0) == 0)
        return hwb::constant_cosimplicial(std::stoul(spec.substr(9)));
    return hwb::cosimplicial_from_json(hwb::load_json_file(spec));
}

hwb::FqMatrix matrix_from_json_file(const std::string& path) {
    json j = hwb::load_json_file(path);
    hwb::FieldPtr f = hwb::Field::make(j.at("p").get<std::uint64_t>(),
                                       j.contains("k") ? j.at("k").get<int>() : 1);
    const json& e = j.at("entries");
    if (!e.is_array() || e.empty()) throw hwb::ValidationError("matrix: entries must be nonempty");
    std::size_t rows = e.size(), cols = e[0].size();
    hwb::FqMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        hwb::Vec row = hwb::detail::vec_from_json(*f, e[r], "entries[" + std::to_string(r) + "]");
        if (row.size() != cols) throw hwb::ValidationError("matrix: ragged entries");
        for (std::size_t c = 0; c < cols; ++c)
            if (row[c]) m.set(r, c, row[c]);
    }
    return m;
}

json matrix_to_json(const hwb::FqMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(hwb::detail::element_to_json(*m.field(), m.get(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for twisted Hochschild homology over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    if (const char* env = std::getenv("HWB_ENTRY_CAP")) {
        cfg.limits.entry_cap = std::strtoull(env, nullptr, 10);
        if (cfg.limits.entry_cap < 1000) {
            std::cerr << "HWB_ENTRY_CAP must be >= 1000\n";
            return 2;
        }
    }
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_flag("--stable-output", cfg.stable, "omit timings for byte-stable output");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");

    std::function<int()> action;

    // algebra validate <spec>
    auto* alg = app.add_subcommand("algebra", "algebra-spec operations");
    alg->require_subcommand(1);
    {
        auto* v = alg->add_subcommand("validate", "parse and fully validate an algebra spec");
        auto path = std::make_shared<std::string>();
        v->add_option("spec", *path, "algebra spec JSON file")->required();
        v->callback([&, path] {
            action = [&, path] {
                hwb::Algebra a = load_algebra(*path);
                emit(cfg, json{{"valid", true},
                               {"name", a.name},
                               {"p", a.field->p()},
                               {"k", a.field->k()},
                               {"dim", a.dim}});
                return 0;
            };
        });
    }

    {
        auto* c = app.add_subcommand("psi", "the quotient by the ideal (a - a^(p^n))");
        auto path = std::make_shared<std::string>();
        auto n = std::make_shared<unsigned>(1);
        c->add_option("spec", *path)->required();
        c->add_option("--n", *n, "twist exponent")->required();
        c->callback([&, path, n] {
            action = [&, path, n] {
                hwb::Algebra a = load_algebra(*path);
                emit(cfg, hwb::psi_to_json(a, hwb::psi(a, *n)));
                return 0;
            };
        });
    }

    {
        auto* c = app.add_subcommand("hh", "twisted Hochschild homology (or cohomology)");
        auto path = std::make_shared<std::string>();
        auto modpath = std::make_shared<std::string>();
        auto n = std::make_shared<unsigned>(0);
        auto N = std::make_shared<std::size_t>(0);
        auto co = std::make_shared<bool>(false);
        auto restrict_flag = std::make_shared<bool>(false);
        c->add_option("spec", *path)->required();
        c->add_option("--n", *n, "Frobenius twist exponent (0 = untwisted)")->required();
        c->add_option("--N", *N, "truncation degree (0 = auto)");
        c->add_flag("--cohomology", *co);
        c->add_flag("--restrict", *restrict_flag, "restrict scalars to the prime field first");
        c->add_option("--module", *modpath, "left module spec (default: the algebra itself)");
        c->callback([&, path, modpath, n, N, co, restrict_flag] {
            action = [&, path, modpath, n, N, co, restrict_flag] {
                hwb::Algebra a = load_algebra(*path);
                if (*restrict_flag && !a.field->prime_field()) a = hwb::restrict_scalars(a);
                hwb::LeftModule m =
                    modpath->empty() ? hwb::regular_module(a)
                                     : hwb::module_from_json(a, hwb::load_json_file(*modpath));
                hwb::Bimodule b = hwb::phi_twist(a, m, *n);
                std::size_t trunc = *N ? *N
                                       : hwb::default_truncation(a.dim, b.dim, a.field->card(),
                                                                 cfg.limits);
                hwb::HomologyReport rep = *co
                                              ? hwb::hh_cohomology(a, b, trunc, cfg.limits)
                                              : hwb::hh_homology(a, b, trunc, cfg.limits);
                emit(cfg, hwb::homology_report_to_json(rep, cfg.stable));
                return 0;
            };
        });
    }

    {
        auto* c = app.add_subcommand("tor", "Tor against the psi quotient via the bar complex");
        auto path = std::make_shared<std::string>();
        auto modpath = std::make_shared<std::string>();
        auto n = std::make_shared<unsigned>(1);
        auto smax = std::make_shared<std::size_t>(5);
        c->add_option("spec", *path)->required();
        c->add_option("--module", *modpath, "left module spec (default: the algebra itself)");
        c->add_option("--n", *n)->required();
        c->add_option("--smax", *smax, "top bar degree");
        c->callback([&, path, modpath, n, smax] {
            action = [&, path, modpath, n, smax] {
                hwb::Algebra a = load_algebra(*path);
                hwb::LeftModule m =
                    modpath->empty() ? hwb::regular_module(a)
                                     : hwb::module_from_json(a, hwb::load_json_file(*modpath));
                auto dims = hwb::tor_via_bar(a, m, *n, *smax, cfg.limits);
                json deg = json::array();
                for (std::size_t i = 0; i < dims.size(); ++i)
                    deg.push_back(json{{"i", i}, {"dim", dims[i]}});
                emit(cfg, json{{"algebra", a.name},
                               {"module", m.name},
                               {"n", *n},
                               {"smax", *smax},
                               {"degrees", std::move(deg)}});
                return 0;
            };
        });
    }

    {
        auto* c = app.add_subcommand("kunneth", "tensor-product homology comparison");
        auto pa = std::make_shared<std::string>(), pb = std::make_shared<std::string>();
        auto n = std::make_shared<unsigned>(2);
        auto N = std::make_shared<std::size_t>(4);
        c->add_option("specA", *pa)->required();
        c->add_option("specB", *pb)->required();
        c->add_option("--n", *n)->required();
        c->add_option("--N", *N, "truncation degree");
        c->callback([&, pa, pb, n, N] {
            action = [&, pa, pb, n, N] {
                hwb::Algebra a = load_algebra(*pa), b = load_algebra(*pb);
                hwb::KunnethReport rep = hwb::kunneth_check(a, b, *n, *N, cfg.limits);
                emit(cfg, json{{"product_dims", rep.product_dims},
                               {"expected_dims", rep.expected_dims},
                               {"pass", rep.pass}});
                return rep.pass ? 0 : 2;
            };
        });
    }

    {
        auto* c = app.add_subcommand("step1", "polynomial-window multiplication oracle");
        auto p = std::make_shared<std::uint64_t>(2);
        auto n = std::make_shared<unsigned>(1);
        auto window = std::make_shared<std::size_t>(64);
        c->add_option("--p", *p)->required();
        c->add_option("--n", *n)->required();
        c->add_option("--window", *window);
        c->callback([&, p, n, window] {
            action = [&, p, n, window] {
                hwb::Step1Result s = hwb::step1_poly(*p, *n, *window);
                emit(cfg, json{{"p", *p},
                               {"n", *n},
                               {"window", s.window},
                               {"h0_dim", s.h0_dim},
                               {"h1_dim", s.h1_dim}});
                return 0;
            };
        });
    }

    {
        auto* sim = app.add_subcommand("simplicial", "simplicial-ring laboratory");
        sim->require_subcommand(1);
        auto spec = std::make_shared<std::string>();
        auto p = std::make_shared<std::uint64_t>(2);
        auto k = std::make_shared<int>(1);
        auto* pi = sim->add_subcommand("pi", "homotopy dimensions of the function ring");
        auto up_to = std::make_shared<std::size_t>(1);
        pi->add_option("spec", *spec, "cosimplicial JSON file or preset simplex:<m>:<L>")
            ->required();
        pi->add_option("--up-to", *up_to)->required();
        pi->add_option("--p", *p, "coefficient field characteristic");
        pi->add_option("--k", *k, "coefficient field degree");
        pi->callback([&, spec, up_to, p, k] {
            action = [&, spec, up_to, p, k] {
                auto ring = hwb::function_simplicial_ring(
                    load_cosimplicial(*spec), hwb::ring_from_field(hwb::Field::make(*p, *k)));
                auto bad = hwb::simplicial_validate(ring);
                if (!bad.empty()) throw hwb::ValidationError(bad.front());
                emit(cfg, hwb::moore_to_json(ring.name, hwb::moore_homotopy(ring, *up_to)));
                return 0;
            };
        });
        auto* wt = sim->add_subcommand("lemma21", "randomized multiplicative-witness trials");
        auto level = std::make_shared<std::size_t>(1);
        auto trials = std::make_shared<std::size_t>(100);
        wt->add_option("spec", *spec, "cosimplicial JSON file or preset simplex:<m>:<L>")
            ->required();
        wt->add_option("--level", *level)->required();
        wt->add_option("--trials", *trials);
        wt->add_option("--p", *p, "coefficient field characteristic");
        wt->add_option("--k", *k, "coefficient field degree");
        wt->callback([&, spec, level, trials, p, k] {
            action = [&, spec, level, trials, p, k] {
                auto ring = hwb::function_simplicial_ring(
                    load_cosimplicial(*spec), hwb::ring_from_field(hwb::Field::make(*p, *k)));
                auto sum = hwb::lemma21_trials(ring, *level, *trials, cfg.seed);
                emit(cfg, json{{"ring", ring.name},
                               {"level", *level},
                               {"trials", sum.trials},
                               {"passed", sum.passed},
                               {"skipped", sum.skipped},
                               {"cycle_dim", sum.cycle_dim},
                               {"moore_dim", sum.moore_dim},
                               {"pass", sum.passed == sum.trials}});
                return sum.passed == sum.trials ? 0 : 2;
            };
        });
    }

    {
        auto* fn = app.add_subcommand("functor", "polynomial functor calculator");
        fn->require_subcommand(1);
        auto kind = std::make_shared<std::string>("gamma");
        auto d = std::make_shared<unsigned>(2);
        auto m = std::make_shared<std::size_t>(2);
        auto* dim = fn->add_subcommand("dim", "dimension of F(V)");
        dim->add_option("--kind", *kind)->required();
        dim->add_option("--d", *d)->required();
        dim->add_option("--m", *m, "dim V")->required();
        dim->callback([&, kind, d, m] {
            action = [&, kind, d, m] {
                emit(cfg, json{{"kind", *kind},
                               {"d", *d},
                               {"m", *m},
                               {"dim", hwb::functor_dim(hwb::functor_kind_from(*kind), *d, *m)}});
                return 0;
            };
        });
        auto* ap = fn->add_subcommand("apply", "matrix of F(f) for f given as JSON");
        auto mat = std::make_shared<std::string>();
        ap->add_option("--kind", *kind)->required();
        ap->add_option("--d", *d)->required();
        ap->add_option("--matrix", *mat, "JSON file {p, k, entries}")->required();
        ap->callback([&, kind, d, mat] {
            action = [&, kind, d, mat] {
                hwb::FqMatrix f = matrix_from_json_file(*mat);
                hwb::FqMatrix img = hwb::functor_apply(hwb::functor_kind_from(*kind), *d, f);
                emit(cfg, json{{"kind", *kind},
                               {"d", *d},
                               {"rows", img.rows()},
                               {"cols", img.cols()},
                               {"entries", matrix_to_json(img)}});
                return 0;
            };
        });
        auto* du = fn->add_subcommand("duality", "invertibility of the divided/symmetric pairing");
        auto p = std::make_shared<std::uint64_t>(2);
        auto k = std::make_shared<int>(1);
        du->add_option("--d", *d)->required();
        du->add_option("--m", *m)->required();
        du->add_option("--p", *p);
        du->add_option("--k", *k);
        du->callback([&, d, m, p, k] {
            action = [&, d, m, p, k] {
                bool ok = hwb::gamma_sym_duality_check(hwb::Field::make(*p, *k), *d, *m);
                emit(cfg, json{{"d", *d}, {"m", *m}, {"invertible", ok}});
                return ok ? 0 : 2;
            };
        });
    }

    {
        auto* hml = app.add_subcommand("hml", "closed-form stable homology answers");
        hml->require_subcommand(1);
        auto path = std::make_shared<std::string>();
        auto n = std::make_shared<unsigned>(2);
        auto i = std::make_shared<std::size_t>(0);
        auto d = std::make_shared<std::uint64_t>(2);
        auto answer_json = [](const hwb::HmlAnswer& a) {
            json j{{"degree", a.degree}, {"dim_over_Fp", a.dim}, {"formula", a.formula}};
            if (!a.caveats.empty()) j["caveats"] = a.caveats;
            return j;
        };
        auto* phi = hml->add_subcommand("phi", "Frobenius-twist coefficients");
        phi->add_option("spec", *path)->required();
        phi->add_option("--n", *n)->required();
        phi->add_option("--i", *i, "homological degree")->required();
        phi->callback([&, path, n, i, answer_json] {
            action = [&, path, n, i, answer_json] {
                emit(cfg, answer_json(hwb::hml_phi(load_algebra(*path), *n, *i)));
                return 0;
            };
        });
        auto* gam = hml->add_subcommand("gamma", "divided-power coefficients");
        gam->add_option("spec", *path)->required();
        gam->add_option("--d", *d)->required();
        gam->add_option("--i", *i, "homological degree")->required();
        gam->callback([&, path, d, i, answer_json] {
            action = [&, path, d, i, answer_json] {
                emit(cfg, answer_json(hwb::hml_gamma(load_algebra(*path), *d, *i)));
                return 0;
            };
        });
        auto* van = hml->add_subcommand("vanishing", "cardinality vanishing criterion");
        auto p = std::make_shared<std::uint64_t>(2);
        auto k = std::make_shared<int>(1);
        van->add_option("--p", *p)->required();
        van->add_option("--k", *k);
        van->add_option("--d", *d)->required();
        van->callback([&, p, k, d] {
            action = [&, p, k, d] {
                bool v = hwb::hml_vanishing(*hwb::Field::make(*p, *k), *d);
                emit(cfg, json{{"card", hwb::Field::make(*p, *k)->card()},
                               {"d", *d},
                               {"vanishes", v}});
                return 0;
            };
        });
        auto* cc = hml->add_subcommand("crosscheck", "closed form vs chain engine, degrees 0-1");
        cc->add_option("spec", *path)->required();
        cc->add_option("--n", *n)->required();
        cc->callback([&, path, n] {
            action = [&, path, n] {
                hwb::CrosscheckReport r = hwb::hml_hh_crosscheck(load_algebra(*path), *n,
                                                                 cfg.limits);
                json j{{"hml", {r.hml0, r.hml1}}, {"hh", {r.hh0, r.hh1}}, {"pass", r.pass}};
                if (!r.caveats.empty()) j["caveats"] = r.caveats;
                emit(cfg, j);
                return r.pass ? 0 : 2;
            };
        });
    }

    {
        auto* c = app.add_subcommand("selftest", "run the full acceptance suite");
        auto criteria = std::make_shared<std::string>();
        c->add_option("--criteria", *criteria, "comma-separated criterion ids (default: all)");
        c->callback([&, criteria] {
            action = [&, criteria] {
                std::vector<int> only;
                std::stringstream ss(*criteria);
                for (std::string tok; std::getline(ss, tok, ',');)
                    if (!tok.empty()) only.push_back(std::stoi(tok));
                hwb::SelftestReport rep = hwb::run_selftest(cfg.seed, only);
                emit(cfg, hwb::selftest_to_json(rep, cfg.seed));
                return rep.pass ? 0 : 4;
            };
        });
    }

    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }
    try {
        return action ? action() : 1;
    } catch (const hwb::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const hwb::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
