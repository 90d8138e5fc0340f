#pragma once

#include <fstream>

#include <json.hpp>

#include "hochschild.hpp"
#include "maclane.hpp"
#include "simplicial.hpp"

namespace hwb {

using json = nlohmann::ordered_json;

namespace detail {

// elements are stored as length-k coordinate vectors over F_p; a bare integer
// is accepted on input when k == 1
inline Elt element_from_json(const Field& f, const json& j, const std::string& where) {
    auto digit = [&](const json& v) -> std::uint64_t {
        if (!v.is_number_integer())
            throw ValidationError("json: " + where + ": coordinate is not an integer");
        long long x = v.get<long long>();
        if (x < 0 || std::uint64_t(x) >= f.p())
            throw ValidationError("json: " + where + ": coordinate out of range [0, p)");
        return std::uint64_t(x);
    };
    if (j.is_number_integer()) {
        if (f.k() != 1)
            throw ValidationError("json: " + where + ": expected a length-k coordinate vector");
        return digit(j);
    }
    if (!j.is_array() || int(j.size()) != f.k())
        throw ValidationError("json: " + where + ": expected a length-k coordinate vector");
    Elt e = 0;
    std::uint64_t pw = 1;
    for (auto& v : j) {
        e += digit(v) * pw;
        pw *= f.p();
    }
    return e;
}

inline json element_to_json(const Field& f, Elt e) {
    json out = json::array();
    for (int i = 0; i < f.k(); ++i) {
        out.push_back(e % f.p());
        e /= f.p();
    }
    return out;
}

inline Vec vec_from_json(const Field& f, const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError("json: " + where + ": expected an array");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(element_from_json(f, j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline json vec_to_json(const Field& f, const Vec& v) {
    json out = json::array();
    for (Elt e : v) out.push_back(element_to_json(f, e));
    return out;
}

}  // namespace detail

inline json algebra_to_json(const Algebra& a) {
    json j;
    j["p"] = a.field->p();
    j["k"] = a.field->k();
    j["dim"] = a.dim;
    j["name"] = a.name;
    j["basis_names"] = a.basis_names;
    j["unit"] = detail::vec_to_json(*a.field, a.unit);
    json mul = json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < a.dim; ++jj)
            row.push_back(detail::vec_to_json(*a.field, a.mul[i][jj]));
        mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
    return j;
}

// Parses and fully validates an algebra description.
inline Algebra algebra_from_json(const json& j) {
    for (const char* key : {"p", "k", "dim", "unit", "mul"})
        if (!j.contains(key))
            throw ValidationError(std::string("json: algebra: missing field '") + key + "'");
    FieldPtr f = Field::make(j.at("p").get<std::uint64_t>(), j.at("k").get<int>());
    std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim == 0 || dim > 4096) throw ValidationError("json: algebra: dim out of range");
    Vec unit = detail::vec_from_json(*f, j.at("unit"), "unit");
    const json& mul_j = j.at("mul");
    if (!mul_j.is_array() || mul_j.size() != dim)
        throw ValidationError("json: algebra: mul table must have dim rows");
    std::vector<std::vector<Vec>> mul(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!mul_j[i].is_array() || mul_j[i].size() != dim)
            throw ValidationError("json: algebra: mul row " + std::to_string(i) +
                                  " must have dim entries");
        for (std::size_t jj = 0; jj < dim; ++jj) {
            Vec v = detail::vec_from_json(*f, mul_j[i][jj],
                                          "mul[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
            if (v.size() != dim)
                throw ValidationError("json: algebra: structure vector has wrong length at (" +
                                      std::to_string(i) + ", " + std::to_string(jj) + ")");
            mul[i].push_back(std::move(v));
        }
    }
    Algebra a;
    a.field = f;
    a.dim = dim;
    a.unit = std::move(unit);
    a.mul = std::move(mul);
    if (j.contains("basis_names"))
        a.basis_names = j.at("basis_names").get<std::vector<std::string>>();
    if (a.basis_names.size() != dim) {
        a.basis_names.clear();
        for (std::size_t i = 0; i < dim; ++i) a.basis_names.push_back("b" + std::to_string(i));
    }
    if (j.contains("name")) a.name = j.at("name").get<std::string>();
    return algebra_from_structure(std::move(a));
}

inline json module_to_json(const Algebra& a, const LeftModule& m) {
    json j;
    j["dim"] = m.dim;
    j["name"] = m.name;
    json act = json::array();
    for (auto& mat : m.act) {
        json rows = json::array();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            Vec row(mat.cols());
            for (std::size_t c = 0; c < mat.cols(); ++c) row[c] = mat.get(r, c);
            rows.push_back(detail::vec_to_json(*a.field, row));
        }
        act.push_back(std::move(rows));
    }
    j["act"] = std::move(act);
    return j;
}

inline LeftModule module_from_json(const Algebra& a, const json& j) {
    LeftModule m;
    m.dim = j.at("dim").get<std::size_t>();
    if (j.contains("name")) m.name = j.at("name").get<std::string>();
    const json& act = j.at("act");
    if (!act.is_array() || act.size() != a.dim)
        throw ValidationError("json: module: one action matrix per algebra basis element");
    for (std::size_t i = 0; i < a.dim; ++i) {
        FqMatrix mat(a.field, m.dim, m.dim);
        const json& rows = act[i];
        if (!rows.is_array() || rows.size() != m.dim)
            throw ValidationError("json: module: action matrix " + std::to_string(i) +
                                  " has wrong row count");
        for (std::size_t r = 0; r < m.dim; ++r) {
            Vec row = detail::vec_from_json(*a.field, rows[r],
                                            "act[" + std::to_string(i) + "][" + std::to_string(r) + "]");
            if (row.size() != m.dim)
                throw ValidationError("json: module: action matrix row has wrong length");
            for (std::size_t c = 0; c < m.dim; ++c)
                if (row[c]) mat.set(r, c, row[c]);
        }
        m.act.push_back(std::move(mat));
    }
    validate_left_module(a, m);
    return m;
}

inline json cosimplicial_to_json(const CosimplicialSet& y) {
    json j;
    j["name"] = y.name;
    j["sizes"] = y.sizes;
    j["coface"] = y.coface;
    j["codegen"] = y.codegen;
    return j;
}

inline CosimplicialSet cosimplicial_from_json(const json& j) {
    CosimplicialSet y;
    y.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    if (y.sizes.empty()) throw ValidationError("json: cosimplicial: sizes must be nonempty");
    y.coface = j.at("coface").get<std::vector<std::vector<std::vector<std::size_t>>>>();
    y.codegen = j.at("codegen").get<std::vector<std::vector<std::vector<std::size_t>>>>();
    if (y.coface.size() != y.sizes.size() || y.codegen.size() + 1 != y.sizes.size())
        throw ValidationError("json: cosimplicial: table lengths do not match sizes");
    if (j.contains("name")) y.name = j.at("name").get<std::string>();
    validate_cosimplicial(y);
    return y;
}

// stable = true omits the timing fields so that byte-identical reruns can be
// compared directly
inline json homology_report_to_json(const HomologyReport& r, bool stable) {
    json j;
    j["algebra"] = r.label;
    j["n"] = r.twist;
    j["N"] = r.truncation;
    j["cochain"] = r.cochain;
    json deg = json::array();
    for (std::size_t i = 0; i < r.dims.size(); ++i)
        deg.push_back(json{{"i", i}, {"dim", r.dims[i]}});
    j["degrees"] = std::move(deg);
    j["complex_dims"] = r.complex_dims;
    j["entry_count"] = r.entry_count;
    if (!stable) j["ms_per_degree"] = r.ms_per_degree;
    if (!r.caveats.empty()) j["caveats"] = r.caveats;
    return j;
}

inline json psi_to_json(const Algebra& a, const PsiQuotient& q) {
    json j;
    j["algebra"] = a.name;
    j["n"] = q.n;
    j["quotient_dim"] = q.quotient_dim;
    j["ideal_dim"] = a.dim - q.quotient_dim;
    json surv = json::array();
    for (std::size_t c : q.free_cols)
        surv.push_back(c < a.basis_names.size() ? a.basis_names[c] : std::to_string(c));
    j["surviving_basis"] = std::move(surv);
    return j;
}

inline json moore_to_json(const std::string& label, const MooreReport& r) {
    json j;
    j["ring"] = label;
    j["up_to"] = r.up_to;
    j["level_dims"] = r.level_dims;
    j["moore_dims"] = r.moore_dims;
    j["pi"] = r.pi;
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("malformed json in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace hwb
