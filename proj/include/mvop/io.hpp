#pragma once

#include <charconv>
#include <string>

#include <json.hpp>

#include "mvop/families.hpp"
#include "mvop/verify.hpp"

namespace mvop {

using json = nlohmann::json;

// Rationals cross the wire as strings; JSON numbers are binary64.

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const PiRational& p) {
    return json{{"q", p.coeff().str()}, {"pi", p.pi_power()}};
}

inline json to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Coefficients low-to-high degree; vectors flatten to one string list per
/// degree, matrices keep their rows.
inline json to_json(const MatPoly<Rational>& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        Matrix<Rational> c = p.coeff(k);
        if (c.cols() == 1) {
            json col = json::array();
            for (int i = 0; i < c.rows(); ++i) col.push_back(c(i, 0).str());
            coeffs.push_back(std::move(col));
        } else {
            coeffs.push_back(to_json(c));
        }
    }
    return coeffs;
}

inline json to_json(const HighestWeight& w) {
    json entries = json::array();
    for (long e : w.entries) entries.push_back(e);
    return json{{"parity", w.parity == Parity::Even ? "even" : "odd"}, {"entries", entries}};
}

inline HighestWeight highest_weight_from_json(const json& j) {
    HighestWeight w;
    w.parity = j.at("parity").get<std::string>() == "even" ? Parity::Even : Parity::Odd;
    for (const auto& e : j.at("entries")) w.entries.push_back(e.get<long>());
    if (!w.valid()) throw DomainError("highest_weight_from_json: dominance violated");
    return w;
}

inline json family_to_json(const SphericalFamily& f) {
    json out;
    switch (f.kind) {
        case FamilyKind::TwoByTwo: out["kind"] = "2x2"; break;
        case FamilyKind::ThreeByThree: out["kind"] = "3x3"; break;
        default: out["kind"] = "scalar"; break;
    }
    out["n"] = f.n;
    out["ell"] = f.ell;
    out["size"] = f.size;
    out["dims"] = f.dims;
    out["norm_const"] = to_json(f.norm_const);
    out["weight_exponent"] = f.weight_exponent().str();
    if (f.kind == FamilyKind::Scalar) {
        out["d"] = f.d;
        out["sign"] = f.sign;
        return out;
    }
    out["p"] = f.p;
    out["C"] = to_json(f.params.C);
    out["U"] = to_json(f.params.U);
    out["V"] = to_json(f.params.V);
    out["E"] = to_json(f.E);
    out["N"] = to_json(f.N);
    if (f.kind == FamilyKind::TwoByTwo) {
        out["psi"] = {{"form", "polynomial"}, {"coeffs", to_json(psi_poly_2x2())}};
    } else {
        out["psi"] = {{"form", "polynomial plus i*t(y)*B, t = 2*sqrt(y-y^2)"},
                      {"poly_coeffs", to_json(psi3_poly_part())},
                      {"B", to_json(psi3_it_part())}};
    }
    return out;
}

inline json solved_to_json(const SolvedPolynomial& sol) {
    json out;
    out["w"] = sol.key.w;
    out["delta"] = sol.key.delta;
    out["lambda"] = sol.lambda.str();
    json p0 = json::array();
    for (const auto& x : sol.p0) p0.push_back(x.str());
    out["P0"] = std::move(p0);
    out["coeffs"] = to_json(sol.P);
    return out;
}

inline json report_to_json(const VerifyReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"status", c.pass ? "pass" : "fail"},
                              {"residual", c.residual},
                              {"elapsed_ms", c.elapsed_ms}});
    return json{{"family", rep.family_id},
                {"w_max", rep.w_max},
                {"mode", rep.mode == Mode::Exact ? "exact" : "float"},
                {"tol", rep.tol},
                {"seed", rep.seed},
                {"pass", rep.pass()},
                {"checks", std::move(checks)}};
}

/// Locale-independent decimal formatting (shortest round-trip form).
inline std::string csv_number(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

/// One CSV cell for a possibly complex value: plain decimal when real,
/// otherwise "a+bi" / "a-bi".
inline std::string csv_cell(const std::complex<double>& z) {
    if (z.imag() == 0.0) return csv_number(z.real());
    std::string s = csv_number(z.real());
    if (z.imag() >= 0) s += "+";
    s += csv_number(z.imag()) + "i";
    return s;
}

}  // namespace mvop
