#pragma once

#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "kuga/dims.hpp"
#include "kuga/errors.hpp"
#include "kuga/rst.hpp"

namespace kuga {

using json = nlohmann::json;

namespace detail {

/// Complex entries accept a plain number (real value), an [re, im] pair, or
/// one of the exact point names "rho" and "i".
inline cplx parse_complex(const json& j, const std::string& field) {
    if (j.is_number())
        return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "rho")
            return rho_point();
        if (s == "i")
            return cplx(0.0, 1.0);
        throw ParseError("field '" + field + "': unknown point name '" + s +
                         "' (expected \"rho\" or \"i\")");
    }
    throw ParseError("field '" + field +
                     "': expected number, [re, im] pair, or point name");
}

inline Mat4 parse_mat4(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("field '" + field + "': expected 4 rows");
    Mat4 m{};
    for (int r = 0; r < 4; ++r) {
        if (!j[r].is_array() || j[r].size() != 4)
            throw ParseError("field '" + field + "' row " + std::to_string(r) +
                             ": expected 4 integer entries");
        for (int c = 0; c < 4; ++c) {
            if (!j[r][c].is_number_integer())
                throw ParseError("field '" + field + "' entry (" +
                                 std::to_string(r) + "," + std::to_string(c) +
                                 "): expected an integer");
            m[r][c] = j[r][c].get<long long>();
        }
    }
    return m;
}

inline KugaElement::LMat parse_lmat(const json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("field 'l': expected " + std::to_string(n) + " rows");
    KugaElement::LMat l;
    for (const json& row : j) {
        if (!row.is_array() || row.size() != 4)
            throw ParseError("field 'l': each row needs 4 integer entries");
        std::array<long long, 4> r{};
        for (int c = 0; c < 4; ++c) {
            if (!row[c].is_number_integer())
                throw ParseError("field 'l': entries must be integers");
            r[c] = row[c].get<long long>();
        }
        l.push_back(r);
    }
    return l;
}

} // namespace detail

/// Matrix entry of a scenario file: either a preset name or a literal
/// 4x4 integer array.
inline Mat4 parse_gamma(const json& j) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (auto m = preset_matrix(name))
            return *m;
        throw ParseError("field 'gamma': unknown preset '" + name + "'");
    }
    return detail::parse_mat4(j, "gamma");
}

/// A scenario file holds: locus ("interior" or "boundary-rank1"), n,
/// include_sigma, tau (tau1/tau2/tau3 for the interior, tau1 with optional
/// v/torus slots at the boundary), gamma (4x4 array or preset name), and an
/// optional l block of n rows.
inline Scenario parse_scenario(const json& j) {
    if (!j.is_object())
        throw ParseError("scenario: expected a JSON object");
    for (const std::string required : {"locus", "n", "gamma"})
        if (!j.contains(required))
            throw ParseError("scenario: missing field '" + required + "'");

    std::string locus = j.at("locus").get<std::string>();
    if (locus != "interior" && locus != "boundary-rank1")
        throw ParseError("field 'locus': expected \"interior\" or \"boundary-rank1\"");
    if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 0)
        throw ParseError("field 'n': expected an integer >= 0");
    int n = j.at("n").get<int>();
    bool include_sigma = j.value("include_sigma", false);

    Mat4 gm = parse_gamma(j.at("gamma"));
    SpElement gamma = [&] {
        try {
            return SpElement(gm);
        } catch (const NotSymplectic& e) {
            throw ParseError(std::string("field 'gamma': ") + e.what());
        }
    }();

    KugaElement::LMat l(n, {0, 0, 0, 0});
    if (j.contains("l"))
        l = detail::parse_lmat(j.at("l"), n);
    KugaElement g(std::move(l), std::move(gamma));

    if (!j.contains("tau"))
        throw ParseError("scenario: missing field 'tau'");
    const json& jt = j.at("tau");
    if (!jt.is_object() || !jt.contains("tau1"))
        throw ParseError("field 'tau': expected an object with at least 'tau1'");

    try {
        if (locus == "interior") {
            SiegelPoint tau{detail::parse_complex(jt.at("tau1"), "tau.tau1"),
                            jt.contains("tau2")
                                ? detail::parse_complex(jt.at("tau2"), "tau.tau2")
                                : cplx(0.0),
                            jt.contains("tau3")
                                ? detail::parse_complex(jt.at("tau3"), "tau.tau3")
                                : cplx(0.0, 2.0)};
            return Scenario::interior(tau, std::move(g), n, include_sigma);
        }
        BoundaryPoint q{detail::parse_complex(jt.at("tau1"), "tau.tau1"),
                        jt.contains("v")
                            ? detail::parse_complex(jt.at("v"), "tau.v")
                            : cplx(0.0),
                        jt.contains("torus")
                            ? detail::parse_complex(jt.at("torus"), "tau.torus")
                            : cplx(0.0)};
        return Scenario::boundary(q, std::move(g), n, include_sigma);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("scenario file " + path + ": " + e.what());
    }
    return parse_scenario(j);
}

inline json table_to_json(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const TableRow& r : rows) {
        json cell = {{"k1", r.k1}, {"k2", r.k2}};
        if (r.type) {
            cell["type"] = r.type->str();
            cell["rst_sum"] = r.type->rst_sum().str();
        } else {
            cell["type"] = nullptr;
        }
        out.push_back(cell);
    }
    return out;
}

inline json verdict_to_json(const Verdict& v) {
    json out;
    out["status"] = verdict_status_name(v.status);
    if (v.witness) {
        out["witness"] = {{"k1", v.witness->k1},
                          {"k2", v.witness->k2},
                          {"type", v.witness->type.str()},
                          {"rst_sum", v.witness->rst.str()}};
    } else {
        out["witness"] = nullptr;
    }
    out["table"] = table_to_json(v.table);
    return out;
}

inline json region_to_json(const std::vector<RegionCell>& cells) {
    json out = json::array();
    for (const RegionCell& c : cells)
        out.push_back({{"p", c.p},
                       {"n", c.n},
                       {"status", region_status_name(c.status)}});
    return out;
}

} // namespace kuga
