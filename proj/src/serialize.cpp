#include "ferrook/serialize.hpp"

#include "ferrook/rook.hpp"

#include <stdexcept>

namespace ferrook {

Json to_json(const IntPolynomial& p) {
    Json out = Json::object();
    const auto& c = p.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e] != 0) out[std::to_string(e)] = to_string(c[e]);
    }
    return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
    IntPolynomial p;
    for (const auto& [key, value] : j.items()) {
        const int e = std::stoi(key);
        if (e < 0) throw std::invalid_argument("negative exponent " + key);
        p += IntPolynomial::monomial(e, parse_bigint(value.get<std::string>()));
    }
    return p;
}

Json to_json(const DiagonalProfile& p) { return p.counts; }

Json to_json(const KappaReport& k) {
    return Json{{"kappa", k.minimum}, {"kappa_vector", k.values}, {"argmin", k.argmin}};
}

Json verdict_json(const FerrersDiagram& f, int d) {
    const MdsVerdict v = mds_constructible(f, d);
    const KappaReport k = kappa(f, d);
    Json out;
    out["diagram"] = f.to_string();
    out["d"] = d;
    out["kappa"] = k.minimum;
    out["kappa_vector"] = k.values;
    out["diag_sum_all"] = v.diag_sum_all;
    out["diag_sum_first_m"] = v.diag_sum_first_m ? Json(*v.diag_sum_first_m) : Json(nullptr);
    out["tau"] = v.tau ? Json(*v.tau) : Json(nullptr);
    out["mds_constructible"] = v.is_mds_constructible;
    Json classes = Json::object();
    if (d >= 2 && k.minimum >= 1) {
        for (long dim = 1; dim <= k.minimum; ++dim) {
            classes[std::to_string(dim)] = to_string(classify_density(f, d, static_cast<int>(dim)));
        }
    }
    out["density_class_at"] = classes;
    return out;
}

Json to_json(const EquivalenceReport& e) {
    const auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
    return Json{{"all_diagonals", e.all_equal},
                {"first_m_diagonals", opt(e.first_m_equal)},
                {"rook_trailing_degree", opt(e.tau_equal)},
                {"agree", e.agree()},
                {"skipped", e.violations}};
}

Json to_json(const RankCensus& c) {
    Json counts = Json::array();
    for (const auto& x : c.counts) counts.push_back(to_string(x));
    return Json{{"q", c.q}, {"diagram", c.diagram.to_string()}, {"counts", counts}};
}

Json to_json(const DensityReport& r) {
    return Json{{"estimate", r.estimate},   {"ci_low", r.ci_low}, {"ci_high", r.ci_high},
                {"trials", r.trials},       {"successes", r.successes}, {"seed", r.seed},
                {"prng", r.prng},           {"seed_rule", r.seed_rule}};
}

Json to_json(const CountReport& r) {
    Json members = Json::array();
    for (const auto& f : r.members) members.push_back(f.to_string());
    return Json{{"n", r.n},
                {"m", r.m},
                {"d", r.d},
                {"formula_count", to_string(r.formula)},
                {"enumerated_count", r.enumerated ? Json(to_string(*r.enumerated)) : Json(nullptr)},
                {"agree", r.agree()},
                {"members", members}};
}

Json to_json(const ChainReport& r) {
    Json violations = Json::array();
    for (const auto& f : r.violations) violations.push_back(f.to_string());
    Json ext = Json::array();
    for (const auto& e : r.extensions) {
        ext.push_back(Json{{"diagram", e.diagram.to_string()},
                           {"d_holds", e.d_holds},
                           {"constructible_at_d_holds", e.lower_constructible},
                           {"d_fails", e.d_fails},
                           {"constructible_at_d_fails", e.upper_constructible},
                           {"as_expected", e.as_expected()}});
    }
    return Json{{"n", r.n}, {"checked", r.checked}, {"violations", violations}, {"extensions", ext},
                {"holds", r.holds()}};
}

Json to_json(const RSCode& c) {
    return Json{{"q", c.q},
                {"length", c.length},
                {"dimension", c.dimension},
                {"designed_distance", c.designed_distance},
                {"generator", c.generator}};
}

Json to_json(const SpaceVerdict& v) {
    Json out{{"pass", v.pass}, {"mode", v.exhaustive ? "exhaustive" : "sampled"}, {"checked", v.checked}};
    if (v.exhaustive) out["min_rank"] = v.min_rank;
    if (!v.pass) {
        out["witness_index"] = v.witness_index ? Json(*v.witness_index) : Json(nullptr);
        out["witness_coeffs"] = v.witness_coeffs;
        out["witness_rank"] = v.witness_rank;
    }
    return out;
}

namespace {

std::string cell_key(const Cell& c) { return std::to_string(c.row) + "," + std::to_string(c.col); }

Cell parse_cell_key(const std::string& key) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad cell key '" + key + "'");
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

}  // namespace

Json to_json(const ConstructedSpace& s) {
    Json basis = Json::array();
    for (const auto& b : s.basis) {
        Json entries = Json::object();
        for (const Cell& c : b.diagram.cells()) {
            if (const Elem v = b.at(c.row, c.col)) entries[cell_key(c)] = v;
        }
        basis.push_back(entries);
    }
    Json blocks = Json::array();
    for (const auto& bl : s.blocks) {
        blocks.push_back(Json{{"diagonal", bl.diagonal}, {"length", bl.length}, {"dimension", bl.dimension}});
    }
    return Json{{"q", s.q},
                {"d", s.d},
                {"diagram", s.diagram.to_string()},
                {"dimension", s.dimension()},
                {"kappa", kappa(s.diagram, s.d).minimum},
                {"optimal", optimality_check(s)},
                {"transposed", s.transposed},
                {"blocks", blocks},
                {"warnings", s.warnings},
                {"basis", basis}};
}

ConstructedSpace space_from_json(const Json& j) {
    ConstructedSpace s{parse_diagram(j.at("diagram").get<std::string>()), j.at("d").get<int>(),
                       j.at("q").get<std::uint32_t>(), {}, {}, j.value("transposed", false), {}};
    for (const auto& entries : j.at("basis")) {
        SupportedMatrix mat(s.diagram);
        for (const auto& [key, value] : entries.items()) {
            const Cell c = parse_cell_key(key);
            if (!s.diagram.contains(c)) throw std::invalid_argument("cell (" + key + ") lies outside " + s.diagram.to_string());
            const auto v = value.get<std::uint32_t>();
            if (v >= s.q) throw std::invalid_argument("entry " + std::to_string(v) + " is not an element of GF(q)");
            mat.set(c.row, c.col, static_cast<Elem>(v));
        }
        s.basis.push_back(std::move(mat));
    }
    if (j.contains("blocks")) {
        for (const auto& bl : j.at("blocks")) {
            s.blocks.push_back({bl.at("diagonal").get<int>(), bl.at("length").get<int>(), bl.at("dimension").get<int>()});
        }
    }
    if (j.contains("dimension") && j.at("dimension").get<int>() != s.dimension()) {
        throw std::invalid_argument("dimension field disagrees with the basis length");
    }
    return s;
}

}  // namespace ferrook
