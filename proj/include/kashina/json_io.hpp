#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "kashina/catalog.hpp"
#include "kashina/hopf.hpp"
#include "kashina/matched_pair.hpp"
#include "kashina/matrix.hpp"
#include "kashina/nichols.hpp"
#include "kashina/report.hpp"
#include "kashina/scalar.hpp"
#include "kashina/yd.hpp"

namespace kashina {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline long long mpq_part(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw ResourceError("scalar component too large for JSON serialization");
    return z.get_si();
}

inline json rational_json(const mpq_class& q) {
    return json::array({mpq_part(q.get_num()), mpq_part(q.get_den())});
}

inline mpq_class rational_from_json(const json& j) {
    mpz_class num(static_cast<long>(j.at(0).get<long long>()));
    mpz_class den(static_cast<long>(j.at(1).get<long long>()));
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace detail

inline json scalar_to_json(const Scalar& s) {
    return json{{"re", detail::rational_json(s.re())}, {"im", detail::rational_json(s.im())}};
}

inline Scalar scalar_from_json(const json& j) {
    return Scalar(detail::rational_from_json(j.at("re")), detail::rational_from_json(j.at("im")));
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j) {
    std::size_t rows = j.size();
    std::size_t cols = rows ? j.at(0).size() : 0;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t jj = 0; jj < cols; ++jj) m(i, jj) = scalar_from_json(j.at(i).at(jj));
    return m;
}

inline json report_to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"check", c.check}, {"passed", c.passed}, {"witness", c.witness}});
    return json{{"subject", r.subject}, {"all_passed", r.all_passed()}, {"checks", std::move(checks)}};
}

inline json matched_pair_to_json(const MatchedPair& mp) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = mp.name;
    json la = json::array(), ra = json::array(), st = json::array(), tt = json::array();
    for (auto g : GroupElt::all()) {
        la.push_back(mp.lact[g.idx()].name());
        ra.push_back(mp.ract[g.idx()]);
        st.push_back(scalar_to_json(mp.sigma_tt[g.idx()]));
        json row = json::array();
        for (auto h : GroupElt::all()) row.push_back(scalar_to_json(mp.tau_t[g.idx()][h.idx()]));
        tt.push_back(std::move(row));
    }
    j["left_action_t"] = std::move(la);
    j["right_action_t"] = std::move(ra);
    j["sigma_tt"] = std::move(st);
    j["tau_t"] = std::move(tt);
    return j;
}

inline MatchedPair matched_pair_from_json(const json& j) {
    MatchedPair mp;
    mp.name = j.at("name").get<std::string>();
    for (std::size_t k = 0; k < 8; ++k) {
        mp.lact[k] = GroupElt::parse(j.at("left_action_t").at(k).get<std::string>());
        mp.ract[k] = j.at("right_action_t").at(k).get<int>();
        mp.sigma_tt[k] = scalar_from_json(j.at("sigma_tt").at(k));
        for (std::size_t l = 0; l < 8; ++l)
            mp.tau_t[k][l] = scalar_from_json(j.at("tau_t").at(k).at(l));
    }
    return mp;
}

inline json hopf_to_json(const HopfAlgebra& h) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = h.dim;
    j["basis"] = h.basis;
    json mult = json::array();
    for (std::size_t i = 0; i < h.dim; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < h.dim; ++k) {
            json terms = json::array();
            for (const auto& [idx, c] : h.mult[i][k])
                terms.push_back(json::array({idx, scalar_to_json(c)}));
            row.push_back(std::move(terms));
        }
        mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
    json comult = json::array();
    for (std::size_t i = 0; i < h.dim; ++i) {
        json terms = json::array();
        for (const auto& t : h.comult[i])
            terms.push_back(json::array({scalar_to_json(t.coeff), t.left, t.right}));
        comult.push_back(std::move(terms));
    }
    j["comult"] = std::move(comult);
    json unit = json::array();
    for (const auto& [idx, c] : h.unit) unit.push_back(json::array({idx, scalar_to_json(c)}));
    j["unit"] = std::move(unit);
    json counit = json::array();
    for (const auto& c : h.counit) counit.push_back(scalar_to_json(c));
    j["counit"] = std::move(counit);
    j["antipode"] = matrix_to_json(h.antipode);
    return j;
}

inline json representation_to_json(const Representation& r) {
    json j;
    j["label"] = r.label;
    j["family"] = family_name(r.family);
    j["dim"] = r.dim;
    j["mu"] = r.mu.name();
    j["index"] = r.index;
    json e = json::object();
    for (auto g : GroupElt::all()) e["e(" + g.name() + ")"] = matrix_to_json(r.e[g.idx()]);
    j["generators"] = json::object();
    j["generators"]["e"] = std::move(e);
    j["generators"]["t"] = matrix_to_json(r.t);
    if (r.chi_zero) {
        j["generators"]["zeta_x"] = matrix_to_json(r.zeta_x);
        j["generators"]["zeta_y"] = matrix_to_json(r.zeta_y);
        j["zero_side"] = "chi";
    } else {
        j["generators"]["chi_x"] = matrix_to_json(r.chi_x);
        j["generators"]["chi_y"] = matrix_to_json(r.chi_y);
        j["zero_side"] = "zeta";
    }
    return j;
}

inline json coaction_to_json(const YDModule& yd, const HopfAlgebra& h) {
    json per_vec = json::array();
    for (std::size_t k = 0; k < yd.dimV; ++k) {
        json terms = json::array();
        for (const auto& t : yd.coaction[k])
            terms.push_back(json::array({scalar_to_json(t.coeff), t.vec, h.basis[t.hidx]}));
        per_vec.push_back(std::move(terms));
    }
    return per_vec;
}

inline json graded_report_to_json(const GradedDimReport& g) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["braiding_id"] = g.braiding_id;
    j["dimV"] = g.dimV;
    j["n_max"] = g.n_max;
    json ranks = json::array();
    std::size_t cum = 1;
    for (std::size_t k = 0; k < g.ranks.size(); ++k) {
        cum += g.ranks[k];
        ranks.push_back(json{{"n", k + 1}, {"rank", g.ranks[k]}, {"cumulative", cum}});
    }
    j["ranks"] = std::move(ranks);
    if (g.terminated) {
        j["status"] = "terminated";
        j["total"] = *g.total();
    } else {
        j["status"] = "cutoff-exceeded";
        j["n_max_reached"] = g.n_max;
    }
    return j;
}

inline std::string graded_report_to_csv(const GradedDimReport& g) {
    std::string out = "n,rank,cumulative\n";
    std::size_t cum = 1;
    for (std::size_t k = 0; k < g.ranks.size(); ++k) {
        cum += g.ranks[k];
        out += std::to_string(k + 1) + "," + std::to_string(g.ranks[k]) + "," +
               std::to_string(cum) + "\n";
    }
    return out;
}

} // namespace kashina
