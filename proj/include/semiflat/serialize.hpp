#pragma once

// JSON encodings. Scalars are {"a": "p/q", "b": "r/s", "D": d}; forms are
// lists of {"indices": [1-based...], "coeff": {"re": ..., "im": ...}}.

#include "semiflat/cohomology.hpp"
#include "semiflat/fourier_mukai.hpp"
#include "semiflat/isomorphism.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace semiflat {

using Json = nlohmann::ordered_json;

inline Json scalar_json(const Scalar& x)
{
    return {{"a", to_string(x.rational_part())}, {"b", to_string(x.surd_part())}, {"D", x.D()}};
}

inline Scalar scalar_from_json(const Json& j)
{
    const Rational a = parse_rational(j.at("a").get<std::string>());
    const Rational b = j.contains("b") ? parse_rational(j.at("b").get<std::string>()) : Rational(0);
    const auto D = j.contains("D") ? j.at("D").get<std::int64_t>() : std::int64_t(0);
    if (D == 0)
        return Scalar(a, b, 0);
    return Scalar(a, b, D);
}

inline Json cscalar_json(const CScalar& z) { return {{"re", scalar_json(z.re())}, {"im", scalar_json(z.im())}}; }

inline CScalar cscalar_from_json(const Json& j)
{
    return {scalar_from_json(j.at("re")), j.contains("im") ? scalar_from_json(j.at("im")) : Scalar(0)};
}

inline Json form_json(const Form& f)
{
    Json out = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json idx = Json::array();
        for (int i : indices_of(m))
            idx.push_back(i + 1);
        out.push_back({{"indices", idx}, {"coeff", cscalar_json(c)}});
    }
    return out;
}

inline Form form_from_json(const Json& j, int n)
{
    Form f(n);
    for (const auto& t : j) {
        std::vector<int> idx;
        for (const auto& i : t.at("indices")) {
            const int k = i.get<int>();
            if (k < 1 || k > n)
                throw MathError("form index out of range");
            idx.push_back(k - 1);
        }
        f += Form::product(n, idx) * cscalar_from_json(t.at("coeff"));
    }
    return f;
}

inline Json matrix_json(const RMatrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).str());
        out.push_back(row);
    }
    return out;
}

inline Json params_json(const Params& p)
{
    Json out = Json::object();
    for (const auto& [k, v] : p)
        out[k] = to_string(v);
    return out;
}

inline Json lie_json(const LieAlgebra& g)
{
    Json de = Json::array();
    for (const auto& f : g.differentials())
        de.push_back(form_json(f));
    return {{"dim", g.dim()}, {"salamon", render_salamon(g)}, {"differentials", de}};
}

// Accepts {"salamon": "...", "params": {...}} or {"dim": n, "differentials": [...]}.
inline LieAlgebra lie_from_json(const Json& j)
{
    if (j.contains("salamon")) {
        Params p;
        if (j.contains("params"))
            for (const auto& [k, v] : j.at("params").items())
                p[k] = parse_rational(v.is_string() ? v.get<std::string>() : v.dump());
        return parse_salamon(j.at("salamon").get<std::string>(), p);
    }
    const int n = j.at("dim").get<int>();
    std::vector<Form> de;
    for (const auto& f : j.at("differentials"))
        de.push_back(form_from_json(f, n));
    if (static_cast<int>(de.size()) != n)
        throw MathError("differential count does not match dim");
    return LieAlgebra(std::move(de));
}

inline Json su3_json(const SU3Report& r)
{
    Json j{{"ok", r.ok()},
           {"decomposable", r.decomposable},
           {"j_exists", r.j_exists},
           {"omega_real", r.omega_real},
           {"omega_type_11", r.omega_type_11},
           {"positive", r.positive},
           {"normalized", r.normalized}};
    Json minors = Json::array();
    for (const auto& m : r.minors)
        minors.push_back(m.str());
    j["minors"] = minors;
    if (r.J)
        j["J"] = matrix_json(*r.J);
    if (r.normalization_ratio)
        j["normalization_ratio"] = r.normalization_ratio->str();
    if (r.verbatim_ratio)
        j["verbatim_ratio"] = r.verbatim_ratio->str();
    if (!r.failure.empty())
        j["failure"] = r.failure;
    return j;
}

inline Json table4_json(const Table4& t)
{
    Json out = Json::array();
    for (const auto& row : t)
        out.push_back(Json(std::vector<int>(row.begin(), row.end())));
    return out;
}

inline Json affine_report_json(const AffineReport& r)
{
    return {{"ok", r.ok()},
            {"homomorphism", r.homomorphism},
            {"left_symmetric", r.left_symmetric},
            {"commutator", r.commutator},
            {"tau_invertible", r.tau_invertible},
            {"failures", r.failures}};
}

inline Json listing_report_json(const ListingReport& r)
{
    Json mm = Json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"side", m.side}, {"index", m.index}, {"expected", m.expected}, {"computed", m.computed}});
    return {{"ok", r.ok()}, {"iia", r.iia}, {"iib", r.iib}, {"mismatches", mm}};
}

inline Json holonomy_json(const HolonomyReport& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"generator", e.name},
                           {"conjugate", matrix_json(e.conjugate)},
                           {"integral", e.integral},
                           {"det", e.det.str()},
                           {"unimodular", e.unimodular},
                           {"translation", e.translation}});
    return {{"ok", r.ok()}, {"strict", r.strict}, {"entries", entries}};
}

inline Json fm_json(const FMReport& r)
{
    Json ranks = Json::array();
    for (const auto& row : r.ranks)
        ranks.push_back(Json(std::vector<int>(row.begin(), row.end())));
    return {{"lemma", r.lemma},
            {"ft_of_one_top_fiber", r.ft_of_one_top_fiber},
            {"ft_of_one_sign", r.ft_of_one_sign},
            {"inverse_roundtrip", r.inverse_roundtrip},
            {"bijective", r.bijective},
            {"ranks", ranks}};
}

inline Json witness_json(const std::optional<SignedPermutation>& w)
{
    if (!w)
        return nullptr;
    return w->str();
}

}  // namespace semiflat
