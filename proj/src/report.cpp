#include "mzeta/report.hpp"

#include <sstream>

#include "mzeta/errors.hpp"

namespace mz {

namespace {

Json ivec_list(const std::vector<IVec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(v);
    return a;
}

std::string opt_str(const std::optional<long long>& x) { return x ? std::to_string(*x) : "inf"; }

Sign sign_from_name(const std::string& s) {
    if (s == "naive") return Sign::Naive;
    if (s == "plus") return Sign::Plus;
    if (s == "minus") return Sign::Minus;
    throw Error("unknown series sign '" + s + "'");
}

}  // namespace

Json upoly_json(const UPoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({e, c});
    return a;
}

UPoly upoly_from_json(const Json& j) {
    UPoly p;
    for (const auto& t : j) p.add_coeff(t.at(0).get<int>(), t.at(1).get<std::int64_t>());
    return p;
}

Json urat_json(const URat& r) {
    Json den = Json::array();
    for (const auto& [s, m] : r.denominator()) den.push_back({s, m});
    return {{"numerator", upoly_json(r.numerator())}, {"denominator", den}};
}

Json newton_json_value(const NewtonData& nd, const std::vector<std::string>& vars) {
    Json j;
    j["schema"] = "newton/1";
    j["polynomial"] = nd.poly.to_string(vars);
    j["vars"] = vars;
    j["n"] = nd.n;
    j["convenient"] = is_convenient(nd);
    j["vertices"] = ivec_list(nd.vertices);
    Json faces = Json::array();
    for (const auto& f : nd.faces) {
        Json fj;
        fj["id"] = f.id;
        fj["dim"] = f.dim;
        fj["exponents"] = ivec_list(f.exponents);
        fj["vertices"] = ivec_list(f.vertices);
        fj["normal_rays"] = ivec_list(f.normal_rays);
        faces.push_back(fj);
    }
    j["faces"] = faces;
    j["generators"] = ivec_list(nd.generators);
    j["generators_positive"] = ivec_list(nd.generators_pos);
    Json fan = Json::array();
    for (const auto& c : nd.fan) {
        Json cj;
        cj["generators"] = ivec_list(c.generators);
        cj["face"] = c.face_ref;
        cj["unimodular"] = c.unimodular;
        fan.push_back(cj);
    }
    j["refined"] = nd.refined;
    j["fan"] = fan;
    LeadingExponent le = leading_exponent(nd);
    j["leading_exponent"] = rat_to_string(le.value);
    j["max_set"] = ivec_list(le.max_set);
    j["position_of_ones"] = position_of_ones(nd);
    return j;
}

std::string newton_json(const NewtonData& nd, const std::vector<std::string>& vars) {
    return newton_json_value(nd, vars).dump(2);
}

Json measures_json(const NewtonData& nd, const std::vector<FaceMeasure>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) {
        Json j;
        j["face"] = m.face;
        j["dim"] = m.dim;
        j["exponents"] = ivec_list(nd.face(m.face).exponents);
        j["x_hat"] = upoly_json(m.x_hat);
        j["x"] = upoly_json(m.x_full);
        j["x_closure"] = upoly_json(m.x_closure);
        j["x_plus"] = m.x_plus ? upoly_json(*m.x_plus) : Json(nullptr);
        j["x_minus"] = m.x_minus ? upoly_json(*m.x_minus) : Json(nullptr);
        if (!m.signed_note.empty()) j["signed_note"] = m.signed_note;
        j["plus_nonempty"] = m.plus_nonempty;
        j["minus_nonempty"] = m.minus_nonempty;
        j["definite"] = m.definite;
        j["source"] = m.source;
        a.push_back(j);
    }
    return a;
}

Json series_json(const ZetaSeries& s, bool breakdown) {
    Json j;
    j["sign"] = sign_name(s.sign);
    j["K"] = s.K;
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients) {
        Json cj;
        cj["k"] = c.k;
        cj["coefficient"] = upoly_json(c.value);
        if (breakdown) {
            Json b = Json::array();
            for (const auto& fc : c.breakdown)
                b.push_back({{"face", fc.face}, {"P", urat_json(fc.P)}, {"Q", urat_json(fc.Q)}});
            cj["breakdown"] = b;
        }
        coeffs.push_back(cj);
    }
    j["coefficients"] = coeffs;
    return j;
}

Json zeta_document(const std::string& poly_text, const std::vector<std::string>& vars, const NewtonData& nd,
                   const std::vector<FaceMeasure>& ms, const std::vector<ZetaSeries>& series, bool breakdown,
                   const std::optional<Json>& verification) {
    Json j;
    j["schema"] = "zeta/1";
    j["polynomial"] = poly_text;
    j["vars"] = vars;
    j["n"] = nd.n;
    j["K"] = series.empty() ? 0 : series.front().K;
    j["measures"] = measures_json(nd, ms);
    Json arr = Json::array();
    for (const auto& s : series) arr.push_back(series_json(s, breakdown));
    j["series"] = arr;
    if (verification) j["verification"] = *verification;
    return j;
}

ZetaSeries series_from_zeta_document(const Json& doc, Sign sign) {
    if (doc.value("schema", "") != "zeta/1") throw Error("not a zeta/1 document");
    for (const auto& sj : doc.at("series")) {
        if (sign_from_name(sj.at("sign").get<std::string>()) != sign) continue;
        ZetaSeries s;
        s.n = doc.at("n").get<int>();
        s.K = sj.at("K").get<long long>();
        s.sign = sign;
        for (const auto& cj : sj.at("coefficients")) {
            ZetaCoefficient c;
            c.k = cj.at("k").get<long long>();
            c.sign = sign;
            c.value = upoly_from_json(cj.at("coefficient"));
            s.coefficients.push_back(c);
        }
        for (std::size_t i = 0; i < s.coefficients.size(); ++i)
            if (s.coefficients[i].k != static_cast<long long>(i + 1))
                throw Error("zeta/1 coefficients must be listed for k = 1..K in order");
        return s;
    }
    throw Error("document has no " + sign_name(sign) + " series");
}

Json weights_document(const WeightReport& r, const std::optional<WHStructure>& truth) {
    Json j;
    j["schema"] = "weights/1";
    j["verdict"] = r.verdict;
    j["recovered"] = r.recovered;
    Json sign;
    sign["h_sign"] = std::string(1, r.sign.sign);
    sign["basis"] = r.sign.basis;
    sign["L_e"] = rat_to_string(r.sign.L_e);
    sign["m_f_v"] = r.sign.m_f_v;
    sign["h_v"] = r.sign.h_v;
    j["classification"] = sign;
    Json ev;
    ev["p1"] = r.evidence.p1;
    ev["L_e"] = r.evidence.L_e ? Json(rat_to_string(*r.evidence.L_e)) : Json(nullptr);
    ev["sigma"] = r.evidence.sigma ? Json(rat_to_string(*r.evidence.sigma)) : Json(nullptr);
    ev["alpha"] = opt_str(r.evidence.alpha);
    ev["beta"] = opt_str(r.evidence.beta);
    ev["delta"] = opt_str(r.evidence.delta);
    ev["branch"] = r.evidence.branch;
    if (!r.evidence.tie_break.empty()) ev["tie_break"] = r.evidence.tie_break;
    if (!r.evidence.notes.empty()) ev["notes"] = r.evidence.notes;
    j["evidence"] = ev;
    if (truth) {
        j["truth"] = {{"weights", truth->w}, {"degree", truth->d}, {"intercepts", truth->p}};
        j["consistent"] = r.consistent ? Json(*r.consistent) : Json(nullptr);
    }
    return j;
}

std::string series_text(const ZetaSeries& s) {
    std::ostringstream o;
    o << "# " << sign_name(s.sign) << " series, K = " << s.K << "\n";
    for (const auto& c : s.coefficients) o << "k=" << c.k << ": " << c.value.to_string() << "\n";
    return o.str();
}

std::string weights_text(const WeightReport& r) {
    std::ostringstream o;
    o << "verdict: " << r.verdict << "\n";
    if (!r.recovered.empty()) {
        o << "intercepts:";
        for (long long p : r.recovered) o << " " << p;
        o << "\n";
    }
    o << "h(v) sign: " << r.sign.sign << " (" << r.sign.basis << ")\n";
    o << "L_e: " << rat_to_string(r.sign.L_e) << "\n";
    o << "p1: " << r.evidence.p1 << "\n";
    o << "alpha: " << opt_str(r.evidence.alpha) << ", beta: " << opt_str(r.evidence.beta)
      << ", delta: " << opt_str(r.evidence.delta) << "\n";
    o << "branch: " << r.evidence.branch << "\n";
    if (!r.evidence.tie_break.empty()) o << "tie-break: " << r.evidence.tie_break << "\n";
    for (const auto& n : r.evidence.notes) o << "note: " << n << "\n";
    if (r.consistent) o << "consistent with true weights: " << (*r.consistent ? "yes" : "no") << "\n";
    return o.str();
}

}  // namespace mz
