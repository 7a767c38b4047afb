#pragma once

#include <json.hpp>

#include "ruled/catalog.hpp"
#include "ruled/verify.hpp"

/*
 * JSON codecs.  Every emitted object parses back to an equal value: rationals
 * travel as "p/q" strings (exact), polynomials as explicit term lists in the
 * canonical order, and the extra "display" fields are ignored on input.
 * Insertion-ordered objects keep the output byte-stable.
 */

namespace ruled {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

inline Json json_of(const LaurentPoly& p) {
    Json j;
    j["vars"] = p.vars.names;
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms) terms.push_back(Json{{"exp", e}, {"coeff", to_string(c)}});
    j["terms"] = std::move(terms);
    j["display"] = render(p);
    return j;
}

inline LaurentPoly poly_from_json(const Json& j) {
    Vars v;
    v.names = j.at("vars").get<std::vector<std::string>>();
    LaurentPoly p(v);
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exp").get<Exponents>(), parse_rational(t.at("coeff").get<std::string>()));
    return p;
}

inline Json json_of(const Poly1& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(to_string(c));
    return a;
}

inline Poly1 poly1_from_json(const Json& j) {
    Poly1 p;
    for (const auto& c : j) p.push_back(parse_rational(c.get<std::string>()));
    return p;
}

inline Json json_of(const Point2& p) { return Json::array({to_string(p[0]), to_string(p[1])}); }

inline Json json_of(const GradedRingPresentation& P) {
    Json j;
    j["name"] = P.name;
    j["vars"] = P.vars.names;
    j["degrees"] = P.degrees;
    j["coefficients"] = coeff_name(P.field);
    Json rel = Json::array();
    for (const auto& r : P.relations) rel.push_back(json_of(r));
    j["relations"] = std::move(rel);
    return j;
}

inline Json json_of(const HilbertData& h) {
    Json j;
    j["numerator"] = json_of(h.numerator);
    j["denominator"] = json_of(h.denominator);
    j["dims"] = h.dims;
    return j;
}

inline Json json_of(const RingMap& f) {
    Json j;
    j["source"] = f.source.name;
    j["target"] = f.target.name;
    Json images = Json::array();
    for (std::size_t i = 0; i < f.images.size(); ++i)
        images.push_back(Json{{"generator", f.source.vars.names[i]}, {"image", json_of(f.images[i])}});
    j["images"] = std::move(images);
    return j;
}

inline Json json_of(const MomentPolygon& poly) {
    Json verts = Json::array();
    for (const auto& v : poly.vertices) verts.push_back(json_of(v));
    return Json{{"vertices", std::move(verts)}};
}

inline Json json_of(const VertexWeights& w) {
    Json j;
    j["vertex"] = json_of(w.vertex);
    j["weights"] = Json::array({w.weights[0], w.weights[1]});
    return j;
}

inline Json json_of(const KarshonGraph& g) {
    auto comp = [](const ExtremeComponent& c) {
        Json j;
        j["level"] = to_string(c.level);
        if (c.surface)
            j["affine_length"] = to_string(c.affine_length);
        else
            j["weights"] = Json::array({c.weights[0], c.weights[1]});
        return j;
    };
    Json interior = Json::array();
    for (const auto& p : g.interior)
        interior.push_back(Json{{"level", to_string(p.level)},
                                {"weights", Json::array({p.weights[0], p.weights[1]})}});
    return Json{{"min", comp(g.minimum)}, {"max", comp(g.maximum)}, {"interior", interior}};
}

inline Json json_of(const VerifyReport& report) {
    Json suites = Json::array();
    for (const auto& s : report.suites) {
        Json checks = Json::array();
        for (const auto& c : s.checks) {
            Json cj{{"name", c.name}, {"status", c.passed ? "ok" : "fail"}};
            if (!c.detail.empty()) cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        suites.push_back(Json{{"number", s.number},
                              {"suite", s.slug},
                              {"title", s.title},
                              {"status", s.passed ? "ok" : "fail"},
                              {"checks", std::move(checks)},
                              {"seconds", s.seconds}});
    }
    return Json{{"status", report.all_passed ? "ok" : "fail"}, {"suites", std::move(suites)}};
}

// one object with every closed-form ingredient: per-stage data through
// max_stage and per-family relation towers through max_level
inline Json catalog_json(int max_stage = 8, int max_level = 5, int D = 20) {
    if (max_stage < 0 || max_level < 0 || D < 0) throw BadInput("catalog_json: negative bound");
    Json stages = Json::array();
    for (int n = 0; n <= max_stage; ++n) {
        IsometryGroup g = isometry_group(n);
        Json j;
        j["stage"] = n;
        j["isometry_group"] = g.name;
        j["ring"] = json_of(g.rational);
        j["mod2_ring"] = json_of(g.mod2);
        j["restriction"] = json_of(psi_star(n));
        j["kernel_generator"] = json_of(kernel_generator(n));
        if (n >= 2) {
            j["index"] = json_of(atiyah_bott_index(n));
            j["character"] = json_of(h01_character_standard(n));
            j["isotropy_representation"] = isotropy_rep_name(n).name();
            j["euler_class"] = json_of(euler_class(n).poly);
        }
        stages.push_back(std::move(j));
    }
    Json families = Json::array();
    for (SurfaceFamily family : {SurfaceFamily::untwisted, SurfaceFamily::twisted}) {
        Json levels = Json::array();
        for (int l = 0; l <= max_level; ++l) {
            BgData bg = bg_rational_presentation(family, Rational(l) + Rational(1, 2), D);
            levels.push_back(Json{{"l", l},
                                  {"relation", json_of(relation_polynomial(l, family).polynomial)},
                                  {"presentation", json_of(bg.ring)},
                                  {"hilbert", json_of(bg.hilbert)}});
        }
        families.push_back(Json{{"family", family_name(family)}, {"levels", std::move(levels)}});
    }
    return Json{{"stages", std::move(stages)}, {"families", std::move(families)}};
}

}  // namespace ruled
