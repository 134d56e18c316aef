#ifndef CHEREDNIK_JSON_IO_HPP
#define CHEREDNIK_JSON_IO_HPP

#include "cherednik/checks.hpp"
#include "cherednik/klr.hpp"

#include <json.hpp>

namespace cherednik {

using json = nlohmann::json;

/// Exact JSON mirrors: rationals as "num/den" strings, cyclotomic elements
/// as coefficient arrays in the power basis of zeta.

inline json to_json(const CycElem& c) {
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(rat_to_string(r));
    return json{{"ell", c.ell()}, {"coeffs", coeffs}};
}

inline json to_json(const CycScalar& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(json{{"exp", e}, {"coeff", to_json(c)}});
    json names = json::array();
    for (unsigned i = 0; i < 2 + s.ell(); ++i) names.push_back(indet_name(i));
    return json{{"ell", s.ell()}, {"indets", names}, {"terms", terms}};
}

inline json to_json(const GroupElem& g) {
    return json{{"perm", g.perm()}, {"t", g.tors()}};
}

inline json to_json(const HElem& h) {
    json terms = json::array();
    for (const auto& [k, c] : h.terms())
        terms.push_back(json{{"x", k.xexp},
                             {"perm", k.g.perm()},
                             {"t", k.g.tors()},
                             {"y", k.yexp},
                             {"coeff", to_json(c)}});
    return json{{"ell", h.ell()}, {"n", h.n()}, {"terms", terms}};
}

inline json to_json(const PolyUT& f) {
    json terms = json::array();
    for (const auto& [k, c] : f.terms())
        terms.push_back(json{{"u", k.uexp}, {"t", k.texp}, {"coeff", to_json(c)}});
    return json{{"ell", f.ell()}, {"n", f.n()}, {"terms", terms}};
}

inline json to_json(const Residue& r) {
    return json{{"r0", rat_to_string(r.r0)}, {"r1", rat_to_string(r.r1)}};
}

inline json to_json(const QuiverD& q, const KlrContext& ctx) {
    json verts = json::array();
    for (const auto& v : q.vertices) verts.push_back(to_json(v));
    json arrows = json::array();
    for (auto [a, b] : q.arrows) arrows.push_back(json::array({a, b}));
    auto st = classify_quiver(ctx, q);
    json structure{{"degrees_ok", st.degrees_ok}};
    if (st.rational) {
        structure["kind"] = "e-cycles";
        structure["e"] = st.cycle_length.str();
        structure["cycles_ok"] = st.cycles_ok;
    } else {
        structure["kind"] = "linear";
        structure["acyclic"] = st.acyclic;
    }
    return json{{"vertices", verts}, {"arrows", arrows}, {"structure", structure}};
}

inline json to_json(const Loading& L) {
    json pts = json::array();
    for (const auto& p : L.points)
        pts.push_back(json{{"pos", rat_to_string(p.pos)},
                           {"base", rat_to_string(p.base)},
                           {"label", to_json(p.label)},
                           {"index", p.index}});
    json reds = json::array();
    for (const auto& r : L.red)
        reds.push_back(json{{"pos", rat_to_string(r.pos)}, {"label", to_json(r.label)},
                            {"i", r.i}});
    return json{{"eps", rat_to_string(L.eps)}, {"points", pts}, {"red", reds}};
}

inline json to_json(const KzWeights& w) {
    json a = json::array();
    for (const auto& p : w.a) a.push_back(p.to_string());
    return json{{"N", w.N.str()}, {"a", a}, {"z", w.z}};
}

inline json to_json(const SuiteResult& s) {
    return json{{"suite", s.name},
                {"checked", s.checked},
                {"failed", s.failed},
                {"ok", s.ok},
                {"failures", s.failures}};
}

} // namespace cherednik

#endif
