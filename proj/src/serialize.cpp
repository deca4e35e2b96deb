#include "logloc/serialize.hpp"

#include "logloc/errors.hpp"

namespace logloc::io {

Json to_json(const Rational& q) { return to_string(q); }

namespace {

Json coefficients(const eq::Poly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    if (out.empty()) out.push_back("0");
    return out;
}

eq::Poly poly_from_json(const Json& j)
{
    if (!j.is_array()) throw StructuralError("expected a coefficient list");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return eq::Poly(std::move(c));
}

}  // namespace

Json to_json(const eq::EqScalar& s) { return Json{{"num", coefficients(s.numerator())}, {"den", coefficients(s.denominator())}}; }

Json to_json(const eq::LocusClass& c)
{
    Json coeffs = Json::array();
    for (const auto& s : c.coefficients()) coeffs.push_back(to_json(s));
    return Json{{"truncation", c.truncation()}, {"coefficients", coeffs}};
}

Json to_json(const logmonoid::UnitRoot& u) { return to_string(u.phase()); }

Json to_json(const logmonoid::ContactMatrix& cm) { return Json{{"blocks", cm.blocks()}, {"twists", cm.twists()}}; }

Json to_json(const logmonoid::LogHom& h)
{
    Json units = Json::array();
    for (const auto& u : h.units()) units.push_back(to_json(u));
    return Json{{"contacts", to_json(h.contacts())}, {"units", units}};
}

Json to_json(const splitloci::DiscreteData& gamma)
{
    return Json{{"genus", gamma.genus},
                {"degree", gamma.degree},
                {"contact", gamma.contact},
                {"marks", gamma.marks},
                {"relative_marks", gamma.relative_labels()}};
}

Json to_json(const splitloci::SplitData& sd)
{
    Json base = Json::array();
    for (const auto& p : sd.base) base.push_back(Json{{"genus", p.genus}, {"nodes", p.nodes}, {"marks", p.marks}});
    Json rubber = Json::array();
    for (const auto& p : sd.rubber)
        rubber.push_back(Json{{"genus", p.genus}, {"nodes", p.nodes}, {"contacts", p.contacts}, {"marks", p.marks}});
    return Json{{"k", sd.k()},
                {"alpha", sd.alpha},
                {"lcm", sd.d},
                {"deg1", sd.deg1},
                {"g1", sd.g1},
                {"g2", sd.g2},
                {"S1", sd.s1},
                {"S2", sd.s2},
                {"aut", splitloci::aut_order(sd)},
                {"multiplicity", sd.multiplicity},
                {"base", base},
                {"rubber", rubber}};
}

Json to_json(const splitloci::LocusLabel& label)
{
    if (label.is_simple()) return Json{{"kind", "simple"}};
    return Json{{"kind", "composite"}, {"split", label.split_index}, {"enhancement", label.enhancement}};
}

Json to_json(const localizer::LocusContribution& c)
{
    Json enh = Json::array();
    for (const auto& units : c.enhancements) {
        Json u = Json::array();
        for (const auto& x : units) u.push_back(to_json(x));
        enh.push_back(u);
    }
    Json out{{"label", to_json(c.label)}};
    if (c.is_composite()) {
        out["alpha"] = c.label.split->alpha;
        out["enhancements"] = enh;
    }
    out["numerator_weight"] = to_json(c.numerator_weight);
    out["node_factor"] = to_json(c.node_factor);
    out["normal_factor"] = to_json(c.normal_factor);
    out["denominator"] = to_json(c.denominator);
    out["payload"] = to_json(c.payload);
    out["rubber_dim"] = c.rubber_dim;
    out["rubber_integral"] = to_json(c.rubber_integral);
    out["branch_points_at_zero"] = c.branch_points_at_zero;
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_string()) throw StructuralError("rationals are serialized as strings");
    return parse_rational(j.get<std::string>());
}

eq::EqScalar eq_scalar_from_json(const Json& j)
{
    return eq::EqScalar(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

eq::LocusClass locus_class_from_json(const Json& j)
{
    std::vector<eq::EqScalar> c;
    for (const auto& x : j.at("coefficients")) c.push_back(eq_scalar_from_json(x));
    return eq::LocusClass(j.at("truncation").get<int>(), std::move(c));
}

}  // namespace logloc::io
