#include "gnum/json_io.hpp"

#include "gnum/parser.hpp"

namespace gnum {

Json to_json(const NormalForm& x) {
    std::vector<NormalAtom> atoms;
    const auto terms = x.terms(&atoms);
    Json out;
    out["terms"] = Json::array();
    for (const auto& t : terms)
        out["terms"].push_back({{"c", t.coef.to_string()}, {"r", to_string(t.exponent)}, {"atom", t.atom_id}});
    out["atoms"] = Json::object();
    for (const auto& a : atoms) out["atoms"][a.id] = a.set.to_string();
    out["expr"] = format(x.to_germ());
    return out;
}

Json to_json(const TestPoint& t) {
    return {{"level", t.level}, {"iota", to_string(t.iota)}, {"eps", to_string(t.eps)}};
}

Json to_json(const CellSet& s) {
    return {{"set", s.descriptor().to_string()}, {"tail_class", to_string(s.tail())}};
}

Json to_json(const ScalarValue& v) {
    Json out;
    if (v.is_exact()) {
        out["value"] = v.exact().to_string();
        out["exact"] = true;
    } else {
        const ComplexInterval z = v.enclosure();
        out["value"] = v.to_string();
        out["exact"] = false;
        out["re"] = {z.re.lo().to_string(), z.re.hi().to_string()};
        out["im"] = {z.im.lo().to_string(), z.im.hi().to_string()};
        out["width"] = v.width().to_double();
    }
    out["numeric"] = {v.real_double(), v.imag_double()};
    return out;
}

Json valuation_json(const std::optional<Rational>& v) { return v ? Json(to_string(*v)) : Json("+inf"); }

Json to_json(const Valuation& v) {
    Json out;
    if (v.mode == Mode::Exact) {
        out["valuation"] = valuation_json(v.value);
        out["mode"] = "exact";
    } else {
        out["valuation"] = v.infinite() ? Json("+inf") : Json(v.estimate);
        out["mode"] = "sampled";
        out["band"] = v.band;
    }
    return out;
}

Json to_json(const SharpDistance& d) {
    Json out;
    out["value"] = d.value;
    out["exact"] = d.text();
    out["valuation"] = d.v.mode == Mode::Exact ? valuation_json(d.v.value)
                                               : (d.v.infinite() ? Json("+inf") : Json(d.v.estimate));
    out["mode"] = to_string(d.v.mode);
    if (d.v.mode == Mode::Sampled) out["interval"] = {d.lo, d.hi};
    return out;
}

}  // namespace gnum
