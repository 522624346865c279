#include "delpezzo/json_io.hpp"

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

Json rows_to_json(const std::vector<IntVec>& rows) {
    Json out = Json::array();
    for (const IntVec& row : rows) {
        Json r = Json::array();
        for (const Int& x : row)
            r.push_back(to_int64(x));
        out.push_back(std::move(r));
    }
    return out;
}

Json divisor_strings(const std::vector<DivisorClass>& list) {
    Json out = Json::array();
    for (const DivisorClass& c : list)
        out.push_back(format_vector(c));
    return out;
}

} // namespace

std::int64_t to_int64(const Int& x) {
    if (!x.fits_slong_p())
        throw InvariantViolation("to_int64: value " + x.get_str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(x.get_si());
}

Json cone_to_json(const Cone& c) {
    Json out{{"dim", c.ambient},
             {"rays", rows_to_json(c.rays)},
             {"facets", rows_to_json(c.facets)},
             {"pointed", c.pointed}};
    if (!c.lineality.empty())
        out["lineality"] = rows_to_json(c.lineality);
    if (!c.equations.empty())
        out["equations"] = rows_to_json(c.equations);
    return out;
}

Json report_to_json(const CheckReport& r) {
    return Json{{"name", r.name}, {"passed", r.passed}, {"details", r.details}};
}

Json graph_to_json(const CurveSet& cs, const IncidenceGraph& g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges)
        edges.push_back(Json::array({a, b}));
    return Json{{"vertices", divisor_strings(cs.classes)}, {"edges", std::move(edges)}};
}

Json blowdown_to_json(const Blowdown& b) {
    return Json{{"contracted", divisor_strings(b.contracted)},
                {"line_class", format_vector(b.line_class)}};
}

Json cylinder_to_json(const Cylinder& c) {
    Json pairs = Json::array();
    for (const auto& pair : c.pair_partition)
        pairs.push_back(Json::array({format_vector(pair[0]), format_vector(pair[1])}));
    return Json{{"id", c.id},
                {"contracted", divisor_strings(c.blowdown.contracted)},
                {"line_class", format_vector(c.blowdown.line_class)},
                {"pairs", std::move(pairs)},
                {"complement", divisor_strings(c.complement)}};
}

Json family_to_json(const CylinderFamily& f) {
    return Json{{"id", f.id},
                {"base_curve", format_vector(f.base_curve)},
                {"contracted", divisor_strings(f.contracted)},
                {"line_class", format_vector(f.line_class)},
                {"residual", divisor_strings(f.residual)}};
}

} // namespace delpezzo
