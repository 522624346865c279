#pragma once

#include "delpezzo/scenarios.hpp"

namespace delpezzo {

/// { "dim": n, "rays": [[...]], "facets": [[...]], "pointed": bool } with rows
/// sorted ascending lexicographically. "lineality" / "equations" keys appear
/// only when nonempty (never for the full-dimensional pointed cones computed
/// here). Entries must fit in 64 bits; larger values throw.
Json cone_to_json(const Cone& c);

/// { "name": str, "passed": bool, "details": object }
Json report_to_json(const CheckReport& r);

/// Deterministic vertex/edge listing of the incidence graph.
Json graph_to_json(const CurveSet& cs, const IncidenceGraph& g);

Json blowdown_to_json(const Blowdown& b);
Json cylinder_to_json(const Cylinder& c);
Json family_to_json(const CylinderFamily& f);

std::int64_t to_int64(const Int& x);

} // namespace delpezzo
