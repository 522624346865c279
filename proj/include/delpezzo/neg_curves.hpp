#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "delpezzo/picard.hpp"

namespace delpezzo {

// All (-1)-curve classes of a surface: c.c = -1 and c.K = -1, sorted
// lexicographically by coefficient vector, duplicate free.
struct CurveSet {
    Surface surface;
    std::vector<DivisorClass> classes;
};

// Simple undirected graph on the curve indices; edge {a, b} iff the classes
// pair to 1. Triangle-free for degrees 4 and 5.
struct IncidenceGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // a < b, sorted
};

// A contraction of r pairwise-disjoint (-1)-curves to the plane, together
// with the pullback of a general line under it.
struct Blowdown {
    std::vector<DivisorClass> contracted;
    DivisorClass line_class;
};

/// Exhaustive enumeration over the finite box implied by the two class
/// equations. Requires degree >= 3 (throws UnsupportedDegree below that).
CurveSet minus_one_classes(const Surface& s);

/// Throws InvariantViolation if any pairwise pairing falls outside {0, 1}.
IncidenceGraph incidence_graph(const CurveSet& cs);

/// All maximum independent r-subsets, each with its line class, ordered
/// lexicographically on the sorted contracted-class lists. Degrees 4 and 5.
std::vector<Blowdown> blowdowns(const CurveSet& cs);

/// (-K + sum of contracted) / 3. Asserts exact divisibility and self-pairing 1.
DivisorClass blowdown_line_class(const std::vector<DivisorClass>& contracted, const Surface& s);

/// All classes pairing to 1 against c, sorted. Throws NotFound when c is not
/// in the set.
std::vector<DivisorClass> neighbors(const CurveSet& cs, const DivisorClass& c);

std::vector<std::size_t> vertex_degrees(const IncidenceGraph& g);
bool is_regular(const IncidenceGraph& g, std::size_t k);
bool triangle_free(const IncidenceGraph& g);

/// Length of a shortest cycle; 0 for acyclic graphs.
std::size_t girth(const IncidenceGraph& g);

} // namespace delpezzo
