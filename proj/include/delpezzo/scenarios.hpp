#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "delpezzo/cone.hpp"
#include "delpezzo/neg_curves.hpp"
#include "delpezzo/picard.hpp"

namespace delpezzo {

using Json = nlohmann::ordered_json;

// One of the 15 degree-5 cylinders: a blowdown plus a split of its four
// contracted classes into two pairs. The complement of the cylinder consists
// of the four contracted classes and the two line classes
// L = line_class - f_a - f_b through the paired base points.
struct Cylinder {
    int id = 0; // 1..15; blowdowns in blowdown order, partitions lexicographic
    Blowdown blowdown;
    std::array<std::array<DivisorClass, 2>, 2> pair_partition;
    std::vector<DivisorClass> complement; // 6 classes, sorted
};

// One of the 5 degree-4 conic-pencil cylinder families: a base curve C, the
// five disjoint neighbors contracted by the associated blowdown, its line
// class, and the residual set left uncovered by every member of the family.
struct CylinderFamily {
    int id = 0; // 1..5, cycle order
    DivisorClass base_curve;
    std::vector<DivisorClass> contracted; // the 5 neighbors of base_curve
    DivisorClass line_class;
    std::vector<DivisorClass> residual; // {base_curve} + contracted, sorted

    /// Generators of the polarity cone of the family: contracted classes plus
    /// the base curve and the line class (7 classes).
    std::vector<DivisorClass> polarity_generators() const;
};

struct CheckReport {
    std::string name;
    bool passed = false;
    Json details; // on failure carries a concrete counterexample
};

// The three orbits of (-1)-classes of size 5 under the index cycle
// 1 -> 2 -> ... -> 5 -> 1: the exceptional classes e_i, the line classes
// e0 - e_i - e_{i+1}, and the line classes e0 - e_i - e_{i+2}.
enum class Deg4Orbit { Exceptional, AdjacentLines, SkipLines };

const char* to_string(Deg4Orbit o);
Deg4Orbit parse_orbit(const std::string& name);

/// cone over the (-1)-classes. Degrees 4 and 5.
Cone effective_cone(const Surface& s);

/// One inequality per (-1)-class C, with Gram-adjusted normal so that the
/// facet value of H is pairing(H, C). INTERIOR membership = ample.
Cone nef_cone(const Surface& s);

/// The known extremal-ray lists of the nef cones (10 rays for degree 5,
/// 26 for degree 4), sorted.
std::vector<IntVec> reference_nef_rays(const Surface& s);

/// The 15 cylinders: 3 pair partitions for each of the 5 blowdowns.
std::vector<Cylinder> cylinders_deg5(const Surface& s);

/// Cone spanned by a cylinder complement. A class H is polar for the cylinder
/// iff membership(H, cone) == INTERIOR.
Cone polarity_cone(const std::vector<DivisorClass>& complement);

/// Every polarity cone is full-dimensional and contains all nef extremal
/// rays, hence every ample class is INTERIOR in all 15 cones.
CheckReport check_polarity_deg5();

std::vector<CylinderFamily> families_deg4(const Surface& s, Deg4Orbit orbit);

/// Intersection of the five family polarity cones.
Cone flexibility_cone_deg4(Deg4Orbit orbit);

/// The orbit whose flexibility cone matches the reference 72-ray list;
/// selected empirically, cached per process.
Deg4Orbit selected_orbit();

/// The 72 extremal rays of the flexibility cone: 14 coefficient patterns of
/// orbit size 5 plus the two cyclically invariant rays e0 and 5e0 - 2*sum e_k,
/// expanded over the cyclic index rotations. Sorted.
std::vector<IntVec> reference_flex_rays_deg4();

/// -K is INTERIOR in the flexibility cone; the ample class
/// 8e0-2e1-4e2-e3-e4-3e5 is INTERIOR in the nef cone yet OUTSIDE the
/// flexibility cone.
CheckReport check_memberships_deg4(Deg4Orbit orbit);

/// Edge/vertex coverage of the 15 cylinders plus the geometric witness: the
/// three base points of the reference blowdown are pairwise distinct and not
/// collinear in standard coordinates.
CheckReport check_cover_deg5();

/// Residual-set intersection is empty; every vertex and every edge of the
/// degree-4 incidence graph avoids some family residual.
CheckReport check_cover_deg4(Deg4Orbit orbit);

// Report builders over explicit cylinder/family lists; used by the checks
// above and by negative controls that corrupt their input.
CheckReport polarity_report(const std::vector<Cylinder>& cylinders, const Cone& nef);
CheckReport cover_report_deg5(const std::vector<Cylinder>& cylinders, const CurveSet& cs,
                              const IncidenceGraph& graph);
CheckReport cover_report_deg4(const std::vector<CylinderFamily>& families, const CurveSet& cs,
                              const IncidenceGraph& graph);

/// The full ordered verification suite: curve counts, graph invariants, nef
/// rays (both degrees), polarity, flexibility-cone rays, memberships, covers.
std::vector<CheckReport> reproduction_suite();

} // namespace delpezzo
