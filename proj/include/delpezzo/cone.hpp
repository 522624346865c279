#pragma once

#include <cstddef>
#include <vector>

#include "delpezzo/intvec.hpp"

namespace delpezzo {

// Rational polyhedral cone held as a certified dual pair.
//
//   C = span(lineality) + cone(rays)
//     = { x : <f, x> >= 0 for f in facets, <e, x> = 0 for e in equations }
//
// All four lists hold primitive integer vectors sorted ascending
// lexicographically. `rays` are extremal modulo the lineality space,
// `facets` are irredundant relative to the linear span, `equations` are a
// basis of span(C)^perp (empty iff the cone is full-dimensional) and
// `lineality` is a basis of C ∩ -C (empty iff the cone is pointed).
// Membership uses the standard dot product on coefficient vectors.
struct Cone {
    std::size_t ambient = 0;       // ambient dimension
    std::vector<IntVec> rays;      // extremal rays
    std::vector<IntVec> facets;    // irredundant inner normals <f, x> >= 0
    std::vector<IntVec> lineality; // basis of the lineality space
    std::vector<IntVec> equations; // basis of span(C)^perp
    std::size_t dim = 0;           // dimension of the linear span
    bool pointed = true;

    /// Re-checks the whole certificate: cross-pairing signs, extremality of
    /// every ray, irredundancy of every facet, span dimensions, sortedness.
    /// Throws InvariantViolation on any failure.
    void certify() const;

    bool operator==(const Cone&) const = default;
};

// Position of a vector relative to the cone's linear span: INTERIOR is the
// relative interior, i.e. exactly the strictly positive combinations of the
// generators.
enum class Membership { Interior, Boundary, Outside };

const char* to_string(Membership m);

// Extremal rays plus lineality basis of {x : <n, x> >= 0 for all n}, computed
// by the double description method. Normals are primitivized, deduplicated and
// inserted in ascending lexicographic order, so the output is deterministic.
struct GeneratorDescription {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

GeneratorDescription extremal_rays(std::vector<IntVec> normals, std::size_t dim);

/// Cone spanned by the generators. Throws DegenerateInput when the list is
/// empty or all zero; zero generators are otherwise dropped.
Cone cone_from_generators(const std::vector<IntVec>& gens, std::size_t dim);

/// Cone cut out by <n, x> >= 0. An empty list yields the full space.
Cone cone_from_inequalities(const std::vector<IntVec>& normals, std::size_t dim);

/// Swaps the roles of rays and facets; dual(dual(c)) == c exactly.
Cone dual(const Cone& c);

/// Intersection: concatenates the facet and equation systems, deduplicates,
/// and re-runs double description.
Cone intersect(const std::vector<Cone>& cones);

Membership membership(const IntVec& v, const Cone& c);

/// True iff every generator has non-OUTSIDE membership in `outer`.
bool contains(const Cone& outer, const std::vector<IntVec>& inner_gens);

/// Independent test oracle: enumerates all (dim-1)-subsets of the normals,
/// keeps the kernel line of each rank-(dim-1) subset iff it (or its negation)
/// satisfies every inequality. Exact for pointed cones. Guarded to dim <= 7
/// and at most 40 normals (throws OracleScope beyond that).
std::vector<IntVec> brute_force_rays(const std::vector<IntVec>& normals, std::size_t dim);

} // namespace delpezzo
