#pragma once

#include "delpezzo/intvec.hpp"

namespace delpezzo {

// A del Pezzo surface presented as a blowup of the plane in r points. Its
// Picard lattice is Z^{r+1} with the orthogonal basis e_0 (line class),
// e_1..e_r (exceptional classes) and intersection form diag(1,-1,...,-1).
struct Surface {
    int degree; // (-K)^2, in 1..9
    int r;      // number of blown-up points, 9 - degree
    int rank;   // r + 1

    explicit Surface(int degree_);
};

// Coefficient vector in the exceptional basis, index 0 first.
using DivisorClass = IntVec;

/// Intersection pairing a0*b0 - sum_{i>=1} a_i*b_i.
Int pairing(const DivisorClass& a, const DivisorClass& b, const Surface& s);

/// K_Y = (-3, 1, ..., 1); pairing(-K, -K) equals the degree.
DivisorClass canonical_class(const Surface& s);

DivisorClass anticanonical_class(const Surface& s);

/// Applies the Gram matrix diag(1,-1,...,-1), so that
/// dot(gram_adjusted(c), h) == pairing(h, c).
DivisorClass gram_adjusted(DivisorClass c);

/// Basis vector e_i (i = 0..r).
DivisorClass basis_class(const Surface& s, int i);

} // namespace delpezzo
