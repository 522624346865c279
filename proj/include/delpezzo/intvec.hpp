#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace delpezzo {

// All lattice data is held as arbitrary-precision integers. Intermediate
// values in the double description method can exceed 64 bits even when the
// inputs are tiny, so there is no fixed-width arithmetic anywhere in the core.
using Int = mpz_class;
using IntVec = std::vector<Int>;

bool is_zero(const IntVec& v);

/// Standard dot product on coefficient vectors.
Int dot(const IntVec& a, const IntVec& b);

/// Divides by the gcd of the entries. The sign is unchanged: rays are never
/// negated, their direction is meaningful. Throws DegenerateInput on zero.
IntVec primitive(IntVec v);

IntVec negated(IntVec v);

/// ca*a + cb*b, componentwise.
IntVec combine(const IntVec& a, const Int& ca, const IntVec& b, const Int& cb);

bool lex_less(const IntVec& a, const IntVec& b);

/// Sorts rows ascending lexicographically.
void sort_rows(std::vector<IntVec>& rows);

/// Sorts ascending lexicographically and removes exact duplicates.
void sort_dedupe_rows(std::vector<IntVec>& rows);

/// "a0,a1,...,ar" with signed decimal entries (sep defaults to ',').
std::string format_vector(const IntVec& v, char sep = ',');

/// Parses the wire format above. Throws DegenerateInput on malformed text.
IntVec parse_vector(const std::string& text, char sep = ',');

} // namespace delpezzo
