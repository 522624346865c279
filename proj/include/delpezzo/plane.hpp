#pragma once

#include <array>
#include <string>
#include <vector>

#include "delpezzo/intvec.hpp"

namespace delpezzo {

// Exact projective plane over the rationals. Points and lines are primitive
// integer triples canonicalized so the first nonzero entry is positive, which
// makes projective equality plain equality and keeps outputs deterministic.
struct ProjPoint {
    std::array<Int, 3> h{};

    ProjPoint(Int x, Int y, Int z);
    bool operator==(const ProjPoint&) const = default;
};

struct ProjLine {
    std::array<Int, 3> h{};

    ProjLine(Int a, Int b, Int c);
    bool operator==(const ProjLine&) const = default;
};

bool incident(const ProjLine& l, const ProjPoint& p);

/// Cross product of the two coordinate triples. Throws DegenerateInput when
/// the points coincide.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

ProjPoint meet(const ProjLine& l1, const ProjLine& l2);

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Determinant of the 3x3 matrix of the canonical coordinate triples, in
/// argument order. Zero iff the points are collinear.
Int triple_det(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Pairwise distinct and no three collinear.
bool general_position(const std::vector<ProjPoint>& points);

// Symmetric 3x3 integer matrix, primitive as the 6-vector of distinct entries
// (m00, m01, m02, m11, m12, m22). A point p lies on the conic iff p^T M p = 0;
// the conic is smooth iff det(M) != 0.
struct Conic {
    std::array<Int, 6> m{};

    Int value_at(const ProjPoint& p) const;
    Int det() const;
    bool smooth() const { return det() != 0; }

    bool operator==(const Conic&) const = default;
};

/// The unique conic through five points in general position. Throws
/// DegenerateInput otherwise.
Conic conic_through(const std::array<ProjPoint, 5>& points);

/// Witness coordinates: (1:0:0), (0:1:0), (0:0:1), (1:1:1) and, for count 5,
/// a configurable fifth point defaulting to (1:2:3). Validated for general
/// position.
std::vector<ProjPoint> standard_base_points(int count);
std::vector<ProjPoint> standard_base_points(int count, const ProjPoint& fifth);

std::string format_point(const ProjPoint& p);
std::string format_line(const ProjLine& l);
ProjPoint parse_point(const std::string& text);

} // namespace delpezzo
