#include "delpezzo/plane.hpp"

#include <utility>

#include "delpezzo/errors.hpp"
#include "delpezzo/linalg.hpp"

namespace delpezzo {

namespace {

std::array<Int, 3> canonical_triple(Int x, Int y, Int z, const char* what) {
    IntVec v{std::move(x), std::move(y), std::move(z)};
    if (is_zero(v))
        throw DegenerateInput(std::string(what) + ": zero coordinate triple");
    v = primitive(std::move(v));
    for (const Int& e : v) {
        if (e == 0)
            continue;
        if (e < 0)
            v = negated(std::move(v));
        break;
    }
    return {std::move(v[0]), std::move(v[1]), std::move(v[2])};
}

std::array<Int, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int det3(const std::array<Int, 3>& a, const std::array<Int, 3>& b, const std::array<Int, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::string format_triple(const std::array<Int, 3>& h) {
    return h[0].get_str() + ":" + h[1].get_str() + ":" + h[2].get_str();
}

} // namespace

ProjPoint::ProjPoint(Int x, Int y, Int z)
    : h(canonical_triple(std::move(x), std::move(y), std::move(z), "ProjPoint")) {}

ProjLine::ProjLine(Int a, Int b, Int c)
    : h(canonical_triple(std::move(a), std::move(b), std::move(c), "ProjLine")) {}

bool incident(const ProjLine& l, const ProjPoint& p) {
    return l.h[0] * p.h[0] + l.h[1] * p.h[1] + l.h[2] * p.h[2] == 0;
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q)
        throw DegenerateInput("line_through: points coincide");
    auto c = cross(p.h, q.h);
    return ProjLine(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2)
        throw DegenerateInput("meet: lines coincide");
    auto c = cross(l1.h, l2.h);
    return ProjPoint(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    return det3(p.h, q.h, r.h) == 0;
}

Int triple_det(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    return det3(p.h, q.h, r.h);
}

bool general_position(const std::vector<ProjPoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j])
                return false;
            for (std::size_t k = j + 1; k < points.size(); ++k)
                if (collinear(points[i], points[j], points[k]))
                    return false;
        }
    return true;
}

Int Conic::value_at(const ProjPoint& p) const {
    const Int& x = p.h[0];
    const Int& y = p.h[1];
    const Int& z = p.h[2];
    return m[0] * x * x + m[3] * y * y + m[5] * z * z + 2 * (m[1] * x * y + m[2] * x * z + m[4] * y * z);
}

Int Conic::det() const {
    // | m00 m01 m02 |
    // | m01 m11 m12 |
    // | m02 m12 m22 |
    return m[0] * (m[3] * m[5] - m[4] * m[4]) - m[1] * (m[1] * m[5] - m[4] * m[2]) +
           m[2] * (m[1] * m[4] - m[3] * m[2]);
}

Conic conic_through(const std::array<ProjPoint, 5>& points) {
    std::vector<ProjPoint> pts(points.begin(), points.end());
    if (!general_position(pts))
        throw DegenerateInput("conic_through: points are not in general position");

    // coefficient row for a x^2 + b xy + c y^2 + d xz + e yz + f z^2 = 0
    std::vector<IntVec> rows;
    rows.reserve(5);
    for (const ProjPoint& p : pts) {
        const Int& x = p.h[0];
        const Int& y = p.h[1];
        const Int& z = p.h[2];
        rows.push_back(IntVec{x * x, x * y, y * y, x * z, y * z, z * z});
    }
    std::vector<IntVec> ker = kernel_basis(rows, 6);
    if (ker.size() != 1)
        throw DegenerateInput("conic_through: incidence system is rank deficient");
    const IntVec& q = ker.front();

    // double the matrix so the off-diagonal halves stay integral
    IntVec six{2 * q[0], q[1], q[3], 2 * q[2], q[4], 2 * q[5]};
    six = primitive(std::move(six));
    for (const Int& e : six) {
        if (e == 0)
            continue;
        if (e < 0)
            six = negated(std::move(six));
        break;
    }
    Conic c;
    for (std::size_t i = 0; i < 6; ++i)
        c.m[i] = std::move(six[i]);

    if (!c.smooth())
        throw InvariantViolation("conic_through: conic through general-position points is singular");
    for (const ProjPoint& p : pts)
        if (c.value_at(p) != 0)
            throw InvariantViolation("conic_through: computed conic misses an input point");
    return c;
}

std::vector<ProjPoint> standard_base_points(int count) {
    return standard_base_points(count, ProjPoint(1, 2, 3));
}

std::vector<ProjPoint> standard_base_points(int count, const ProjPoint& fifth) {
    if (count != 4 && count != 5)
        throw DegenerateInput("standard_base_points: count must be 4 or 5");
    std::vector<ProjPoint> pts{ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1),
                               ProjPoint(1, 1, 1)};
    if (count == 5)
        pts.push_back(fifth);
    if (!general_position(pts))
        throw DegenerateInput("standard_base_points: points are not in general position");
    return pts;
}

std::string format_point(const ProjPoint& p) {
    return format_triple(p.h);
}

std::string format_line(const ProjLine& l) {
    return format_triple(l.h);
}

ProjPoint parse_point(const std::string& text) {
    IntVec v = parse_vector(text, ':');
    if (v.size() != 3)
        throw DegenerateInput("parse_point: expected three entries in \"" + text + "\"");
    return ProjPoint(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

} // namespace delpezzo
