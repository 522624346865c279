#include "delpezzo/picard.hpp"

#include <string>

#include "delpezzo/errors.hpp"

namespace delpezzo {

Surface::Surface(int degree_) : degree(degree_), r(9 - degree_), rank(10 - degree_) {
    if (degree < 1 || degree > 9)
        throw UnsupportedDegree("surface degree must be in 1..9, got " + std::to_string(degree));
}

Int pairing(const DivisorClass& a, const DivisorClass& b, const Surface& s) {
    const auto n = static_cast<std::size_t>(s.rank);
    if (a.size() != n || b.size() != n)
        throw DimensionError("pairing: class length differs from surface rank");
    Int acc = a[0] * b[0];
    for (std::size_t i = 1; i < n; ++i)
        acc -= a[i] * b[i];
    return acc;
}

DivisorClass canonical_class(const Surface& s) {
    DivisorClass k(static_cast<std::size_t>(s.rank), Int(1));
    k[0] = -3;
    return k;
}

DivisorClass anticanonical_class(const Surface& s) {
    return negated(canonical_class(s));
}

DivisorClass gram_adjusted(DivisorClass c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        c[i] = -c[i];
    return c;
}

DivisorClass basis_class(const Surface& s, int i) {
    if (i < 0 || i > s.r)
        throw DimensionError("basis_class: index out of range");
    DivisorClass e(static_cast<std::size_t>(s.rank), Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

} // namespace delpezzo
