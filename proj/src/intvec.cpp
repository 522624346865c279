#include "delpezzo/intvec.hpp"

#include <algorithm>

#include "delpezzo/errors.hpp"

namespace delpezzo {

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw DimensionError("dot: vector lengths differ");
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

IntVec primitive(IntVec v) {
    Int g = 0;
    for (const Int& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0)
        throw DegenerateInput("primitive: zero vector");
    if (g > 1)
        for (Int& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVec negated(IntVec v) {
    for (Int& x : v)
        x = -x;
    return v;
}

IntVec combine(const IntVec& a, const Int& ca, const IntVec& b, const Int& cb) {
    if (a.size() != b.size())
        throw DimensionError("combine: vector lengths differ");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = ca * a[i] + cb * b[i];
    return out;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_rows(std::vector<IntVec>& rows) {
    std::sort(rows.begin(), rows.end(), lex_less);
}

void sort_dedupe_rows(std::vector<IntVec>& rows) {
    sort_rows(rows);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::string format_vector(const IntVec& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += v[i].get_str();
    }
    return out;
}

IntVec parse_vector(const std::string& text, char sep) {
    IntVec out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        std::string token = text.substr(pos, next == std::string::npos ? next : next - pos);
        // trim surrounding spaces
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw DegenerateInput("parse_vector: empty entry in \"" + text + "\"");
        token = token.substr(b, e - b + 1);
        try {
            out.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw DegenerateInput("parse_vector: bad integer \"" + token + "\"");
        }
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

} // namespace delpezzo
