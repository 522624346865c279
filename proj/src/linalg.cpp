#include "delpezzo/linalg.hpp"

#include <utility>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

using Rat = mpq_class;
using RatMatrix = std::vector<std::vector<Rat>>;

// Gauss-Jordan over the rationals with first-nonzero pivoting. Returns the
// reduced matrix and the pivot columns.
std::pair<RatMatrix, std::vector<std::size_t>> reduced_row_echelon(const std::vector<IntVec>& rows,
                                                                   std::size_t dim) {
    RatMatrix m;
    m.reserve(rows.size());
    for (const IntVec& r : rows) {
        if (r.size() != dim)
            throw DimensionError("reduced_row_echelon: row length differs from dim");
        std::vector<Rat> row;
        row.reserve(dim);
        for (const Int& x : r)
            row.emplace_back(x);
        m.push_back(std::move(row));
    }

    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[sel], m[row]);
        Rat piv = m[row][col];
        for (std::size_t c = col; c < dim; ++c)
            m[row][c] /= piv;
        for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == row || m[r2][col] == 0)
                continue;
            Rat f = m[r2][col];
            for (std::size_t c = col; c < dim; ++c)
                m[r2][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace

std::size_t rank(const std::vector<IntVec>& rows) {
    if (rows.empty())
        return 0;
    return reduced_row_echelon(rows, rows.front().size()).second.size();
}

std::vector<IntVec> kernel_basis(const std::vector<IntVec>& rows, std::size_t dim) {
    auto [m, pivots] = reduced_row_echelon(rows, dim);

    std::vector<bool> is_pivot(dim, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<IntVec> basis;
    for (std::size_t col = 0; col < dim; ++col) {
        if (is_pivot[col])
            continue;
        std::vector<Rat> x(dim, Rat(0));
        x[col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -m[i][col];
        Int l = 1;
        for (const Rat& xi : x)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), xi.get_den().get_mpz_t());
        IntVec v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            Int scale;
            mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), x[i].get_den().get_mpz_t());
            v[i] = x[i].get_num() * scale;
        }
        basis.push_back(primitive(std::move(v)));
    }
    return basis;
}

} // namespace delpezzo
