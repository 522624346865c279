#pragma once

#include <cstddef>
#include <vector>

#include "delpezzo/intvec.hpp"

namespace delpezzo {

/// Rank of the row set over the rationals.
std::size_t rank(const std::vector<IntVec>& rows);

/// Integer basis of the right kernel {x : rows * x = 0}, one primitive vector
/// per free column, ordered by free-column index. An empty row list yields the
/// identity basis.
std::vector<IntVec> kernel_basis(const std::vector<IntVec>& rows, std::size_t dim);

} // namespace delpezzo
