#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace wsp {

// Rank over Q of an integer matrix, by fraction-free (Bareiss) elimination.
// Exact; no floating point.
int integer_matrix_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> m);

int integer_matrix_rank(const std::vector<std::vector<long long>>& m);

} // namespace wsp
