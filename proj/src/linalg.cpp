#include "wsp/linalg.hpp"

#include <utility>

namespace wsp {

using boost::multiprecision::cpp_int;

int integer_matrix_rank(std::vector<std::vector<cpp_int>> m) {
    if (m.empty() || m.front().empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();

    cpp_int prev_pivot = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);

        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev_pivot;
            m[i][col] = 0;
        }
        prev_pivot = m[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

int integer_matrix_rank(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<cpp_int>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        big[i].assign(m[i].begin(), m[i].end());
    return integer_matrix_rank(std::move(big));
}

} // namespace wsp
