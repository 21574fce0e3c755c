#include "unicusp/rank.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace unicusp {

// Fraction-free elimination: after each step the entries are minors
// of the input, and the division by the previous pivot is exact.
// Rank-deficient columns are skipped; the pivot is the
// largest-magnitude candidate to keep the minors small.
long long integer_rank(std::vector<std::vector<long long>> matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  for (const auto& row : matrix)
    if (row.size() != cols) throw std::invalid_argument("integer_rank: ragged matrix");
  if (cols == 0) return 0;

  const long long max_entry = std::numeric_limits<long long>::max();
  long long rank = 0;
  long long prev_pivot = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t best = pivot_row;
    for (std::size_t r = pivot_row; r < rows; ++r)
      if (std::llabs(matrix[r][col]) > std::llabs(matrix[best][col])) best = r;
    if (matrix[best][col] == 0) continue;
    std::swap(matrix[pivot_row], matrix[best]);
    const long long pivot = matrix[pivot_row][col];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        const __int128 t =
            static_cast<__int128>(matrix[r][c]) * pivot -
            static_cast<__int128>(matrix[r][col]) * matrix[pivot_row][c];
        if (t % prev_pivot != 0)
          throw std::logic_error("integer_rank: inexact division");
        const __int128 q = t / prev_pivot;
        if (q > max_entry || q < -static_cast<__int128>(max_entry))
          throw std::overflow_error("integer_rank: minor exceeds 64 bits");
        matrix[r][c] = static_cast<long long>(q);
      }
      matrix[r][col] = 0;
    }
    prev_pivot = pivot;
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace unicusp
