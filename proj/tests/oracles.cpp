#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace oracles {

std::vector<char> naive_member_table(const std::vector<long long>& gens, long long bound) {
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
  member[0] = 1;
  for (long long x = 1; x <= bound; ++x)
    for (long long g : gens)
      if (g <= x && member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
  return member;
}

std::vector<long long> naive_gaps(const std::vector<long long>& gens, long long bound) {
  const auto member = naive_member_table(gens, bound);
  std::vector<long long> gaps;
  for (long long x = 1; x <= bound; ++x)
    if (!member[static_cast<std::size_t>(x)]) gaps.push_back(x);
  return gaps;
}

std::vector<std::vector<long long>> brute_force_gap_sets(long long genus) {
  std::vector<std::vector<long long>> out;
  if (genus == 0) {
    out.push_back({});
    return out;
  }
  const long long top = 2 * genus - 1;  // no gap exceeds 2g - 1
  for (std::uint64_t bits = 0; bits < (1ULL << top); ++bits) {
    if (static_cast<long long>(std::popcount(bits)) != genus) continue;
    std::vector<char> member(static_cast<std::size_t>(top) + 1, 1);
    for (long long i = 1; i <= top; ++i)
      if ((bits >> (i - 1)) & 1ULL) member[static_cast<std::size_t>(i)] = 0;
    bool closed = true;
    for (long long x = 1; x <= top && closed; ++x) {
      if (!member[static_cast<std::size_t>(x)]) continue;
      for (long long y = x; x + y <= top; ++y)
        if (member[static_cast<std::size_t>(y)] &&
            !member[static_cast<std::size_t>(x + y)]) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<long long> gaps;
    for (long long i = 1; i <= top; ++i)
      if (!member[static_cast<std::size_t>(i)]) gaps.push_back(i);
    out.push_back(std::move(gaps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<long long>> naive_fiber(const std::vector<long long>& ground,
                                                long long value) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> box(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) box[i] = value / ground[i];
  std::vector<long long> exps(ground.size(), 0);
  while (true) {
    long long total = 0;
    for (std::size_t i = 0; i < ground.size(); ++i) total += exps[i] * ground[i];
    if (total == value) out.push_back(exps);
    std::size_t pos = ground.size();
    while (pos > 0) {
      --pos;
      if (exps[pos] < box[pos]) {
        ++exps[pos];
        for (std::size_t j = pos + 1; j < ground.size(); ++j) exps[j] = 0;
        break;
      }
      if (pos == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Frac {
  __int128 num = 0;
  __int128 den = 1;

  static Frac of(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = n == 0 ? 1 : gcd128(n, d);
    return {n / g, d / g};
  }
  bool zero() const { return num == 0; }
  Frac operator*(const Frac& o) const { return of(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const { return of(num * o.den, den * o.num); }
  Frac operator-(const Frac& o) const {
    return of(num * o.den - o.num * den, den * o.den);
  }
};

}  // namespace

long long rational_rank(const std::vector<std::vector<long long>>& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::vector<std::vector<Frac>> m(rows, std::vector<Frac>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = Frac::of(matrix[r][c], 1);

  long long rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t pr = pivot_row;
    while (pr < rows && m[pr][col].zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[pivot_row], m[pr]);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (m[r][col].zero()) continue;
      const Frac factor = m[r][col] / m[pivot_row][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = m[r][c] - factor * m[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::vector<std::array<long long, 3>> coprime_triples(long long product_limit) {
  std::vector<std::array<long long, 3>> out;
  for (long long a1 = 2; a1 * (a1 + 1) * (a1 + 2) <= product_limit; ++a1)
    for (long long a2 = a1 + 1; a1 * a2 * (a2 + 1) <= product_limit; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      for (long long a3 = a2 + 1; a1 * a2 * a3 <= product_limit; ++a3) {
        if (std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1) continue;
        out.push_back({a1, a2, a3});
      }
    }
  return out;
}

}  // namespace oracles
