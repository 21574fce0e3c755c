#include "unicusp/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unicusp {

Rational Rational::reduced(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  if (n == 0) return {0, 1};
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  return {n / g, d / g};
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

SimplexSpec SimplexSpec::make(long long a1, long long a2, long long a3) {
  std::array<long long, 3> a{a1, a2, a3};
  std::sort(a.begin(), a.end());
  for (long long x : a)
    if (x < 2) throw std::invalid_argument("simplex: factors must be >= 2");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::gcd(a[i], a[j]) != 1)
        throw std::invalid_argument("simplex: factors are not pairwise coprime");
  SimplexSpec spec;
  spec.a1 = a[0];
  spec.a2 = a[1];
  spec.a3 = a[2];
  const long long product = a[0] * a[1] * a[2];
  spec.coefficients = {a[0] * a[1], a[0] * a[2], a[1] * a[2]};
  spec.bound = product - (spec.coefficients[0] + spec.coefficients[1] + spec.coefficients[2]);
  return spec;
}

long long simplex_lattice_count(const SimplexSpec& spec) {
  if (spec.bound <= 0) return 0;
  const auto [c1, c2, c3] = spec.coefficients;
  long long count = 0;
  for (long long x = 0; x * c1 < spec.bound; ++x) {
    const long long after_x = spec.bound - x * c1;
    for (long long y = 0; y * c2 < after_x; ++y) {
      const long long rem = after_x - y * c2;  // strict bound on z * c3
      count += (rem - 1) / c3 + 1;
    }
  }
  return count;
}

Rational simplex_volume(const SimplexSpec& spec) {
  if (spec.bound <= 0) return {0, 1};
  const long long product = spec.a1 * spec.a2 * spec.a3;
  return Rational::reduced(spec.bound * spec.bound * spec.bound, 6 * product * product);
}

}  // namespace unicusp
