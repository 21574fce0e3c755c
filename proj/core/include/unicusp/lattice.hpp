#pragma once

#include <array>
#include <string>

namespace unicusp {

// Reduced fraction with nonnegative denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational reduced(long long n, long long d);
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::string str() const;  // "p/q"
};

// Data of the simplex attached to a pairwise-coprime triple
// a1 < a2 < a3: lattice points (x, y, z) in the nonnegative orthant
// with x*a1*a2 + y*a1*a3 + z*a2*a3 strictly below
// a1*a2*a3 - (a1*a2 + a1*a3 + a2*a3).
struct SimplexSpec {
  long long a1 = 0, a2 = 0, a3 = 0;
  long long bound = 0;  // may be nonpositive (empty region)
  std::array<long long, 3> coefficients{};

  // Validates pairwise coprimality and a_i >= 2; sorts ascending.
  static SimplexSpec make(long long a1, long long a2, long long a3);
};

// Number of lattice points in the open region; 0 when bound <= 0.
// Counting the origin when bound > 0.  Agrees with
// rho(supersymmetric(a), a1*a2*a3) via unique factorization below the
// Betti element.
long long simplex_lattice_count(const SimplexSpec& spec);

// Euclidean volume bound^3 / (6 (a1 a2 a3)^2) as an exact rational;
// 0 when bound <= 0.
Rational simplex_volume(const SimplexSpec& spec);

}  // namespace unicusp
