#pragma once

#include <optional>
#include <vector>

#include "unicusp/factorization.hpp"
#include "unicusp/semigroup.hpp"

namespace unicusp {

// A cusp type: a numerical semigroup together with a ramification
// profile, i.e. a strictly increasing vector of positive members.
struct CuspType {
  NumericalSemigroup semigroup;
  std::vector<long long> profile;

  CuspType(NumericalSemigroup s, std::vector<long long> r);  // validates
  long long n() const { return static_cast<long long>(profile.size()); }
};

// One Betti element of the combined ground set, with its difference
// matrix and the rank increment it contributes to the stacked matrix.
struct BettiRecord {
  long long element = 0;
  long long class_count = 0;
  std::vector<std::vector<long long>> matrix;  // (class_count-1) x l rows v_j - v_1
  long long phi = 0;
  long long rho = 0;
};

enum class BulletTrigger { interval, count, both };

struct BulletRecord {
  long long element = 0;
  BulletTrigger trigger = BulletTrigger::interval;
  long long rho = 0;
};

// Degree/genus context carried through for consumers; the codimension
// value itself does not depend on the degree.
struct DegreeContext {
  long long degree = 0;
  long long n = 0;
  long long genus = 0;
  bool hypothesis_met = false;  // degree >= max(n, 2g-2)
};

// Itemized evaluation of the codimension formula
//   sum(r_i - i) + sum_B phi(b) rho(b) - sum_{r_bullet} rho(s) - 1.
struct CodimReport {
  NumericalSemigroup semigroup;
  std::vector<long long> profile;
  long long ram_sum = 0;
  std::vector<long long> rstar;   // minimal generators below c outside the profile
  std::vector<long long> ground;  // profile then rstar, each ascending
  std::vector<BettiRecord> betti;
  std::vector<long long> b_prime;
  std::vector<BulletRecord> r_bullet;
  long long codimension = 0;
  std::optional<DegreeContext> context;
};

std::vector<long long> rstar(const CuspType& cusp);
std::vector<BettiRecord> phi_table(const CuspType& cusp);
std::vector<BulletRecord> r_bullet(const CuspType& cusp);
CodimReport codimension(const CuspType& cusp,
                        std::optional<long long> degree = std::nullopt);

// One cell of the hyperelliptic family check: S = <2, 2g+1> with
// profile (2, 4, ..., 2n) against the closed form (n-1)g.
struct HyperellipticCell {
  long long genus = 0;
  long long n = 0;
  long long computed = 0;
  long long expected = 0;
  bool pass = false;
};

std::vector<HyperellipticCell> verify_hyperelliptic(long long genus_max, long long n_max);

// Supersymmetric triple check: formula evaluation against
// 2 rho(a1 a2 a3) + a1 a2 + a1 a3 + a2 a3 - 7.
struct SupersymmetricCheck {
  long long a1 = 0, a2 = 0, a3 = 0;
  long long computed = 0;
  long long closed_form = 0;
  long long rho_value = 0;
  bool pass = false;
};

SupersymmetricCheck verify_supersymmetric(long long a1, long long a2, long long a3);

// Codimension against the genus (the codimension of the g-nodal
// locus) and against the hyperelliptic bound (n-1)g.
struct NodalComparison {
  long long codimension = 0;
  long long genus = 0;
  long long n = 0;
  bool below_nodal = false;           // codimension < genus
  long long hyperelliptic_bound = 0;  // (n-1)g
  bool equals_bound = false;
};

NodalComparison compare_nodal(const CuspType& cusp, long long n);

}  // namespace unicusp
