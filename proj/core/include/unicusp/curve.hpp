#pragma once

#include <string>
#include <vector>

#include "unicusp/semigroup.hpp"

namespace unicusp {

// Rational monomial curve (t^{a_0} : ... : t^{a_n}) with
// 0 = a_0 < a_1 < ... < a_n.
class MonomialCurve {
 public:
  explicit MonomialCurve(std::vector<long long> exponents);  // validates

  const std::vector<long long>& exponents() const { return exponents_; }
  long long n() const { return static_cast<long long>(exponents_.size()) - 1; }

 private:
  std::vector<long long> exponents_;
};

// Semigroups of the two (possibly smooth) singular points: <a_i> at
// the first coordinate point and <a_n - a_i> at the last.
struct SingularitySemigroups {
  NumericalSemigroup at_p1;
  NumericalSemigroup at_p2;
};

// Throws std::invalid_argument ("curve not birational onto image")
// when either generated set has gcd > 1.
SingularitySemigroups singularity_semigroups(const MonomialCurve& curve);

// genus(S_P1) + genus(S_P2).
long long arithmetic_genus(const MonomialCurve& curve);

// Exponents of the canonical model in P^{g-1}: the sorted union of
// {gamma - h : h gap of S_P1} and {gamma + h : h gap of S_P2}, where
// gamma is the Frobenius number of S_P1.  Throws std::domain_error
// when g = 0 (rational normal curve).
std::vector<long long> canonical_model(const MonomialCurve& curve);

// deg O<1, t^mu> = #((S + mu) \ S) + mu for the cusp semigroup of a
// unicuspidal curve.  Throws std::invalid_argument when mu < 1.
long long sheaf_degree(const NumericalSemigroup& s, long long mu);

struct GonalityResult {
  long long degree = 0;
  std::vector<long long> mu;  // all minimizing twists, ascending
};

// Minimum of sheaf_degree over mu >= 1 for a unicuspidal curve
// (S_P2 = N); the search stops once mu exceeds the best degree found,
// since the degree is at least mu.  Throws std::invalid_argument for
// multicuspidal input.
GonalityResult gonality(const MonomialCurve& curve);

// Partition of an exponent set into arithmetic progressions sharing
// one common difference, with the fewest parts; ties favor the
// smaller difference.  Singleton parts are allowed.
struct ScrollPartition {
  long long mu = 1;
  std::vector<std::vector<long long>> parts;  // ordered by first element
  long long fold() const { return static_cast<long long>(parts.size()); }
};

ScrollPartition scroll_partition(std::vector<long long> exponent_set);

// Checks fold(scroll of canonical exponents) + 1 == gonality for a
// unicuspidal curve.  Skipped (with reason) for hyperelliptic S_P1 or
// genus below 3.
struct ScrollConsistency {
  bool skipped = false;
  std::string reason;
  long long gonality_degree = 0;
  long long scroll_fold = 0;
  bool consistent = false;
};

ScrollConsistency gonality_scroll_consistency(const MonomialCurve& curve);

}  // namespace unicusp
