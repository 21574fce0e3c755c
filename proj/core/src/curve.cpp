#include "unicusp/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace unicusp {

MonomialCurve::MonomialCurve(std::vector<long long> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.size() < 2)
    throw std::invalid_argument("monomial curve: need at least two exponents");
  if (exponents_.front() != 0)
    throw std::invalid_argument("monomial curve: exponents must start at 0");
  for (std::size_t i = 1; i < exponents_.size(); ++i)
    if (exponents_[i] <= exponents_[i - 1])
      throw std::invalid_argument("monomial curve: exponents must be strictly increasing");
}

SingularitySemigroups singularity_semigroups(const MonomialCurve& curve) {
  const auto& a = curve.exponents();
  std::vector<long long> gens1(a.begin() + 1, a.end());
  std::vector<long long> gens2;
  const long long top = a.back();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) gens2.push_back(top - a[i]);

  long long d1 = 0;
  for (long long g : gens1) d1 = std::gcd(d1, g);
  long long d2 = 0;
  for (long long g : gens2) d2 = std::gcd(d2, g);
  if (d1 != 1 || d2 != 1)
    throw std::invalid_argument("curve not birational onto image (exponent gcd > 1)");

  return {NumericalSemigroup::from_generators(gens1),
          NumericalSemigroup::from_generators(gens2)};
}

long long arithmetic_genus(const MonomialCurve& curve) {
  const auto sg = singularity_semigroups(curve);
  return sg.at_p1.genus() + sg.at_p2.genus();
}

std::vector<long long> canonical_model(const MonomialCurve& curve) {
  const auto sg = singularity_semigroups(curve);
  const long long g = sg.at_p1.genus() + sg.at_p2.genus();
  if (g == 0)
    throw std::domain_error("rational normal curve; canonical model undefined here");
  const long long gamma = sg.at_p1.frobenius();
  std::vector<long long> exps;
  for (long long h : sg.at_p1.gaps()) exps.push_back(gamma - h);
  for (long long h : sg.at_p2.gaps()) exps.push_back(gamma + h);
  std::sort(exps.begin(), exps.end());
  if (static_cast<long long>(exps.size()) != g ||
      std::adjacent_find(exps.begin(), exps.end()) != exps.end())
    throw std::logic_error("canonical model: exponent count differs from genus");
  return exps;
}

long long sheaf_degree(const NumericalSemigroup& s, long long mu) {
  if (mu < 1) throw std::invalid_argument("sheaf degree: twist must be positive");
  // Members s with s + mu outside the semigroup all lie below c - mu.
  long long moved_out = 0;
  for (long long x = 0; x < s.conductor() - mu; ++x)
    if (s.contains(x) && !s.contains(x + mu)) ++moved_out;
  return moved_out + mu;
}

GonalityResult gonality(const MonomialCurve& curve) {
  const auto sg = singularity_semigroups(curve);
  if (sg.at_p2.genus() != 0)
    throw std::invalid_argument("gonality formula valid only for unicuspidal curves");
  GonalityResult result;
  result.degree = sheaf_degree(sg.at_p1, 1);
  result.mu = {1};
  // deg >= mu, so twists beyond the best degree cannot improve on it.
  for (long long mu = 2; mu <= result.degree; ++mu) {
    const long long deg = sheaf_degree(sg.at_p1, mu);
    if (deg < result.degree) {
      result.degree = deg;
      result.mu = {mu};
    } else if (deg == result.degree) {
      result.mu.push_back(mu);
    }
  }
  return result;
}

namespace {

// Number of maximal difference-mu runs; each run is one part and no
// partition with this difference can do better.
long long part_count(const std::vector<long long>& sorted_set, long long mu) {
  long long parts = 0;
  for (long long e : sorted_set)
    if (!std::binary_search(sorted_set.begin(), sorted_set.end(), e - mu)) ++parts;
  return parts;
}

std::vector<std::vector<long long>> chains(const std::vector<long long>& sorted_set,
                                           long long mu) {
  std::map<long long, std::size_t> chain_of_tail;
  std::vector<std::vector<long long>> parts;
  for (long long e : sorted_set) {
    auto it = chain_of_tail.find(e - mu);
    if (it == chain_of_tail.end()) {
      parts.push_back({e});
      chain_of_tail[e] = parts.size() - 1;
    } else {
      const std::size_t idx = it->second;
      parts[idx].push_back(e);
      chain_of_tail.erase(it);
      chain_of_tail[e] = idx;
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

}  // namespace

ScrollPartition scroll_partition(std::vector<long long> exponent_set) {
  std::sort(exponent_set.begin(), exponent_set.end());
  exponent_set.erase(std::unique(exponent_set.begin(), exponent_set.end()),
                     exponent_set.end());
  if (exponent_set.empty()) throw std::invalid_argument("scroll: empty exponent set");
  if (exponent_set.front() != 0)
    throw std::invalid_argument("scroll: exponent set must contain 0");

  // Only differences that actually occur can merge anything; any
  // other mu yields all-singleton parts.
  std::vector<long long> candidates{1};
  for (std::size_t i = 0; i < exponent_set.size(); ++i)
    for (std::size_t j = i + 1; j < exponent_set.size(); ++j)
      candidates.push_back(exponent_set[j] - exponent_set[i]);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  long long best_mu = 1;
  long long best_parts = part_count(exponent_set, 1);
  for (long long mu : candidates) {
    const long long parts = part_count(exponent_set, mu);
    if (parts < best_parts) {
      best_parts = parts;
      best_mu = mu;
    }
  }
  ScrollPartition result;
  result.mu = best_mu;
  result.parts = chains(exponent_set, best_mu);
  return result;
}

ScrollConsistency gonality_scroll_consistency(const MonomialCurve& curve) {
  const auto sg = singularity_semigroups(curve);
  if (sg.at_p2.genus() != 0)
    throw std::invalid_argument("gonality formula valid only for unicuspidal curves");
  ScrollConsistency report;
  if (sg.at_p1.is_hyperelliptic()) {
    report.skipped = true;
    report.reason = "canonical model not birational; check skipped";
    return report;
  }
  const long long g = sg.at_p1.genus();
  if (g < 3) {
    report.skipped = true;
    report.reason = "genus below 3; check skipped";
    return report;
  }
  report.gonality_degree = gonality(curve).degree;
  report.scroll_fold = scroll_partition(canonical_model(curve)).fold();
  report.consistent = report.scroll_fold + 1 == report.gonality_degree;
  return report;
}

}  // namespace unicusp
