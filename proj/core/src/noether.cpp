#include "unicusp/noether.hpp"

#include <stdexcept>

namespace unicusp {

KunzData kunz_set(const NumericalSemigroup& s) {
  KunzData out;
  out.semigroup = s;
  const long long c = s.conductor();
  for (long long a = 0; a < c; ++a)
    if (!s.contains(c - 1 - a)) out.k_below_c.push_back(a);
  return out;
}

NoetherReport max_noether_check(const NumericalSemigroup& s) {
  NoetherReport report;
  report.semigroup = s;
  const long long c = s.conductor();
  report.lo = c;
  report.hi = 2 * c - 3;
  if (report.hi < report.lo) return report;  // vacuous for c <= 2

  std::vector<char> in_k(static_cast<std::size_t>(c), 0);
  for (long long a : kunz_set(s).k_below_c) in_k[static_cast<std::size_t>(a)] = 1;

  for (long long n = report.lo; n <= report.hi; ++n) {
    NoetherWitness w;
    w.n = n;
    for (long long k1 = std::max<long long>(0, n - c + 1); 2 * k1 <= n; ++k1) {
      const long long k2 = n - k1;
      if (k2 >= c) continue;
      if (in_k[static_cast<std::size_t>(k1)] && in_k[static_cast<std::size_t>(k2)]) {
        w.found = true;
        w.k1 = k1;
        w.k2 = k2;
        break;
      }
    }
    if (!w.found) ++report.failures;
    report.entries.push_back(w);
  }
  return report;
}

CoveringCounts covering_counts(long long genus, long long multiplicity, long long k) {
  if (genus < 1) throw std::invalid_argument("covering counts: genus must be >= 1");
  if (multiplicity < 1 || multiplicity > k)
    throw std::invalid_argument("covering counts: need 1 <= multiplicity <= k");
  CoveringCounts out;
  out.n_v = (k - multiplicity + 1) + k + (genus - 1);
  out.n_e = 2 * genus - multiplicity;
  out.heuristic_solvable = out.n_v > out.n_e;
  return out;
}

long long covering_bound(long long genus) {
  if (genus < 0) throw std::invalid_argument("covering bound: negative genus");
  return (genus + 2) / 2;  // ceil((g + 1) / 2)
}

}  // namespace unicusp
