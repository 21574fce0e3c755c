#include "unicusp/severi.hpp"

#include <algorithm>
#include <stdexcept>

#include "unicusp/rank.hpp"

namespace unicusp {

CuspType::CuspType(NumericalSemigroup s, std::vector<long long> r)
    : semigroup(std::move(s)), profile(std::move(r)) {
  if (profile.empty()) throw std::invalid_argument("cusp type: empty profile");
  long long prev = 0;
  for (long long ri : profile) {
    if (ri <= prev)
      throw std::invalid_argument("cusp type: profile must be strictly increasing and positive");
    if (!semigroup.contains(ri))
      throw std::invalid_argument("cusp type: profile entry " + std::to_string(ri) +
                                  " is not a member of the semigroup");
    prev = ri;
  }
}

std::vector<long long> rstar(const CuspType& cusp) {
  std::vector<long long> out;
  const long long c = cusp.semigroup.conductor();
  for (long long g : cusp.semigroup.minimal_generators()) {
    if (g >= c) continue;
    if (std::find(cusp.profile.begin(), cusp.profile.end(), g) != cusp.profile.end()) continue;
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<long long> ground_of(const CuspType& cusp, const std::vector<long long>& star) {
  std::vector<long long> ground = cusp.profile;
  ground.insert(ground.end(), star.begin(), star.end());
  return ground;
}

// Betti elements of the ground set below the conductor, with their
// representative-difference matrices and stacked rank increments.
std::vector<BettiRecord> build_phi_table(const CuspType& cusp,
                                         const std::vector<long long>& ground) {
  const GroundSet gs(ground);
  const long long c = cusp.semigroup.conductor();
  std::vector<BettiRecord> out;
  std::vector<std::vector<long long>> stacked;
  long long rank_so_far = 0;
  for (long long b = 1; b < c; ++b) {
    auto analysis = analyze_fiber(gs, b);
    if (analysis.classes.size() < 2) continue;
    BettiRecord rec;
    rec.element = b;
    rec.class_count = static_cast<long long>(analysis.classes.size());
    const auto& reps = analysis.representatives;
    for (std::size_t j = 1; j < reps.size(); ++j) {
      std::vector<long long> row(reps[j].size());
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = reps[j][k] - reps[0][k];
      rec.matrix.push_back(row);
      stacked.push_back(std::move(row));
    }
    const long long rank_now = integer_rank(stacked);
    rec.phi = rank_now - rank_so_far;
    rank_so_far = rank_now;
    rec.rho = cusp.semigroup.rho(b);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<BulletRecord> build_r_bullet(const CuspType& cusp,
                                         const std::vector<long long>& star,
                                         const std::vector<long long>& b_prime) {
  std::vector<BulletRecord> out;
  if (star.empty()) return out;
  const long long n = cusp.n();
  long long prev = cusp.profile.back();  // r_n
  for (std::size_t k = 0; k < star.size(); ++k) {
    const long long i = n + 1 + static_cast<long long>(k);
    const long long ri = star[k];
    bool interval_hit = false;
    long long below = 0;
    for (long long b : b_prime) {
      if (b > prev && b < ri) interval_hit = true;
      if (b < ri) ++below;
    }
    const bool count_hit = below > (i - n) - 1;
    if (interval_hit || count_hit) {
      BulletRecord rec;
      rec.element = ri;
      rec.trigger = interval_hit && count_hit ? BulletTrigger::both
                    : interval_hit           ? BulletTrigger::interval
                                             : BulletTrigger::count;
      rec.rho = cusp.semigroup.rho(ri);
      out.push_back(rec);
    }
    prev = ri;
  }
  return out;
}

}  // namespace

std::vector<BettiRecord> phi_table(const CuspType& cusp) {
  return build_phi_table(cusp, ground_of(cusp, rstar(cusp)));
}

std::vector<BulletRecord> r_bullet(const CuspType& cusp) {
  auto star = rstar(cusp);
  auto betti = build_phi_table(cusp, ground_of(cusp, star));
  std::vector<long long> b_prime;
  for (const auto& rec : betti)
    if (rec.phi >= 1) b_prime.push_back(rec.element);
  return build_r_bullet(cusp, star, b_prime);
}

CodimReport codimension(const CuspType& cusp, std::optional<long long> degree) {
  CodimReport report;
  report.semigroup = cusp.semigroup;
  report.profile = cusp.profile;
  for (std::size_t i = 0; i < cusp.profile.size(); ++i)
    report.ram_sum += cusp.profile[i] - static_cast<long long>(i + 1);
  report.rstar = rstar(cusp);
  report.ground = ground_of(cusp, report.rstar);
  report.betti = build_phi_table(cusp, report.ground);
  for (const auto& rec : report.betti)
    if (rec.phi >= 1) report.b_prime.push_back(rec.element);
  report.r_bullet = build_r_bullet(cusp, report.rstar, report.b_prime);

  long long beyond = 0;
  for (const auto& rec : report.betti) beyond += rec.phi * rec.rho;
  long long bullet_sum = 0;
  for (const auto& rec : report.r_bullet) bullet_sum += rec.rho;
  report.codimension = report.ram_sum + beyond - bullet_sum - 1;

  if (degree) {
    DegreeContext ctx;
    ctx.degree = *degree;
    ctx.n = cusp.n();
    ctx.genus = cusp.semigroup.genus();
    ctx.hypothesis_met = *degree >= std::max(ctx.n, 2 * ctx.genus - 2);
    report.context = ctx;
  }
  return report;
}

std::vector<HyperellipticCell> verify_hyperelliptic(long long genus_max, long long n_max) {
  std::vector<HyperellipticCell> cells;
  for (long long g = 1; g <= genus_max; ++g) {
    const NumericalSemigroup s = NumericalSemigroup::from_generators({2, 2 * g + 1});
    for (long long n = 2; n <= std::min(n_max, 2 * g); ++n) {
      std::vector<long long> profile;
      for (long long i = 1; i <= n; ++i) profile.push_back(2 * i);
      HyperellipticCell cell;
      cell.genus = g;
      cell.n = n;
      cell.computed = codimension(CuspType(s, profile)).codimension;
      cell.expected = (n - 1) * g;
      cell.pass = cell.computed == cell.expected;
      cells.push_back(cell);
    }
  }
  return cells;
}

SupersymmetricCheck verify_supersymmetric(long long a1, long long a2, long long a3) {
  SupersymmetricCheck check;
  check.a1 = a1;
  check.a2 = a2;
  check.a3 = a3;
  const NumericalSemigroup s = NumericalSemigroup::supersymmetric({a1, a2, a3});
  std::vector<long long> profile = s.minimal_generators();
  check.rho_value = s.rho(a1 * a2 * a3);
  check.computed = codimension(CuspType(s, profile)).codimension;
  check.closed_form = 2 * check.rho_value + a1 * a2 + a1 * a3 + a2 * a3 - 7;
  check.pass = check.computed == check.closed_form;
  return check;
}

NodalComparison compare_nodal(const CuspType& cusp, long long n) {
  NodalComparison cmp;
  cmp.codimension = codimension(cusp).codimension;
  cmp.genus = cusp.semigroup.genus();
  cmp.n = n;
  cmp.below_nodal = cmp.codimension < cmp.genus;
  cmp.hyperelliptic_bound = (n - 1) * cmp.genus;
  cmp.equals_bound = cmp.codimension == cmp.hyperelliptic_bound;
  return cmp;
}

}  // namespace unicusp
