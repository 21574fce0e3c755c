#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "unicusp/rank.hpp"
#include "unicusp/severi.hpp"

using unicusp::CuspType;
using unicusp::NumericalSemigroup;

namespace {

CuspType hyperelliptic_cusp(long long g, long long n) {
  std::vector<long long> profile;
  for (long long i = 1; i <= n; ++i) profile.push_back(2 * i);
  return CuspType(NumericalSemigroup::from_generators({2, 2 * g + 1}), profile);
}

}  // namespace

TEST_SUITE_BEGIN("severi");

TEST_CASE("cusp type validation") {
  const auto s = NumericalSemigroup::from_generators({5, 7, 8});
  CHECK_THROWS_AS(CuspType(s, {5, 6}), std::invalid_argument);   // 6 is a gap
  CHECK_THROWS_AS(CuspType(s, {7, 5}), std::invalid_argument);   // not increasing
  CHECK_THROWS_AS(CuspType(s, {}), std::invalid_argument);
  CHECK_NOTHROW(CuspType(s, {5, 7, 8}));
}

TEST_CASE("rstar") {
  CHECK(unicusp::rstar(CuspType(NumericalSemigroup::from_generators({2, 15}),
                                {2, 4, 6, 8}))
            .empty());
  CHECK(unicusp::rstar(CuspType(NumericalSemigroup::supersymmetric({2, 3, 5}),
                                {6, 10, 15}))
            .empty());
  CHECK(unicusp::rstar(CuspType(NumericalSemigroup::from_generators({4, 6, 7}), {4, 6})) ==
        std::vector<long long>{7});
}

TEST_CASE("phi table for <2,15> with profile (2,4,6,8)") {
  const auto table = unicusp::phi_table(
      CuspType(NumericalSemigroup::from_generators({2, 15}), {2, 4, 6, 8}));
  REQUIRE(table.size() == 3);
  CHECK(table[0].element == 4);
  CHECK(table[1].element == 6);
  CHECK(table[2].element == 8);
  for (const auto& rec : table) {
    CHECK(rec.phi == 1);
    CHECK(rec.class_count == 2);
  }
  CHECK(table[0].rho == 5);
  CHECK(table[1].rho == 4);
  CHECK(table[2].rho == 3);
}

TEST_CASE("phi table for supersymmetric triples") {
  const auto t237 = unicusp::phi_table(
      CuspType(NumericalSemigroup::supersymmetric({2, 3, 7}), {6, 14, 21}));
  REQUIRE(t237.size() == 1);
  CHECK(t237[0].element == 42);
  CHECK(t237[0].class_count == 3);
  CHECK(t237[0].matrix ==
        std::vector<std::vector<long long>>{{0, 3, -2}, {7, 0, -2}});
  CHECK(t237[0].phi == 2);

  // Betti element 30 equals the conductor, so it is excluded.
  CHECK(unicusp::phi_table(
            CuspType(NumericalSemigroup::supersymmetric({2, 3, 5}), {6, 10, 15}))
            .empty());
}

TEST_CASE("r_bullet") {
  CHECK(unicusp::r_bullet(CuspType(NumericalSemigroup::from_generators({2, 15}),
                                   {2, 4, 6, 8}))
            .empty());
  // r* = {7} but B' is empty below the conductor 10, so no clause fires.
  CHECK(unicusp::r_bullet(CuspType(NumericalSemigroup::from_generators({4, 6, 7}), {4, 6}))
            .empty());
}

TEST_CASE("codimension worked examples") {
  const auto hyper = unicusp::codimension(
      CuspType(NumericalSemigroup::from_generators({2, 15}), {2, 4, 6, 8}));
  CHECK(hyper.ram_sum == 10);
  CHECK(hyper.codimension == 21);
  CHECK(hyper.b_prime == std::vector<long long>{4, 6, 8});

  const auto s235 = unicusp::codimension(
      CuspType(NumericalSemigroup::supersymmetric({2, 3, 5}), {6, 10, 15}));
  CHECK(s235.ram_sum == 25);
  CHECK(s235.codimension == 24);

  const auto s237 = unicusp::codimension(
      CuspType(NumericalSemigroup::supersymmetric({2, 3, 7}), {6, 14, 21}));
  CHECK(s237.ram_sum == 35);
  CHECK(s237.codimension == 36);
}

TEST_CASE("degree context is recorded, not used") {
  const CuspType cusp(NumericalSemigroup::from_generators({2, 15}), {2, 4, 6, 8});
  const auto with = unicusp::codimension(cusp, 13);
  REQUIRE(with.context.has_value());
  CHECK(with.context->hypothesis_met);  // 13 >= max(4, 12)
  CHECK(with.codimension == unicusp::codimension(cusp).codimension);
  const auto low = unicusp::codimension(cusp, 5);
  CHECK_FALSE(low.context->hypothesis_met);
}

TEST_CASE("phi telescopes to the stacked rank") {
  const std::vector<CuspType> cusps{
      CuspType(NumericalSemigroup::from_generators({2, 15}), {2, 4, 6, 8}),
      CuspType(NumericalSemigroup::supersymmetric({2, 3, 7}), {6, 14, 21}),
      CuspType(NumericalSemigroup::from_generators({4, 6, 7}), {4, 6}),
      CuspType(NumericalSemigroup::from_generators({3, 7}), {3, 7, 9})};
  for (const auto& cusp : cusps) {
    const auto table = unicusp::phi_table(cusp);
    long long phi_sum = 0;
    std::vector<std::vector<long long>> stacked;
    for (const auto& rec : table) {
      phi_sum += rec.phi;
      CHECK(rec.phi >= 0);
      for (const auto& row : rec.matrix) stacked.push_back(row);
    }
    REQUIRE(phi_sum == unicusp::integer_rank(stacked));
  }
}

TEST_CASE("phi is invariant under the choice of representatives") {
  std::mt19937 rng(424242);
  const std::vector<CuspType> cusps{
      CuspType(NumericalSemigroup::from_generators({2, 15}), {2, 4, 6, 8}),
      CuspType(NumericalSemigroup::supersymmetric({2, 3, 7}), {6, 14, 21}),
      CuspType(NumericalSemigroup::from_generators({2, 11}), {2, 4, 6}),
      CuspType(NumericalSemigroup::from_generators({3, 7}), {3, 7, 9})};
  for (const auto& cusp : cusps) {
    const auto reference = unicusp::phi_table(cusp);
    if (reference.empty()) continue;
    const unicusp::GroundSet ground(unicusp::codimension(cusp).ground);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::vector<long long>> stacked;
      long long prev_rank = 0;
      for (const auto& rec : reference) {
        const auto fa = unicusp::analyze_fiber(ground, rec.element);
        // Random member of each class instead of the canonical one.
        std::vector<std::vector<long long>> reps;
        for (const auto& cls : fa.classes) {
          std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
          reps.push_back(fa.factorizations[cls[pick(rng)]].exponents);
        }
        for (std::size_t j = 1; j < reps.size(); ++j) {
          std::vector<long long> row(reps[j].size());
          for (std::size_t k = 0; k < row.size(); ++k) row[k] = reps[j][k] - reps[0][k];
          stacked.push_back(std::move(row));
        }
        const long long rank_now = unicusp::integer_rank(stacked);
        REQUIRE(rank_now - prev_rank == rec.phi);
        prev_rank = rank_now;
      }
    }
  }
}

TEST_CASE("hyperelliptic family matches (n-1)g when n <= g") {
  for (long long g = 1; g <= 12; ++g)
    for (long long n = 2; n <= std::min<long long>({g, 2 * g, 8}); ++n) {
      const auto report = unicusp::codimension(hyperelliptic_cusp(g, n));
      REQUIRE(report.codimension == (n - 1) * g);
    }
}

TEST_CASE("hyperelliptic family overshoots by a triangular excess when n > g") {
  // For n > g the even profile keeps imposing full ramification while
  // the columns beyond the diagram contribute nothing, which leaves
  // sum(r_i - i) - 1 short of the closed form by (n-g)(n-g+1)/2.
  for (long long g = 1; g <= 6; ++g)
    for (long long n = g + 1; n <= std::min<long long>(2 * g, 8); ++n) {
      const auto report = unicusp::codimension(hyperelliptic_cusp(g, n));
      const long long excess = (n - g) * (n - g + 1) / 2;
      REQUIRE(report.codimension == (n - 1) * g + excess);
    }
}

TEST_CASE("verify_hyperelliptic reports per cell") {
  const auto cells = unicusp::verify_hyperelliptic(3, 4);
  // g=1: n=2; g=2: n in {2,3,4}; g=3: n in {2,3,4}.
  REQUIRE(cells.size() == 7);
  for (const auto& cell : cells) {
    REQUIRE(cell.pass == (cell.computed == cell.expected));
    REQUIRE(cell.pass == (cell.n <= cell.genus));
  }
}

TEST_CASE("verify_supersymmetric") {
  const auto c235 = unicusp::verify_supersymmetric(2, 3, 5);
  CHECK(c235.computed == 24);
  CHECK(c235.closed_form == 24);
  CHECK(c235.rho_value == 0);
  CHECK(c235.pass);

  const auto c237 = unicusp::verify_supersymmetric(2, 3, 7);
  CHECK(c237.computed == 36);
  CHECK(c237.rho_value == 1);
  CHECK(c237.pass);

  const auto c457 = unicusp::verify_supersymmetric(4, 5, 7);
  CHECK(c457.computed == 92);
  CHECK(c457.rho_value == 8);
  CHECK(c457.pass);

  CHECK_THROWS_AS(unicusp::verify_supersymmetric(2, 4, 5), std::invalid_argument);
}

TEST_CASE("supersymmetric closed form holds through product 600") {
  for (const auto& [a1, a2, a3] : oracles::coprime_triples(600))
    REQUIRE(unicusp::verify_supersymmetric(a1, a2, a3).pass);
}

TEST_CASE("compare_nodal") {
  const auto s457 = NumericalSemigroup::supersymmetric({4, 5, 7});
  const auto far = unicusp::compare_nodal(CuspType(s457, s457.minimal_generators()), 3);
  CHECK(far.codimension == 92);
  CHECK(far.genus == 99);
  CHECK(far.below_nodal);

  const auto s235 = NumericalSemigroup::supersymmetric({2, 3, 5});
  const auto near = unicusp::compare_nodal(CuspType(s235, s235.minimal_generators()), 3);
  CHECK(near.codimension == 24);
  CHECK(near.genus == 15);
  CHECK_FALSE(near.below_nodal);

  const auto hyper = unicusp::compare_nodal(hyperelliptic_cusp(7, 4), 4);
  CHECK(hyper.codimension == 21);
  CHECK(hyper.hyperelliptic_bound == 21);
  CHECK(hyper.equals_bound);
}

TEST_SUITE_END();
