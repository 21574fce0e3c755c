#include <doctest.h>

#include "unicusp/serialize.hpp"

TEST_SUITE_BEGIN("serialize");

TEST_CASE("semigroup record has the fixed field order") {
  const auto s = unicusp::NumericalSemigroup::from_generators({5, 7, 8});
  CHECK(unicusp::json_record(s).dump() ==
        R"({"generators":[5,7,8],"gaps":[1,2,3,4,6,9,11],"genus":7,"conductor":12,"frobenius":11})");
  CHECK(unicusp::json_record(unicusp::NumericalSemigroup()).dump() ==
        R"({"generators":[1],"gaps":[],"genus":0,"conductor":0,"frobenius":-1})");
}

TEST_CASE("fiber record") {
  const auto fa = unicusp::analyze_fiber(unicusp::GroundSet({6, 14, 21}), 42);
  const auto j = unicusp::json_record(fa);
  CHECK(j["element"] == 42);
  CHECK(j["factorizations"].size() == 3);
  CHECK(j["classes"].size() == 3);
  CHECK(j.dump().find("\"element\":42,\"factorizations\"") != std::string::npos);
}

TEST_CASE("codimension report record") {
  const unicusp::CuspType cusp(unicusp::NumericalSemigroup::from_generators({2, 15}),
                               {2, 4, 6, 8});
  const auto j = unicusp::json_record(unicusp::codimension(cusp));
  CHECK(j["codimension"] == 21);
  CHECK(j["ram_sum"] == 10);
  CHECK(j["betti"].size() == 3);
  CHECK(j["betti"][0]["element"] == 4);
  CHECK(j["betti"][0]["phi"] == 1);
  CHECK(j["betti"][0]["rho"] == 5);
  CHECK(j["b_prime"] == unicusp::json::array({4, 6, 8}));
}

TEST_CASE("lattice record") {
  const auto spec = unicusp::SimplexSpec::make(4, 5, 7);
  const auto j = unicusp::json_record(spec, unicusp::simplex_lattice_count(spec),
                                      unicusp::simplex_volume(spec));
  CHECK(j.dump() ==
        R"({"a":[4,5,7],"bound":57,"count":8,"volume":"61731/39200"})");
}

TEST_CASE("curve record") {
  const auto j = unicusp::json_record(unicusp::MonomialCurve({0, 5, 7, 8}));
  CHECK(j["genus"] == 7);
  CHECK(j["canonical_model"] == unicusp::json::array({0, 2, 5, 7, 8, 9, 10}));
  CHECK(j["gonality"]["d"] == 4);
  CHECK(j["gonality"]["mu"] == unicusp::json::array({2}));
}

TEST_CASE("serialization is deterministic across runs") {
  const auto s = unicusp::NumericalSemigroup::supersymmetric({2, 3, 7});
  const unicusp::CuspType cusp(s, s.minimal_generators());
  CHECK(unicusp::json_record(unicusp::codimension(cusp)).dump() ==
        unicusp::json_record(unicusp::codimension(cusp)).dump());
}

TEST_SUITE_END();
