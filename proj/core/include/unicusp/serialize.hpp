#pragma once

// JSON records for the CLI's machine mode.  Field order is part of
// the format, hence ordered_json throughout.  Requires nlohmann/json
// (vendored as json.hpp) on the include path.

#include <json.hpp>

#include "unicusp/curve.hpp"
#include "unicusp/factorization.hpp"
#include "unicusp/lattice.hpp"
#include "unicusp/noether.hpp"
#include "unicusp/semigroup.hpp"
#include "unicusp/severi.hpp"

namespace unicusp {

using json = nlohmann::ordered_json;

inline json json_record(const NumericalSemigroup& s) {
  return json{{"generators", s.minimal_generators()},
              {"gaps", s.gaps()},
              {"genus", s.genus()},
              {"conductor", s.conductor()},
              {"frobenius", s.frobenius()}};
}

inline json json_record(const FiberAnalysis& fa) {
  json factorizations = json::array();
  for (const auto& f : fa.factorizations) factorizations.push_back(f.exponents);
  return json{{"element", fa.element},
              {"factorizations", factorizations},
              {"classes", fa.classes},
              {"representatives", fa.representatives}};
}

inline const char* bullet_trigger_name(BulletTrigger t) {
  switch (t) {
    case BulletTrigger::interval: return "interval";
    case BulletTrigger::count: return "count";
    default: return "both";
  }
}

inline json json_record(const CodimReport& report) {
  json betti = json::array();
  for (const auto& b : report.betti) {
    betti.push_back(json{{"element", b.element},
                         {"classes", b.class_count},
                         {"matrix", b.matrix},
                         {"phi", b.phi},
                         {"rho", b.rho}});
  }
  json bullets = json::array();
  for (const auto& s : report.r_bullet) {
    bullets.push_back(json{{"element", s.element},
                           {"trigger", bullet_trigger_name(s.trigger)},
                           {"rho", s.rho}});
  }
  json out{{"semigroup", json_record(report.semigroup)},
           {"profile", report.profile},
           {"ram_sum", report.ram_sum},
           {"rstar", report.rstar},
           {"ground", report.ground},
           {"betti", betti},
           {"b_prime", report.b_prime},
           {"r_bullet", bullets},
           {"codimension", report.codimension}};
  if (report.context) {
    out["context"] = json{{"degree", report.context->degree},
                          {"n", report.context->n},
                          {"genus", report.context->genus},
                          {"degree_hypothesis_met", report.context->hypothesis_met}};
  }
  return out;
}

inline json json_record(const SimplexSpec& spec, long long count, const Rational& volume) {
  return json{{"a", {spec.a1, spec.a2, spec.a3}},
              {"bound", spec.bound},
              {"count", count},
              {"volume", volume.str()}};
}

inline json json_record(const MonomialCurve& curve) {
  auto sg = singularity_semigroups(curve);
  json out{{"exponents", curve.exponents()},
           {"genus", arithmetic_genus(curve)},
           {"semigroup_p1", json_record(sg.at_p1)},
           {"semigroup_p2", json_record(sg.at_p2)}};
  if (arithmetic_genus(curve) >= 1) out["canonical_model"] = canonical_model(curve);
  if (sg.at_p2.genus() == 0) {
    auto gon = gonality(curve);
    out["gonality"] = json{{"d", gon.degree}, {"mu", gon.mu}};
  }
  return out;
}

inline json json_record(const ScrollPartition& scroll) {
  return json{{"mu", scroll.mu}, {"parts", scroll.parts}};
}

inline json json_record(const KunzData& k) {
  return json{{"semigroup", json_record(k.semigroup)},
              {"k_below_c", k.k_below_c},
              {"rule", "all integers >= conductor belong to K"}};
}

inline json json_record(const NoetherReport& report) {
  json entries = json::array();
  for (const auto& w : report.entries) {
    json e{{"n", w.n}, {"found", w.found}};
    if (w.found) e["witness"] = {w.k1, w.k2};
    entries.push_back(e);
  }
  return json{{"semigroup", json_record(report.semigroup)},
              {"range", {report.lo, report.hi}},
              {"entries", entries},
              {"failures", report.failures}};
}

inline json json_record(const CoveringCounts& counts) {
  return json{{"n_v", counts.n_v},
              {"n_e", counts.n_e},
              {"heuristic_solvable", counts.heuristic_solvable}};
}

}  // namespace unicusp
