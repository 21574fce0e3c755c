#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "render.hpp"
#include "unicusp/curve.hpp"
#include "unicusp/factorization.hpp"
#include "unicusp/lattice.hpp"
#include "unicusp/noether.hpp"
#include "unicusp/semigroup.hpp"
#include "unicusp/serialize.hpp"
#include "unicusp/severi.hpp"

namespace {

using unicusp::NumericalSemigroup;

constexpr int kOk = 0;
constexpr int kValidationError = 1;
constexpr int kVerificationFailure = 2;
constexpr int kUsageError = 64;

std::string join(const std::vector<long long>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void emit(const unicusp::json& j) { std::cout << j.dump() << '\n'; }

NumericalSemigroup semigroup_from(const std::vector<long long>& gens,
                                  const std::vector<long long>& gaps) {
  if (!gens.empty() && !gaps.empty())
    throw std::invalid_argument("give either --gens or --gaps, not both");
  if (!gens.empty()) return NumericalSemigroup::from_generators(gens);
  if (!gaps.empty()) return NumericalSemigroup::from_gaps(gaps);
  throw std::invalid_argument("one of --gens or --gaps is required");
}

void print_semigroup_info(const NumericalSemigroup& s) {
  std::cout << "S = " << unicusp::render::generator_list(s) << '\n'
            << "gaps: " << (s.gaps().empty() ? "(none)" : join(s.gaps())) << '\n'
            << "genus = " << s.genus() << '\n'
            << "conductor = " << s.conductor() << '\n'
            << "frobenius = " << s.frobenius() << '\n'
            << "symmetric: " << (s.is_symmetric() ? "yes" : "no") << '\n'
            << "hyperelliptic: " << (s.is_hyperelliptic() ? "yes" : "no") << '\n';
}

int run_sg_info(const std::vector<long long>& gens, const std::vector<long long>& gaps,
                bool as_json) {
  const auto s = semigroup_from(gens, gaps);
  if (as_json) {
    emit(unicusp::json_record(s));
  } else {
    print_semigroup_info(s);
  }
  return kOk;
}

int run_sg_dyck(const std::vector<long long>& gens, const std::vector<long long>& gaps,
                bool as_json) {
  const auto s = semigroup_from(gens, gaps);
  const auto path = s.dyck_path();
  if (as_json) {
    unicusp::json cols = unicusp::json::array();
    for (const auto& c : path.columns)
      cols.push_back({{"member", c.member}, {"squares_above", c.squares_above}});
    emit(unicusp::json{{"semigroup", unicusp::json_record(s)},
                       {"steps", path.steps},
                       {"columns", cols}});
    return kOk;
  }
  std::cout << "S = " << unicusp::render::generator_list(s) << "  genus " << s.genus()
            << '\n';
  std::cout << "steps: " << (path.steps.empty() ? "(empty)" : path.steps) << '\n';
  std::cout << unicusp::render::dyck_diagram(s, {}, {});
  return kOk;
}

int run_sg_enumerate(long long genus, bool count_only, bool as_json) {
  const auto list = unicusp::enumerate_genus(genus);
  if (as_json) {
    unicusp::json out{{"genus", genus}, {"count", list.size()}};
    if (!count_only) {
      unicusp::json items = unicusp::json::array();
      for (const auto& s : list) items.push_back(unicusp::json_record(s));
      out["semigroups"] = items;
    }
    emit(out);
    return kOk;
  }
  std::cout << list.size() << " semigroups of genus " << genus << '\n';
  if (!count_only)
    for (const auto& s : list)
      std::cout << "  " << unicusp::render::generator_list(s) << '\n';
  return kOk;
}

int run_betti(const std::vector<long long>& ground, long long bound, bool as_json) {
  const unicusp::GroundSet gs(ground);
  const auto betti = unicusp::betti_elements(gs, bound);
  if (as_json) {
    unicusp::json fibers = unicusp::json::array();
    for (long long b : betti) fibers.push_back(unicusp::json_record(analyze_fiber(gs, b)));
    emit(unicusp::json{{"ground", ground},
                       {"bound", bound},
                       {"betti", betti},
                       {"fibers", fibers}});
    return kOk;
  }
  std::cout << "ground set: (" << join(ground, ",") << ")  bound " << bound << '\n';
  std::cout << "betti elements: " << (betti.empty() ? "(none)" : join(betti)) << '\n';
  for (long long b : betti) {
    const auto fa = analyze_fiber(gs, b);
    std::cout << "  " << b << ": " << fa.factorizations.size() << " factorizations in "
              << fa.classes.size() << " classes\n";
  }
  return kOk;
}

int run_severi_codim(const std::vector<long long>& gens,
                     const std::vector<long long>& profile, long long degree,
                     bool as_json) {
  const unicusp::CuspType cusp(NumericalSemigroup::from_generators(gens), profile);
  const auto report =
      degree >= 0 ? unicusp::codimension(cusp, degree) : unicusp::codimension(cusp);
  if (as_json) {
    emit(unicusp::json_record(report));
    return kOk;
  }
  const auto& s = report.semigroup;
  std::cout << "S = " << unicusp::render::generator_list(s) << "  genus " << s.genus()
            << "  conductor " << s.conductor() << '\n';
  std::cout << "profile r = (" << join(report.profile, ",") << ")\n";
  std::cout << "r* = " << (report.rstar.empty() ? "()" : "(" + join(report.rstar, ",") + ")")
            << "   ground = (" << join(report.ground, ",") << ")\n";
  std::set<long long> profile_set(report.profile.begin(), report.profile.end());
  std::map<long long, unicusp::render::BettiMark> marks;
  for (const auto& b : report.betti) marks[b.element] = {b.phi, b.rho};
  std::cout << unicusp::render::dyck_diagram(s, profile_set, marks);
  std::cout << "ramification sum = " << report.ram_sum << '\n';
  if (report.betti.empty()) std::cout << "no betti elements below the conductor\n";
  if (!report.r_bullet.empty()) {
    std::cout << "r_bullet:";
    for (const auto& rec : report.r_bullet)
      std::cout << ' ' << rec.element << "(rho=" << rec.rho << ","
                << unicusp::bullet_trigger_name(rec.trigger) << ")";
    std::cout << '\n';
  }
  if (report.context)
    std::cout << "degree context: d=" << report.context->degree << " (hypothesis "
              << (report.context->hypothesis_met ? "met" : "NOT met") << ")\n";
  std::cout << "codimension = " << report.codimension << '\n';
  return kOk;
}

int run_verify_hyperelliptic(long long max_genus, long long max_n, bool as_json) {
  const auto cells = unicusp::verify_hyperelliptic(max_genus, max_n);
  long long failures = 0;
  for (const auto& cell : cells)
    if (!cell.pass) ++failures;
  if (as_json) {
    unicusp::json rows = unicusp::json::array();
    for (const auto& cell : cells)
      rows.push_back({{"genus", cell.genus},
                      {"n", cell.n},
                      {"computed", cell.computed},
                      {"expected", cell.expected},
                      {"pass", cell.pass}});
    emit(unicusp::json{{"cells", rows}, {"failures", failures}});
  } else {
    for (const auto& cell : cells)
      std::cout << "g=" << cell.genus << " n=" << cell.n << " computed=" << cell.computed
                << " expected=" << cell.expected << (cell.pass ? "" : "  MISMATCH")
                << '\n';
    std::cout << (failures == 0 ? "all cells match (n-1)g"
                                : std::to_string(failures) + " cells deviate from (n-1)g")
              << '\n';
  }
  return failures == 0 ? kOk : kVerificationFailure;
}

int run_verify_supersymmetric(const std::vector<long long>& a, bool as_json) {
  if (a.size() != 3) throw std::invalid_argument("--a needs exactly three factors");
  const auto check = unicusp::verify_supersymmetric(a[0], a[1], a[2]);
  if (as_json) {
    emit(unicusp::json{{"a", a},
                       {"computed", check.computed},
                       {"closed_form", check.closed_form},
                       {"rho", check.rho_value},
                       {"pass", check.pass}});
  } else {
    std::cout << "a = (" << join(a, ",") << ")  rho(a1*a2*a3) = " << check.rho_value
              << '\n'
              << "formula evaluation = " << check.computed << '\n'
              << "closed form        = " << check.closed_form << '\n'
              << (check.pass ? "match" : "MISMATCH") << '\n';
  }
  return check.pass ? kOk : kVerificationFailure;
}

int run_compare_nodal(const std::vector<long long>& gens,
                      const std::vector<long long>& profile, long long n, bool as_json) {
  const unicusp::CuspType cusp(NumericalSemigroup::from_generators(gens), profile);
  const long long ambient = n > 0 ? n : cusp.n();
  const auto cmp = unicusp::compare_nodal(cusp, ambient);
  if (as_json) {
    emit(unicusp::json{{"codimension", cmp.codimension},
                       {"genus", cmp.genus},
                       {"n", cmp.n},
                       {"below_nodal", cmp.below_nodal},
                       {"hyperelliptic_bound", cmp.hyperelliptic_bound},
                       {"equals_bound", cmp.equals_bound}});
  } else {
    std::cout << "codimension = " << cmp.codimension << "  genus (nodal codim) = "
              << cmp.genus << '\n'
              << "below nodal locus: " << (cmp.below_nodal ? "yes" : "no") << '\n'
              << "(n-1)g = " << cmp.hyperelliptic_bound
              << (cmp.equals_bound ? "  (attained)" : "") << '\n';
  }
  return kOk;
}

int run_lattice_simplex(const std::vector<long long>& a, bool as_json) {
  if (a.size() != 3) throw std::invalid_argument("--a needs exactly three factors");
  const auto spec = unicusp::SimplexSpec::make(a[0], a[1], a[2]);
  const long long count = unicusp::simplex_lattice_count(spec);
  const auto volume = unicusp::simplex_volume(spec);
  if (as_json) {
    emit(unicusp::json_record(spec, count, volume));
  } else {
    std::cout << "a = (" << spec.a1 << "," << spec.a2 << "," << spec.a3 << ")  bound = "
              << spec.bound << '\n'
              << "lattice points = " << count << '\n'
              << "volume = " << volume.str() << '\n';
  }
  return kOk;
}

int run_curve_info(const std::vector<long long>& exponents, bool as_json) {
  const unicusp::MonomialCurve curve(exponents);
  if (as_json) {
    emit(unicusp::json_record(curve));
    return kOk;
  }
  const auto sg = unicusp::singularity_semigroups(curve);
  std::cout << "curve (t^0 : ... : t^" << exponents.back() << ") with exponents ("
            << join(exponents, ",") << ")\n"
            << "S_P1 = " << unicusp::render::generator_list(sg.at_p1) << "  genus "
            << sg.at_p1.genus() << '\n'
            << "S_P2 = " << unicusp::render::generator_list(sg.at_p2) << "  genus "
            << sg.at_p2.genus() << '\n'
            << "arithmetic genus = " << unicusp::arithmetic_genus(curve) << '\n';
  return kOk;
}

int run_curve_canonical(const std::vector<long long>& exponents, bool as_json) {
  const unicusp::MonomialCurve curve(exponents);
  const auto model = unicusp::canonical_model(curve);
  if (as_json) {
    emit(unicusp::json{{"exponents", exponents},
                       {"genus", unicusp::arithmetic_genus(curve)},
                       {"canonical_model", model}});
  } else {
    std::cout << "canonical model exponents: (" << join(model, ",") << ") in P^"
              << model.size() - 1 << '\n';
  }
  return kOk;
}

int run_curve_gonality(const std::vector<long long>& exponents, bool as_json) {
  const unicusp::MonomialCurve curve(exponents);
  const auto result = unicusp::gonality(curve);
  if (as_json) {
    emit(unicusp::json{{"exponents", exponents},
                       {"gonality", {{"d", result.degree}, {"mu", result.mu}}}});
  } else {
    std::cout << "gonality " << result.degree << " realized at mu=" << join(result.mu, ",")
              << '\n';
  }
  return kOk;
}

int run_curve_scroll(const std::vector<long long>& exponents, bool as_json) {
  const auto scroll = unicusp::scroll_partition(exponents);
  if (as_json) {
    emit(unicusp::json_record(scroll));
    return kOk;
  }
  std::cout << "minimal fold " << scroll.fold() << " with common difference "
            << scroll.mu << '\n';
  for (const auto& part : scroll.parts) std::cout << "  {" << join(part, ",") << "}\n";
  return kOk;
}

int run_curve_consistency(const std::vector<long long>& exponents, bool as_json) {
  const unicusp::MonomialCurve curve(exponents);
  const auto report = unicusp::gonality_scroll_consistency(curve);
  if (as_json) {
    unicusp::json out{{"exponents", exponents}, {"skipped", report.skipped}};
    if (report.skipped) {
      out["reason"] = report.reason;
    } else {
      out["gonality"] = report.gonality_degree;
      out["scroll_fold"] = report.scroll_fold;
      out["consistent"] = report.consistent;
    }
    emit(out);
  } else if (report.skipped) {
    std::cout << "skipped: " << report.reason << '\n';
  } else {
    std::cout << "gonality " << report.gonality_degree << ", scroll fold "
              << report.scroll_fold << " -> "
              << (report.consistent ? "consistent" : "INCONSISTENT") << '\n';
  }
  if (!report.skipped && !report.consistent) return kVerificationFailure;
  return kOk;
}

int run_verify_max_noether(long long max_genus, bool as_json) {
  long long total_failures = 0;
  unicusp::json rows = unicusp::json::array();
  for (long long g = 0; g <= max_genus; ++g) {
    const auto list = unicusp::enumerate_genus(g);
    long long genus_failures = 0;
    for (const auto& s : list) {
      const auto report = unicusp::max_noether_check(s);
      genus_failures += report.failures;
      if (!as_json && report.failures > 0) {
        for (const auto& w : report.entries)
          if (!w.found)
            std::cout << "  " << unicusp::render::generator_list(s) << " n=" << w.n
                      << " has no decomposition\n";
      }
    }
    total_failures += genus_failures;
    if (as_json)
      rows.push_back({{"genus", g},
                      {"semigroups", list.size()},
                      {"failing_targets", genus_failures}});
    else
      std::cout << "genus " << g << ": " << list.size() << " semigroups, "
                << genus_failures << " failing targets\n";
  }
  if (as_json)
    emit(unicusp::json{{"max_genus", max_genus},
                       {"per_genus", rows},
                       {"total_failures", total_failures}});
  else
    std::cout << (total_failures == 0 ? "all decompositions found"
                                      : std::to_string(total_failures) +
                                            " targets without a decomposition")
              << '\n';
  return total_failures == 0 ? kOk : kVerificationFailure;
}

int run_verify_kunz(const std::vector<long long>& gens, long long max_genus,
                    bool as_json) {
  if (!gens.empty()) {
    const auto k = unicusp::kunz_set(NumericalSemigroup::from_generators(gens));
    if (as_json) {
      emit(unicusp::json_record(k));
    } else {
      std::cout << "S = " << unicusp::render::generator_list(k.semigroup) << '\n'
                << "K below c: " << (k.k_below_c.empty() ? "(none)" : join(k.k_below_c))
                << '\n'
                << "every integer >= " << k.semigroup.conductor() << " belongs to K\n";
    }
    return kOk;
  }
  // Sweep: complement duality plus the symmetric-case identity.
  long long violations = 0;
  long long checked = 0;
  for (long long g = 0; g <= max_genus; ++g)
    for (const auto& s : unicusp::enumerate_genus(g)) {
      const auto k = unicusp::kunz_set(s);
      ++checked;
      std::set<long long> in_k(k.k_below_c.begin(), k.k_below_c.end());
      for (long long a = 0; a < s.conductor(); ++a)
        if (in_k.count(a) == s.contains(s.conductor() - 1 - a)) ++violations;
      if (s.is_symmetric() &&
          k.k_below_c != s.members_up_to(s.conductor() - 1))
        ++violations;
    }
  if (as_json)
    emit(unicusp::json{{"max_genus", max_genus},
                       {"semigroups", checked},
                       {"violations", violations}});
  else
    std::cout << checked << " semigroups checked, " << violations << " violations\n";
  return violations == 0 ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of numerical semigroups and unicuspidal rational curves"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto add_json = [](CLI::App* cmd, bool& flag) {
    cmd->add_flag("--json", flag, "machine-readable output");
  };

  // sg info|dyck|enumerate
  auto* sg = app.add_subcommand("sg", "numerical semigroup queries");
  sg->require_subcommand(1);
  {
    static std::vector<long long> gens, gaps;
    static bool as_json = false;
    auto* info = sg->add_subcommand("info", "canonical record of a semigroup");
    info->add_option("--gens", gens, "generators")->delimiter(',');
    info->add_option("--gaps", gaps, "gap set")->delimiter(',');
    add_json(info, as_json);
    info->callback([&] { action = [&] { return run_sg_info(gens, gaps, as_json); }; });
  }
  {
    static std::vector<long long> gens, gaps;
    static bool as_json = false;
    auto* dyck = sg->add_subcommand("dyck", "lattice path of the membership pattern");
    dyck->add_option("--gens", gens, "generators")->delimiter(',');
    dyck->add_option("--gaps", gaps, "gap set")->delimiter(',');
    add_json(dyck, as_json);
    dyck->callback([&] { action = [&] { return run_sg_dyck(gens, gaps, as_json); }; });
  }
  {
    static long long genus = 0;
    static bool count_only = false, as_json = false;
    auto* enumerate = sg->add_subcommand("enumerate", "all semigroups of one genus");
    enumerate->add_option("--genus", genus, "genus")->required();
    enumerate->add_flag("--count-only", count_only, "print only the count");
    add_json(enumerate, as_json);
    enumerate->callback(
        [&] { action = [&] { return run_sg_enumerate(genus, count_only, as_json); }; });
  }

  // betti
  {
    static std::vector<long long> ground;
    static long long bound = 0;
    static bool as_json = false;
    auto* betti = app.add_subcommand("betti", "Betti elements of a ground set");
    betti->add_option("--ground", ground, "ground set, order significant")
        ->required()
        ->delimiter(',');
    betti->add_option("--bound", bound, "scan strictly below this bound")->required();
    add_json(betti, as_json);
    betti->callback([&] { action = [&] { return run_betti(ground, bound, as_json); }; });
  }

  // severi codim|verify-hyperelliptic|verify-supersymmetric|compare-nodal
  auto* severi = app.add_subcommand("severi", "codimension formula and its verifiers");
  severi->require_subcommand(1);
  {
    static std::vector<long long> gens, profile;
    static long long degree = -1;
    static bool as_json = false;
    auto* codim = severi->add_subcommand("codim", "itemized codimension of a cusp type");
    codim->add_option("--gens", gens, "semigroup generators")->required()->delimiter(',');
    codim->add_option("--profile", profile, "ramification profile")
        ->required()
        ->delimiter(',');
    codim->add_option("--degree", degree, "map degree, recorded as context");
    add_json(codim, as_json);
    codim->callback(
        [&] { action = [&] { return run_severi_codim(gens, profile, degree, as_json); }; });
  }
  {
    static long long max_genus = 12, max_n = 8;
    static bool as_json = false;
    auto* verify = severi->add_subcommand("verify-hyperelliptic",
                                          "codimension of <2,2g+1> with even profiles "
                                          "against (n-1)g");
    verify->add_option("--max-genus", max_genus, "largest genus");
    verify->add_option("--max-n", max_n, "largest profile length");
    add_json(verify, as_json);
    verify->callback(
        [&] { action = [&] { return run_verify_hyperelliptic(max_genus, max_n, as_json); }; });
  }
  {
    static std::vector<long long> a;
    static bool as_json = false;
    auto* verify = severi->add_subcommand("verify-supersymmetric",
                                          "formula against the closed form for a triple");
    verify->add_option("--a", a, "pairwise coprime factors a1,a2,a3")
        ->required()
        ->delimiter(',');
    add_json(verify, as_json);
    verify->callback([&] { action = [&] { return run_verify_supersymmetric(a, as_json); }; });
  }
  {
    static std::vector<long long> gens, profile;
    static long long ambient = 0;
    static bool as_json = false;
    auto* compare = severi->add_subcommand("compare-nodal",
                                           "codimension against the g-nodal locus");
    compare->add_option("--gens", gens, "semigroup generators")->required()->delimiter(',');
    compare->add_option("--profile", profile, "ramification profile")
        ->required()
        ->delimiter(',');
    compare->add_option("--n", ambient, "ambient dimension (defaults to profile length)");
    add_json(compare, as_json);
    compare->callback(
        [&] { action = [&] { return run_compare_nodal(gens, profile, ambient, as_json); }; });
  }

  // lattice simplex
  auto* lattice = app.add_subcommand("lattice", "simplex lattice-point counts");
  lattice->require_subcommand(1);
  {
    static std::vector<long long> a;
    static bool as_json = false;
    auto* simplex = lattice->add_subcommand("simplex",
                                            "count and volume for a coprime triple");
    simplex->add_option("--a", a, "pairwise coprime factors a1,a2,a3")
        ->required()
        ->delimiter(',');
    add_json(simplex, as_json);
    simplex->callback([&] { action = [&] { return run_lattice_simplex(a, as_json); }; });
  }

  // curve info|canonical|gonality|scroll|consistency
  auto* curve = app.add_subcommand("curve", "rational monomial curves");
  curve->require_subcommand(1);
  {
    static std::vector<long long> exponents;
    static bool as_json = false;
    auto* info = curve->add_subcommand("info", "singularities and genus");
    info->add_option("--exponents", exponents, "monomial exponents starting at 0")
        ->required()
        ->delimiter(',');
    add_json(info, as_json);
    info->callback([&] { action = [&] { return run_curve_info(exponents, as_json); }; });
  }
  {
    static std::vector<long long> exponents;
    static bool as_json = false;
    auto* canonical = curve->add_subcommand("canonical", "canonical model exponents");
    canonical->add_option("--exponents", exponents, "monomial exponents starting at 0")
        ->required()
        ->delimiter(',');
    add_json(canonical, as_json);
    canonical->callback(
        [&] { action = [&] { return run_curve_canonical(exponents, as_json); }; });
  }
  {
    static std::vector<long long> exponents;
    static bool as_json = false;
    auto* gon = curve->add_subcommand("gonality", "least twist degree of a pencil");
    gon->add_option("--exponents", exponents, "monomial exponents starting at 0")
        ->required()
        ->delimiter(',');
    add_json(gon, as_json);
    gon->callback([&] { action = [&] { return run_curve_gonality(exponents, as_json); }; });
  }
  {
    static std::vector<long long> exponents;
    static bool as_json = false;
    auto* scroll = curve->add_subcommand("scroll",
                                         "minimal arithmetic-progression partition");
    scroll->add_option("--exponents", exponents, "exponent set containing 0")
        ->required()
        ->delimiter(',');
    add_json(scroll, as_json);
    scroll->callback([&] { action = [&] { return run_curve_scroll(exponents, as_json); }; });
  }
  {
    static std::vector<long long> exponents;
    static bool as_json = false;
    auto* consistency = curve->add_subcommand("consistency",
                                              "gonality against the canonical scroll fold");
    consistency->add_option("--exponents", exponents, "monomial exponents starting at 0")
        ->required()
        ->delimiter(',');
    add_json(consistency, as_json);
    consistency->callback(
        [&] { action = [&] { return run_curve_consistency(exponents, as_json); }; });
  }

  // verify max-noether|kunz
  auto* verify = app.add_subcommand("verify", "sweeps over enumerated semigroups");
  verify->require_subcommand(1);
  {
    static long long max_genus = 10;
    static bool as_json = false;
    auto* noether = verify->add_subcommand("max-noether",
                                           "two-term decompositions over [c, 2c-3]");
    noether->add_option("--max-genus", max_genus, "sweep every genus up to this");
    add_json(noether, as_json);
    noether->callback(
        [&] { action = [&] { return run_verify_max_noether(max_genus, as_json); }; });
  }
  {
    static std::vector<long long> gens;
    static long long max_genus = 8;
    static bool as_json = false;
    auto* kunz = verify->add_subcommand("kunz", "Kunz set of a semigroup, or a sweep");
    kunz->add_option("--gens", gens, "semigroup generators")->delimiter(',');
    kunz->add_option("--max-genus", max_genus, "sweep bound when --gens is absent");
    add_json(kunz, as_json);
    kunz->callback(
        [&] { action = [&] { return run_verify_kunz(gens, max_genus, as_json); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help() << '\n';
    return kUsageError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  }
}
