#include "render.hpp"

#include <sstream>
#include <vector>

namespace unicusp::render {

std::string generator_list(const NumericalSemigroup& s) {
  std::ostringstream out;
  out << '<';
  const auto& gens = s.minimal_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ',';
    out << gens[i];
  }
  out << '>';
  return out.str();
}

std::string dyck_diagram(const NumericalSemigroup& s,
                         const std::set<long long>& profile,
                         const std::map<long long, BettiMark>& betti) {
  const long long g = s.genus();
  std::ostringstream out;
  if (g == 0) {
    out << "(genus 0: empty diagram)\n";
    return out.str();
  }

  std::vector<long long> members;
  std::vector<long long> heights;  // path height entering each column
  long long ups = 0;
  for (long long i = 1; i <= 2 * g; ++i) {
    if (s.contains(i)) {
      members.push_back(i);
      heights.push_back(ups);
    } else {
      ++ups;
    }
  }

  for (long long y = g - 1; y >= 0; --y) {
    out << "  |";
    for (std::size_t x = 0; x < members.size(); ++x) {
      if (y < heights[x])
        out << (profile.count(members[x]) ? '#' : '.');
      else
        out << (betti.count(members[x]) ? '*' : ' ');
    }
    out << "|\n";
  }
  out << "  columns (members of [1,2g]):";
  for (long long m : members) out << ' ' << m;
  out << '\n';
  for (const auto& [element, mark] : betti)
    out << "  betti " << element << ": phi=" << mark.phi << " rho=" << mark.rho << '\n';
  return out.str();
}

}  // namespace unicusp::render
