#include "unicusp/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

namespace unicusp {

namespace {

// Smallest member of <gens> in each residue class modulo gens[0]
// (shortest paths over residues with the generators as step sizes).
std::vector<long long> apery_distances(const std::vector<long long>& gens) {
  const long long m = gens.front();
  const long long inf = std::numeric_limits<long long>::max();
  std::vector<long long> dist(static_cast<std::size_t>(m), inf);
  dist[0] = 0;
  using Item = std::pair<long long, long long>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[static_cast<std::size_t>(residue)]) continue;
    for (long long gen : gens) {
      const long long next = value + gen;
      const long long r = next % m;
      if (next < dist[static_cast<std::size_t>(r)]) {
        dist[static_cast<std::size_t>(r)] = next;
        queue.push({next, r});
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() {
  conductor_ = 0;
  member_ = {1};
  generators_ = {1};
}

bool NumericalSemigroup::contains(long long x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return member_[static_cast<std::size_t>(x)] != 0;
}

void NumericalSemigroup::derive_from_table() {
  gaps_.clear();
  generators_.clear();
  for (long long x = 1; x < conductor_; ++x)
    if (!member_[static_cast<std::size_t>(x)]) gaps_.push_back(x);
  if (conductor_ == 0) {
    generators_ = {1};
    return;
  }
  long long m1 = 1;
  while (!contains(m1)) ++m1;
  // Minimal generators are the members that are not a sum of two
  // nonzero members; none exceeds conductor + m1 - 1.
  for (long long x = m1; x < conductor_ + m1; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (long long y = m1; y + y <= x; ++y) {
      if (contains(y) && contains(x - y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) generators_.push_back(x);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long long> generators) {
  if (generators.empty())
    throw std::invalid_argument("from_generators: generator list is empty");
  for (long long g : generators)
    if (g < 1) throw std::invalid_argument("from_generators: generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  long long d = 0;
  for (long long g : generators) d = std::gcd(d, g);
  if (d != 1)
    throw std::invalid_argument("from_generators: not cofinite (gcd of generators is " +
                                std::to_string(d) + ")");

  NumericalSemigroup s;
  if (generators.front() == 1) return s;  // the full semigroup

  const auto dist = apery_distances(generators);
  const long long frob = *std::max_element(dist.begin(), dist.end()) - generators.front();
  s.conductor_ = frob + 1;
  s.member_.assign(static_cast<std::size_t>(s.conductor_) + 1, 0);
  s.member_[0] = 1;
  for (long long x = 1; x <= s.conductor_; ++x) {
    for (long long g : generators) {
      if (g > x) break;
      if (s.member_[static_cast<std::size_t>(x - g)]) {
        s.member_[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  s.derive_from_table();
  return s;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<long long> gap_set) {
  std::sort(gap_set.begin(), gap_set.end());
  gap_set.erase(std::unique(gap_set.begin(), gap_set.end()), gap_set.end());
  for (long long h : gap_set)
    if (h < 1) throw std::invalid_argument("from_gaps: gaps must be positive");

  NumericalSemigroup s;
  if (gap_set.empty()) return s;

  const long long top = gap_set.back();
  s.conductor_ = top + 1;
  s.member_.assign(static_cast<std::size_t>(s.conductor_) + 1, 1);
  for (long long h : gap_set) s.member_[static_cast<std::size_t>(h)] = 0;

  // Closure of the complement: sums above the largest gap are members
  // automatically, so pairs up to `top` suffice.
  for (long long x = 1; x <= top; ++x) {
    if (!s.member_[static_cast<std::size_t>(x)]) continue;
    for (long long y = x; x + y <= top; ++y) {
      if (s.member_[static_cast<std::size_t>(y)] &&
          !s.member_[static_cast<std::size_t>(x + y)])
        throw std::invalid_argument("from_gaps: invalid gap set (" + std::to_string(x) +
                                    " + " + std::to_string(y) + " = " +
                                    std::to_string(x + y) + " is a gap)");
    }
  }
  s.derive_from_table();
  return s;
}

NumericalSemigroup NumericalSemigroup::supersymmetric(const std::vector<long long>& a) {
  if (a.size() < 2)
    throw std::invalid_argument("supersymmetric: need at least two factors");
  for (long long x : a)
    if (x < 2) throw std::invalid_argument("supersymmetric: factors must be >= 2");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (std::gcd(a[i], a[j]) != 1)
        throw std::invalid_argument("supersymmetric: factors are not pairwise coprime");

  long long product = 1;
  for (long long x : a) product *= x;
  std::vector<long long> gens;
  gens.reserve(a.size());
  for (long long x : a) gens.push_back(product / x);

  NumericalSemigroup s = from_generators(gens);
  if (a.size() == 3) {
    const long long pair_sum = a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
    const long long expected = 2 * product - pair_sum + 1;
    if (s.conductor() != expected)
      throw std::logic_error("supersymmetric: conductor formula violated");
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::from_truncation(
    const std::vector<bool>& member_on_1_to_2g, long long genus) {
  if (genus < 0) throw std::invalid_argument("from_truncation: negative genus");
  if (static_cast<long long>(member_on_1_to_2g.size()) != 2 * genus)
    throw std::invalid_argument("from_truncation: table must cover [1, 2g]");
  std::vector<long long> gap_set;
  for (long long i = 1; i <= 2 * genus; ++i)
    if (!member_on_1_to_2g[static_cast<std::size_t>(i - 1)]) gap_set.push_back(i);
  if (static_cast<long long>(gap_set.size()) != genus)
    throw std::invalid_argument("from_truncation: table has " +
                                std::to_string(gap_set.size()) + " gaps, expected " +
                                std::to_string(genus));
  return from_gaps(gap_set);  // rejects tables whose complement is not closed
}

long long NumericalSemigroup::rho(long long member) const {
  if (!contains(member))
    throw std::domain_error("rho: " + std::to_string(member) + " is not a member");
  const auto it = std::upper_bound(gaps_.begin(), gaps_.end(), member);
  return static_cast<long long>(gaps_.end() - it);
}

bool NumericalSemigroup::is_symmetric() const {
  for (long long x = 0; x < conductor_; ++x)
    if (contains(x) == contains(conductor_ - 1 - x)) return false;
  return true;
}

DyckPath NumericalSemigroup::dyck_path() const {
  const long long g = genus();
  DyckPath path;
  path.steps.reserve(static_cast<std::size_t>(2 * g));
  long long ups = 0;
  for (long long i = 1; i <= 2 * g; ++i) {
    if (contains(i)) {
      path.steps.push_back('R');
      path.columns.push_back({i, g - ups});
    } else {
      path.steps.push_back('U');
      ++ups;
    }
  }
  return path;
}

std::vector<long long> NumericalSemigroup::members_up_to(long long bound) const {
  std::vector<long long> out;
  for (long long x = 0; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

namespace {

// Tree node for genus enumeration.  Bit i of `mask` is the
// membership of i; integers beyond 2 * genus + 1 never matter because
// the Frobenius number of a genus-g semigroup is at most 2g - 1 and
// removable generators lie at most at 2g + 1.
struct TreeNode {
  std::uint64_t mask = ~0ULL;
  long long genus = 0;
  long long frobenius = -1;
};

bool mask_member(std::uint64_t mask, long long x) {
  if (x < 0) return false;
  if (x > 63) return true;
  return (mask >> x) & 1ULL;
}

bool mask_minimal_generator(std::uint64_t mask, long long x) {
  if (!mask_member(mask, x)) return false;
  for (long long y = 1; y + y <= x; ++y)
    if (mask_member(mask, y) && mask_member(mask, x - y)) return false;
  return true;
}

void enumerate_rec(const TreeNode& node, long long target,
                   std::vector<NumericalSemigroup>& out) {
  if (node.genus == target) {
    std::vector<long long> gap_set;
    for (long long i = 1; i <= 2 * node.genus; ++i)
      if (!mask_member(node.mask, i)) gap_set.push_back(i);
    out.push_back(NumericalSemigroup::from_gaps(gap_set));
    return;
  }
  const long long hi = 2 * node.genus + 1;
  for (long long x = std::max<long long>(node.frobenius + 1, 1); x <= hi; ++x) {
    if (!mask_minimal_generator(node.mask, x)) continue;
    TreeNode child;
    child.mask = node.mask & ~(1ULL << x);
    child.genus = node.genus + 1;
    child.frobenius = x;
    enumerate_rec(child, target, out);
  }
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_genus(long long genus, long long genus_bound) {
  if (genus < 0) throw std::invalid_argument("enumerate_genus: negative genus");
  if (genus > genus_bound)
    throw std::length_error("enumerate_genus: genus " + std::to_string(genus) +
                            " exceeds configured bound " + std::to_string(genus_bound));
  if (genus > 30) throw std::length_error("enumerate_genus: genus too large for 64-bit masks");
  std::vector<NumericalSemigroup> out;
  enumerate_rec(TreeNode{}, genus, out);
  return out;
}

}  // namespace unicusp
