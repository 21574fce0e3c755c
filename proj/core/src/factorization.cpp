#include "unicusp/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unicusp {

GroundSet::GroundSet(std::vector<long long> elems) : elements(std::move(elems)) {
  if (elements.empty()) throw std::invalid_argument("ground set is empty");
  for (long long t : elements)
    if (t < 1) throw std::invalid_argument("ground set elements must be positive");
  auto sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("ground set elements must be pairwise distinct");
}

std::vector<Factorization> fiber(const GroundSet& ground, long long value) {
  if (value < 0) throw std::invalid_argument("fiber: value must be nonnegative");
  std::vector<Factorization> result;
  std::vector<long long> exps(ground.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, long long remaining) -> void {
    if (pos + 1 == ground.size()) {
      if (remaining % ground.elements[pos] == 0) {
        exps[pos] = remaining / ground.elements[pos];
        result.push_back({exps, value});
        exps[pos] = 0;
      }
      return;
    }
    for (long long e = 0; e * ground.elements[pos] <= remaining; ++e) {
      exps[pos] = e;
      self(self, pos + 1, remaining - e * ground.elements[pos]);
    }
    exps[pos] = 0;
  };
  rec(rec, 0, value);
  return result;
}

namespace {

bool supports_overlap(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return true;
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

FiberAnalysis classes(std::vector<Factorization> fiber_elements) {
  FiberAnalysis out;
  if (fiber_elements.empty()) return out;
  out.element = fiber_elements.front().value;
  for (const auto& f : fiber_elements)
    if (f.value != out.element)
      throw std::domain_error("classes: factorizations have mixed values");
  out.factorizations = std::move(fiber_elements);

  const std::size_t n = out.factorizations.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (supports_overlap(out.factorizations[i].exponents, out.factorizations[j].exponents))
        uf.unite(i, j);

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

  // Canonical form independent of input order: within a class the
  // indices stay ascending, classes sort by their lexicographically
  // least member.
  std::vector<std::vector<std::size_t>> cls;
  for (auto& g : groups)
    if (!g.empty()) cls.push_back(std::move(g));
  auto class_rep = [&](const std::vector<std::size_t>& c) -> const std::vector<long long>& {
    std::size_t best = c.front();
    for (std::size_t idx : c)
      if (out.factorizations[idx].exponents < out.factorizations[best].exponents) best = idx;
    return out.factorizations[best].exponents;
  };
  std::sort(cls.begin(), cls.end(),
            [&](const auto& a, const auto& b) { return class_rep(a) < class_rep(b); });
  for (const auto& c : cls) out.representatives.push_back(class_rep(c));
  out.classes = std::move(cls);
  return out;
}

FiberAnalysis analyze_fiber(const GroundSet& ground, long long value) {
  auto out = classes(fiber(ground, value));
  out.element = value;
  return out;
}

std::vector<long long> betti_elements(const GroundSet& ground, long long bound) {
  std::vector<long long> out;
  for (long long s = 1; s < bound; ++s) {
    auto fib = fiber(ground, s);
    if (fib.size() < 2) continue;
    if (classes(std::move(fib)).classes.size() >= 2) out.push_back(s);
  }
  return out;
}

}  // namespace unicusp
