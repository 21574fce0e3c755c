#pragma once

#include <cstddef>
#include <vector>

namespace unicusp {

// Finite ordered list of distinct positive integers.  The order is
// significant: it fixes the coordinates of factorization vectors.
struct GroundSet {
  std::vector<long long> elements;

  explicit GroundSet(std::vector<long long> elems);
  std::size_t size() const { return elements.size(); }
};

// Exponent vector over a ground set together with its value.
struct Factorization {
  std::vector<long long> exponents;
  long long value = 0;
};

// A fiber of the projection from the free monoid onto the numerical
// semigroup generated by the ground set, partitioned into chain
// components: two factorizations are related when they are joined by
// a chain of consecutive pairs with overlapping support.
struct FiberAnalysis {
  long long element = 0;
  std::vector<Factorization> factorizations;            // lexicographic order of input
  std::vector<std::vector<std::size_t>> classes;        // partition by index, ordered by representative
  std::vector<std::vector<long long>> representatives;  // lexicographically least member per class
};

// All exponent vectors v with v . ground = value, in lexicographic
// order.  Empty when value is not representable.
std::vector<Factorization> fiber(const GroundSet& ground, long long value);

// Chain-component decomposition of a fiber.  Input order is
// irrelevant to the resulting partition; classes are listed by their
// lexicographically least member.  Throws std::domain_error when the
// factorizations do not share one value.
FiberAnalysis classes(std::vector<Factorization> fiber_elements);

// fiber() followed by classes(), with `value` recorded even when the
// fiber is empty.
FiberAnalysis analyze_fiber(const GroundSet& ground, long long value);

// All s < bound whose fiber splits into at least two classes, sorted.
std::vector<long long> betti_elements(const GroundSet& ground, long long bound);

}  // namespace unicusp
