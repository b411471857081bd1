#pragma once

#include <cstddef>
#include <vector>

namespace qswitch {

// A pathway ordering in one-line notation: mapping[t] is the channel in
// factor position t of the operator product, so mapping.back() acts first.
struct Permutation {
  std::vector<int> mapping;
  bool even = true;

  int sign() const { return even ? 1 : -1; }
};

// All n! permutations of (0..n-1) in lexicographic order. Index k in the
// result is control basis state |k>; the identity is always index 0.
// Supports n in {2, 3, 4}.
std::vector<Permutation> enumerate_permutations(int n);

std::size_t factorial(int n);

}  // namespace qswitch
