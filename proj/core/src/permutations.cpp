#include "qswitch/permutations.hpp"

#include <algorithm>
#include <numeric>

#include "qswitch/errors.hpp"

namespace qswitch {
namespace {

bool is_even(const std::vector<int>& mapping) {
  int inversions = 0;
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    for (std::size_t j = i + 1; j < mapping.size(); ++j) {
      inversions += mapping[i] > mapping[j] ? 1 : 0;
    }
  }
  return inversions % 2 == 0;
}

}  // namespace

std::size_t factorial(int n) {
  std::size_t out = 1;
  for (int k = 2; k <= n; ++k) {
    out *= static_cast<std::size_t>(k);
  }
  return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
  if (n < 2 || n > 4) {
    throw DomainError("enumerate_permutations: n must be in {2, 3, 4}");
  }
  std::vector<int> mapping(static_cast<std::size_t>(n));
  std::iota(mapping.begin(), mapping.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back({mapping, is_even(mapping)});
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return out;
}

}  // namespace qswitch
