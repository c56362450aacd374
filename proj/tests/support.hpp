#pragma once

// Shared fixture helpers for the test suites.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "symq/group.hpp"
#include "symq/group_io.hpp"

namespace symq::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(SYMQ_FIXTURE_DIR) + "/" + name;
}

inline GroupPtr fixture_group(const std::string& name) {
  return read_group_file(fixture_path(name + ".grp"));
}

// Klein four-group as a table, for tests that build it inline.
inline GroupPtr klein_group() {
  std::vector<int> mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a * 4 + b] = a ^ b;
  return std::make_shared<FiniteGroup>(4, std::move(mul), "Z/2 x Z/2");
}

// Brute count of involutions of S_n (including the identity), used as the
// independent oracle for the transposition-count formula.
inline long long brute_involutions_of_sym(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool inv = true;
    for (int i = 0; i < n && inv; ++i) inv = perm[perm[i]] == i;
    if (inv) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace symq::test
