#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symq/constructors.hpp"
#include "symq/quandle.hpp"

namespace symq {

// One good involution. `inducing_psi` maps component id -> S element
// (ambient index); present only on the theorem path.
struct GoodInvolution {
  std::vector<int> mapping;
  std::optional<std::vector<int>> inducing_psi;
};

enum class Method { brute, theorem, closed_form };

const char* method_name(Method m);

struct SearchStats {
  std::uint64_t nodes = 0;
  double wall_seconds = 0;
};

// Enumeration result. `mappings` is absent in count-only mode; when
// present it is sorted lexicographically by mapping table.
struct GoodInvolutionSet {
  std::uint64_t count = 0;
  std::optional<std::vector<GoodInvolution>> mappings;
  Method method = Method::theorem;
  SearchStats stats;
};

struct EnumerateOptions {
  bool collect_mappings = true;
  std::uint64_t mapping_cap = 10'000'000;
  int workers = 1;
  double time_budget_seconds = 0;   // 0 = unlimited
  std::uint64_t solution_limit = 0; // 0 = unlimited; stop early when hit
};

// rho^2 = id, rho s_x = s_x rho, and s_{rho(x)} = s_x^-1 for all x.
// Throws shape_error if rho is not a permutation of the carrier.
bool verify_good_involution(const Quandle& q, const std::vector<int>& rho);

// Definition-level oracle: backtracks over involutions whose pairings
// respect s_{rho(x)} = s_x^-1, final-checking commutation. Throws
// budget_error above the ceiling.
GoodInvolutionSet enumerate_brute(const Quandle& q,
                                  const EnumerateOptions& opts = {},
                                  int brute_ceiling = 12);

// Structure-theorem enumerator: backtracking assignment of
// psi*: O(X) -> S in component order, propagating the psi = psi rho
// constraint through forced components, with a final verification of
// every emitted involution.
GoodInvolutionSet enumerate_theorem(const TwistedConjContext& ctx,
                                    const EnumerateOptions& opts = {});

// Theorem enumerator with S replaced by the abelian shortcut:
// S = Fix phi when phi is an involution, empty otherwise. Skips the <X>
// scan. Throws domain_error on a non-abelian ambient group.
GoodInvolutionSet enumerate_alexander(const TwistedConjContext& ctx,
                                      const EnumerateOptions& opts = {});
GoodInvolutionSet enumerate_alexander(int n, long long k,
                                      const EnumerateOptions& opts = {});

enum class DispatchMethod { automatic, brute, theorem, both };

DispatchMethod parse_dispatch(const std::string& name);

// `both` runs brute and theorem and throws inconsistency_error when their
// sorted mapping sets differ.
GoodInvolutionSet count_good(const TwistedConjContext& ctx,
                             DispatchMethod method,
                             const EnumerateOptions& opts = {},
                             int brute_ceiling = 12);

// Quandle-only dispatch (no ambient presentation): brute path only.
GoodInvolutionSet count_good(const Quandle& q, DispatchMethod method,
                             const EnumerateOptions& opts = {},
                             int brute_ceiling = 12);

}  // namespace symq
