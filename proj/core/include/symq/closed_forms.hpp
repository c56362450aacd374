#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symq/good_involutions.hpp"

namespace symq {

using BigInt = boost::multiprecision::cpp_int;

// Good-involution count of the dihedral quandle R_n:
// 1 if n odd; 2 if n = 2m with m odd; 4 otherwise.
int dihedral_count(int n);

// Number of involutions of an n-element set with exactly i transpositions:
// n! / ((n-2i)! i! 2^i). Throws domain_error when i is out of range.
BigInt involution_count(int n, int i);

// (sum_{i=0}^{floor(n/2)} n!/((n-2i)! i!) 2^{n-2i})^2, the good-involution
// count of the linear quandle of order 4n with multiplier 2n+1.
BigInt a202828(int n);

// Number of nontrivial linear quandles of order n with good involutions
// (= elements of order 2 in the unit group).
int nontrivial_linear_good_count(int n);

struct ConjectureReport {
  int n = 0;
  int modulus = 0;       // 4n
  long long k = 0;       // 2n - 1
  bool in_conjecture = false;  // n odd and >= 3
  std::vector<int> fixed_points;
  bool fixed_points_ok = false;  // Fix phi_k == {0, n, 2n, 3n}
  std::uint64_t count = 0;
  std::uint64_t expected = 0;    // 10 (odd n) or 4 (even n, dihedral case)
  bool matches = false;
};

// Enumerates Good(Lambda_{4n,2n-1}). Odd n >= 3 is the conjectured family
// (expected 10); even n is reported as out-of-conjecture with expected 4.
ConjectureReport check_order4n_family(int n, const EnumerateOptions& opts = {});

struct TableRow {
  int n = 0;
  int k = 0;                  // canonical, 0..n-1
  bool k_is_minus_one = false;
  BigInt count;
  Method method = Method::theorem;
};

// Rows (n, k) for 3 <= n <= max_n, k a nontrivial unit with k^2 = 1 mod n,
// in the published order: k = n-1 first, then remaining k ascending.
// Each row is enumerated under `row_budget_seconds` (0 = unlimited); on
// budget exhaustion the (4m, 2m+1) closed form is substituted when it
// applies, otherwise budget_error propagates.
std::vector<TableRow> linear_table(int max_n, double row_budget_seconds = 0,
                                   const EnumerateOptions& opts = {});

struct SequenceReport {
  std::string name;
  std::vector<std::pair<int, BigInt>> terms;  // (index, value), ascending
  std::string source;                         // "formula" | "enumeration"
  std::vector<int> mismatches;                // indices failing cross-check
};

// Per-order sums over all nontrivial rows, cross-checked against the
// published totals for n <= 29.
SequenceReport table_totals(int max_n, double row_budget_seconds = 0,
                            const EnumerateOptions& opts = {});

// Published per-order total for 3 <= n <= 29, or -1 outside that range.
long long published_total(int n);

}  // namespace symq
