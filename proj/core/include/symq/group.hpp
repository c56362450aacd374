#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symq/errors.hpp"

namespace symq {

// A finite group as an explicit multiplication table over dense element
// indices 0..order-1. Identity and inverse tables are derived and checked
// at construction. Immutable after construction.
class FiniteGroup {
 public:
  // Validates the table: entries in range, identity exists, inverses
  // exist, associativity. Associativity is checked exhaustively for
  // order <= 64 and by seeded random sampling above; `strict` forces the
  // exhaustive check at any order.
  FiniteGroup(int order, std::vector<int> mul, std::string label = "",
              bool strict = false, std::uint64_t seed = 0);

  int order() const { return order_; }
  int op(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inv_[a]; }
  const std::string& label() const { return label_; }
  bool is_abelian() const { return abelian_; }

 private:
  int order_;
  std::vector<int> mul_;
  int identity_ = 0;
  std::vector<int> inv_;
  std::string label_;
  bool abelian_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_cyclic_group(int n);

// A function on group elements. `verified()` is true only when the image
// table has been checked to be a bijective homomorphism.
class GroupMap {
 public:
  // Checks the table with is_automorphism and throws contract_error if it
  // fails.
  static GroupMap automorphism(GroupPtr domain, std::vector<int> image);

  // No automorphism check; verified() stays false.
  static GroupMap raw(GroupPtr domain, std::vector<int> image);

  int operator()(int g) const { return image_[g]; }
  const std::vector<int>& image() const { return image_; }
  const GroupPtr& domain() const { return domain_; }
  bool verified() const { return verified_; }
  bool is_identity() const;
  bool is_involution() const;

  // Eager table compositions; both require verified maps.
  GroupMap compose(const GroupMap& inner) const;  // this after inner
  GroupMap inverse_map() const;

 private:
  GroupMap(GroupPtr domain, std::vector<int> image, bool verified);
  GroupPtr domain_;
  std::vector<int> image_;
  bool verified_;
};

GroupMap identity_map(GroupPtr g);

// The inversion map g -> g^-1; an automorphism iff the group is abelian.
GroupMap inversion_map(GroupPtr g);

// a -> (k*a) mod n on Z/nZ. Throws not_a_unit_error unless gcd(n, k) = 1.
GroupMap make_unit_automorphism(int n, long long k);

// True iff f is a bijective homomorphism of g. Throws shape_error if f has
// the wrong length or out-of-range entries.
bool is_automorphism(const FiniteGroup& g, const std::vector<int>& f);

// All automorphisms of g, ordered lexicographically by image table.
// Exhaustive over permutations; throws budget_error above order 10.
std::vector<GroupMap> all_automorphisms(const GroupPtr& g);

// Smallest subset containing gens and the identity, closed under mul and
// inverse. Returned sorted ascending.
std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& gens);

// {g : phi(g) = g}, sorted ascending. Requires a verified map.
std::vector<int> fixed_points(const GroupMap& phi);

// Number of elements of order exactly 2 in (Z/nZ)^x.
int count_order2_units(int n);

}  // namespace symq
