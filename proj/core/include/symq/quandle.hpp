#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symq/errors.hpp"

namespace symq {

// Orbit partition of a quandle carrier under the group generated by the
// point symmetries. Blocks are ordered by smallest member.
struct ComponentPartition {
  std::vector<int> component_of;
  std::vector<std::vector<int>> components;
};

// True iff sym is a family of permutations satisfying both quandle axioms:
// s_x(x) = x and s_x s_y = s_{s_x(y)} s_x. Throws shape_error on a ragged
// or out-of-range table.
bool check_quandle_axioms(const std::vector<std::vector<int>>& sym);

// A finite quandle stored as its point-symmetry permutations.
// Convention: sym[actor][operand], i.e. apply(x, y) = s_x(y).
// Kei flag and component partition are computed at construction; instances
// are immutable and safe to share across threads.
class Quandle {
 public:
  // Throws shape_error / input_error if sym is not a quandle table.
  explicit Quandle(std::vector<std::vector<int>> sym, std::string label = "");

  int order() const { return static_cast<int>(sym_.size()); }
  int apply(int x, int y) const { return sym_[x][y]; }  // s_x(y)
  const std::vector<int>& sym(int x) const { return sym_[x]; }
  const std::vector<std::vector<int>>& table() const { return sym_; }
  const std::string& label() const { return label_; }

  bool is_kei() const { return kei_; }
  const ComponentPartition& components() const { return components_; }
  bool is_connected() const { return components_.components.size() == 1; }

 private:
  std::vector<std::vector<int>> sym_;
  std::string label_;
  bool kei_;
  ComponentPartition components_;
};

// Quandle with every point symmetry inverted. An involution on tables;
// fixes keis.
Quandle dual(const Quandle& q);

// True iff s_y(Y) = Y for every y in Y. Throws shape_error on
// out-of-range indices.
bool is_subquandle_closed(const Quandle& q, const std::vector<int>& ys);

// Re-indexed quandle on the closed subset ys (ascending order preserved).
// Throws closure_error if ys is not closed.
Quandle restrict_subquandle(const Quandle& q, const std::vector<int>& ys);

// Quandle isomorphism as an element bijection, or nullopt. Backtracking
// with invariant pruning (kei flag, component size multiset, cycle-type
// profiles); throws budget_error when the node budget is exhausted.
std::optional<std::vector<int>> are_isomorphic(
    const Quandle& a, const Quandle& b,
    std::uint64_t node_budget = 5'000'000);

}  // namespace symq
