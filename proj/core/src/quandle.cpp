#include "symq/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symq {

namespace {

bool is_permutation_family(const std::vector<std::vector<int>>& sym) {
  const int n = static_cast<int>(sym.size());
  if (n == 0) throw shape_error("empty quandle table");
  std::vector<char> seen(n);
  for (const auto& row : sym) {
    if (row.size() != static_cast<std::size_t>(n))
      throw shape_error("ragged quandle table");
    std::fill(seen.begin(), seen.end(), 0);
    for (int v : row) {
      if (v < 0 || v >= n) throw shape_error("quandle table entry out of range");
      if (seen[v]) return false;  // not a bijection
      seen[v] = 1;
    }
  }
  return true;
}

ComponentPartition compute_components(const std::vector<std::vector<int>>& sym) {
  const int n = static_cast<int>(sym.size());
  ComponentPartition part;
  part.component_of.assign(n, -1);
  // Breadth-first orbit saturation; forward images suffice because each
  // s_x has finite order.
  for (int seed = 0; seed < n; ++seed) {
    if (part.component_of[seed] >= 0) continue;
    const int id = static_cast<int>(part.components.size());
    std::vector<int> block{seed};
    part.component_of[seed] = id;
    for (std::size_t i = 0; i < block.size(); ++i) {
      int y = block[i];
      for (int x = 0; x < n; ++x) {
        int z = sym[x][y];
        if (part.component_of[z] < 0) {
          part.component_of[z] = id;
          block.push_back(z);
        }
      }
    }
    std::sort(block.begin(), block.end());
    part.components.push_back(std::move(block));
  }
  return part;
}

// Sorted cycle lengths of a permutation; cheap isomorphism invariant.
std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

bool check_quandle_axioms(const std::vector<std::vector<int>>& sym) {
  if (!is_permutation_family(sym)) return false;
  const int n = static_cast<int>(sym.size());
  for (int x = 0; x < n; ++x)
    if (sym[x][x] != x) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& lhs_outer = sym[x];
      const auto& rhs_outer = sym[sym[x][y]];
      for (int z = 0; z < n; ++z)
        if (lhs_outer[sym[y][z]] != rhs_outer[sym[x][z]]) return false;
    }
  return true;
}

Quandle::Quandle(std::vector<std::vector<int>> sym, std::string label)
    : sym_(std::move(sym)), label_(std::move(label)) {
  if (!check_quandle_axioms(sym_)) throw input_error("quandle axioms violated");
  kei_ = true;
  const int n = order();
  for (int x = 0; x < n && kei_; ++x)
    for (int y = 0; y < n; ++y)
      if (sym_[x][sym_[x][y]] != y) {
        kei_ = false;
        break;
      }
  components_ = compute_components(sym_);
}

Quandle dual(const Quandle& q) {
  const int n = q.order();
  std::vector<std::vector<int>> sym(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) sym[x][q.apply(x, y)] = y;
  return Quandle(std::move(sym), q.label().empty() ? "" : q.label() + "^op");
}

bool is_subquandle_closed(const Quandle& q, const std::vector<int>& ys) {
  const int n = q.order();
  std::vector<char> in(n, 0);
  for (int y : ys) {
    if (y < 0 || y >= n) throw shape_error("subset index out of range");
    in[y] = 1;
  }
  // s_y injective and the subset finite, so containment gives equality.
  for (int y : ys)
    for (int z : ys)
      if (!in[q.apply(y, z)]) return false;
  return true;
}

Quandle restrict_subquandle(const Quandle& q, const std::vector<int>& ys) {
  if (!is_subquandle_closed(q, ys))
    throw closure_error("subset is not closed under its point symmetries");
  std::vector<int> carrier = ys;
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::vector<int> local(q.order(), -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) local[carrier[i]] = static_cast<int>(i);
  const int m = static_cast<int>(carrier.size());
  std::vector<std::vector<int>> sym(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sym[i][j] = local[q.apply(carrier[i], carrier[j])];
  return Quandle(std::move(sym));
}

namespace {

struct IsoSearch {
  const Quandle& a;
  const Quandle& b;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> theta;    // a -> b, -1 unassigned
  std::vector<char> used;    // image used in b

  bool consistent(int x, int y) {
    // All constraints theta(s_u(v)) = s'_{theta(u)}(theta(v)) touching x.
    const int n = a.order();
    for (int u = 0; u < n; ++u) {
      if (theta[u] < 0) continue;
      int uv = a.apply(u, x);
      if (theta[uv] >= 0 && theta[uv] != b.apply(theta[u], y)) return false;
      int vu = a.apply(x, u);
      if (theta[vu] >= 0 && theta[vu] != b.apply(y, theta[u])) return false;
    }
    return true;
  }

  bool run(int x) {
    if (++nodes > budget) throw budget_error("isomorphism node budget exceeded");
    const int n = a.order();
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      theta[x] = y;
      used[y] = 1;
      if (consistent(x, y) && run(x + 1)) return true;
      theta[x] = -1;
      used[y] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Quandle& a,
                                               const Quandle& b,
                                               std::uint64_t node_budget) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.is_kei() != b.is_kei()) return std::nullopt;

  auto sizes = [](const Quandle& q) {
    std::vector<int> out;
    for (const auto& c : q.components().components)
      out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (sizes(a) != sizes(b)) return std::nullopt;

  auto profile = [](const Quandle& q) {
    std::map<std::vector<int>, int> out;
    for (int x = 0; x < q.order(); ++x) ++out[cycle_type(q.sym(x))];
    return out;
  };
  if (profile(a) != profile(b)) return std::nullopt;

  IsoSearch search{a, b, node_budget, 0,
                   std::vector<int>(a.order(), -1),
                   std::vector<char>(a.order(), 0)};
  if (!search.run(0)) return std::nullopt;
  return search.theta;
}

}  // namespace symq
