#include "symq/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace symq {

namespace {

constexpr int kExhaustiveAssocLimit = 64;

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> mul, std::string label,
                         bool strict, std::uint64_t seed)
    : order_(order), mul_(std::move(mul)), label_(std::move(label)) {
  if (order_ <= 0) throw invalid_order_error("group order must be positive");
  if (mul_.size() != static_cast<std::size_t>(order_) * order_)
    throw shape_error("multiplication table has wrong size");
  for (int v : mul_)
    if (v < 0 || v >= order_)
      throw shape_error("multiplication table entry out of range");

  // Identity: the unique two-sided neutral element.
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g)
      ok = op(e, g) == g && op(g, e) == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw input_error("table has no identity element");

  inv_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h) {
      if (op(g, h) == identity_) {
        if (op(h, g) != identity_)
          throw input_error("one-sided inverse in table");
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0) throw input_error("element has no inverse");
  }

  auto assoc_at = [this](int a, int b, int c) {
    return op(op(a, b), c) == op(a, op(b, c));
  };
  if (strict || order_ <= kExhaustiveAssocLimit) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (!assoc_at(a, b, c))
            throw input_error("multiplication table is not associative");
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    for (int trial = 0; trial < 20000; ++trial)
      if (!assoc_at(pick(rng), pick(rng), pick(rng)))
        throw input_error("multiplication table is not associative");
  }

  for (int a = 0; a < order_ && abelian_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) {
        abelian_ = false;
        break;
      }
}

GroupPtr make_cyclic_group(int n) {
  if (n <= 0) throw invalid_order_error("cyclic group order must be positive");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return std::make_shared<FiniteGroup>(n, std::move(mul),
                                       "Z/" + std::to_string(n));
}

GroupMap::GroupMap(GroupPtr domain, std::vector<int> image, bool verified)
    : domain_(std::move(domain)), image_(std::move(image)), verified_(verified) {}

GroupMap GroupMap::automorphism(GroupPtr domain, std::vector<int> image) {
  if (!is_automorphism(*domain, image))
    throw contract_error("image table is not an automorphism");
  return GroupMap(std::move(domain), std::move(image), true);
}

GroupMap GroupMap::raw(GroupPtr domain, std::vector<int> image) {
  if (image.size() != static_cast<std::size_t>(domain->order()))
    throw shape_error("map table length does not match group order");
  return GroupMap(std::move(domain), std::move(image), false);
}

bool GroupMap::is_identity() const {
  for (int g = 0; g < domain_->order(); ++g)
    if (image_[g] != g) return false;
  return true;
}

bool GroupMap::is_involution() const {
  for (int g = 0; g < domain_->order(); ++g)
    if (image_[image_[g]] != g) return false;
  return true;
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
  if (!verified_ || !inner.verified_)
    throw contract_error("composition requires verified maps");
  if (domain_ != inner.domain_ && domain_->order() != inner.domain_->order())
    throw shape_error("composition of maps on different groups");
  std::vector<int> image(image_.size());
  for (std::size_t g = 0; g < image.size(); ++g) image[g] = image_[inner.image_[g]];
  return GroupMap(domain_, std::move(image), true);
}

GroupMap GroupMap::inverse_map() const {
  if (!verified_) throw contract_error("inverse requires a verified map");
  std::vector<int> image(image_.size());
  for (std::size_t g = 0; g < image.size(); ++g) image[image_[g]] = static_cast<int>(g);
  return GroupMap(domain_, std::move(image), true);
}

GroupMap identity_map(GroupPtr g) {
  std::vector<int> image(g->order());
  std::iota(image.begin(), image.end(), 0);
  return GroupMap::automorphism(std::move(g), std::move(image));
}

GroupMap inversion_map(GroupPtr g) {
  std::vector<int> image(g->order());
  for (int x = 0; x < g->order(); ++x) image[x] = g->inverse(x);
  return GroupMap::automorphism(std::move(g), std::move(image));
}

GroupMap make_unit_automorphism(int n, long long k) {
  if (n <= 0) throw invalid_order_error("modulus must be positive");
  long long km = ((k % n) + n) % n;
  if (gcd_ll(n, km) != 1)
    throw not_a_unit_error("k = " + std::to_string(k) + " is not a unit mod " +
                           std::to_string(n));
  auto g = make_cyclic_group(n);
  std::vector<int> image(n);
  for (int a = 0; a < n; ++a) image[a] = static_cast<int>((km * a) % n);
  return GroupMap::automorphism(std::move(g), std::move(image));
}

bool is_automorphism(const FiniteGroup& g, const std::vector<int>& f) {
  const int n = g.order();
  if (f.size() != static_cast<std::size_t>(n))
    throw shape_error("map table length does not match group order");
  std::vector<char> seen(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n) throw shape_error("map table entry out of range");
    if (seen[v]) return false;
    seen[v] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f[g.op(a, b)] != g.op(f[a], f[b])) return false;
  return true;
}

std::vector<GroupMap> all_automorphisms(const GroupPtr& g) {
  const int n = g->order();
  if (n > 10) throw budget_error("all_automorphisms limited to order <= 10");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GroupMap> out;
  do {
    if (is_automorphism(*g, perm)) out.push_back(GroupMap::automorphism(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& gens) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  auto add = [&](int x) {
    if (x < 0 || x >= n) throw shape_error("generator index out of range");
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  add(g.identity());
  for (int x : gens) add(x);
  // Worklist saturation under mul and inverse.
  for (std::size_t i = 0; i < work.size(); ++i) {
    int a = work[i];
    add(g.inverse(a));
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.op(a, work[j]));
      add(g.op(work[j], a));
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<int> fixed_points(const GroupMap& phi) {
  if (!phi.verified())
    throw contract_error("fixed_points requires a verified automorphism");
  std::vector<int> out;
  for (int g = 0; g < phi.domain()->order(); ++g)
    if (phi(g) == g) out.push_back(g);
  return out;
}

int count_order2_units(int n) {
  if (n <= 0) throw invalid_order_error("modulus must be positive");
  int count = 0;
  for (int k = 0; k < n; ++k) {
    if (k == 1 % n) continue;
    if (std::gcd(k, n) != 1) continue;
    if ((static_cast<long long>(k) * k) % n == 1 % n) ++count;
  }
  return count;
}

}  // namespace symq
