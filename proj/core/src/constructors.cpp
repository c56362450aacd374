#include "symq/constructors.hpp"

#include <algorithm>
#include <numeric>

namespace symq {

namespace {

// s_g(h) = phi(g^-1 h) g in the ambient group.
int twisted_sym(const FiniteGroup& g, const GroupMap& phi, int x, int y) {
  return g.op(phi(g.op(g.inverse(x), y)), x);
}

TwistedConjContext build_context(GroupPtr g, const GroupMap& phi,
                                 std::vector<int> carrier) {
  if (!phi.verified())
    throw contract_error("twisted conjugation requires a verified automorphism");
  const int n = g->order();
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (carrier.empty()) throw invalid_order_error("carrier must be nonempty");

  std::vector<int> local_of(n, -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    int x = carrier[i];
    if (x < 0 || x >= n) throw shape_error("carrier index out of range");
    local_of[x] = static_cast<int>(i);
  }

  const int m = static_cast<int>(carrier.size());
  std::vector<std::vector<int>> sym(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int image = twisted_sym(*g, phi, carrier[i], carrier[j]);
      if (local_of[image] < 0)
        throw closure_error("carrier is not closed under point symmetries");
      sym[i][j] = local_of[image];
    }

  std::vector<int> generated = subgroup_closure(*g, carrier);

  // S = {x in <X> : phi^2(y) = phi(x) y x^-1 for all y in X}, generic scan.
  GroupMap phi2 = phi.compose(phi);
  std::vector<int> s_set;
  for (int x : generated) {
    bool ok = true;
    for (int y : carrier)
      if (phi2(y) != g->op(g->op(phi(x), y), g->inverse(x))) {
        ok = false;
        break;
      }
    if (ok) s_set.push_back(x);
  }

  return TwistedConjContext{std::move(g), phi,
                            std::move(carrier), std::move(generated),
                            std::move(s_set), std::move(local_of),
                            Quandle(std::move(sym))};
}

}  // namespace

Quandle trivial_quandle(int n) {
  if (n <= 0) throw invalid_order_error("quandle order must be positive");
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Quandle(std::vector<std::vector<int>>(n, id),
                 "T" + std::to_string(n));
}

Quandle conj_quandle(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<int>> sym(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) sym[x][y] = g.op(g.op(x, y), g.inverse(x));
  return Quandle(std::move(sym), "Conj " + g.label());
}

TwistedConjContext twisted_conj_quandle(GroupPtr g, const GroupMap& phi) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return build_context(std::move(g), phi, std::move(all));
}

TwistedConjContext twisted_conj_subquandle(GroupPtr g, const GroupMap& phi,
                                           std::vector<int> carrier) {
  return build_context(std::move(g), phi, std::move(carrier));
}

Quandle alexander_quandle(GroupPtr a, const GroupMap& phi) {
  if (!a->is_abelian())
    throw domain_error("Alexander quandle requires an abelian group");
  return twisted_conj_quandle(std::move(a), phi).quandle;
}

Quandle linear_quandle(int n, long long k) {
  return linear_context(n, k).quandle;
}

TwistedConjContext linear_context(int n, long long k) {
  GroupMap phi = make_unit_automorphism(n, k);
  GroupPtr g = phi.domain();
  return twisted_conj_quandle(std::move(g), phi);
}

Quandle dihedral_quandle(int n) { return linear_quandle(n, -1); }

Quandle takasaki_kei(GroupPtr a) {
  if (!a->is_abelian())
    throw domain_error("Takasaki kei requires an abelian group");
  GroupMap phi = inversion_map(a);
  return alexander_quandle(std::move(a), phi);
}

Quandle galex_quandle(GroupPtr g, const GroupMap& phi) {
  if (!phi.verified())
    throw contract_error("generalized Alexander requires a verified automorphism");
  const int n = g->order();
  std::vector<std::vector<int>> sym(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      sym[x][y] = g->op(phi(g->op(y, g->inverse(x))), x);
  return Quandle(std::move(sym));
}

}  // namespace symq
