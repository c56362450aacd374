#pragma once

#include <vector>

#include "symq/group.hpp"
#include "symq/quandle.hpp"

namespace symq {

// A quandle together with its ambient presentation (G, phi, X <= G).
// `carrier` holds the ambient indices of X in ascending order; the quandle
// lives on local indices 0..|X|-1 with local i <-> ambient carrier[i].
// `s_set` is S = {x in <X> : phi^2(y) = phi(x) y x^-1 for all y in X}.
struct TwistedConjContext {
  GroupPtr ambient;
  GroupMap phi;
  std::vector<int> carrier;    // ambient indices of X, ascending
  std::vector<int> generated;  // <X>, ascending ambient indices
  std::vector<int> s_set;      // S, ascending ambient indices
  std::vector<int> local_of;   // ambient index -> local index or -1
  Quandle quandle;             // on local indices

  bool carrier_is_whole_group() const {
    return static_cast<int>(carrier.size()) == ambient->order();
  }
};

Quandle trivial_quandle(int n);

// s_g(h) = g h g^-1 on all of G.
Quandle conj_quandle(const FiniteGroup& g);

// s_g(h) = phi(g^-1 h) g on all of G, with <X> and S computed.
TwistedConjContext twisted_conj_quandle(GroupPtr g, const GroupMap& phi);

// Same structure restricted to a closed subset X. Throws closure_error if
// some s_x does not preserve X.
TwistedConjContext twisted_conj_subquandle(GroupPtr g, const GroupMap& phi,
                                           std::vector<int> carrier);

// s_a(b) = phi(b - a) + a on an abelian group (in multiplicative notation,
// mul(phi(mul(b, inv(a))), a)). Throws domain_error on non-abelian input.
Quandle alexander_quandle(GroupPtr a, const GroupMap& phi);

// Alexander quandle on Z/nZ with phi(m) = km. Throws not_a_unit_error
// unless gcd(n, k) = 1.
Quandle linear_quandle(int n, long long k);

// The same linear quandle with its full twisted-conjugation presentation.
TwistedConjContext linear_context(int n, long long k);

Quandle dihedral_quandle(int n);     // linear_quandle(n, -1)
Quandle takasaki_kei(GroupPtr a);    // alexander with phi = inversion

// Generalized Alexander quandle: s_g(h) = phi(h g^-1) g.
Quandle galex_quandle(GroupPtr g, const GroupMap& phi);

}  // namespace symq
