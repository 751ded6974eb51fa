#pragma once

#include <map>
#include <string>

#include "frep/finfn.hpp"
#include "frep/partition.hpp"
#include "frep/rational.hpp"

namespace frep {

// A formal rational linear combination of functions [dom] -> [cod]; the
// hom-spaces of the linearized category. No zero coefficients are stored.
struct LinComb {
  unsigned dom = 0;
  unsigned cod = 0;
  std::map<FinFn, Rational> terms;

  LinComb() = default;
  LinComb(unsigned dom, unsigned cod) : dom(dom), cod(cod) {}
  explicit LinComb(const FinFn& f) : dom(f.dom), cod(f.cod) { terms.emplace(f, 1); }
  static LinComb zero(unsigned dom, unsigned cod) { return LinComb(dom, cod); }
  static LinComb identity(unsigned k) { return LinComb(FinFn::identity(k)); }

  bool is_zero() const { return terms.empty(); }
  void insert(const FinFn& f, const Rational& c);
  bool operator==(const LinComb&) const = default;
};

LinComb lc_add(const LinComb& a, const LinComb& b);
LinComb lc_sub(const LinComb& a, const LinComb& b);
LinComb lc_scale(const Rational& c, const LinComb& a);
// Bilinear extension of composition; u then v.
LinComb lc_compose(const LinComb& u, const LinComb& v);
LinComb lc_compose(const LinComb& u, const FinFn& v);
LinComb lc_compose(const FinFn& u, const LinComb& v);

// The averaging idempotent tau_k = (1/k!) sum of all permutations, and the
// signed average epsilon_k. k = 0 gives the identity on the empty function.
LinComb tau(unsigned k);
LinComb epsilon(unsigned k);
// partial_k = epsilon_k iota_k epsilon_{k+1} : [k] -> [k+1]; these satisfy
// partial_k . partial_{k+1} = 0.
LinComb partial(unsigned k);
// Idempotent Young symmetrizer for the canonical tableau (rows filled with
// 1..k left to right, top to bottom), normalized by specht_dim/k!.
// lambda = (k) gives tau_k and lambda = (1^k) gives epsilon_k.
LinComb young_symmetrizer(const Partition& lambda);

// Text form "c1*F1 + c2*F2 - F3" with rational coefficients and one-line
// function literals; the zero combination prints as "0".
std::string to_string(const LinComb& v);
LinComb lincomb_from_string(const std::string& text, unsigned dom, unsigned cod);

}  // namespace frep
