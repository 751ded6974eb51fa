#include "frep/squish.hpp"

#include "frep/linalg.hpp"

namespace frep {

namespace {

// Expands a pure tensor of vectors in Q[n] into a combination of functions
// [slots] -> [n], reading slot values as one-line notation.
LinComb expand_tensor(const std::vector<LinComb>& slot_vectors, unsigned n) {
  unsigned slots = static_cast<unsigned>(slot_vectors.size());
  LinComb out(slots, n);
  std::vector<std::map<FinFn, Rational>::const_iterator> pick;
  pick.reserve(slots);
  for (const LinComb& v : slot_vectors) {
    if (v.is_zero()) return out;
    pick.push_back(v.terms.begin());
  }
  while (true) {
    std::vector<unsigned> values(slots);
    Rational coeff(1);
    for (unsigned i = 0; i < slots; ++i) {
      values[i] = pick[i]->first.values[0];
      coeff *= pick[i]->second;
    }
    out.insert(FinFn(slots, n, std::move(values)), coeff);
    unsigned i = 0;
    while (i < slots) {
      if (++pick[i] != slot_vectors[i].terms.end()) break;
      pick[i] = slot_vectors[i].terms.begin();
      ++i;
    }
    if (i == slots) break;
  }
  return out;
}

LinComb basis_vector(unsigned i, unsigned n) { return LinComb(FinFn(1, n, {i})); }

LinComb basis_diff(unsigned i, unsigned j, unsigned n) {
  return lc_sub(basis_vector(i, n), basis_vector(j, n));
}

}  // namespace

Squisher upper_squisher(unsigned k, unsigned n) {
  Squisher out{Squisher::Kind::Upper, k, n, LinComb::identity(n)};
  if (n <= k + 1) return out;  // nothing to squish
  std::vector<LinComb> slots;
  for (unsigned i = 1; i <= n - k - 1; ++i) slots.push_back(basis_vector(i, n));
  for (unsigned i = n - k; i <= n; ++i) slots.push_back(basis_diff(i, i - 1, n));
  LinComb nu = expand_tensor(slots, n);
  out.element = lc_sub(LinComb::identity(n), nu);
  return out;
}

LinComb mu_vector(unsigned k) {
  if (k < 1) throw InvalidArgument("mu_vector needs k >= 1");
  unsigned n = k + 1;
  std::vector<LinComb> slots;
  slots.push_back(basis_diff(1, 2, n));
  slots.push_back(basis_diff(2, 1, n));
  for (unsigned i = 3; i <= n; ++i) slots.push_back(basis_diff(i, i - 1, n));
  return expand_tensor(slots, n);
}

Squisher lower_squisher(unsigned k, bool allow_large) {
  Squisher out{Squisher::Kind::Lower, k, 0, LinComb::zero(k + 1, k + 1)};
  if (k == 0) return out;  // Theta^1 = 0, nothing to prove
  if (k > 3 && !allow_large)
    throw CapExceeded("lower squisher ideal has (k+1)^(2k+2) generators; pass the flag to lift the cap");
  unsigned n = k + 1;
  LinComb mu = mu_vector(k);
  LinComb target = lc_sub(LinComb::identity(n), epsilon(n));
  // Solve for an ideal element a mu b with the prescribed bijection part.
  // Coordinates: bijection-supported combinations of [n] -> [n].
  auto perms = enumerate_permutations(n);
  std::map<FinFn, std::size_t> perm_index;
  for (std::size_t i = 0; i < perms.size(); ++i) perm_index.emplace(perms[i], i);
  auto bijection_part = [&](const LinComb& v) {
    SparseVec out_vec;
    for (const auto& [f, c] : v.terms) {
      auto it = perm_index.find(f);
      if (it != perm_index.end()) out_vec.emplace_back(it->second, c);
    }
    return out_vec;
  };
  auto fns = enumerate_functions(n, n);
  ColumnSpan span(true);
  std::vector<LinComb> fed;
  SparseVec goal = bijection_part(target);
  std::optional<std::vector<std::pair<std::size_t, Rational>>> combo;
  for (const FinFn& a : fns) {
    LinComb amu = lc_compose(a, mu);
    for (const FinFn& b : fns) {
      LinComb g = lc_compose(amu, b);
      if (g.is_zero()) continue;
      SparseVec bij = bijection_part(g);
      if (bij.empty()) continue;
      // Feed ids must stay aligned with the span, dependent columns included.
      fed.push_back(std::move(g));
      if (!span.add(std::move(bij))) continue;
      combo = span.combination(goal);
      if (combo) break;
    }
    if (combo) break;
  }
  if (!combo) throw InternalError("no ideal element matches 1 - epsilon modulo non-bijections");
  LinComb mu_prime(n, n);
  for (const auto& [id, c] : *combo) mu_prime = lc_add(mu_prime, lc_scale(c, fed[id]));
  out.element = lc_sub(target, mu_prime);
  return out;
}

}  // namespace frep
