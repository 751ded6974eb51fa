#include "frep/groupalg.hpp"

#include <map>
#include <mutex>

namespace frep {

bool is_group_supported(const LinComb& v) {
  if (v.dom != v.cod) return false;
  for (const auto& [f, c] : v.terms)
    if (!f.is_bijection()) return false;
  return true;
}

namespace {

// Dense coordinates of a group-supported combination over the permutation
// basis of QS_k, ordered as enumerate_permutations(k).
std::vector<Rational> group_coords(const LinComb& v, const std::vector<FinFn>& perms) {
  std::map<FinFn, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  std::vector<Rational> out(perms.size(), Rational(0));
  for (const auto& [f, c] : v.terms) out[index.at(f)] = c;
  return out;
}

}  // namespace

Rational character_value(const Partition& lambda, const FinFn& sigma) {
  unsigned k = lambda.size();
  if (sigma.dom != k || !sigma.is_bijection()) throw InvalidArgument("character at a non-permutation");
  auto perms = enumerate_permutations(k);
  LinComb c = young_symmetrizer(lambda);
  // Left ideal QS_k * c realizes the Specht module; the character is the
  // trace of left multiplication by sigma restricted to it.
  QMatrix ideal(perms.size(), perms.size());
  for (std::size_t j = 0; j < perms.size(); ++j) {
    auto col = group_coords(lc_compose(perms[j], c), perms);
    for (std::size_t i = 0; i < perms.size(); ++i) ideal.at(i, j) = col[i];
  }
  RrefResult basis_sel = rref(ideal);
  QMatrix basis(perms.size(), basis_sel.rank);
  for (std::size_t j = 0; j < basis_sel.rank; ++j)
    for (std::size_t i = 0; i < perms.size(); ++i)
      basis.at(i, j) = ideal.at(i, basis_sel.pivot_columns[j]);
  // Left multiplication by sigma permutes the basis of the group algebra.
  QMatrix left(perms.size(), perms.size());
  std::map<FinFn, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  for (std::size_t j = 0; j < perms.size(); ++j) left.at(index.at(compose(sigma, perms[j])), j) = 1;
  return restricted_trace(basis, left);
}

LinComb central_idempotent(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, LinComb> cache;
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  unsigned k = lambda.size();
  auto perms = enumerate_permutations(k);
  std::map<std::vector<unsigned>, Rational> by_type;  // class function cache
  LinComb z(k, k);
  Rational scale(static_cast<long>(specht_dim(lambda)), static_cast<long>(factorial(k)));
  scale.canonicalize();
  for (const FinFn& s : perms) {
    auto type = cycle_type(s);
    auto it = by_type.find(type);
    if (it == by_type.end()) it = by_type.emplace(type, character_value(lambda, inverse(s))).first;
    z.insert(s, scale * it->second);
  }
  std::scoped_lock lock(mutex);
  return cache.emplace(lambda, std::move(z)).first->second;
}

std::vector<std::pair<Partition, LinComb>> primitive_decomposition(const LinComb& e) {
  if (!is_group_supported(e)) throw InvalidArgument("idempotent is not supported on permutations");
  unsigned k = e.dom;
  if (!(lc_compose(e, e) == e)) throw InvalidArgument("not an idempotent");
  auto perms = enumerate_permutations(k);
  std::vector<std::pair<Partition, LinComb>> out;
  LinComb total(k, k);
  for (const Partition& lambda : partitions_of(k)) {
    LinComb c = young_symmetrizer(lambda);
    // z e is an idempotent below e in the lambda block (z is central).
    LinComb r = lc_compose(central_idempotent(lambda), e);
    while (!r.is_zero()) {
      // For a primitive p, p r p is a scalar multiple of p; when the scalar
      // is nonzero, r p r / alpha is a primitive summand of r.
      bool peeled = false;
      for (const FinFn& s : perms) {
        LinComb p = lc_compose(lc_compose(LinComb(s), c), LinComb(inverse(s)));
        LinComb q = lc_compose(lc_compose(p, r), p);
        if (q.is_zero()) continue;
        const auto& probe = *p.terms.begin();
        auto qit = q.terms.find(probe.first);
        if (qit == q.terms.end()) throw InternalError("p r p is not proportional to p");
        Rational alpha = qit->second / probe.second;
        alpha.canonicalize();
        if (!(lc_scale(alpha, p) == q)) throw InternalError("p r p is not proportional to p");
        LinComb prim = lc_scale(1 / alpha, lc_compose(lc_compose(r, p), r));
        if (!(lc_compose(prim, prim) == prim)) throw InternalError("peeled summand is not idempotent");
        out.emplace_back(lambda, prim);
        total = lc_add(total, prim);
        r = lc_sub(r, prim);
        peeled = true;
        break;
      }
      if (!peeled) throw PeelFailure("no conjugate symmetrizer peels this idempotent");
    }
  }
  if (!(total == e)) throw InternalError("primitive decomposition does not sum to the idempotent");
  return out;
}

}  // namespace frep
