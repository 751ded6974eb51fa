#include "frep/evaluator.hpp"

#include <algorithm>

namespace frep {

void check_cap(const Presentation& p, unsigned n, const EvalOptions& opts) {
  std::size_t need = std::max({p.f.src.hom_dim(n), p.f.dst.hom_dim(n), p.g.dst.hom_dim(n)});
  if (need > opts.row_cap)
    throw CapExceeded("evaluation at n = " + std::to_string(n) + " needs " + std::to_string(need) +
                      " matrix rows, above the cap of " + std::to_string(opts.row_cap));
}

ValueSpace value_space(const Presentation& p, unsigned n, const EvalOptions& opts) {
  check_cap(p, n, opts);
  ValueSpace vs;
  vs.n = n;
  vs.ambient = p.f.src.hom_dim(n);
  if (p.has_relations()) {
    QfMat fg = p.fg();
    qfmat_eval_columns(fg, n, [&](std::size_t, const FinFn&, SparseVec col) { vs.den.add(std::move(col)); });
  }
  ColumnSpan num;
  ColumnSpan quot;
  qfmat_eval_columns(p.f, n, [&](std::size_t, const FinFn&, SparseVec col) {
    num.add(col);
    quot.add(vs.den.reduce(std::move(col)));
  });
  for (const SparseVec* b : num.basis()) vs.num_basis.push_back(*b);
  for (const SparseVec* b : quot.basis()) vs.quotient_reps.push_back(*b);
  return vs;
}

static QMatrix dense_columns(const std::vector<SparseVec>& cols, std::size_t ambient) {
  QMatrix m(ambient, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) m.at(i, j) = c;
  return m;
}

EvalResult eval(const Presentation& p, unsigned n, const EvalOptions& opts) {
  ValueSpace vs = value_space(p, n, opts);
  EvalResult out;
  out.n = n;
  out.dim = vs.dim();
  out.numerator_basis = dense_columns(vs.num_basis, vs.ambient);
  std::vector<SparseVec> den_basis;
  for (const SparseVec* b : vs.den.basis()) den_basis.push_back(*b);
  out.denominator_basis = dense_columns(den_basis, vs.ambient);
  return out;
}

// Trace of postcomposition by sigma on an invariant span given by a fully
// reduced basis: coordinates can be read off at the pivot rows.
static Rational trace_on_span(const ObjList& src, unsigned n, const LinComb& sigma,
                              const std::vector<SparseVec>& basis) {
  Rational t(0);
  for (const SparseVec& b : basis) {
    SparseVec image = apply_postcomposition(src, n, sigma, b);
    std::size_t pivot = b.front().first;
    auto it = std::lower_bound(image.begin(), image.end(), pivot,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it != image.end() && it->first == pivot) t += it->second;
  }
  return t;
}

Rational character(const Presentation& p, unsigned n, const FinFn& sigma, const EvalOptions& opts) {
  if (sigma.dom != n || !sigma.is_bijection())
    throw InvalidArgument("character requires a permutation of [n]");
  ValueSpace vs = value_space(p, n, opts);
  std::vector<SparseVec> den_basis;
  for (const SparseVec* b : vs.den.basis()) den_basis.push_back(*b);
  LinComb s(sigma);
  return trace_on_span(p.f.src, n, s, vs.num_basis) - trace_on_span(p.f.src, n, s, den_basis);
}

static FinFn class_representative(const Partition& type, unsigned n) {
  std::vector<unsigned> v(n);
  unsigned start = 0;
  for (unsigned len : type.parts) {
    for (unsigned i = 0; i < len; ++i) v[start + i] = start + ((i + 1) % len) + 1;
    start += len;
  }
  return FinFn(n, n, std::move(v));
}

std::map<Partition, Rational> character_table(const Presentation& p, unsigned n, const EvalOptions& opts) {
  ValueSpace vs = value_space(p, n, opts);
  std::vector<SparseVec> den_basis;
  for (const SparseVec* b : vs.den.basis()) den_basis.push_back(*b);
  std::map<Partition, Rational> out;
  for (const Partition& type : partitions_of(n)) {
    LinComb sigma(class_representative(type, n));
    out.emplace(type, trace_on_span(p.f.src, n, sigma, vs.num_basis) -
                          trace_on_span(p.f.src, n, sigma, den_basis));
  }
  return out;
}

std::size_t hom_dim(const LinComb& e, const Presentation& p, unsigned k, const EvalOptions& opts) {
  if (e.dom != k || e.cod != k) throw InvalidArgument("idempotent must be an endo combination of [k]");
  if (!(lc_compose(e, e) == e)) throw InvalidArgument("hom_dim requires an idempotent");
  // The induced action on the quotient is idempotent, so its rank equals its
  // trace, which splits over the numerator and denominator spans.
  ValueSpace vs = value_space(p, k, opts);
  std::vector<SparseVec> den_basis;
  for (const SparseVec* b : vs.den.basis()) den_basis.push_back(*b);
  Rational t = trace_on_span(p.f.src, k, e, vs.num_basis) - trace_on_span(p.f.src, k, e, den_basis);
  if (t < 0 || t.get_den() != 1) throw InternalError("idempotent trace is not a natural number");
  return t.get_num().get_ui();
}

std::size_t hom_dim_d(const Presentation& p, unsigned k, const EvalOptions& opts) {
  ValueSpace at_k = value_space(p, k, opts);
  ValueSpace at_k1 = value_space(p, k + 1, opts);
  LinComb eps = epsilon(k);
  LinComb bnd = partial(k);
  // Fixed vectors of the idempotent action = its image on the quotient.
  std::vector<SparseVec> fixed;
  ColumnSpan image;
  for (const SparseVec& rep : at_k.quotient_reps) {
    SparseVec img = at_k.reduce_mod_den(apply_postcomposition(p.f.src, k, eps, rep));
    if (image.add(img)) fixed.push_back(std::move(img));
  }
  ColumnSpan mapped;
  std::size_t rank = 0;
  for (const SparseVec& v : fixed) {
    SparseVec img = at_k1.reduce_mod_den(apply_postcomposition(p.f.src, k, bnd, v));
    if (mapped.add(std::move(img))) ++rank;
  }
  return fixed.size() - rank;
}

}  // namespace frep
