#include "frep/qfmat.hpp"

#include <algorithm>

namespace frep {

unsigned ObjList::max_size() const {
  unsigned m = 0;
  for (unsigned s : sizes) m = std::max(m, s);
  return m;
}

std::size_t ObjList::hom_dim(unsigned n) const {
  std::size_t d = 0;
  for (unsigned s : sizes) d += function_count(s, n);
  return d;
}

std::size_t ObjList::hom_offset(std::size_t i, unsigned n) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < i; ++j) d += function_count(sizes[j], n);
  return d;
}

QfMat::QfMat(ObjList src_, ObjList dst_) : src(std::move(src_)), dst(std::move(dst_)) {
  entries.reserve(src.components() * dst.components());
  for (unsigned a : src.sizes)
    for (unsigned b : dst.sizes) entries.emplace_back(a, b);
}

bool QfMat::is_zero() const {
  for (const LinComb& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

QfMat qf_identity(const ObjList& x) {
  QfMat m(x, x);
  for (std::size_t i = 0; i < x.components(); ++i) m.at(i, i) = LinComb::identity(x.sizes[i]);
  return m;
}

QfMat qf_mul(const QfMat& a, const QfMat& b) {
  if (!(a.dst == b.src)) throw InvalidArgument("block matrix product interface mismatch");
  QfMat c(a.src, b.dst);
  for (std::size_t i = 0; i < a.src.components(); ++i)
    for (std::size_t k = 0; k < a.dst.components(); ++k) {
      const LinComb& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.dst.components(); ++j) {
        const LinComb& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) = lc_add(c.at(i, j), lc_compose(aik, bkj));
      }
    }
  return c;
}

QfMat qf_direct_sum(const QfMat& a, const QfMat& b) {
  ObjList src = a.src, dst = a.dst;
  src.sizes.insert(src.sizes.end(), b.src.sizes.begin(), b.src.sizes.end());
  dst.sizes.insert(dst.sizes.end(), b.dst.sizes.begin(), b.dst.sizes.end());
  QfMat c(src, dst);
  for (std::size_t i = 0; i < a.src.components(); ++i)
    for (std::size_t j = 0; j < a.dst.components(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.src.components(); ++i)
    for (std::size_t j = 0; j < b.dst.components(); ++j)
      c.at(a.src.components() + i, a.dst.components() + j) = b.at(i, j);
  return c;
}

QfMat qf_column(const ObjList& src, unsigned k, std::vector<LinComb> entries) {
  QfMat m(src, ObjList::single(k));
  if (entries.size() != src.components()) throw InvalidArgument("column entry count mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].dom != src.sizes[i] || entries[i].cod != k)
      throw InvalidArgument("column entry interface mismatch");
    m.at(i, 0) = std::move(entries[i]);
  }
  return m;
}

QfMat qf_concat_columns(const std::vector<QfMat>& columns) {
  if (columns.empty()) throw InvalidArgument("cannot concatenate zero matrices without a source");
  QfMat out = columns[0];
  for (std::size_t i = 1; i < columns.size(); ++i) {
    const QfMat& c = columns[i];
    if (!(c.src == out.src)) throw InvalidArgument("column concatenation source mismatch");
    ObjList dst = out.dst;
    dst.sizes.insert(dst.sizes.end(), c.dst.sizes.begin(), c.dst.sizes.end());
    QfMat next(out.src, dst);
    for (std::size_t r = 0; r < out.src.components(); ++r) {
      for (std::size_t j = 0; j < out.dst.components(); ++j) next.at(r, j) = out.at(r, j);
      for (std::size_t j = 0; j < c.dst.components(); ++j)
        next.at(r, out.dst.components() + j) = c.at(r, j);
    }
    out = std::move(next);
  }
  return out;
}

QMatrix precomposition_matrix(const LinComb& v, unsigned n) {
  std::size_t rows = function_count(v.dom, n);
  std::size_t cols = function_count(v.cod, n);
  QMatrix m(rows, cols);
  for (const FinFn& h : enumerate_functions(v.cod, n)) {
    std::size_t j = function_index(h);
    for (const auto& [f, c] : v.terms) m.at(function_index(compose(f, h)), j) += c;
  }
  return m;
}

QMatrix postcomposition_matrix(const LinComb& sigma, unsigned p) {
  if (sigma.dom != sigma.cod) throw InvalidArgument("postcomposition requires an endo combination");
  unsigned n = sigma.dom;
  std::size_t dim = function_count(p, n);
  QMatrix m(dim, dim);
  for (const FinFn& h : enumerate_functions(p, n)) {
    std::size_t j = function_index(h);
    for (const auto& [s, c] : sigma.terms) m.at(function_index(compose(h, s)), j) += c;
  }
  return m;
}

QMatrix qfmat_eval(const QfMat& a, unsigned n) {
  QMatrix m(a.src.hom_dim(n), a.dst.hom_dim(n));
  qfmat_eval_columns(a, n, [&](std::size_t dst_comp, const FinFn& h, SparseVec col) {
    std::size_t j = a.dst.hom_offset(dst_comp, n) + function_index(h);
    for (const auto& [i, c] : col) m.at(i, j) = c;
  });
  return m;
}

void qfmat_eval_columns(const QfMat& a, unsigned n,
                        const std::function<void(std::size_t, const FinFn&, SparseVec)>& sink) {
  for (std::size_t j = 0; j < a.dst.components(); ++j) {
    for (const FinFn& h : enumerate_functions(a.dst.sizes[j], n)) {
      SparseVec col;
      for (std::size_t i = 0; i < a.src.components(); ++i) {
        const LinComb& e = a.at(i, j);
        if (e.is_zero()) continue;
        LinComb composed = lc_compose(e, h);
        std::size_t off = a.src.hom_offset(i, n);
        for (const auto& [f, c] : composed.terms) col.emplace_back(off + function_index(f), c);
      }
      std::sort(col.begin(), col.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      sink(j, h, std::move(col));
    }
  }
}

SparseVec eval_column_at(const QfMat& v_col, const FinFn& h) {
  if (v_col.dst.components() != 1) throw InvalidArgument("expected a single-column matrix");
  SparseVec out;
  for (std::size_t i = 0; i < v_col.src.components(); ++i) {
    const LinComb& e = v_col.at(i, 0);
    if (e.is_zero()) continue;
    LinComb composed = lc_compose(e, h);
    std::size_t off = v_col.src.hom_offset(i, h.cod);
    for (const auto& [f, c] : composed.terms) out.emplace_back(off + function_index(f), c);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

SparseVec eval_column(const QfMat& v_col) {
  if (v_col.dst.components() != 1) throw InvalidArgument("expected a single-column matrix");
  return eval_column_at(v_col, FinFn::identity(v_col.dst.sizes[0]));
}

SparseVec apply_postcomposition(const ObjList& src, unsigned n, const LinComb& sigma, const SparseVec& v) {
  if (sigma.dom != n) throw InvalidArgument("postcomposition interface mismatch");
  SparseVec out;
  for (const auto& [idx, coeff] : v) {
    // Locate the component and the basis function at this row.
    std::size_t comp = 0, off = 0;
    while (comp < src.components()) {
      std::size_t block = function_count(src.sizes[comp], n);
      if (idx < off + block) break;
      off += block;
      ++comp;
    }
    FinFn h = function_from_index(src.sizes[comp], n, idx - off);
    std::size_t out_off = src.hom_offset(comp, sigma.cod);
    for (const auto& [s, c] : sigma.terms)
      out.emplace_back(out_off + function_index(compose(h, s)), coeff * c);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec merged;
  for (auto& [i, c] : out) {
    if (!merged.empty() && merged.back().first == i)
      merged.back().second += c;
    else
      merged.emplace_back(i, c);
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  return merged;
}

SparseVec apply_postcomposition(const ObjList& src, unsigned n, const FinFn& sigma, const SparseVec& v) {
  return apply_postcomposition(src, n, LinComb(sigma), v);
}

SparseVec apply_premultiplication(const QfMat& u, unsigned n, const SparseVec& v) {
  SparseVec out;
  for (const auto& [idx, coeff] : v) {
    std::size_t comp = 0, off = 0;
    while (comp < u.dst.components()) {
      std::size_t block = function_count(u.dst.sizes[comp], n);
      if (idx < off + block) break;
      off += block;
      ++comp;
    }
    FinFn h = function_from_index(u.dst.sizes[comp], n, idx - off);
    for (std::size_t i = 0; i < u.src.components(); ++i) {
      const LinComb& e = u.at(i, comp);
      if (e.is_zero()) continue;
      LinComb composed = lc_compose(e, h);
      std::size_t src_off = u.src.hom_offset(i, n);
      for (const auto& [f, c] : composed.terms)
        out.emplace_back(src_off + function_index(f), coeff * c);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec merged;
  for (auto& [i, c] : out) {
    if (!merged.empty() && merged.back().first == i)
      merged.back().second += c;
    else
      merged.emplace_back(i, c);
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  return merged;
}

QfMat formal_column(const QfMat& m, std::size_t j, const FinFn& h) {
  std::vector<LinComb> entries;
  entries.reserve(m.src.components());
  for (std::size_t i = 0; i < m.src.components(); ++i) entries.push_back(lc_compose(m.at(i, j), h));
  return qf_column(m.src, h.cod, std::move(entries));
}

QfMat unit_column(const ObjList& dst, std::size_t j, const FinFn& h) {
  std::vector<LinComb> entries;
  for (unsigned s : dst.sizes) entries.emplace_back(s, h.cod);
  entries[j] = LinComb(h);
  return qf_column(dst, h.cod, std::move(entries));
}

void column_axpy(QfMat& out, const Rational& c, const QfMat& col) {
  for (std::size_t i = 0; i < out.src.components(); ++i)
    out.at(i, 0) = lc_add(out.at(i, 0), lc_scale(c, col.at(i, 0)));
}

QfMat formal_combination(const ObjList& src, unsigned k,
                         const std::vector<std::pair<std::size_t, Rational>>& combo,
                         const std::vector<QfMat>& columns) {
  std::vector<LinComb> entries;
  for (unsigned s : src.sizes) entries.emplace_back(s, k);
  QfMat out = qf_column(src, k, std::move(entries));
  for (const auto& [id, c] : combo) column_axpy(out, c, columns[id]);
  return out;
}

void qf_scale(QfMat& m, const Rational& c) {
  for (LinComb& e : m.entries) e = lc_scale(c, e);
}

QfMat column_from_coords(const ObjList& src, unsigned n, const SparseVec& v) {
  std::vector<LinComb> entries;
  for (unsigned s : src.sizes) entries.emplace_back(s, n);
  for (const auto& [idx, coeff] : v) {
    std::size_t comp = 0, off = 0;
    while (comp < src.components()) {
      std::size_t block = function_count(src.sizes[comp], n);
      if (idx < off + block) break;
      off += block;
      ++comp;
    }
    entries[comp].insert(function_from_index(src.sizes[comp], n, idx - off), coeff);
  }
  return qf_column(src, n, std::move(entries));
}

}  // namespace frep
