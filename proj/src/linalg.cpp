#include "frep/linalg.hpp"

#include <algorithm>

#include "frep/error.hpp"

namespace frep {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols != b.rows) throw InvalidArgument("matrix product shape mismatch");
  QMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj != 0) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols && pivot_row < a.rows; ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows && a.at(r, col) == 0) ++r;
    if (r == a.rows) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(pivot_row, j));
    Rational inv = 1 / a.at(pivot_row, col);
    for (std::size_t j = col; j < a.cols; ++j) a.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == pivot_row) continue;
      Rational f = a.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j) a.at(i, j) -= f * a.at(pivot_row, j);
    }
    res.pivot_columns.push_back(col);
    ++pivot_row;
  }
  res.rank = res.pivot_columns.size();
  return res;
}

QMatrix kernel_basis(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMatrix k(m.cols, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.at(fc, j) = 1;
    for (std::size_t p = 0; p < r.pivot_columns.size(); ++p)
      k.at(r.pivot_columns[p], j) = -r.reduced.at(p, fc);
  }
  return k;
}

Rational restricted_trace(const QMatrix& b, const QMatrix& a) {
  if (a.rows != a.cols || a.rows != b.rows) throw InvalidArgument("restricted_trace shape mismatch");
  std::size_t r = b.cols;
  QMatrix ab = mul(a, b);
  QMatrix aug(b.rows, r + r);
  for (std::size_t i = 0; i < b.rows; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug.at(i, j) = b.at(i, j);
    for (std::size_t j = 0; j < r; ++j) aug.at(i, r + j) = ab.at(i, j);
  }
  if (r == 0) return Rational(0);
  RrefResult red = rref(aug);
  // B must have full column rank with pivots exactly in its block.
  if (red.rank < r || red.pivot_columns[r - 1] != r - 1)
    throw InvalidArgument("restricted_trace: columns of B are dependent");
  if (red.rank > r) throw InvalidArgument("restricted_trace: A does not preserve span(B)");
  Rational t(0);
  for (std::size_t j = 0; j < r; ++j) t += red.reduced.at(j, r + j);
  return t;
}

SpanComplement column_span_intersection_and_complement(const QMatrix& u, const QMatrix& w) {
  if (u.rows != w.rows && w.cols != 0) throw InvalidArgument("ambient dimension mismatch");
  ColumnSpan u_span(true);
  std::vector<SparseVec> u_cols(u.cols);
  for (std::size_t j = 0; j < u.cols; ++j) {
    std::vector<Rational> col(u.rows);
    for (std::size_t i = 0; i < u.rows; ++i) col[i] = u.at(i, j);
    u_cols[j] = sparse_from_dense(col);
    u_span.add(u_cols[j]);
  }
  ColumnSpan w_span(false);
  for (std::size_t j = 0; j < w.cols; ++j) {
    std::vector<Rational> col(w.rows);
    for (std::size_t i = 0; i < w.rows; ++i) col[i] = w.at(i, j);
    SparseVec sv = sparse_from_dense(col);
    if (!u_span.contains(sv)) throw InvalidArgument("span(W) is not contained in span(U)");
    w_span.add(std::move(sv));
  }
  SpanComplement out;
  auto w_basis = w_span.basis();
  out.w_basis = QMatrix(u.rows, w_basis.size());
  out.w_in_u_coords = QMatrix(u.cols, w_basis.size());
  for (std::size_t j = 0; j < w_basis.size(); ++j) {
    for (const auto& [row, val] : *w_basis[j]) out.w_basis.at(row, j) = val;
    auto combo = u_span.combination(*w_basis[j]);
    if (!combo) throw InternalError("contained vector failed to express over U");
    for (const auto& [id, c] : *combo) out.w_in_u_coords.at(id, j) = c;
  }
  ColumnSpan ext = w_span;
  for (std::size_t j = 0; j < u.cols; ++j)
    if (ext.add(u_cols[j])) out.complement_indices.push_back(j);
  out.complement = QMatrix(u.rows, out.complement_indices.size());
  for (std::size_t j = 0; j < out.complement_indices.size(); ++j)
    for (std::size_t i = 0; i < u.rows; ++i) out.complement.at(i, j) = u.at(i, out.complement_indices[j]);
  return out;
}

SparseVec sparse_from_dense(const std::vector<Rational>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

std::vector<Rational> dense_from_sparse(const SparseVec& v, std::size_t dim) {
  std::vector<Rational> out(dim, Rational(0));
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

void sparse_axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
  if (c == 0 || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, c * src[j].second);
      ++j;
    } else {
      Rational val = dst[i].second + c * src[j].second;
      if (val != 0) out.emplace_back(dst[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

void sparse_scale(SparseVec& v, const Rational& c) {
  if (c == 0) {
    v.clear();
    return;
  }
  for (auto& [i, val] : v) val *= c;
}

void sparse_make_primitive(SparseVec& v, Rational* scale_applied) {
  if (v.empty()) {
    if (scale_applied) *scale_applied = 1;
    return;
  }
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [i, c] : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [i, c] : v) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  if (v.front().second < 0) s = -s;
  sparse_scale(v, s);
  if (scale_applied) *scale_applied = s;
}

bool ColumnSpan::add(SparseVec v) {
  SparseVec combo;
  if (track_) combo.emplace_back(fed_, Rational(1));
  ++fed_;
  for (const auto& [row, pivot] : pivots_) {
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it == v.end() || it->first != row) continue;
    Rational c = -it->second;
    sparse_axpy(v, c, pivot.vec);
    if (track_) sparse_axpy(combo, c, pivot.combo);
  }
  if (v.empty()) return false;
  Rational inv = 1 / v.front().second;
  std::size_t prow = v.front().first;
  sparse_scale(v, inv);
  if (track_) sparse_scale(combo, inv);
  // Keep the basis fully reduced: clear the new pivot row from older vectors.
  for (auto& [row, pivot] : pivots_) {
    auto it = std::lower_bound(pivot.vec.begin(), pivot.vec.end(), prow,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it == pivot.vec.end() || it->first != prow) continue;
    Rational c = -it->second;
    sparse_axpy(pivot.vec, c, v);
    if (track_) sparse_axpy(pivot.combo, c, combo);
  }
  pivots_.emplace(prow, Pivot{prow, std::move(v), std::move(combo)});
  return true;
}

SparseVec ColumnSpan::reduce(SparseVec v) const {
  for (const auto& [row, pivot] : pivots_) {
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it == v.end() || it->first != row) continue;
    sparse_axpy(v, -it->second, pivot.vec);
  }
  return v;
}

std::optional<std::vector<std::pair<std::size_t, Rational>>> ColumnSpan::combination(SparseVec v) const {
  if (!track_) throw InvalidArgument("combination tracking is disabled for this span");
  SparseVec combo;
  for (const auto& [row, pivot] : pivots_) {
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it == v.end() || it->first != row) continue;
    Rational c = it->second;
    sparse_axpy(v, -c, pivot.vec);
    sparse_axpy(combo, c, pivot.combo);
  }
  if (!v.empty()) return std::nullopt;
  return combo;
}

std::vector<const SparseVec*> ColumnSpan::basis() const {
  std::vector<const SparseVec*> out;
  out.reserve(pivots_.size());
  for (const auto& [row, pivot] : pivots_) out.push_back(&pivot.vec);
  return out;
}

}  // namespace frep
