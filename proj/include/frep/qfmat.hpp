#pragma once

#include <functional>
#include <vector>

#include "frep/lincomb.hpp"
#include "frep/linalg.hpp"

namespace frep {

// A formal direct sum [a_1] + ... + [a_m] of finite sets; empty list is the
// zero object.
struct ObjList {
  std::vector<unsigned> sizes;

  ObjList() = default;
  explicit ObjList(std::vector<unsigned> sizes) : sizes(std::move(sizes)) {}
  static ObjList single(unsigned k) { return ObjList({k}); }

  std::size_t components() const { return sizes.size(); }
  bool is_zero() const { return sizes.empty(); }
  unsigned max_size() const;
  // Dimension of the hom space QF(this, [n]) = sum of n^{a_i}.
  std::size_t hom_dim(unsigned n) const;
  // Starting row of component i inside that hom space.
  std::size_t hom_offset(std::size_t i, unsigned n) const;

  bool operator==(const ObjList&) const = default;
};

// A morphism of the linearized category: a block matrix of linear
// combinations. Rows are indexed by src components, columns by dst
// components; entry (i, j) maps [src_i] -> [dst_j]. Composition is matrix
// multiplication with lc_compose on entries.
struct QfMat {
  ObjList src;
  ObjList dst;
  std::vector<LinComb> entries;  // row-major, src.components() x dst.components()

  QfMat() = default;
  QfMat(ObjList src, ObjList dst);

  LinComb& at(std::size_t i, std::size_t j) { return entries[i * dst.components() + j]; }
  const LinComb& at(std::size_t i, std::size_t j) const { return entries[i * dst.components() + j]; }

  bool is_zero() const;
  bool operator==(const QfMat&) const = default;
};

QfMat qf_identity(const ObjList& x);
QfMat qf_mul(const QfMat& a, const QfMat& b);
QfMat qf_direct_sum(const QfMat& a, const QfMat& b);
// Single-column matrix from src-component entries (dst is one set [k]).
QfMat qf_column(const ObjList& src, unsigned k, std::vector<LinComb> entries);
// Horizontal concatenation; all blocks share src.
QfMat qf_concat_columns(const std::vector<QfMat>& columns);

// Matrix of h |-> v . h from QF([q],[n]) to QF([p],[n]) over the bases of
// enumerate_functions; shape n^p x n^q.
QMatrix precomposition_matrix(const LinComb& v, unsigned n);
// Matrix of h |-> h . sigma on QF([p],[n]); shape n^p x n^p.
QMatrix postcomposition_matrix(const LinComb& sigma, unsigned p);

// Block-wise precomposition: the matrix of h |-> A . h from QF(dst,[n]) to
// QF(src,[n]); shape src.hom_dim(n) x dst.hom_dim(n).
QMatrix qfmat_eval(const QfMat& a, unsigned n);

// Streaming version of qfmat_eval: yields each column as a sparse vector in
// QF(src,[n]) coordinates, in column order (dst component, then function).
void qfmat_eval_columns(const QfMat& a, unsigned n,
                        const std::function<void(std::size_t dst_comp, const FinFn& h, SparseVec col)>& sink);

// Sparse coordinates in QF(src,[n]) of a single formal column v: src -> [k]
// evaluated against h, i.e. the vector of v . h.
SparseVec eval_column_at(const QfMat& v_col, const FinFn& h);
// Coordinates of the formal column itself (h = identity on [k]).
SparseVec eval_column(const QfMat& v_col);

// Applies postcomposition by sigma : [n] -> [m] to a sparse vector in
// QF(src,[n]) coordinates, yielding QF(src,[m]) coordinates. This is the
// covariant action; with m = n and sigma a permutation it is the symmetric
// group action.
SparseVec apply_postcomposition(const ObjList& src, unsigned n, const LinComb& sigma, const SparseVec& v);
// Same for a plain permutation; a sparse-friendly reindexing.
SparseVec apply_postcomposition(const ObjList& src, unsigned n, const FinFn& sigma, const SparseVec& v);

// Premultiplication u . v of a sparse QF(c,[n])-vector by u : x -> c,
// yielding a QF(x,[n])-vector.
SparseVec apply_premultiplication(const QfMat& u, unsigned n, const SparseVec& v);

// Reads a sparse QF(src,[n])-coordinate vector back into a formal column
// src -> [n].
QfMat column_from_coords(const ObjList& src, unsigned n, const SparseVec& v);

// Formal column of m at (dst component j, basis function h): the restriction
// of m to that basis vector, as a column src -> [h.cod].
QfMat formal_column(const QfMat& m, std::size_t j, const FinFn& h);
// Column dst -> [h.cod] carrying the single function h at component j.
QfMat unit_column(const ObjList& dst, std::size_t j, const FinFn& h);
// Linear combination of single-column matrices over src.
QfMat formal_combination(const ObjList& src, unsigned k,
                         const std::vector<std::pair<std::size_t, Rational>>& combo,
                         const std::vector<QfMat>& columns);
// out += c * col for single-column matrices.
void column_axpy(QfMat& out, const Rational& c, const QfMat& col);
// Scales every entry of a matrix.
void qf_scale(QfMat& m, const Rational& c);

}  // namespace frep
