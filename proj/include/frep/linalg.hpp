#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "frep/rational.hpp"

namespace frep {

// Dense matrix of exact rationals, row-major.
struct QMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;  // rows * cols

  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows(rows), cols(cols), entries(rows * cols, Rational(0)) {}

  Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  static QMatrix identity(std::size_t n);
  bool operator==(const QMatrix&) const = default;
};

QMatrix mul(const QMatrix& a, const QMatrix& b);

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

// Unique reduced row echelon form. Pivots are chosen deterministically:
// first nonzero entry scanning top-to-bottom, left-to-right.
RrefResult rref(const QMatrix& m);

// Columns spanning the null space of m; count = cols - rank. The basis is the
// standard one from the RREF free variables (unit entry at each free column).
QMatrix kernel_basis(const QMatrix& m);

// trace of the unique M with A*B = B*M. Requires the columns of B independent
// and A*span(B) inside span(B); throws InvalidArgument otherwise.
Rational restricted_trace(const QMatrix& b, const QMatrix& a);

struct SpanComplement {
  QMatrix w_basis;                        // reduced column basis of span(W)
  QMatrix w_in_u_coords;                  // coordinates of w_basis over U's columns
  std::vector<std::size_t> complement_indices;  // U columns extending W to span(U)
  QMatrix complement;                     // those columns of U
};

// Requires span(W) inside span(U); throws InvalidArgument if violated.
// complement columns together with w_basis form a basis of span(U).
SpanComplement column_span_intersection_and_complement(const QMatrix& u, const QMatrix& w);

// ---------------------------------------------------------------------------
// Sparse column machinery. Evaluated hom-space matrices are huge but their
// columns have few nonzeros and small rank, so spans are tracked column by
// column.

// Sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec sparse_from_dense(const std::vector<Rational>& v);
std::vector<Rational> dense_from_sparse(const SparseVec& v, std::size_t dim);
// dst += c * src
void sparse_axpy(SparseVec& dst, const Rational& c, const SparseVec& src);
void sparse_scale(SparseVec& v, const Rational& c);
// Scales v to integer entries with content 1 and positive leading entry.
void sparse_make_primitive(SparseVec& v, Rational* scale_applied = nullptr);

// Incremental column span in reduced column echelon form: each kept vector has
// leading entry 1 at its pivot row and zeros at all other pivot rows; basis()
// iterates pivots in ascending row order. With tracking enabled, every fed
// column gets an id and dependent columns can be expressed over the fed ids.
class ColumnSpan {
 public:
  explicit ColumnSpan(bool track_combinations = false) : track_(track_combinations) {}

  // Feeds a column; returns true if the span grew.
  bool add(SparseVec v);
  std::size_t rank() const { return pivots_.size(); }

  // Residual of v after eliminating against the current basis.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(std::move(v)).empty(); }

  // v as a combination of fed columns (ids in feed order); nullopt if v is
  // outside the span. Requires tracking.
  std::optional<std::vector<std::pair<std::size_t, Rational>>> combination(SparseVec v) const;

  // Basis vectors in ascending pivot-row order (the canonical reduced basis).
  std::vector<const SparseVec*> basis() const;
  std::size_t fed() const { return fed_; }

 private:
  struct Pivot {
    std::size_t row;
    SparseVec vec;
    SparseVec combo;  // vec = sum combo[id] * fed-column[id]
  };
  bool track_;
  std::size_t fed_ = 0;
  std::map<std::size_t, Pivot> pivots_;  // keyed by pivot row
};

}  // namespace frep
