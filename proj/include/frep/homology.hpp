#pragma once

#include "frep/evaluator.hpp"
#include "frep/groupalg.hpp"

namespace frep {

// H0 V[k] = V[k] / (span of vectors reached from sets of size < k), computed
// inside the numerator coordinates: numerator columns modulo the denominator
// span and the columns of f against non-surjective basis functions (every map
// through a smaller set factors through [k-1], i.e. is non-surjective).
struct H0Space {
  unsigned k = 0;
  std::size_t ambient = 0;
  ColumnSpan sub;                  // denominator + skeleton span
  std::vector<SparseVec> reps;     // canonical reduced residual basis
  std::vector<QfMat> rep_formal;   // formal numerator columns evaluating to reps
  std::vector<QfMat> rep_gamma;    // columns Y -> [k] with f . gamma = rep_formal

  std::size_t dim() const { return reps.size(); }
  SparseVec reduce(SparseVec v) const { return sub.reduce(std::move(v)); }
};

H0Space h0_space(const Presentation& p, unsigned k, const EvalOptions& opts = {});

struct HomologyData {
  unsigned degree = 0;
  std::size_t dim = 0;
  QMatrix representatives;  // columns in QF(X,[k]) numerator coordinates
  std::map<Partition, std::size_t> multiplicities;
  // Exactly c_lambda-fixed numerator columns whose classes form a basis of
  // the lambda-isotypic part of H0 V[k]; one per copy.
  std::map<Partition, std::vector<QfMat>> isotypic_generators;
};

HomologyData h0_at(const Presentation& p, unsigned k, const EvalOptions& opts = {});

std::map<Partition, std::size_t> isotypic_multiplicities(const HomologyData& h);

// The generator columns of h0_at, keyed by shape.
std::map<Partition, std::vector<QfMat>> equivariant_section(const Presentation& p, unsigned k,
                                                            const EvalOptions& opts = {});

struct CoverCopy {
  unsigned degree = 0;
  Partition lambda;
  LinComb idempotent;      // the f-block of this copy
  QfMat generator;         // column X -> [degree] realizing the copy's map
  std::size_t src_component = 0;  // shortcut covers: which component was split
};

// A surjection from a direct sum of isotype projectives onto V, with the
// cover presented as <diag(idempotents)>.
struct Cover {
  Presentation cover;
  QfMat map;  // u : X -> C; the transformation is premultiplication by u
  std::vector<CoverCopy> copies;
  unsigned target_degree = 0;             // max l with H0 V[l] != 0
  bool shortcut = false;                  // numerator split in place
  std::vector<std::size_t> h0_dims;       // dim H0 V[l] for l = 0..degree_bound
};

// When f is a square block-diagonal matrix of group-supported idempotents the
// numerator is already a Schur projective and is split in place (the cover is
// an isomorphism onto <f> and its kernel is the relation imrep). Otherwise
// the cover is assembled from the isotypic generators of H0 in each degree.
// Surjectivity onto V[n] is asserted for n up to target_degree + 2.
Cover build_cover(const Presentation& p, const EvalOptions& opts = {});

}  // namespace frep
