#pragma once

#include <map>

#include "frep/presentation.hpp"

namespace frep {

struct EvalOptions {
  // Refuse evaluations whose hom spaces exceed this many coordinates.
  std::size_t row_cap = 100000;
};

struct EvalResult {
  unsigned n = 0;
  std::size_t dim = 0;
  QMatrix numerator_basis;    // canonical reduced column basis of <f>[n]
  QMatrix denominator_basis;  // canonical reduced column basis of <fg>[n]
};

// Exact evaluation at [n] by expansion and row reduction:
// dim V[n] = rank(numerator) - rank(denominator).
EvalResult eval(const Presentation& p, unsigned n, const EvalOptions& opts = {});

// Trace of the action of the permutation sigma on V[n].
Rational character(const Presentation& p, unsigned n, const FinFn& sigma, const EvalOptions& opts = {});

// One character value per conjugacy class of S_n, keyed by cycle type.
std::map<Partition, Rational> character_table(const Presentation& p, unsigned n,
                                              const EvalOptions& opts = {});

// Rank of the right action of the idempotent e on V[k]; by the universal
// property of isotype projectives this is dim Hom(P_lambda, V) when e is a
// minimal idempotent for lambda.
std::size_t hom_dim(const LinComb& e, const Presentation& p, unsigned k, const EvalOptions& opts = {});

// dim Hom(D_k, V), via the kernel of the Koszul-induced map
// Hom(Lambda^k, V) -> Hom(Lambda^{k+1}, V).
std::size_t hom_dim_d(const Presentation& p, unsigned k, const EvalOptions& opts = {});

// Shared machinery: the evaluated numerator/denominator spans of V at [n].
// Quotient representatives are the canonical reduced residuals of the
// numerator columns modulo the denominator.
struct ValueSpace {
  unsigned n = 0;
  std::size_t ambient = 0;
  ColumnSpan den;
  std::vector<SparseVec> num_basis;
  std::vector<SparseVec> quotient_reps;
  std::size_t dim() const { return quotient_reps.size(); }
  // Residual of v modulo the denominator span.
  SparseVec reduce_mod_den(SparseVec v) const { return den.reduce(std::move(v)); }
};

ValueSpace value_space(const Presentation& p, unsigned n, const EvalOptions& opts = {});

void check_cap(const Presentation& p, unsigned n, const EvalOptions& opts);

}  // namespace frep
