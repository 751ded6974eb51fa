#pragma once

#include <vector>

#include "frep/lincomb.hpp"
#include "frep/linalg.hpp"

namespace frep {

// True when the combination is supported on bijections, i.e. lies in the
// group algebra QS_k inside QF([k],[k]).
bool is_group_supported(const LinComb& v);

// Irreducible character of S_k at sigma for the given shape.
Rational character_value(const Partition& lambda, const FinFn& sigma);

// Central idempotent of QS_k projecting onto the lambda-isotypic block.
LinComb central_idempotent(const Partition& lambda);

// Raised when the deterministic peeling strategy finds no usable conjugate;
// callers fall back to the generic cover construction.
struct PeelFailure : Error {
  using Error::Error;
};

// Decomposes an idempotent e in QS_k into pairwise orthogonal primitive
// idempotents summing to e, labelled by shape. Ordered by shape ascending.
std::vector<std::pair<Partition, LinComb>> primitive_decomposition(const LinComb& e);

}  // namespace frep
