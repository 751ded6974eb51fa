#pragma once

#include "frep/lincomb.hpp"

namespace frep {

// An endomorphism whose support avoids bijections (it factors through smaller
// sets) while acting as a prescribed operator on a hom space. The upper kind
// fixes every function [k] -> [n]; the lower kind acts like 1 - epsilon_{k+1}
// on functions [k] -> [k+1].
struct Squisher {
  enum class Kind { Upper, Lower };
  Kind kind;
  unsigned k = 0;
  unsigned n = 0;  // upper only
  LinComb element;
};

// The explicit upper squisher 1 - nu built from the difference tensor; for
// n <= k + 1 there is nothing to squish and the identity is returned.
Squisher upper_squisher(unsigned k, unsigned n);

// The difference tensor mu = (e1-e2)(x)(e2-e1)(x)(e3-e2)(x)...(x)(e_{k+1}-e_k),
// annihilating every function [k] -> [k+1]; k >= 1.
LinComb mu_vector(unsigned k);

// Solves for mu' in the two-sided ideal spanned by {a mu b} with
// mu' = 1 - epsilon_{k+1} modulo non-bijections, and returns
// 1 - epsilon_{k+1} - mu'. k = 0 returns the zero element. The ideal spanning
// set has (k+1)^{2(k+1)} generators, so k is capped at 3 unless lifted.
Squisher lower_squisher(unsigned k, bool allow_large = false);

}  // namespace frep
