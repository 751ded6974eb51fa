#pragma once

#include "frep/homology.hpp"
#include "frep/mpoly.hpp"

namespace frep {

// One term of a resolution: a direct sum of isotype projectives P_lambda and
// cokernel functors D_l. Term 0 is always a pure Schur projective. Components
// are ordered by degree descending (D parts first), shapes ascending within a
// degree, matching the presentation object of the term.
struct ResolutionTerm {
  std::vector<unsigned> d_indices;   // descending
  std::vector<Partition> schur;      // cover copies in object order
};

// The kernel of a cover, presented as an imrep <f_K> over the cover object.
struct KernelData {
  Presentation kernel;                  // src = cover object, no relations
  std::vector<unsigned> generator_degrees;  // dst component sizes
};

// Computes ker(cover -> target) by scanning hom spaces: full kernels in
// degrees 0..D-1 and only the epsilon-isotypic part in degrees D and D+1,
// where D is the degree of the covered target. Generators are normalized to
// primitive integer columns with positive leading coefficient and assembled
// by descending degree.
KernelData kernel_imrep(const Cover& cover, const Presentation& target, const EvalOptions& opts = {});

// Splitting of the D-summands inside a kernel at levels D and D+1. When the
// kernel came from an h0 cover the split is guaranteed and failures are
// internal errors; kernels of in-place numerator splits may legitimately fail
// the epsilon-isotypy conditions, in which case no split is applied.
struct DSplit {
  bool applied = false;
  std::map<unsigned, std::size_t> multiplicities;      // level -> count
  std::vector<std::pair<unsigned, QfMat>> reps;        // (level, column C -> [l]), level desc
  Presentation remainder;                              // <f_K> / <f_K g'>
};

DSplit split_D_summands(const KernelData& k, unsigned covered_degree, bool required,
                        const EvalOptions& opts = {});

struct Resolution {
  Presentation target;
  std::vector<ResolutionTerm> terms;
  std::vector<QfMat> term_f;   // diag(eps_l | copy idempotents)
  std::vector<QfMat> term_g;   // D relations (partial_l columns); zero dst if none
  // boundaries[i] : X_i -> X_{i+1} premultiplies term i+1 values into term i.
  std::vector<QfMat> boundaries;
  QfMat augmentation;  // X_target -> X_0
  std::vector<unsigned> step_degrees;  // degree of the target covered at each step
};

Resolution resolve(const Presentation& p, const EvalOptions& opts = {});

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// Exactness of the evaluated complex for n = 0..n_max: boundary composites
// vanish, ranks account for exactness at every term, and the cokernel at term
// 0 matches the oracle dimension of the target.
VerifyReport verify_resolution(const Resolution& r, unsigned n_max, const EvalOptions& opts = {});

// Closed forms: dim D_k[n] as the alternating binomial sum (with 0^0 = 1) and
// dim C_lambda[n] = specht_dim * binom(n, |lambda|). D_k here is <partial_{k-1}>,
// so dim_D(2, n) runs 0, 0, 1, 2, 3, ... and dim_D(1, n) = 1 - 0^n.
unsigned long dim_D(unsigned k, unsigned n);
unsigned long dim_C(const Partition& lambda, unsigned n);

// Dimension polynomial, valid for n >= 1, with the value at 0 kept separately
// (computed by direct oracle evaluation).
struct DimPoly {
  std::vector<Rational> coeffs;  // ascending powers of n
  Rational value_at_zero;
  Rational eval(unsigned n) const;
  std::string to_string() const;
};

// Character polynomial in x0 = n and x_i = fixed points of the i-th iterate;
// valid for n >= 1.
struct CharPoly {
  MPoly poly;
  Rational eval(unsigned n, const std::vector<std::size_t>& fixed_counts) const;
};

DimPoly dim_poly(const Resolution& r, const EvalOptions& opts = {});
CharPoly char_poly(const Resolution& r);

// Class in K-theory over the basis {[P_lambda]} plus [D_0], with each [D_l]
// rewritten through its truncated Koszul resolution.
struct KTheoryVector {
  std::map<Partition, Integer> projective;
  Integer d0 = 0;
};

KTheoryVector k_theory_vector(const Resolution& r);
Rational k_theory_dimension(const KTheoryVector& v, unsigned n);

std::string resolution_to_json(const Resolution& r, const DimPoly& dp, const CharPoly& cp);

}  // namespace frep
