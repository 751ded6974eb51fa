#pragma once

#include <map>
#include <string>
#include <vector>

#include "frep/partition.hpp"
#include "frep/rational.hpp"

namespace frep {

// Polynomial over Q in variables x0, x1, ..., sparse on exponent vectors.
// In character polynomials x0 stands for n and x_i for the number of fixed
// points of the i-th iterate of an endofunction.
struct MPoly {
  // Exponent vectors are trimmed of trailing zeros.
  std::map<std::vector<unsigned>, Rational> terms;

  static MPoly constant(const Rational& c);
  static MPoly variable(unsigned i);

  bool is_zero() const { return terms.empty(); }
  void insert(std::vector<unsigned> expo, const Rational& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  bool operator==(const MPoly&) const = default;

  Rational evaluate(const std::vector<Rational>& values) const;
  // Substitutes every variable by the same value t; used for dimension
  // polynomials where x_i = n for all i.
  std::vector<Rational> collapse_univariate() const;  // ascending coefficients
  unsigned max_variable() const;

  std::string to_string() const;
};

// Elementary symmetric e_m and complete homogeneous h_m written in power sums
// with p_i |-> x_i (Newton's identities).
MPoly elementary_in_power_sums(unsigned m);
MPoly complete_in_power_sums(unsigned m);
// Schur polynomial s_lambda in power sums via the Jacobi-Trudi determinant.
MPoly schur_in_power_sums(const Partition& lambda);

}  // namespace frep
