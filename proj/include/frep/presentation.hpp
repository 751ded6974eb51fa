#pragma once

#include <string>

#include "frep/qfmat.hpp"

namespace frep {

// A uniformly presented vector space V = <f> / <f g>: the image functor of f
// modulo the image of the composite. g may have zero object destination, in
// which case there are no relations and V = <f>.
struct Presentation {
  std::string name;
  QfMat f;  // X -> Y
  QfMat g;  // Y -> Z

  Presentation() = default;
  Presentation(std::string name, QfMat f, QfMat g);

  const ObjList& generators() const { return f.dst; }
  const ObjList& ambient() const { return f.src; }
  bool has_relations() const { return !g.dst.is_zero(); }
  QfMat fg() const { return qf_mul(f, g); }
};

// Upper bound for the degree of V: the largest component of Y.
unsigned degree_bound(const Presentation& p);

// Parses the presentation text format; see README for the grammar. Throws
// ParseError with a 1-based source position on malformed input.
Presentation parse_presentation(const std::string& text);

// Inverse of parse_presentation up to structural equality.
std::string serialize(const Presentation& p);

// Named presentations addressable as "builtin:<kind>/<arg>":
//   tensor/k  s/k  lambda/k  theta/k  d/k (k >= 1)  d0  p/<partition>  c/<partition>
Presentation builtin_presentation(const std::string& uri);

}  // namespace frep
