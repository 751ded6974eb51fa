#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frep/error.hpp"

namespace frep {

// A total function [p] -> [q] between the finite sets [k] = {1..k}, stored in
// one-line notation. Composition acts on the right: (f | g) means f then g.
struct FinFn {
  unsigned dom = 0;
  unsigned cod = 0;
  std::vector<unsigned> values;  // length dom, entries in 1..cod

  FinFn() = default;
  FinFn(unsigned dom, unsigned cod, std::vector<unsigned> values);

  static FinFn identity(unsigned k);
  // The natural inclusion [k] -> [k+1].
  static FinFn inclusion(unsigned k);

  bool is_identity() const;
  bool is_bijection() const;
  bool is_injective() const;
  // Surjective onto [cod]; the empty function [0] -> [0] counts as surjective.
  bool is_surjective() const;

  auto operator<=>(const FinFn&) const = default;
};

// f then g; requires f.cod == g.dom.
FinFn compose(const FinFn& f, const FinFn& g);

// All of F([p],[q]) in lexicographic order, position 1 most significant;
// q^p functions with the convention 0^0 = 1.
std::vector<FinFn> enumerate_functions(unsigned p, unsigned q);
std::vector<FinFn> enumerate_permutations(unsigned k);
std::vector<FinFn> enumerate_injections(unsigned p, unsigned q);

// Rank of f within enumerate_functions(f.dom, f.cod).
std::size_t function_index(const FinFn& f);
FinFn function_from_index(unsigned p, unsigned q, std::size_t index);
inline std::size_t function_count(unsigned p, unsigned q) {
  if (p == 0) return 1;  // 0^0 = 1
  std::size_t n = 1;
  for (unsigned i = 0; i < p; ++i) n *= q;
  return n;
}

int sign(const FinFn& sigma);                       // requires a bijection
std::vector<unsigned> cycle_type(const FinFn& sigma);  // descending cycle lengths
FinFn inverse(const FinFn& sigma);
// a_i = #{x : f^i(x) = x} for i = 1..up_to; accepts any endofunction.
std::vector<std::size_t> fixed_point_counts(const FinFn& f, unsigned up_to);

// Text form: digit string when dom, cod <= 9 (e.g. "3322225"), otherwise a
// parenthesized comma list "(10,3,2)"; the empty function is "()".
std::string to_string(const FinFn& f);
FinFn finfn_from_string(const std::string& text, unsigned dom, unsigned cod);

}  // namespace frep
