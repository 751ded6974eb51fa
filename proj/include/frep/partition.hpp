#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "frep/error.hpp"

namespace frep {

// An integer partition, parts weakly decreasing and positive. The empty
// partition (of 0) is allowed; it labels the trivial representation of S_0.
struct Partition {
  std::vector<unsigned> parts;

  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  unsigned size() const;               // sum of parts
  unsigned rows() const { return static_cast<unsigned>(parts.size()); }

  bool operator==(const Partition&) const = default;
  // Ordered by size, then lexicographically on parts: (1,1) < (2).
  bool operator<(const Partition& o) const;
};

std::string to_string(const Partition& p);            // "2,1"; empty is "0"
Partition partition_from_string(const std::string&);  // accepts "2,1" or "0"

// All partitions of k, ascending in the order above.
std::vector<Partition> partitions_of(unsigned k);

// Number of standard Young tableaux of shape lambda (hook length formula).
unsigned long specht_dim(const Partition& lambda);
// Dimension of the Schur functor S_lambda of an n-dimensional space
// (hook content formula); 0 when lambda has more than n rows.
unsigned long schur_dim(const Partition& lambda, unsigned n);
// Stirling number of the second kind.
unsigned long stirling2(unsigned n, unsigned k);

unsigned long binomial(unsigned n, unsigned k);
unsigned long factorial(unsigned n);

}  // namespace frep
