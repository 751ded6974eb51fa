#include <doctest.h>

#include <fstream>
#include <sstream>

#include "frep/evaluator.hpp"

using namespace frep;

namespace {

Presentation intro_fixture() {
  std::ifstream in(std::string(FREP_FIXTURE_DIR) + "/intro.frep");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace

TEST_CASE("oracle dimensions") {
  Presentation v = intro_fixture();
  CHECK(eval(v, 4).dim == 4);
  for (unsigned n = 0; n <= 6; ++n) CHECK(eval(v, n).dim == n);

  Presentation line = parse_presentation("object Y = [1]\npresent V = Y\n");
  for (unsigned n = 0; n <= 5; ++n) CHECK(eval(line, n).dim == n);

  CHECK(eval(builtin_presentation("builtin:c/1,1"), 4).dim == 6);
}

TEST_CASE("numerator and denominator bases are canonical") {
  Presentation v = intro_fixture();
  EvalResult r = eval(v, 2);
  REQUIRE(r.denominator_basis.cols == 2);
  // Reduced column form of the image of the relations at n = 2
  // (coordinates ordered 11, 12, 21, 22).
  CHECK(r.denominator_basis.at(0, 0) == 1);
  CHECK(r.denominator_basis.at(3, 0) == -1);
  CHECK(r.denominator_basis.at(1, 1) == 1);
  CHECK(r.denominator_basis.at(2, 1) == 1);
  CHECK(r.denominator_basis.at(3, 1) == -2);
}

TEST_CASE("characters") {
  Presentation v = intro_fixture();
  // Fixed point counts of each permutation, per the motivating example.
  for (unsigned n = 1; n <= 5; ++n)
    for (const FinFn& sigma : enumerate_permutations(n))
      CHECK(character(v, n, sigma) ==
            Rational(static_cast<long>(fixed_point_counts(sigma, 1)[0])));
  // At the identity the character is the dimension.
  CHECK(character(v, 3, FinFn::identity(3)) == 3);
  // The square acts on pairs, so the trace is the square of the fixed count.
  Presentation t2 = builtin_presentation("builtin:tensor/2");
  for (unsigned n = 1; n <= 4; ++n)
    for (const FinFn& sigma : enumerate_permutations(n)) {
      auto a = fixed_point_counts(sigma, 1);
      CHECK(character(t2, n, sigma) == Rational(static_cast<long>(a[0] * a[0])));
    }
  CHECK_THROWS_AS(character(v, 3, finfn_from_string("112", 3, 3), {}), InvalidArgument);
}

TEST_CASE("character tables") {
  Presentation v = intro_fixture();
  auto table = character_table(v, 3);
  REQUIRE(table.size() == 3);
  CHECK(table.at(Partition({1, 1, 1})) == 3);
  CHECK(table.at(Partition({2, 1})) == 1);
  CHECK(table.at(Partition({3})) == 0);

  // d/1 is one-dimensional away from the empty set.
  Presentation d1 = builtin_presentation("builtin:d/1");
  CHECK(eval(d1, 2).dim == 1);
  auto d1_table = character_table(d1, 2);
  CHECK(d1_table.at(Partition({1, 1})) == 1);

  // Zero presentation: a quotient by everything.
  Presentation zero = parse_presentation(
      "object Y = [1]\nobject Z = [1]\nmap g : Y -> Z = [[ 1 ]]\npresent V = Y / g\n");
  for (const auto& [type, value] : character_table(zero, 3)) CHECK(value == 0);
}

TEST_CASE("characters are class functions") {
  Presentation v = intro_fixture();
  for (unsigned n = 1; n <= 4; ++n) {
    std::map<Partition, Rational> seen;
    for (const FinFn& sigma : enumerate_permutations(n)) {
      Rational chi = character(v, n, sigma);
      auto [it, fresh] = seen.emplace(cycle_type(sigma), chi);
      if (!fresh) CHECK(it->second == chi);
    }
  }
}

TEST_CASE("hom dimensions") {
  Presentation t3 = builtin_presentation("builtin:tensor/3");
  // Identity idempotent recovers the full dimension.
  CHECK(hom_dim(LinComb::identity(2), t3, 2) == eval(t3, 2).dim);
  // Maps from the exterior square into the cube, by set partition counts.
  CHECK(hom_dim(epsilon(2), t3, 2) == stirling2(3, 1) + stirling2(3, 2));
  // Maps from D_2 into the cube.
  CHECK(hom_dim_d(t3, 2) == stirling2(3, 1));
  CHECK_THROWS_AS(hom_dim(lincomb_from_string("12 + 21", 2, 2), t3, 2), InvalidArgument);
}

TEST_CASE("functoriality of induced maps") {
  // For h : [m] -> [n], postcomposition sends V[m] into V[n] compatibly with
  // composition on a random triple.
  Presentation v = intro_fixture();
  ValueSpace v2 = value_space(v, 2);
  FinFn h1 = finfn_from_string("23", 2, 3);
  FinFn h2 = finfn_from_string("312", 3, 3);
  for (const SparseVec& b : v2.num_basis) {
    SparseVec once = apply_postcomposition(v.f.src, 2, LinComb(h1), b);
    SparseVec twice = apply_postcomposition(v.f.src, 3, LinComb(h2), once);
    SparseVec direct = apply_postcomposition(v.f.src, 2, LinComb(compose(h1, h2)), b);
    CHECK(dense_from_sparse(twice, v.f.src.hom_dim(3)) ==
          dense_from_sparse(direct, v.f.src.hom_dim(3)));
  }
}

TEST_CASE("quotient bases extend the denominator") {
  // At n = 2 the denominator sits inside the numerator with a 2-dimensional
  // complement.
  Presentation v = intro_fixture();
  EvalResult r = eval(v, 2);
  auto sc = column_span_intersection_and_complement(r.numerator_basis, r.denominator_basis);
  CHECK(sc.complement.cols == 2);
  CHECK(sc.w_basis.cols == 2);
}

TEST_CASE("evaluation cap") {
  EvalOptions tight;
  tight.row_cap = 10;
  CHECK_THROWS_AS(eval(builtin_presentation("builtin:tensor/3"), 3, tight), CapExceeded);
}
