#include <doctest.h>

#include <fstream>
#include <sstream>

#include "frep/homology.hpp"

using namespace frep;

namespace {

Presentation intro_fixture() {
  std::ifstream in(std::string(FREP_FIXTURE_DIR) + "/intro.frep");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

// The denominator imrep of the quadratic fixture: <g> with g : [2] -> [3].
Presentation intermediate_imrep() {
  Presentation v = intro_fixture();
  return Presentation("I", v.g, QfMat(v.g.dst, ObjList{}));
}

bool spans_match(const QMatrix& a, const QMatrix& b) {
  if (a.rows != b.rows) return false;
  ColumnSpan sa, sb;
  for (std::size_t j = 0; j < a.cols; ++j) {
    std::vector<Rational> col(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) col[i] = a.at(i, j);
    sa.add(sparse_from_dense(col));
  }
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::vector<Rational> col(b.rows);
    for (std::size_t i = 0; i < b.rows; ++i) col[i] = b.at(i, j);
    if (!sa.contains(sparse_from_dense(col))) return false;
    sb.add(sparse_from_dense(col));
  }
  return sa.rank() == sb.rank();
}

QMatrix columns_from_lincombs(const std::vector<std::string>& texts, unsigned p, unsigned q) {
  QMatrix m(function_count(p, q), texts.size());
  for (std::size_t j = 0; j < texts.size(); ++j) {
    LinComb v = lincomb_from_string(texts[j], p, q);
    for (const auto& [f, c] : v.terms) m.at(function_index(f), j) = c;
  }
  return m;
}

}  // namespace

TEST_CASE("homology of the intermediate imrep") {
  Presentation i = intermediate_imrep();
  HomologyData h2 = h0_at(i, 2);
  CHECK(h2.dim == 2);
  CHECK(spans_match(h2.representatives, columns_from_lincombs({"11 - 22", "12 + 21 - 2*22"}, 2, 2)));
  CHECK(h2.multiplicities.at(Partition({2})) == 1);
  CHECK(h2.multiplicities.at(Partition({1, 1})) == 1);

  HomologyData h3 = h0_at(i, 3);
  CHECK(h3.dim == 1);
  REQUIRE(h3.multiplicities.size() == 1);
  CHECK(h3.multiplicities.at(Partition({1, 1, 1})) == 1);
  // The class of the alternating six-term vector spans the quotient: its
  // residual is a nonzero multiple of the canonical representative.
  H0Space space = h0_space(i, 3);
  REQUIRE(space.dim() == 1);
  LinComb six = lincomb_from_string("12 - 13 - 21 + 23 + 31 - 32", 2, 3);
  std::vector<Rational> coords(space.ambient, Rational(0));
  for (const auto& [f, c] : six.terms) coords[function_index(f)] = c;
  SparseVec residual = space.reduce(sparse_from_dense(coords));
  REQUIRE_FALSE(residual.empty());
  ColumnSpan line;
  line.add(space.reps[0]);
  CHECK(line.contains(residual));
}

TEST_CASE("equivariant sections of the intermediate imrep") {
  Presentation i = intermediate_imrep();
  auto sections = equivariant_section(i, 2);
  REQUIRE(sections.at(Partition({1, 1})).size() == 1);
  REQUIRE(sections.at(Partition({2})).size() == 1);
  CHECK(sections.at(Partition({1, 1}))[0].at(0, 0) == lincomb_from_string("11 - 22", 2, 2));
  CHECK(sections.at(Partition({2}))[0].at(0, 0) ==
        lincomb_from_string("-11 + 12 + 21 - 22", 2, 2));
  // Sections are exactly fixed by their symmetrizer.
  for (const auto& [lam, gens] : sections) {
    QfMat c(ObjList::single(2), ObjList::single(2));
    c.at(0, 0) = young_symmetrizer(lam);
    for (const QfMat& gen : gens) CHECK(qf_mul(gen, c) == gen);
  }
}

TEST_CASE("homology of tensor powers in top degree") {
  for (unsigned k = 1; k <= 3; ++k) {
    Presentation t = builtin_presentation("builtin:tensor/" + std::to_string(k));
    HomologyData h = h0_at(t, k);
    CHECK(h.dim == factorial(k));
    // Regular representation: every multiplicity equals the Specht dimension.
    for (const Partition& lam : partitions_of(k))
      CHECK(h.multiplicities.at(lam) == specht_dim(lam));
  }
  // The trivial presentation on the empty set has its generator at degree 0:
  // the class of the empty function.
  Presentation point = parse_presentation("object Y = [0]\npresent V = Y\n");
  HomologyData h0 = h0_at(point, 0);
  CHECK(h0.dim == 1);
  CHECK(h0.multiplicities.at(Partition{}) == 1);
  auto sections = equivariant_section(point, 0);
  REQUIRE(sections.at(Partition{}).size() == 1);
  CHECK(sections.at(Partition{})[0].at(0, 0) == LinComb(FinFn(0, 0, {})));
}

TEST_CASE("schur projectives have no homology above their degree") {
  for (const std::string& uri : {"builtin:p/2", "builtin:p/1,1", "builtin:p/2,1", "builtin:s/2"}) {
    Presentation p = builtin_presentation(uri);
    unsigned k = degree_bound(p);
    for (unsigned l = k + 1; l <= k + 2; ++l) CHECK(h0_at(p, l).dim == 0);
  }
}

TEST_CASE("cover of the quadratic fixture splits the square") {
  Presentation v = intro_fixture();
  Cover c = build_cover(v);
  CHECK(c.shortcut);
  REQUIRE(c.copies.size() == 2);
  CHECK(c.copies[0].lambda == Partition({1, 1}));
  CHECK(c.copies[1].lambda == Partition({2}));
  CHECK(c.copies[0].idempotent == epsilon(2));
  CHECK(c.copies[1].idempotent == tau(2));
  CHECK(c.map.at(0, 0) == epsilon(2));
  CHECK(c.map.at(0, 1) == tau(2));
  CHECK(c.target_degree == 2);
}

TEST_CASE("cover of a symmetrizer imrep is itself") {
  Presentation p = builtin_presentation("builtin:p/2,1");
  Cover c = build_cover(p);
  CHECK(c.shortcut);
  REQUIRE(c.copies.size() == 1);
  CHECK(c.copies[0].lambda == Partition({2, 1}));
  CHECK(c.map.at(0, 0) == young_symmetrizer(Partition({2, 1})));
}

TEST_CASE("cover of the intermediate imrep") {
  Presentation i = intermediate_imrep();
  Cover c = build_cover(i);
  CHECK_FALSE(c.shortcut);
  CHECK(c.target_degree == 3);
  REQUIRE(c.copies.size() == 3);
  CHECK(c.copies[0].degree == 3);
  CHECK(c.copies[0].lambda == Partition({1, 1, 1}));
  CHECK(c.copies[1].lambda == Partition({1, 1}));
  CHECK(c.copies[2].lambda == Partition({2}));
  // The boundary columns are the section representatives.
  CHECK(c.map.at(0, 1) == lincomb_from_string("11 - 22", 2, 2));
  CHECK(c.map.at(0, 2) == lincomb_from_string("-11 + 12 + 21 - 22", 2, 2));
}

TEST_CASE("cover of a zero presentation is empty") {
  Presentation zero = parse_presentation(
      "object Y = [1]\nobject Z = [1]\nmap g : Y -> Z = [[ 1 ]]\npresent V = Y / g\n");
  Cover c = build_cover(zero);
  CHECK(c.copies.empty());
  for (std::size_t d : c.h0_dims) CHECK(d == 0);
}
