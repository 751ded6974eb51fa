#include <doctest.h>

#include <fstream>
#include <sstream>

#include "frep/evaluator.hpp"

using namespace frep;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FREP_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("parsing the quadratic fixture") {
  Presentation p = parse_presentation(read_fixture("intro.frep"));
  CHECK(p.name == "V");
  CHECK(p.f.src == ObjList::single(2));
  CHECK(p.f.dst == ObjList::single(2));
  CHECK(p.f.at(0, 0) == LinComb::identity(2));
  CHECK(p.g.dst == ObjList::single(3));
  CHECK(p.g.at(0, 0) == lincomb_from_string("11 + 22 + 33 - 3*12 + 3*13 - 3*23", 2, 3));
  CHECK(degree_bound(p) == 2);
}

TEST_CASE("empty relations and identity sugar") {
  Presentation p = parse_presentation(
      "object Y = [2]\n"
      "present V = Y\n");
  CHECK(p.f.at(0, 0) == LinComb::identity(2));
  CHECK_FALSE(p.has_relations());
  CHECK(p.g.dst.is_zero());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_presentation("object X = [2]\nmap f : X -> X = [[ 13 ]]\npresent V = f\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_presentation("object X = [2]\npresent V = f\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("object X = [2"), ParseError);
  // Block shape mismatch: wrong arity inside the matrix.
  CHECK_THROWS_AS(parse_presentation("object X = [2]\nobject Y = [3]\n"
                                     "map f : X -> Y = [[ 123 ]]\npresent V = f\n"),
                  ParseError);
}

TEST_CASE("degree bounds") {
  CHECK(degree_bound(parse_presentation("object Y = [1] (+) [4]\npresent V = Y\n")) == 4);
  CHECK(degree_bound(builtin_presentation("builtin:d0")) == 0);
}

TEST_CASE("builtin presentations") {
  Presentation lambda2 = builtin_presentation("builtin:lambda/2");
  CHECK(lambda2.f.at(0, 0) == epsilon(2));
  CHECK_FALSE(lambda2.has_relations());

  Presentation d2 = builtin_presentation("builtin:d/2");
  CHECK(d2.f.at(0, 0) == partial(1));

  Presentation c22 = builtin_presentation("builtin:c/2,2");
  REQUIRE(c22.f.dst.components() == 7);
  CHECK(c22.f.at(0, 0) == young_symmetrizer(Partition({2, 2})));
  std::vector<std::string> expected = {"1123", "1213", "1231", "1223", "1232", "1233"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(c22.f.at(0, 1 + i) == LinComb(finfn_from_string(expected[i], 4, 4)));
  }
  // Relations keep just the collapses; the symmetrizer column survives in the quotient.
  QfMat fg = c22.fg();
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(fg.at(0, i) == LinComb(finfn_from_string(expected[i], 4, 4)));

  CHECK_THROWS_AS(builtin_presentation("builtin:d/0"), InvalidArgument);
  CHECK_THROWS_AS(builtin_presentation("builtin:bogus/1"), InvalidArgument);
}

TEST_CASE("serialization round trips") {
  for (const std::string& fixture : {"intro.frep", "mixed.frep"}) {
    Presentation p = parse_presentation(read_fixture(fixture));
    Presentation q = parse_presentation(serialize(p));
    CHECK(p.f == q.f);
    CHECK(p.fg() == q.fg());
  }
  for (const std::string& uri :
       {"builtin:tensor/2", "builtin:lambda/3", "builtin:d/2", "builtin:d0", "builtin:c/2,1"}) {
    Presentation p = builtin_presentation(uri);
    Presentation q = parse_presentation(serialize(p));
    CHECK(p.f == q.f);
    CHECK(p.fg() == q.fg());
  }
}

TEST_CASE("builtin dimension formulas") {
  EvalOptions opts;
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned k = 0; k <= 3; ++k) {
      CHECK(eval(builtin_presentation("builtin:tensor/" + std::to_string(k)), n, opts).dim ==
            function_count(k, n));
      CHECK(eval(builtin_presentation("builtin:lambda/" + std::to_string(k)), n, opts).dim ==
            binomial(n, k));
      CHECK(eval(builtin_presentation("builtin:s/" + std::to_string(k)), n, opts).dim ==
            binomial(n + k - (k > 0 ? 1 : 0), k));
      CHECK(eval(builtin_presentation("builtin:theta/" + std::to_string(k)), n, opts).dim ==
            function_count(k, n) - binomial(n, k));
    }
    for (const std::string& lam : {"1", "2", "1,1", "3", "2,1", "1,1,1"}) {
      Partition p = partition_from_string(lam);
      CHECK(eval(builtin_presentation("builtin:c/" + lam), n, opts).dim ==
            specht_dim(p) * binomial(n, p.size()));
    }
  }
}
