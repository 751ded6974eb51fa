#include <doctest.h>

#include <fstream>
#include <sstream>

#include "frep/resolver.hpp"

using namespace frep;

namespace {

Presentation intro_fixture() {
  std::ifstream in(std::string(FREP_FIXTURE_DIR) + "/intro.frep");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

Presentation intermediate_imrep() {
  Presentation v = intro_fixture();
  return Presentation("I", v.g, QfMat(v.g.dst, ObjList{}));
}

const char* k24 =
    "123 - 124 - 132 + 134 + 142 - 143 - 213 + 214 + 231 - 234 - 241 + 243 "
    "+ 312 - 314 - 321 + 324 + 341 - 342 - 412 + 413 + 421 - 423 - 431 + 432";
const char* k6 = "12 - 13 - 21 + 23 + 31 - 32";

}  // namespace

TEST_CASE("kernel of the intermediate cover has block diagonal generators") {
  Presentation i = intermediate_imrep();
  Cover c = build_cover(i);
  KernelData k = kernel_imrep(c, i);
  CHECK(k.generator_degrees == std::vector<unsigned>{4, 3, 2, 2, 1});
  const QfMat& fk = k.kernel.f;
  REQUIRE(fk.src == ObjList({3, 2, 2}));
  REQUIRE(fk.dst == ObjList({4, 3, 2, 2, 1}));
  QfMat expected(fk.src, fk.dst);
  expected.at(0, 0) = lincomb_from_string(k24, 3, 4);
  expected.at(1, 1) = lincomb_from_string(k6, 2, 3);
  expected.at(2, 2) = lincomb_from_string("11", 2, 2);
  expected.at(2, 3) = lincomb_from_string("22", 2, 2);
  expected.at(2, 4) = lincomb_from_string("11", 2, 1);
  CHECK(fk == expected);
}

TEST_CASE("kernel of a projective covered by itself is zero") {
  Presentation p = builtin_presentation("builtin:p/2,1");
  Cover c = build_cover(p);
  KernelData k = kernel_imrep(c, p);
  CHECK(k.generator_degrees.empty());
  CHECK(k.kernel.f.dst.is_zero());
}

TEST_CASE("kernel rank identity against the oracle") {
  Presentation i = intermediate_imrep();
  Cover c = build_cover(i);
  KernelData k = kernel_imrep(c, i);
  for (unsigned n = 0; n <= 5; ++n) {
    std::size_t cover_dim = eval(c.cover, n).dim;
    std::size_t target_dim = eval(i, n).dim;
    std::size_t kernel_dim = eval(k.kernel, n).dim;
    CHECK(cover_dim == target_dim + kernel_dim);
  }
}

TEST_CASE("splitting the D summands of the intermediate kernel") {
  Presentation i = intermediate_imrep();
  Cover c = build_cover(i);
  KernelData k = kernel_imrep(c, i);
  DSplit split = split_D_summands(k, c.target_degree, true);
  REQUIRE(split.applied);
  CHECK(split.multiplicities == std::map<unsigned, std::size_t>{{3, 1}, {4, 1}});
  REQUIRE(split.reps.size() == 2);
  CHECK(split.reps[0].first == 4);
  CHECK(split.reps[1].first == 3);
  // The remainder is a line functor: dimension n everywhere.
  for (unsigned n = 0; n <= 4; ++n) CHECK(eval(split.remainder, n).dim == n);
}

TEST_CASE("projective kernels have no D summands") {
  Presentation p = builtin_presentation("builtin:p/2");
  Cover c = build_cover(p);
  KernelData k = kernel_imrep(c, p);
  DSplit split = split_D_summands(k, c.target_degree, true);
  CHECK(split.applied);
  CHECK(split.multiplicities.empty());
}

TEST_CASE("a lone exterior power refuses to split off itself") {
  // Feed Lambda^2 as if it were a kernel over a degree-2 target. Its homology
  // at the level above the degree vanishes (the homology oracle value), and
  // the degree-level class does not factor through a D functor, so no split
  // applies without the theory guarantee.
  Presentation l2 = builtin_presentation("builtin:lambda/2");
  CHECK(h0_space(l2, 3).dim() == 0);
  CHECK(h0_space(l2, 2).dim() == 1);
  KernelData as_kernel;
  as_kernel.kernel = l2;
  as_kernel.generator_degrees = {2};
  DSplit split = split_D_summands(as_kernel, 2, false);
  CHECK_FALSE(split.applied);
  CHECK(split.multiplicities.empty());
}

TEST_CASE("the quadratic fixture resolves through D4, D3 and a line") {
  Resolution r = resolve(intro_fixture());
  REQUIRE(r.terms.size() == 3);
  CHECK(r.terms[0].d_indices.empty());
  CHECK(r.terms[0].schur == std::vector<Partition>{Partition({1, 1}), Partition({2})});
  CHECK(r.terms[1].d_indices.empty());
  CHECK(r.terms[1].schur ==
        std::vector<Partition>{Partition({1, 1, 1}), Partition({1, 1}), Partition({2})});
  CHECK(r.terms[2].d_indices == std::vector<unsigned>{4, 3});
  CHECK(r.terms[2].schur == std::vector<Partition>{Partition({1})});

  VerifyReport report = verify_resolution(r, 6);
  CHECK(report.ok);

  // Consecutive boundaries compose to zero already at the formal level once
  // the term presentations are factored in.
  QfMat composite = qf_mul(r.boundaries[0], qf_mul(r.boundaries[1], r.term_f[2]));
  CHECK(composite.is_zero());

  DimPoly dp = dim_poly(r);
  CHECK(dp.coeffs == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(dp.value_at_zero == 0);
  CharPoly cp = char_poly(r);
  CHECK(cp.poly == MPoly::variable(1));
}

TEST_CASE("tensor powers resolve in a single projective term") {
  for (unsigned k = 0; k <= 3; ++k) {
    Resolution r = resolve(builtin_presentation("builtin:tensor/" + std::to_string(k)));
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].d_indices.empty());
    std::size_t expected = 0;
    for (const Partition& lam : partitions_of(k)) expected += specht_dim(lam);
    CHECK(r.terms[0].schur.size() == expected);
    CHECK(verify_resolution(r, 4).ok);
    CharPoly cp = char_poly(r);
    MPoly p1k = MPoly::constant(Rational(1));
    for (unsigned i = 0; i < k; ++i) p1k = p1k * MPoly::variable(1);
    CHECK(cp.poly == p1k);
  }
}

TEST_CASE("the point functor resolves through D_1") {
  Resolution r = resolve(builtin_presentation("builtin:d0"));
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].schur == std::vector<Partition>{Partition{}});
  CHECK(r.terms[0].d_indices.empty());
  CHECK(r.terms[1].schur.empty());
  CHECK(r.terms[1].d_indices == std::vector<unsigned>{1});
  CHECK(verify_resolution(r, 4).ok);
}

TEST_CASE("D functors resolve through the next exterior power") {
  for (unsigned k = 1; k <= 3; ++k) {
    Resolution r = resolve(builtin_presentation("builtin:d/" + std::to_string(k)));
    REQUIRE(r.terms.size() == 2);
    CHECK(r.terms[0].schur == std::vector<Partition>{Partition(std::vector<unsigned>(k, 1))});
    CHECK(r.terms[1].d_indices == std::vector<unsigned>{k + 1});
    CHECK(r.terms[1].schur.empty());
    CHECK(verify_resolution(r, k + 3).ok);
  }
}

TEST_CASE("verification flags a corrupted boundary") {
  Resolution r = resolve(intro_fixture());
  REQUIRE(r.boundaries.size() == 2);
  // Drop a whole generator column from the first boundary.
  r.boundaries[0].at(0, 1) = LinComb(2, 2);
  r.boundaries[0].at(1, 1) = LinComb(2, 2);
  VerifyReport report = verify_resolution(r, 3);
  CHECK_FALSE(report.ok);
  bool mentions_position = false;
  for (const std::string& line : report.lines)
    mentions_position |= line.find("n = ") != std::string::npos;
  CHECK(mentions_position);
}

TEST_CASE("closed dimension forms match the oracle") {
  for (unsigned k = 1; k <= 4; ++k) {
    Presentation d = builtin_presentation("builtin:d/" + std::to_string(k));
    for (unsigned n = 0; n <= 7; ++n) CHECK(eval(d, n).dim == dim_D(k, n));
  }
  // The printed small sequence belongs to D_2 under this indexing.
  std::vector<unsigned long> seq;
  for (unsigned n = 0; n <= 5; ++n) seq.push_back(dim_D(2, n));
  CHECK(seq == std::vector<unsigned long>{0, 0, 1, 2, 3, 4});
  CHECK(dim_D(1, 0) == 0);
  CHECK(dim_D(1, 3) == 1);

  CHECK(dim_C(Partition({1, 1}), 4) == 6);
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(dim_C(Partition({2, 1}), n) == eval(builtin_presentation("builtin:c/2,1"), n).dim);
}

TEST_CASE("character polynomial of the exterior square") {
  Resolution r = resolve(builtin_presentation("builtin:lambda/2"));
  CharPoly cp = char_poly(r);
  // e_2 in power sums: (x1^2 - x2) / 2.
  MPoly expected = MPoly::constant(Rational(1, 2)) *
                   (MPoly::variable(1) * MPoly::variable(1) - MPoly::variable(2));
  CHECK(cp.poly == expected);
}

TEST_CASE("K-theory vectors") {
  Resolution d1 = resolve(builtin_presentation("builtin:d/1"));
  KTheoryVector v = k_theory_vector(d1);
  CHECK(v.projective.at(Partition{}) == 1);
  CHECK(v.d0 == -1);

  Resolution t1 = resolve(builtin_presentation("builtin:tensor/1"));
  KTheoryVector vt = k_theory_vector(t1);
  CHECK(vt.projective.at(Partition({1})) == 1);
  CHECK(vt.d0 == 0);

  Resolution intro = resolve(intro_fixture());
  KTheoryVector vi = k_theory_vector(intro);
  for (unsigned n = 1; n <= 5; ++n)
    CHECK(k_theory_dimension(vi, n) == Rational(static_cast<long>(n)));
}

TEST_CASE("resolution JSON carries the schema fields") {
  Resolution r = resolve(intro_fixture());
  DimPoly dp = dim_poly(r);
  CharPoly cp = char_poly(r);
  std::string json = resolution_to_json(r, dp, cp);
  for (const char* needle : {"\"target\"", "\"terms\"", "\"schur\"", "\"boundaries\"",
                             "\"dim_poly\"", "\"at_zero\"", "\"char_poly\"", "\"1,1\""})
    CHECK(json.find(needle) != std::string::npos);
}

TEST_CASE("a middle term can carry a D summand") {
  std::ifstream in(std::string(FREP_FIXTURE_DIR) + "/cubic.frep");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  Resolution r = resolve(parse_presentation(buf.str()));
  REQUIRE(r.terms.size() == 4);
  CHECK(r.terms[2].d_indices == std::vector<unsigned>{3});
  CHECK_FALSE(r.terms[3].schur.empty());
  // The boundary into the D-carrying term needs correction entries on its D
  // row for the composite to vanish; verification certifies them.
  CHECK(verify_resolution(r, 5).ok);
}

TEST_CASE("property suite over the corpus") {
  std::vector<Presentation> corpus;
  corpus.push_back(intro_fixture());
  for (const char* name : {"mixed.frep", "cubic.frep"}) {
    std::ifstream in(std::string(FREP_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    corpus.push_back(parse_presentation(buf.str()));
  }
  for (const char* uri : {"builtin:tensor/2", "builtin:lambda/3", "builtin:s/2", "builtin:theta/2",
                          "builtin:d/2", "builtin:d/3", "builtin:d0", "builtin:c/1,1",
                          "builtin:c/2,1", "builtin:p/2,1"})
    corpus.push_back(builtin_presentation(uri));

  for (const Presentation& p : corpus) {
    CAPTURE(p.name);
    Resolution r = resolve(p);
    // Termination: at most degree_bound + 1 covering steps; a trailing pure
    // D term can close the complex after the last step.
    CHECK(r.step_degrees.size() <= degree_bound(p) + 1);
    CHECK(r.terms.size() <= r.step_degrees.size() + 1);
    // Shape: term 0 is pure Schur; D indices track the covered degree.
    if (!r.terms.empty()) CHECK(r.terms[0].d_indices.empty());
    for (std::size_t i = 1; i < r.terms.size(); ++i)
      for (unsigned l : r.terms[i].d_indices) {
        CHECK(l >= r.step_degrees[i - 1]);
        CHECK(l <= r.step_degrees[i - 1] + 1);
      }
    // Covered degrees strictly decrease after the first homology cover.
    for (std::size_t i = 2; i < r.step_degrees.size(); ++i)
      CHECK(r.step_degrees[i] < r.step_degrees[i - 1]);

    CHECK(verify_resolution(r, 5).ok);

    DimPoly dp = dim_poly(r);
    CharPoly cp = char_poly(r);
    CHECK(dp.value_at_zero == Rational(static_cast<long>(eval(p, 0).dim)));
    for (unsigned n = 1; n <= 5; ++n) {
      CHECK(dp.eval(n) == Rational(static_cast<long>(eval(p, n).dim)));
      // Euler characteristic of the evaluated terms.
      long long euler = 0;
      for (std::size_t i = 0; i < r.terms.size(); ++i) {
        long long dim = 0;
        for (unsigned l : r.terms[i].d_indices) dim += dim_D(l, n);
        for (const Partition& lam : r.terms[i].schur) dim += schur_dim(lam, n);
        euler += (i % 2 == 0) ? dim : -dim;
      }
      CHECK(euler == static_cast<long long>(eval(p, n).dim));
      // Characters against the oracle on every class.
      unsigned vars = cp.poly.max_variable();
      for (const auto& [type, value] : character_table(p, n)) {
        std::vector<unsigned> img(n);
        unsigned start = 0;
        for (unsigned len : type.parts) {
          for (unsigned i = 0; i < len; ++i) img[start + i] = start + ((i + 1) % len) + 1;
          start += len;
        }
        FinFn sigma(n, n, std::move(img));
        CHECK(cp.eval(n, fixed_point_counts(sigma, vars == 0 ? 1 : vars)) == value);
      }
    }
  }
}
