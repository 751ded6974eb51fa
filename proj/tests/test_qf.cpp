#include <doctest.h>

#include "frep/groupalg.hpp"
#include "frep/qfmat.hpp"

using namespace frep;

namespace {
LinComb lc(const std::string& text, unsigned dom, unsigned cod) {
  return lincomb_from_string(text, dom, cod);
}
}  // namespace

TEST_CASE("linear combination algebra") {
  LinComb v = lc("11 + 22 + 33 - 3*12 + 3*13 - 3*23", 2, 3);
  CHECK(v.terms.size() == 6);
  CHECK(lc_compose(LinComb::identity(2), v) == v);
  CHECK(lc_compose(v, LinComb::zero(3, 4)).is_zero());
  CHECK(lc_add(v, lc_scale(Rational(-1), v)).is_zero());
}

TEST_CASE("tau and epsilon") {
  CHECK(tau(1) == LinComb(FinFn::identity(1)));
  CHECK(epsilon(1) == tau(1));
  CHECK(epsilon(2) == lc("1/2*12 - 1/2*21", 2, 2));
  for (unsigned k : {2u, 3u}) {
    CHECK(lc_compose(tau(k), tau(k)) == tau(k));
    CHECK(lc_compose(epsilon(k), epsilon(k)) == epsilon(k));
    CHECK(lc_compose(tau(k), epsilon(k)).is_zero());
  }
  CHECK(tau(0) == LinComb(FinFn(0, 0, {})));
}

TEST_CASE("partials") {
  // The displayed six-term formula for the second partial.
  CHECK(partial(2) == lc("1/6*23 - 1/6*32 - 1/6*13 + 1/6*31 + 1/6*12 - 1/6*21", 2, 3));
  CHECK(partial(0) == LinComb(FinFn(0, 1, {})));
  for (unsigned k = 0; k <= 4; ++k) CHECK(lc_compose(partial(k), partial(k + 1)).is_zero());
  // partial_2 as the composite epsilon iota epsilon.
  CHECK(lc_compose(epsilon(2), lc_compose(LinComb(FinFn::inclusion(2)), epsilon(3))) == partial(2));
}

TEST_CASE("young symmetrizers") {
  CHECK(young_symmetrizer(Partition({3})) == tau(3));
  CHECK(young_symmetrizer(Partition({1, 1, 1})) == epsilon(3));
  LinComb c21 = young_symmetrizer(Partition({2, 1}));
  CHECK(lc_compose(c21, c21) == c21);
  // The sixteen-term symmetrizer for the two-row square shape.
  LinComb c22 = young_symmetrizer(Partition({2, 2}));
  LinComb display = lc_scale(
      Rational(1, 12),
      lc("1234 + 1243 - 1423 - 1432 + 2134 + 2143 - 2314 - 2341 - 3214 - 3241 + 3412 + 3421 "
         "- 4123 - 4132 + 4312 + 4321",
         4, 4));
  CHECK(c22 == display);
}

TEST_CASE("young symmetrizer idempotence and rank") {
  for (unsigned k = 0; k <= 4; ++k) {
    auto perms = enumerate_permutations(k);
    for (const Partition& lam : partitions_of(k)) {
      LinComb c = young_symmetrizer(lam);
      CHECK(lc_compose(c, c) == c);
      // Rank of right multiplication on the group algebra equals the number
      // of standard tableaux.
      ColumnSpan span;
      for (const FinFn& s : perms) {
        LinComb img = lc_compose(LinComb(s), c);
        SparseVec v;
        for (const auto& [f, coeff] : img.terms) {
          std::size_t idx = 0;
          for (; idx < perms.size(); ++idx)
            if (perms[idx] == f) break;
          v.emplace_back(idx, coeff);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        span.add(std::move(v));
      }
      CHECK(span.rank() == specht_dim(lam));
    }
  }
}

TEST_CASE("block matrix product splits idempotents") {
  // The split of <X> by an idempotent pi: the three-factor product is
  // diag(pi, 1 - pi).
  LinComb pi = tau(2);
  LinComb rest = lc_sub(LinComb::identity(2), pi);
  ObjList x2({2, 2});
  QfMat down(x2, ObjList::single(2));
  down.at(0, 0) = pi;
  down.at(1, 0) = rest;
  QfMat middle = qf_identity(ObjList::single(2));
  QfMat up(ObjList::single(2), x2);
  up.at(0, 0) = pi;
  up.at(0, 1) = rest;
  QfMat product = qf_mul(down, qf_mul(middle, up));
  QfMat expected(x2, x2);
  expected.at(0, 0) = pi;
  expected.at(1, 1) = rest;
  CHECK(product == expected);

  CHECK(qf_mul(up, qf_identity(x2)) == up);
}

TEST_CASE("block matrix product is associative") {
  ObjList x({1, 2});
  QfMat a(x, ObjList::single(2));
  a.at(0, 0) = lc("1", 1, 2);
  a.at(1, 0) = lc("12 - 21", 2, 2);
  QfMat b(ObjList::single(2), ObjList({2, 3}));
  b.at(0, 0) = tau(2);
  b.at(0, 1) = lc("13 - 2*21", 2, 3);
  QfMat c(ObjList({2, 3}), ObjList::single(3));
  c.at(0, 0) = lc("12 + 2*33", 2, 3);
  c.at(1, 0) = epsilon(3);
  CHECK(qf_mul(qf_mul(a, b), c) == qf_mul(a, qf_mul(b, c)));
}

TEST_CASE("precomposition matrices") {
  CHECK(precomposition_matrix(LinComb::identity(2), 2) == QMatrix::identity(4));
  // v = 11 : [2] -> [1] at n = 2 sends e_i to the doubled function.
  QMatrix m = precomposition_matrix(lc("11", 2, 1), 2);
  REQUIRE(m.rows == 4);
  REQUIRE(m.cols == 2);
  CHECK(m.at(0, 0) == 1);  // 1 -> 11
  CHECK(m.at(3, 1) == 1);  // 2 -> 22
  // The first partial has a rank-one image at n = 2 (dim D_2[2] = 1).
  CHECK(rref(precomposition_matrix(partial(1), 2)).rank == 1);
}

TEST_CASE("postcomposition matrices") {
  CHECK(postcomposition_matrix(LinComb::identity(3), 2) == QMatrix::identity(9));
  // Trace at p = 1 counts fixed points.
  LinComb swap = lc("21", 2, 2);
  QMatrix m1 = postcomposition_matrix(swap, 1);
  Rational trace(0);
  for (std::size_t i = 0; i < m1.rows; ++i) trace += m1.at(i, i);
  CHECK(trace == 0);
  QMatrix mid = postcomposition_matrix(LinComb::identity(2), 1);
  trace = 0;
  for (std::size_t i = 0; i < mid.rows; ++i) trace += mid.at(i, i);
  CHECK(trace == 2);
  // p = 2 with the transposition: 11 <-> 22 and 12 <-> 21, so trace 0.
  QMatrix m2 = postcomposition_matrix(swap, 2);
  trace = 0;
  for (std::size_t i = 0; i < m2.rows; ++i) trace += m2.at(i, i);
  CHECK(trace == 0);
}

TEST_CASE("pre- and postcomposition commute") {
  for (unsigned n = 1; n <= 3; ++n) {
    LinComb v = partial(1);  // [1] -> [2]
    for (const FinFn& s : enumerate_permutations(n)) {
      QMatrix pre = precomposition_matrix(v, n);
      QMatrix post_src = postcomposition_matrix(LinComb(s), v.dom);
      QMatrix post_dst = postcomposition_matrix(LinComb(s), v.cod);
      CHECK(mul(post_src, pre) == mul(pre, post_dst));
    }
  }
}

TEST_CASE("qfmat evaluation") {
  QfMat id = qf_identity(ObjList({1, 2}));
  for (unsigned n = 0; n <= 3; ++n) CHECK(qfmat_eval(id, n) == QMatrix::identity(id.src.hom_dim(n)));

  // The relation matrix of the quadratic fixture at n = 2 has rank 2.
  QfMat g(ObjList::single(2), ObjList::single(3));
  g.at(0, 0) = lc("11 + 22 + 33 - 3*12 + 3*13 - 3*23", 2, 3);
  CHECK(rref(qfmat_eval(g, 2)).rank == 2);

  QfMat zero_src(ObjList{}, ObjList::single(2));
  CHECK(qfmat_eval(zero_src, 3).rows == 0);
}

TEST_CASE("evaluation is functorial") {
  QfMat a(ObjList::single(2), ObjList::single(2));
  a.at(0, 0) = epsilon(2);
  QfMat b(ObjList::single(2), ObjList::single(3));
  b.at(0, 0) = partial(2);
  for (unsigned n = 0; n <= 3; ++n)
    CHECK(qfmat_eval(qf_mul(a, b), n) == mul(qfmat_eval(a, n), qfmat_eval(b, n)));
}

TEST_CASE("group algebra decompositions") {
  for (unsigned k = 1; k <= 3; ++k) {
    auto parts = primitive_decomposition(LinComb::identity(k));
    LinComb total(k, k);
    std::map<Partition, unsigned> counts;
    for (const auto& [lam, prim] : parts) {
      CHECK(lc_compose(prim, prim) == prim);
      total = lc_add(total, prim);
      counts[lam] += 1;
    }
    CHECK(total == LinComb::identity(k));
    for (const Partition& lam : partitions_of(k)) CHECK(counts[lam] == specht_dim(lam));
    // Pairwise orthogonality.
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (i == j) continue;
        CHECK(lc_compose(parts[i].second, parts[j].second).is_zero());
      }
  }
  // Splitting a symmetrizer returns it alone.
  auto single = primitive_decomposition(young_symmetrizer(Partition({2, 1})));
  REQUIRE(single.size() == 1);
  CHECK(single[0].second == young_symmetrizer(Partition({2, 1})));
}

TEST_CASE("lincomb text round trip") {
  LinComb v = lc("1/2*12 - 21 + 3*11", 2, 2);
  CHECK(lincomb_from_string(to_string(v), 2, 2) == v);
  CHECK(to_string(LinComb::zero(2, 2)) == "0");
  CHECK(lincomb_from_string("0", 2, 2).is_zero());
}
