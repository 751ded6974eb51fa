#include "frep/homology.hpp"

#include <algorithm>

namespace frep {

H0Space h0_space(const Presentation& p, unsigned k, const EvalOptions& opts) {
  check_cap(p, k, opts);
  H0Space h;
  h.k = k;
  h.ambient = p.f.src.hom_dim(k);

  std::vector<QfMat> fed_formal;   // columns X -> [k]
  std::vector<QfMat> fed_gamma;    // columns Y -> [k] with f . gamma = formal
  ColumnSpan tracked(true);
  if (p.has_relations()) {
    QfMat fg = p.fg();
    qfmat_eval_columns(fg, k, [&](std::size_t j, const FinFn& fn, SparseVec col) {
      fed_formal.push_back(formal_column(fg, j, fn));
      fed_gamma.push_back(formal_column(p.g, j, fn));
      tracked.add(col);
      h.sub.add(std::move(col));
    });
  }
  if (k > 0) {
    // Skeleton part: numerator columns at non-surjective basis functions.
    qfmat_eval_columns(p.f, k, [&](std::size_t j, const FinFn& fn, SparseVec col) {
      if (fn.is_surjective()) return;
      fed_formal.push_back(formal_column(p.f, j, fn));
      fed_gamma.push_back(unit_column(p.f.dst, j, fn));
      tracked.add(col);
      h.sub.add(std::move(col));
    });
  }
  std::size_t sub_rank = tracked.rank();
  qfmat_eval_columns(p.f, k, [&](std::size_t j, const FinFn& fn, SparseVec col) {
    fed_formal.push_back(formal_column(p.f, j, fn));
    fed_gamma.push_back(unit_column(p.f.dst, j, fn));
    tracked.add(std::move(col));
  });
  // Pivots added after the sub phase form the canonical residual basis; they
  // are recognized by pivot row since sub pivot rows are fixed at creation.
  std::vector<bool> sub_row;
  for (const SparseVec* s : h.sub.basis()) {
    std::size_t row = s->front().first;
    if (sub_row.size() <= row) sub_row.resize(row + 1, false);
    sub_row[row] = true;
  }
  for (const SparseVec* b : tracked.basis()) {
    std::size_t row = b->front().first;
    if (row < sub_row.size() && sub_row[row]) continue;
    auto combo = tracked.combination(*b);
    if (!combo) throw InternalError("basis vector not expressible over fed columns");
    h.reps.push_back(*b);
    h.rep_formal.push_back(formal_combination(p.f.src, k, *combo, fed_formal));
    h.rep_gamma.push_back(formal_combination(p.f.dst, k, *combo, fed_gamma));
  }
  if (h.reps.size() + sub_rank != tracked.rank())
    throw InternalError("homology rank bookkeeping mismatch");
  // Reduced bases list pivots by row; keep that canonical order.
  return h;
}

HomologyData h0_at(const Presentation& p, unsigned k, const EvalOptions& opts) {
  H0Space h = h0_space(p, k, opts);
  HomologyData out;
  out.degree = k;
  out.dim = h.dim();
  out.representatives = QMatrix(h.ambient, h.reps.size());
  for (std::size_t j = 0; j < h.reps.size(); ++j)
    for (const auto& [i, c] : h.reps[j]) out.representatives.at(i, j) = c;

  std::size_t total = 0;
  for (const Partition& lambda : partitions_of(k)) {
    LinComb c = young_symmetrizer(lambda);
    QfMat c_mat(ObjList::single(k), ObjList::single(k));
    c_mat.at(0, 0) = c;
    ColumnSpan image;
    std::vector<QfMat> generators;
    for (std::size_t j = 0; j < h.reps.size(); ++j) {
      SparseVec img = h.reduce(apply_postcomposition(p.f.src, k, c, h.reps[j]));
      if (image.add(std::move(img))) generators.push_back(qf_mul(h.rep_formal[j], c_mat));
    }
    if (!generators.empty()) {
      total += generators.size() * specht_dim(lambda);
      out.multiplicities.emplace(lambda, generators.size());
      out.isotypic_generators.emplace(lambda, std::move(generators));
    }
  }
  if (total != out.dim)
    throw InternalError("isotypic multiplicities do not add up to the homology dimension");
  return out;
}

std::map<Partition, std::size_t> isotypic_multiplicities(const HomologyData& h) {
  return h.multiplicities;
}

std::map<Partition, std::vector<QfMat>> equivariant_section(const Presentation& p, unsigned k,
                                                            const EvalOptions& opts) {
  return h0_at(p, k, opts).isotypic_generators;
}

namespace {

// Shortcut split: f is square block-diagonal with group-supported idempotent
// blocks, so <f> is a sum of isotype projectives realized by primitive
// idempotents below each block.
std::optional<std::vector<CoverCopy>> try_split_numerator(const QfMat& f) {
  if (!(f.src.sizes == f.dst.sizes)) return std::nullopt;
  for (std::size_t i = 0; i < f.src.components(); ++i)
    for (std::size_t j = 0; j < f.dst.components(); ++j) {
      if (i == j) continue;
      if (!f.at(i, j).is_zero()) return std::nullopt;
    }
  std::vector<CoverCopy> copies;
  for (std::size_t i = 0; i < f.src.components(); ++i) {
    const LinComb& e = f.at(i, i);
    if (e.is_zero()) continue;
    if (!is_group_supported(e)) return std::nullopt;
    if (!(lc_compose(e, e) == e)) return std::nullopt;
    std::vector<std::pair<Partition, LinComb>> prims;
    try {
      prims = primitive_decomposition(e);
    } catch (const PeelFailure&) {
      return std::nullopt;
    }
    for (auto& [lambda, prim] : prims) {
      CoverCopy copy;
      copy.degree = f.src.sizes[i];
      copy.lambda = lambda;
      copy.idempotent = std::move(prim);
      copy.src_component = i;
      copies.push_back(std::move(copy));
    }
  }
  return copies;
}

bool copy_order(const CoverCopy& a, const CoverCopy& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  if (!(a.lambda == b.lambda)) return a.lambda < b.lambda;
  return a.src_component < b.src_component;
}

}  // namespace

Cover build_cover(const Presentation& p, const EvalOptions& opts) {
  Cover out;
  unsigned bound = degree_bound(p);
  out.h0_dims.assign(bound + 1, 0);
  std::vector<HomologyData> h0(bound + 1);
  for (unsigned l = 0; l <= bound; ++l) {
    h0[l] = h0_at(p, l, opts);
    out.h0_dims[l] = h0[l].dim;
    if (h0[l].dim > 0) out.target_degree = l;
  }

  bool all_zero = true;
  for (std::size_t d : out.h0_dims) all_zero &= (d == 0);
  if (all_zero) {
    // The zero functor gets the empty cover.
    out.cover = Presentation(p.name + ".cover", QfMat(ObjList{}, ObjList{}), QfMat(ObjList{}, ObjList{}));
    out.map = QfMat(p.f.src, ObjList{});
    return out;
  }

  auto split = try_split_numerator(p.f);
  if (split) {
    out.shortcut = true;
    out.copies = std::move(*split);
    std::stable_sort(out.copies.begin(), out.copies.end(), copy_order);
    for (CoverCopy& copy : out.copies) {
      std::vector<LinComb> entries;
      for (unsigned s : p.f.src.sizes) entries.emplace_back(s, copy.degree);
      entries[copy.src_component] = copy.idempotent;
      copy.generator = qf_column(p.f.src, copy.degree, std::move(entries));
    }
  } else {
    for (unsigned l = bound + 1; l-- > 0;) {  // descending degree
      for (const auto& [lambda, gens] : h0[l].isotypic_generators) {
        for (const QfMat& gen : gens) {
          CoverCopy copy;
          copy.degree = l;
          copy.lambda = lambda;
          copy.idempotent = young_symmetrizer(lambda);
          copy.generator = gen;
          out.copies.push_back(std::move(copy));
        }
      }
    }
  }

  // Assemble the cover presentation <diag(idempotents)> and the map.
  std::vector<unsigned> c_sizes;
  for (const CoverCopy& c : out.copies) c_sizes.push_back(c.degree);
  ObjList c_obj(c_sizes);
  QfMat fc(c_obj, c_obj);
  for (std::size_t i = 0; i < out.copies.size(); ++i) fc.at(i, i) = out.copies[i].idempotent;
  out.cover = Presentation(p.name + ".cover", fc, QfMat(c_obj, ObjList{}));
  if (!out.copies.empty()) {
    std::vector<QfMat> cols;
    for (const CoverCopy& c : out.copies) cols.push_back(c.generator);
    out.map = qf_concat_columns(cols);
  } else {
    out.map = QfMat(p.f.src, ObjList{});
  }

  // The map must be surjective onto V in the checked range; with the induced
  // surjection on H0 in every degree this is what covering requires.
  for (unsigned n = 0; n <= out.target_degree + 2; ++n) {
    check_cap(p, n, opts);
    ColumnSpan reached;
    if (p.has_relations()) {
      QfMat fg = p.fg();
      qfmat_eval_columns(fg, n, [&](std::size_t, const FinFn&, SparseVec col) { reached.add(std::move(col)); });
    }
    qfmat_eval_columns(out.cover.f, n, [&](std::size_t, const FinFn&, SparseVec col) {
      reached.add(apply_premultiplication(out.map, n, col));
    });
    std::size_t missing = 0;
    qfmat_eval_columns(p.f, n, [&](std::size_t, const FinFn&, SparseVec col) {
      if (!reached.contains(col)) ++missing;
    });
    if (missing > 0)
      throw InternalError("cover is not surjective at n = " + std::to_string(n));
  }
  return out;
}

}  // namespace frep
