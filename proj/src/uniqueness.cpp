#include "holo/uniqueness.hpp"

#include <algorithm>

#include "holo/errors.hpp"

namespace holo {

const char* to_string(ComparisonVerdict verdict) {
  switch (verdict) {
    case ComparisonVerdict::identical: return "identical";
    case ComparisonVerdict::equivalent_up_to_isometry: return "equivalent_up_to_isometry";
    case ComparisonVerdict::distinct: return "distinct";
  }
  return "?";
}

const char* to_string(Uniqueness verdict) {
  switch (verdict) {
    case Uniqueness::unique_up_to_order: return "unique_up_to_order";
    case Uniqueness::unique_one_bad_factor: return "unique_one_bad_factor";
    case Uniqueness::nonunique_witnessed: return "nonunique_witnessed";
    case Uniqueness::unknown: return "unknown";
  }
  return "?";
}

Pairing match_summands(const Representation& rep, const DecompositionReport& a, const DecompositionReport& b) {
  Pairing out;
  if (a.summands.size() != b.summands.size()) {
    out.ok = false;
    out.failure = "summand counts differ: " + std::to_string(a.summands.size()) + " vs " +
                  std::to_string(b.summands.size());
    return out;
  }
  std::vector<Subspace> moved_b;
  for (const auto& s : b.summands) moved_b.push_back(moved_span(rep, s.subspace));
  std::vector<bool> used(b.summands.size(), false);
  for (std::size_t i = 0; i < a.summands.size(); ++i) {
    const Summand& sa = a.summands[i];
    const Subspace moved_a = moved_span(rep, sa.subspace);
    std::size_t best = b.summands.size();
    int best_rank = 3;
    for (std::size_t j = 0; j < b.summands.size(); ++j) {
      if (used[j]) continue;
      const Summand& sb = b.summands[j];
      int r;
      if (sa.subspace == sb.subspace) {
        r = 0;
      } else if (intersect(moved_a, moved_b[j]).is_zero()) {
        continue;
      } else if (sa.kind == sb.kind && sa.subspace.dim() == sb.subspace.dim()) {
        r = 1;
      } else {
        r = 2;
      }
      if (r < best_rank) {
        best_rank = r;
        best = j;
      }
    }
    if (best == b.summands.size()) {
      out.ok = false;
      out.failure = "summand " + std::to_string(i) + " has no partner with intersecting moved span";
      return out;
    }
    used[best] = true;
    out.partner.push_back(best);
  }
  return out;
}

namespace {

struct BlockMap {
  std::vector<Vector> source;
  std::vector<Vector> target;
};

// Images of a basis of `src` in `tgt`: the projection along `rest`, then a
// correction on a complement of the moved span by fixed vectors of tgt
// restoring every pairing. Requires the fixed vectors of tgt to be totally
// isotropic whenever a correction is needed.
BlockMap map_block(const Representation& rep, const Subspace& src, const Subspace& tgt, const Subspace& rest,
                   const std::string& label) {
  const QuadraticSpace& qs = rep.space();
  const Matrix proj = projector(tgt, rest);
  const Subspace moved = moved_span(rep, src);
  std::vector<Vector> x = moved.basis_vectors();
  const std::size_t s = x.size();
  for (auto& c : extend_independent(moved, src.basis_vectors())) x.push_back(std::move(c));
  std::vector<Vector> y;
  for (const auto& v : x) y.push_back(proj * v);
  if (Subspace::span(rep.dim(), y).dim() != x.size()) {
    throw PreconditionError(label + ": projection is not injective");
  }

  auto gram_defect = [&](std::size_t p, std::size_t q) -> Rational { return qs.pair(x[p], x[q]) - qs.pair(y[p], y[q]); };
  bool distorted = false;
  for (std::size_t p = 0; p < x.size() && !distorted; ++p)
    for (std::size_t q = p; q < x.size() && !distorted; ++q) distorted = gram_defect(p, q) != 0;
  if (distorted) {
    const Subspace fixed = intersect(fixed_space(rep), tgt);
    if (!is_totally_isotropic(qs, fixed)) {
      throw PreconditionError(label + ": target fixed part is not isotropic, no linear correction");
    }
    const std::vector<Vector> f = fixed.basis_vectors();
    const std::size_t m = x.size() - s;
    const std::size_t k = f.size();
    const std::size_t eqs = x.size() * (x.size() + 1) / 2;
    Matrix a(eqs, m * k);
    Vector rhs(eqs);
    std::size_t row = 0;
    for (std::size_t p = 0; p < x.size(); ++p) {
      for (std::size_t q = p; q < x.size(); ++q, ++row) {
        rhs[row] = gram_defect(p, q);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            Rational coef = 0;
            if (q == s + i) coef += qs.pair(y[p], f[j]);
            if (p == s + i) coef += qs.pair(f[j], y[q]);
            a(row, i * k + j) = coef;
          }
        }
      }
    }
    const auto sol = m * k == 0 ? std::nullopt : solve(a, rhs);
    if (!sol) throw PreconditionError(label + ": correction system has no solution");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) y[s + i] = add(y[s + i], scaled(f[j], (*sol)[i * k + j]));
  }
  return {std::move(x), std::move(y)};
}

}  // namespace

IsometryMap build_isometry(const Representation& rep, const DecompositionReport& a, const DecompositionReport& b,
                           const Pairing& pairing) {
  const std::size_t n = rep.dim();
  if (!pairing.ok || pairing.partner.size() != a.summands.size() || a.summands.size() != b.summands.size()) {
    throw PreconditionError("build_isometry needs a complete pairing");
  }
  if (a.trivial_part.subspace.dim() != b.trivial_part.subspace.dim()) {
    throw PreconditionError("trivial parts differ in dimension");
  }
  struct Pair {
    Subspace src, tgt;
    std::string label;
  };
  std::vector<Pair> pairs;
  if (!a.trivial_part.subspace.is_zero()) {
    pairs.push_back({a.trivial_part.subspace, b.trivial_part.subspace, "trivial"});
  }
  for (std::size_t i = 0; i < a.summands.size(); ++i) {
    const Summand& tgt = b.summands[pairing.partner[i]];
    if (a.summands[i].subspace.dim() != tgt.subspace.dim()) {
      throw PreconditionError("summand " + std::to_string(i) + " and its partner differ in dimension");
    }
    pairs.push_back({a.summands[i].subspace, tgt.subspace,
                     "summand " + std::to_string(i) + " -> " + std::to_string(pairing.partner[i])});
  }

  IsometryMap out;
  std::vector<Vector> xs, ys;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Subspace rest(n);
    for (std::size_t l = 0; l < pairs.size(); ++l)
      if (l != k) rest = rest + pairs[l].tgt;
    if (pairs[k].src == pairs[k].tgt) {
      for (const auto& v : pairs[k].src.basis_vectors()) {
        xs.push_back(v);
        ys.push_back(v);
      }
      out.block_structure.push_back(pairs[k].label + ": identity");
      continue;
    }
    BlockMap block = map_block(rep, pairs[k].src, pairs[k].tgt, rest, pairs[k].label);
    xs.insert(xs.end(), block.source.begin(), block.source.end());
    ys.insert(ys.end(), block.target.begin(), block.target.end());
    out.block_structure.push_back(pairs[k].label + ": projection with isotropic correction");
  }
  if (xs.size() != n) throw PreconditionError("source parts do not span the ambient space");
  out.matrix = Matrix::from_columns(ys, n) * inverse(Matrix::from_columns(xs, n));

  const Matrix& g = rep.space().gram();
  if (out.matrix.transpose() * g * out.matrix != g) {
    throw InternalInconsistency("assembled isometry does not preserve the form");
  }
  for (const auto& p : pairs) {
    if (apply(out.matrix, p.src) != p.tgt) throw InternalInconsistency("isometry misses a target part");
  }
  out.equivariant = std::all_of(rep.generators().begin(), rep.generators().end(),
                                [&](const Generator& gen) { return gen.matrix * out.matrix == out.matrix * gen.matrix; });
  return out;
}

namespace {

Subspace factor_span(const Factor& f, std::size_t n) {
  std::vector<Vector> vs;
  std::vector<Matrix> group;
  for (const auto& g : f.generators) {
    if (g.kind == GeneratorKind::infinitesimal) {
      vs.push_back(flatten(g.matrix));
    } else {
      group.push_back(g.matrix);
    }
  }
  std::vector<Matrix> words{Matrix::identity(n)};
  std::vector<Matrix> frontier = words;
  for (int len = 1; len <= 3 && !group.empty(); ++len) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& g : group) next.push_back(w * g);
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  if (!group.empty())
    for (const auto& w : words) vs.push_back(flatten(w));
  return Subspace::span(n * n, vs);
}

}  // namespace

std::vector<bool> factors_equal(const Representation& rep, const FactorDecomposition& fa,
                                const FactorDecomposition& fb, const Pairing& pairing) {
  const std::size_t n = rep.dim();
  std::vector<bool> out;
  for (std::size_t i = 0; i < pairing.partner.size(); ++i) {
    const std::size_t j = pairing.partner[i];
    if (i >= fa.factors.size() || j >= fb.factors.size()) {
      out.push_back(false);
      continue;
    }
    out.push_back(factor_span(fa.factors[i], n) == factor_span(fb.factors[j], n));
  }
  return out;
}

ComparisonReport compare(const Representation& rep, const DecompositionReport& a, const DecompositionReport& b) {
  ComparisonReport out;
  out.p1_equal = a.p1 == b.p1;
  out.p2_equal = a.p2 == b.p2;
  out.trivial_identical = a.trivial_part.subspace == b.trivial_part.subspace;
  out.matching = match_summands(rep, a, b);
  if (!out.matching.ok) {
    out.diagnostics.push_back(out.matching.failure);
    return out;
  }
  bool all_identical = out.trivial_identical;
  for (std::size_t i = 0; i < a.summands.size(); ++i) {
    const Summand& sa = a.summands[i];
    const Summand& sb = b.summands[out.matching.partner[i]];
    out.dims_equal.push_back(sa.subspace.dim() == sb.subspace.dim());
    out.moved_spans_equal.push_back(moved_span(rep, sa.subspace) == moved_span(rep, sb.subspace));
    out.subspace_identical.push_back(sa.subspace == sb.subspace);
    all_identical = all_identical && out.subspace_identical.back();
  }
  out.factor_comparison_bounded = std::any_of(rep.generators().begin(), rep.generators().end(),
                                              [](const Generator& g) { return g.kind == GeneratorKind::group; });
  out.factors_equal = factors_equal(rep, factor_generators(rep, a.summand_subspaces()),
                                    factor_generators(rep, b.summand_subspaces()), out.matching);
  try {
    out.isometry = build_isometry(rep, a, b, out.matching);
  } catch (const PreconditionError& e) {
    out.diagnostics.push_back(std::string("isometry construction failed: ") + e.what());
  }
  if (all_identical) {
    out.verdict = ComparisonVerdict::identical;
  } else if (out.isometry) {
    out.verdict = ComparisonVerdict::equivalent_up_to_isometry;
  } else {
    out.verdict = ComparisonVerdict::distinct;
  }
  return out;
}

std::optional<std::vector<Subspace>> mixing_witness(const Representation& rep, const DecompositionReport& report,
                                                    std::size_t i, std::size_t j) {
  const QuadraticSpace& qs = rep.space();
  const Subspace& mi = report.summands.at(i).subspace;
  const Subspace& mj = report.summands.at(j).subspace;
  const Subspace fixed = fixed_space(rep);
  const Subspace fi = intersect(fixed, mi);
  const Subspace fj = intersect(fixed, mj);
  if (fi.is_zero() || fj.is_zero()) return std::nullopt;

  // phi: mi -> fixed part of mj, sending the first vector of a complement of
  // the moved span to minus the first fixed basis vector, everything else to 0.
  const Subspace moved_i = moved_span(rep, mi);
  const std::vector<Vector> comp = extend_independent(moved_i, mi.basis_vectors());
  if (comp.empty()) return std::nullopt;
  std::vector<Vector> xi = moved_i.basis_vectors();
  const std::size_t si = xi.size();
  xi.insert(xi.end(), comp.begin(), comp.end());
  const Vector target = scaled(fj.basis_vector(0), -1);
  auto phi = [&](std::size_t p) { return p == si ? target : Vector(rep.dim()); };

  std::vector<Vector> wi;
  for (std::size_t p = 0; p < xi.size(); ++p) wi.push_back(add(xi[p], phi(p)));

  // psi: mj -> fixed part of mi with <x, psi y> = -<phi x, y>.
  const std::vector<Vector> hi = fi.basis_vectors();
  Matrix a(xi.size(), hi.size());
  for (std::size_t p = 0; p < xi.size(); ++p)
    for (std::size_t q = 0; q < hi.size(); ++q) a(p, q) = qs.pair(xi[p], hi[q]);
  std::vector<Vector> wj;
  for (const auto& y : mj.basis_vectors()) {
    Vector rhs(xi.size());
    for (std::size_t p = 0; p < xi.size(); ++p) rhs[p] = -qs.pair(phi(p), y);
    const auto c = solve(a, rhs);
    if (!c) return std::nullopt;
    Vector v = y;
    for (std::size_t q = 0; q < hi.size(); ++q) v = add(v, scaled(hi[q], (*c)[q]));
    wj.push_back(std::move(v));
  }

  std::vector<Subspace> parts;
  if (!report.trivial_part.subspace.is_zero()) parts.push_back(report.trivial_part.subspace);
  for (std::size_t k = 0; k < report.summands.size(); ++k) {
    if (k == i) {
      parts.push_back(Subspace::span(rep.dim(), wi));
    } else if (k == j) {
      parts.push_back(Subspace::span(rep.dim(), wj));
    } else {
      parts.push_back(report.summands[k].subspace);
    }
  }
  return parts;
}

UniquenessResult uniqueness_verdict(const Representation& rep, const DecompositionReport& report,
                                    const PhiVerdict& phi) {
  UniquenessResult out;
  if (phi.satisfied()) {
    out.verdict = Uniqueness::unique_up_to_order;
    out.probabilistic = phi.status == PhiStatus::satisfied_probabilistic;
    out.detail = "condition holds on every summand with fixed vectors";
    return out;
  }
  std::vector<std::size_t> bad;
  for (const auto& w : phi.witnesses)
    if (w.verdict == ModuleVerdict::decomposable) bad.push_back(w.summand_index);
  if (bad.size() == 1) {
    out.verdict = Uniqueness::unique_one_bad_factor;
    out.probabilistic = phi.status == PhiStatus::inconclusive;
    out.detail = "only summand " + std::to_string(bad[0] + 1) + " has fixed vectors and splits as a module";
    return out;
  }
  if (bad.size() >= 2) {
    for (std::size_t x = 0; x < bad.size(); ++x) {
      for (std::size_t y = x + 1; y < bad.size(); ++y) {
        auto parts = mixing_witness(rep, report, bad[x], bad[y]);
        if (!parts || !verify_decomposition(rep, *parts, report.seed).all_passed()) continue;
        if (*parts == report.parts()) continue;
        out.verdict = Uniqueness::nonunique_witnessed;
        out.witness = std::move(parts);
        out.detail = "summands " + std::to_string(bad[x] + 1) + " and " + std::to_string(bad[y] + 1) + " mixed";
        return out;
      }
    }
    out.detail = "no valid mixed decomposition constructed";
    return out;
  }
  out.detail = "no module-decomposable summand with fixed vectors";
  return out;
}

}  // namespace holo
