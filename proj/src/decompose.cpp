#include "holo/decompose.hpp"

#include <algorithm>

#include "holo/errors.hpp"

namespace holo {

const char* to_string(SummandKind kind) {
  switch (kind) {
    case SummandKind::trivial_flat: return "trivial_flat";
    case SummandKind::fixed_zero: return "fixed_zero";
    case SummandKind::fixed_isotropic: return "fixed_isotropic";
  }
  return "?";
}

const char* to_string(PartVerdict verdict) {
  switch (verdict) {
    case PartVerdict::trivial_action: return "trivial_action";
    case PartVerdict::indecomposable_certified: return "indecomposable_certified";
    case PartVerdict::indecomposable_probabilistic: return "indecomposable_probabilistic";
    case PartVerdict::decomposable: return "decomposable";
    case PartVerdict::not_checked: return "not_checked";
  }
  return "?";
}

std::vector<Subspace> DecompositionReport::parts() const {
  std::vector<Subspace> out;
  if (!trivial_part.subspace.is_zero()) out.push_back(trivial_part.subspace);
  for (const auto& s : summands) out.push_back(s.subspace);
  return out;
}

std::vector<Subspace> DecompositionReport::summand_subspaces() const {
  std::vector<Subspace> out;
  for (const auto& s : summands) out.push_back(s.subspace);
  return out;
}

TrivialSplit split_trivial_part(const Representation& rep) {
  const QuadraticSpace& qs = rep.space();
  const Subspace fixed = fixed_space(rep);
  const Subspace rad = radical(qs, fixed);
  const Subspace m0 = Subspace::span(rep.dim(), extend_independent(rad, fixed.basis_vectors()));
  return {m0, orth_complement(qs, m0)};
}

std::optional<OrthogonalSplit> orthogonal_split_once(const Representation& rep, SeededStream& stream,
                                                     const SplitSearchOptions& options) {
  if (rep.dim() <= 1) return std::nullopt;
  const auto sa = selfadjoint_commutant(rep);
  auto found = find_idempotent(sa, rep.dim(), stream, options);
  if (!found) return std::nullopt;
  return OrthogonalSplit{image(found->projector), kernel_basis(found->projector), found->projector,
                         found->source};
}

Indecomposability orthogonal_indecomposability(const Representation& rep, std::size_t retries) {
  if (rep.dim() <= 1) return {true, 0, "dimension at most one"};
  const auto sa = selfadjoint_commutant(rep);
  if (sa.size() <= 1) return {true, 0, "self-adjoint commutant is one-dimensional"};
  if (scalar_plus_nilpotent(sa, rep.dim())) {
    return {true, 0, "self-adjoint commutant is scalars plus nilpotents"};
  }
  return {false, retries, "no self-adjoint splitting element found"};
}

Summand classify_summand(const Representation& rep, const Subspace& s, Indecomposability indecomposability) {
  const QuadraticSpace& qs = rep.space();
  Summand out;
  out.subspace = s;
  const Subspace fixed = intersect(fixed_space(rep), s);
  out.fixed_dim = fixed.dim();
  if (fixed.is_zero()) {
    out.kind = SummandKind::fixed_zero;
  } else if (is_totally_isotropic(qs, fixed)) {
    out.kind = SummandKind::fixed_isotropic;
  } else {
    throw PreconditionError("summand has a fixed space that is not totally isotropic");
  }
  out.signature = form_signature(restrict_form(qs, s));
  out.moved_span_local = moved_span(rep, s);
  out.indecomposability = std::move(indecomposability);
  return out;
}

namespace {

Summand trivial_summand(const Representation& rep, const Subspace& m0) {
  Summand t;
  t.subspace = m0;
  t.kind = SummandKind::trivial_flat;
  t.signature = form_signature(restrict_form(rep.space(), m0));
  t.fixed_dim = m0.dim();
  t.moved_span_local = Subspace(rep.dim());
  t.indecomposability = {true, 0, "trivial action"};
  return t;
}

void sort_summands(std::vector<Summand>& summands) {
  std::stable_sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return canonical_order(a.subspace, b.subspace) < 0;
  });
}

void count_kinds(DecompositionReport& report) {
  report.p1 = report.p2 = 0;
  for (const auto& s : report.summands) {
    if (s.kind == SummandKind::fixed_zero) ++report.p1;
    if (s.kind == SummandKind::fixed_isotropic) ++report.p2;
  }
}

}  // namespace

DecompositionReport decompose(const Representation& rep, std::uint64_t seed, const SplitSearchOptions& options) {
  const QuadraticSpace& qs = rep.space();
  DecompositionReport report;
  report.seed = seed;
  const TrivialSplit trivial = split_trivial_part(rep);
  report.trivial_part = trivial_summand(rep, trivial.m0);

  struct Node {
    Subspace space;
    std::uint64_t seed;
  };
  std::vector<Node> pending;
  if (!trivial.w.is_zero()) pending.push_back({trivial.w, splitmix64(seed)});
  while (!pending.empty()) {
    const Node node = pending.back();
    pending.pop_back();
    const Representation local = restrict(rep, node.space);
    SeededStream stream(node.seed);
    if (auto split = orthogonal_split_once(local, stream, options)) {
      report.certificates.push_back(
          {node.space, lift_operator(qs, node.space, split->certificate), split->source});
      Subspace a = lift_subspace(node.space, split->part);
      Subspace b = lift_subspace(node.space, split->complement);
      if (canonical_order(b, a) < 0) std::swap(a, b);
      // Pushed last is processed first: the lower part in canonical order.
      pending.push_back({b, splitmix64(node.seed + 2)});
      pending.push_back({a, splitmix64(node.seed + 1)});
      continue;
    }
    report.summands.push_back(
        classify_summand(rep, node.space, orthogonal_indecomposability(local, options.random_attempts)));
  }
  sort_summands(report.summands);
  count_kinds(report);
  return report;
}

Matrix lift_operator(const QuadraticSpace& qs, const Subspace& s, const Matrix& local) {
  const Subspace perp = orth_complement(qs, s);
  const Matrix b = Matrix::vstack(s.basis(), perp.basis()).transpose();
  return b * Matrix::direct_sum(local, Matrix(perp.dim(), perp.dim())) * inverse(b);
}

Subspace lift_subspace(const Subspace& s, const Subspace& local) {
  std::vector<Vector> vs;
  for (const auto& c : local.basis_vectors()) vs.push_back(s.from_coordinates(c));
  return Subspace::span(s.ambient_dim(), vs);
}

bool ValidityReport::all_passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed; });
}

const Clause* ValidityReport::find(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

ValidityReport verify_decomposition(const Representation& rep, const std::vector<Subspace>& parts,
                                    std::uint64_t seed) {
  const QuadraticSpace& qs = rep.space();
  const std::size_t n = rep.dim();
  ValidityReport out;
  auto idx = [](std::size_t i) { return "[" + std::to_string(i) + "]"; };

  bool shapes_ok = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].ambient_dim() != n) {
      out.clauses.push_back({"ambient" + idx(i), false, true, "part lives in the wrong ambient dimension"});
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;

  std::vector<bool> invariant(parts.size());
  std::vector<bool> nondegenerate(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    invariant[i] = is_invariant(rep, parts[i]);
    out.clauses.push_back({"invariant" + idx(i), invariant[i], true,
                           invariant[i] ? "" : "a generator moves the part out of itself"});
  }
  bool all_orthogonal = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const bool ok = orthogonal(qs, parts[i], parts[j]);
      all_orthogonal = all_orthogonal && ok;
      out.clauses.push_back({"orthogonal[" + std::to_string(i) + "," + std::to_string(j) + "]", ok, true,
                             ok ? "" : "cross Gram block is nonzero"});
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    nondegenerate[i] = !parts[i].is_zero() && is_nondegenerate(qs, parts[i]);
    out.clauses.push_back({"nondegenerate" + idx(i), nondegenerate[i], true,
                           nondegenerate[i] ? "" : (parts[i].is_zero() ? "part is zero" : "restricted form is degenerate")});
  }
  Subspace total(n);
  for (const auto& p : parts) total = total + p;
  const bool spans = total.is_full();
  const bool disjoint = independent(parts);
  out.clauses.push_back({"spans", spans, true, spans ? "" : "parts do not span the ambient space"});
  out.clauses.push_back({"disjoint", disjoint, true, disjoint ? "" : "the sum of the parts is not direct"});

  const Subspace fixed = fixed_space(rep);
  bool rest_indecomposable = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Clause c{"indecomposable" + idx(i), true, true, ""};
    PartVerdict verdict = PartVerdict::not_checked;
    if (!invariant[i] || !nondegenerate[i]) {
      c.applicable = false;
      c.detail = "not an invariant nondegenerate part";
    } else if (fixed.contains(parts[i])) {
      verdict = PartVerdict::trivial_action;
      c.applicable = false;
      c.detail = "trivial action";
    } else {
      const Representation local = restrict(rep, parts[i]);
      SeededStream stream(splitmix64(seed + i));
      if (auto split = orthogonal_split_once(local, stream)) {
        verdict = PartVerdict::decomposable;
        c.passed = false;
        c.detail = "orthogonal splitting found (" + split->source + ")";
      } else {
        const Indecomposability ind = orthogonal_indecomposability(local, SplitSearchOptions{}.random_attempts);
        verdict = ind.certified ? PartVerdict::indecomposable_certified : PartVerdict::indecomposable_probabilistic;
        c.detail = ind.method;
      }
    }
    if (verdict == PartVerdict::decomposable || verdict == PartVerdict::not_checked) rest_indecomposable = false;
    out.part_verdicts.push_back(verdict);
    out.clauses.push_back(std::move(c));
  }

  // Orthogonality forcing: the full fixed space, nondegenerate, orthogonal
  // to the other parts, plus indecomposable invariant nondegenerate parts
  // spanning directly, forces pairwise orthogonality.
  Clause forced{"orthogonality_forced", true, false, ""};
  const bool hypotheses_base = std::all_of(invariant.begin(), invariant.end(), [](bool b) { return b; }) &&
                               std::all_of(nondegenerate.begin(), nondegenerate.end(), [](bool b) { return b; }) &&
                               spans && disjoint && rest_indecomposable;
  std::size_t first_rest = 0;
  bool head_ok = false;
  if (is_nondegenerate(qs, fixed)) {
    if (fixed.is_zero()) {
      head_ok = true;
    } else if (!parts.empty() && parts[0] == fixed) {
      head_ok = true;
      first_rest = 1;
      for (std::size_t j = 1; j < parts.size(); ++j) head_ok = head_ok && orthogonal(qs, parts[0], parts[j]);
    }
  }
  if (hypotheses_base && head_ok) {
    out.orthogonality_forced_applicable = true;
    forced.applicable = true;
    bool ok = true;
    for (std::size_t i = first_rest; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) ok = ok && orthogonal(qs, parts[i], parts[j]);
    forced.passed = ok;
    forced.detail = ok ? "forced orthogonality holds" : "forced orthogonality FAILED";
  } else {
    forced.detail = "hypotheses not met";
  }
  out.clauses.push_back(std::move(forced));
  return out;
}

DecompositionReport report_from_parts(const Representation& rep, const std::vector<Subspace>& parts,
                                      std::uint64_t seed) {
  const ValidityReport validity = verify_decomposition(rep, parts, seed);
  if (!validity.all_passed()) {
    std::string failed;
    for (const auto& c : validity.clauses) {
      if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
    }
    throw PreconditionError("decomposition fails verification: " + failed);
  }
  DecompositionReport report;
  report.seed = seed;
  Subspace trivial(rep.dim());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (validity.part_verdicts[i] == PartVerdict::trivial_action) trivial = trivial + parts[i];
  }
  report.trivial_part = trivial_summand(rep, trivial);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const PartVerdict v = validity.part_verdicts[i];
    if (v == PartVerdict::trivial_action) continue;
    Indecomposability ind{v == PartVerdict::indecomposable_certified, 0, ""};
    if (!ind.certified) ind.retries = SplitSearchOptions{}.random_attempts;
    if (const Clause* c = validity.find("indecomposable[" + std::to_string(i) + "]")) ind.method = c->detail;
    report.summands.push_back(classify_summand(rep, parts[i], ind));
  }
  sort_summands(report.summands);
  count_kinds(report);
  return report;
}

}  // namespace holo
