#include "holo/phi.hpp"

#include <algorithm>

#include "holo/errors.hpp"

namespace holo {

const char* to_string(ModuleVerdict verdict) {
  switch (verdict) {
    case ModuleVerdict::indecomposable_certified: return "indecomposable_certified";
    case ModuleVerdict::indecomposable_probabilistic: return "indecomposable_probabilistic";
    case ModuleVerdict::decomposable: return "decomposable";
  }
  return "?";
}

const char* to_string(PhiStatus status) {
  switch (status) {
    case PhiStatus::satisfied_certified: return "satisfied_certified";
    case PhiStatus::satisfied_probabilistic: return "satisfied_probabilistic";
    case PhiStatus::violated: return "violated";
    case PhiStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

constexpr std::size_t kFittingProbes = 64;

// Minimal polynomial is a power of a single irreducible factor, decided for
// radicals of degree at most three.
bool primary_minpoly(const Matrix& x) {
  const Polynomial f = minimal_polynomial(x);
  const Polynomial rad = divmod(f, gcd(f, f.derivative())).first;
  const auto irreducible = irreducible_small_degree(rad);
  return irreducible.value_or(false);
}

bool fitting_trivial(const Matrix& x) {
  const FittingSplit split = fitting_split(x);
  return split.kernel_part.is_zero() || split.image_part.is_zero();
}

bool commutes_with_generators(const Representation& rep, const Matrix& x) {
  return std::all_of(rep.generators().begin(), rep.generators().end(),
                     [&](const Generator& g) { return g.matrix * x == x * g.matrix; });
}

// The graph of a map phi: u -> target that vanishes on the moved span of u,
// chosen so the graph is totally isotropic. The graph stays invariant
// because target consists of fixed vectors; the equations are linear in phi
// because target is totally isotropic.
std::optional<Subspace> isotropic_graph(const Representation& rep, const Subspace& u, const Subspace& target) {
  const QuadraticSpace& qs = rep.space();
  if (is_totally_isotropic(qs, u)) return u;
  const Subspace moved = moved_span(rep, u);
  std::vector<Vector> x = moved.basis_vectors();
  const std::size_t s = x.size();
  for (auto& c : extend_independent(moved, u.basis_vectors())) x.push_back(std::move(c));
  const std::vector<Vector> f = target.basis_vectors();
  const std::size_t m = x.size() - s;
  const std::size_t k = f.size();
  if (m == 0 || k == 0) return std::nullopt;

  const std::size_t eqs = x.size() * (x.size() + 1) / 2;
  Matrix a(eqs, m * k);
  Vector rhs(eqs);
  std::size_t row = 0;
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t q = p; q < x.size(); ++q, ++row) {
      rhs[row] = -qs.pair(x[p], x[q]);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          Rational coef = 0;
          if (q == s + i) coef += qs.pair(x[p], f[j]);
          if (p == s + i) coef += qs.pair(f[j], x[q]);
          a(row, i * k + j) = coef;
        }
      }
    }
  }
  const auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;
  std::vector<Vector> graph;
  for (std::size_t p = 0; p < x.size(); ++p) {
    Vector v = x[p];
    if (p >= s) {
      for (std::size_t j = 0; j < k; ++j) v = add(v, scaled(f[j], (*sol)[(p - s) * k + j]));
    }
    graph.push_back(std::move(v));
  }
  Subspace out = Subspace::span(rep.dim(), graph);
  if (!is_totally_isotropic(qs, out)) throw InternalInconsistency("isotropic graph correction failed to verify");
  return out;
}

std::optional<IsotropicPair> pair_from(const Representation& rep, const Subspace& u1, const Subspace& u2) {
  const QuadraticSpace& qs = rep.space();
  const Subspace fixed = fixed_space(rep);
  if (!(is_totally_isotropic(qs, u1) && is_totally_isotropic(qs, u2))) {
    if (!is_totally_isotropic(qs, fixed)) return std::nullopt;
  }
  auto v1 = isotropic_graph(rep, u1, intersect(fixed, u2));
  if (!v1) return std::nullopt;
  auto v2 = isotropic_graph(rep, u2, intersect(fixed, *v1));
  if (!v2) return std::nullopt;
  if (!(is_invariant(rep, *v1) && is_invariant(rep, *v2) && independent({*v1, *v2}) && (*v1 + *v2).is_full())) {
    return std::nullopt;
  }
  if (canonical_order(*v2, *v1) < 0) std::swap(v1, v2);
  return IsotropicPair{*v1, *v2};
}

}  // namespace

ModuleIndecomposability module_indecomposable(const Representation& rep, std::uint64_t seed) {
  const std::size_t n = rep.dim();
  if (n <= 1) return {ModuleVerdict::indecomposable_certified, std::nullopt, "dimension at most one"};
  const std::vector<Matrix> basis = commutant(rep);
  SeededStream stream(seed);
  if (auto found = find_idempotent(basis, n, stream, SplitSearchOptions{})) {
    return {ModuleVerdict::decomposable, found->projector, found->source};
  }
  if (basis.size() <= 1) return {ModuleVerdict::indecomposable_certified, std::nullopt, "commutant is one-dimensional"};
  if (scalar_plus_nilpotent(basis, n)) {
    return {ModuleVerdict::indecomposable_certified, std::nullopt, "commutant is scalars plus nilpotents"};
  }
  bool primary = std::all_of(basis.begin(), basis.end(), primary_minpoly);
  SeededStream probes = stream.fork(0x5eed);
  for (std::size_t t = 0; primary && t < kFittingProbes; ++t) {
    Matrix x(n, n);
    for (const auto& b : basis) x += b * Rational(probes.uniform(-3, 3));
    primary = fitting_trivial(x) && primary_minpoly(x);
  }
  if (primary) {
    return {ModuleVerdict::indecomposable_certified, std::nullopt,
            "primary minimal polynomials and trivial Fitting splits"};
  }
  return {ModuleVerdict::indecomposable_probabilistic, std::nullopt, "no commutant idempotent found"};
}

std::optional<IsotropicPair> isotropic_pair_split(const Representation& rep, const Matrix& witness,
                                                  std::uint64_t seed) {
  const std::size_t n = rep.dim();
  if (witness.rows() != n || witness.cols() != n || !is_nontrivial_idempotent(witness) ||
      !commutes_with_generators(rep, witness)) {
    throw PreconditionError("isotropic_pair_split needs a nontrivial idempotent commuting with the action");
  }
  std::vector<Matrix> candidates{witness};
  const std::vector<Matrix> basis = commutant(rep);
  for (std::uint64_t k = 0; k < 8; ++k) {
    SeededStream stream(splitmix64(seed + k));
    auto found = find_idempotent(basis, n, stream, SplitSearchOptions{});
    if (found && std::find(candidates.begin(), candidates.end(), found->projector) == candidates.end()) {
      candidates.push_back(found->projector);
    }
  }
  for (const auto& p : candidates) {
    const Subspace im = image(p);
    const Subspace ker = kernel_basis(p);
    if (auto pair = pair_from(rep, im, ker)) return pair;
    if (auto pair = pair_from(rep, ker, im)) return pair;
  }
  return std::nullopt;
}

std::vector<bool> neutral_signature_screen(const DecompositionReport& report) {
  std::vector<bool> out;
  for (const auto& s : report.summands) {
    out.push_back(s.kind == SummandKind::fixed_isotropic && s.signature.neutral());
  }
  return out;
}

std::size_t PhiVerdict::decomposable_count() const {
  return static_cast<std::size_t>(std::count_if(witnesses.begin(), witnesses.end(), [](const PhiWitness& w) {
    return w.verdict == ModuleVerdict::decomposable;
  }));
}

namespace {

// Finite-field upgrade: no nontrivial commutant idempotent modulo three
// valid primes within the search bound.
std::optional<std::string> oracle_certify(const Representation& rep, const std::vector<std::uint64_t>& primes) {
  const oracle::CrosscheckReport cc = oracle::crosscheck(rep, oracle::RationalVerdicts{}, primes, 3);
  std::string used;
  for (const auto& check : cc.primes) {
    if (!check.valid) continue;
    if (!check.module || check.module->nontrivial > 0) return std::nullopt;
    used += (used.empty() ? "" : ", ") + std::to_string(check.prime);
  }
  return "no commutant idempotent modulo " + used;
}

}  // namespace

PhiVerdict phi_check(const Representation& rep, const DecompositionReport& report, const PhiOptions& options) {
  const QuadraticSpace& qs = rep.space();
  for (const auto& s : report.summands) {
    if (s.subspace.ambient_dim() != rep.dim() || !is_invariant(rep, s.subspace)) {
      throw PreconditionError("decomposition report does not match the representation");
    }
  }
  PhiVerdict out;
  bool any_violated = false, any_inconclusive = false, any_probabilistic = false;
  for (std::size_t i = 0; i < report.summands.size(); ++i) {
    const Summand& s = report.summands[i];
    if (s.fixed_dim == 0) continue;
    PhiWitness w;
    w.summand_index = i;
    w.summand = s.subspace;
    w.neutral = s.signature.neutral();
    if (!w.neutral) {
      w.verdict = ModuleVerdict::indecomposable_certified;
      w.method = "signature is not neutral";
    } else {
      const Representation local = restrict(rep, s.subspace);
      const ModuleIndecomposability mi = module_indecomposable(local, splitmix64(options.seed + i));
      w.verdict = mi.verdict;
      w.method = mi.method;
      if (mi.witness) {
        w.projector = lift_operator(qs, s.subspace, *mi.witness);
        if (auto pair = isotropic_pair_split(local, *mi.witness, options.seed)) {
          w.isotropic_pair = IsotropicPair{lift_subspace(s.subspace, pair->u1), lift_subspace(s.subspace, pair->u2)};
        }
      } else if (mi.verdict == ModuleVerdict::indecomposable_probabilistic && !options.oracle_primes.empty()) {
        out.oracle_used = true;
        if (auto method = oracle_certify(local, options.oracle_primes)) {
          w.verdict = ModuleVerdict::indecomposable_certified;
          w.method = *method;
        }
      }
    }
    if (w.verdict == ModuleVerdict::decomposable) {
      (s.indecomposability.certified ? any_violated : any_inconclusive) = true;
    } else if (w.verdict == ModuleVerdict::indecomposable_probabilistic || !s.indecomposability.certified) {
      any_probabilistic = true;
    }
    out.witnesses.push_back(std::move(w));
  }
  if (any_violated) {
    out.status = PhiStatus::violated;
  } else if (any_inconclusive) {
    out.status = PhiStatus::inconclusive;
  } else if (any_probabilistic) {
    out.status = PhiStatus::satisfied_probabilistic;
  } else {
    out.status = PhiStatus::satisfied_certified;
  }
  return out;
}

oracle::RationalVerdicts rational_verdicts(const Representation& rep, std::uint64_t seed) {
  oracle::RationalVerdicts out;
  const ModuleIndecomposability mi = module_indecomposable(rep, seed);
  out.module_witness = mi.witness;
  out.module_certified = mi.verdict == ModuleVerdict::indecomposable_certified;
  SeededStream stream(seed);
  if (auto split = orthogonal_split_once(rep, stream)) {
    out.orthogonal_witness = split->certificate;
  } else {
    out.orthogonal_certified = orthogonal_indecomposability(rep, SplitSearchOptions{}.random_attempts).certified;
  }
  return out;
}

}  // namespace holo
