#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holo/representation.hpp"
#include "holo/splitting.hpp"

namespace holo {

enum class SummandKind { trivial_flat, fixed_zero, fixed_isotropic };
const char* to_string(SummandKind kind);

/// How indecomposability of a summand is known. `certified` is a proof;
/// otherwise `retries` random splitting attempts all failed.
struct Indecomposability {
  bool certified = false;
  std::size_t retries = 0;
  std::string method;

  friend bool operator==(const Indecomposability&, const Indecomposability&) = default;
};

struct Summand {
  Subspace subspace;
  SummandKind kind = SummandKind::fixed_zero;
  Signature signature;
  std::size_t fixed_dim = 0;
  Subspace moved_span_local;
  Indecomposability indecomposability;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// The element that justified one orthogonal split: a self-adjoint
/// idempotent P of the ambient space, commuting with the action, with
/// im P the split-off part and ker P containing its complement in `parent`.
struct SplitCertificate {
  Subspace parent;
  Matrix projector;
  std::string source;

  friend bool operator==(const SplitCertificate&, const SplitCertificate&) = default;
};

/// M = M^0 (+) M^1 (+) ... (+) M^{p1+p2}, orthogonal, each M^i invariant,
/// with the fixed_zero summands listed before the fixed_isotropic ones.
struct DecompositionReport {
  Summand trivial_part;
  std::vector<Summand> summands;
  std::size_t p1 = 0;
  std::size_t p2 = 0;
  std::vector<SplitCertificate> certificates;
  std::uint64_t seed = 0;

  std::vector<Subspace> parts() const;  // trivial part first when nonzero
  std::vector<Subspace> summand_subspaces() const;
};

struct TrivialSplit {
  Subspace m0;
  Subspace w;
};

/// m0 is a maximal nondegenerate subspace of the fixed space (a complement
/// of its radical built greedily from the canonical basis), w its
/// orthogonal complement.
TrivialSplit split_trivial_part(const Representation& rep);

struct OrthogonalSplit {
  Subspace part;
  Subspace complement;
  Matrix certificate;
  std::string source;
};

/// One orthogonal invariant splitting of the whole space, found through a
/// nontrivial idempotent of the self-adjoint commutant; nothing when the
/// search fails.
std::optional<OrthogonalSplit> orthogonal_split_once(const Representation& rep, SeededStream& stream,
                                                     const SplitSearchOptions& options = {});

/// Proof or search-based evidence that rep admits no orthogonal splitting.
Indecomposability orthogonal_indecomposability(const Representation& rep, std::size_t retries);

DecompositionReport decompose(const Representation& rep, std::uint64_t seed = 0,
                              const SplitSearchOptions& options = {});

/// Builds the summand record for an invariant nondegenerate subspace on
/// which the action is not trivial.
Summand classify_summand(const Representation& rep, const Subspace& s, Indecomposability indecomposability);

/// Report for a caller-supplied orthogonal decomposition. Parts on which
/// the action is trivial are merged into the trivial part. Throws
/// PreconditionError when the parts fail verify_decomposition.
DecompositionReport report_from_parts(const Representation& rep, const std::vector<Subspace>& parts,
                                      std::uint64_t seed = 0);

/// Operator on the ambient space acting as `local` on s (in coordinates of
/// its canonical basis) and as zero on the orthogonal complement of s.
/// Requires s nondegenerate.
Matrix lift_operator(const QuadraticSpace& qs, const Subspace& s, const Matrix& local);

/// Subspace of the ambient space with the given coordinates in s.
Subspace lift_subspace(const Subspace& s, const Subspace& local);

struct Clause {
  std::string name;
  bool passed = true;
  bool applicable = true;
  std::string detail;
};

enum class PartVerdict { trivial_action, indecomposable_certified, indecomposable_probabilistic, decomposable, not_checked };
const char* to_string(PartVerdict verdict);

struct ValidityReport {
  std::vector<Clause> clauses;
  std::vector<PartVerdict> part_verdicts;
  /// Whether the hypotheses of the orthogonality-forcing check held.
  bool orthogonality_forced_applicable = false;

  bool all_passed() const;
  const Clause* find(const std::string& name) const;
};

/// Clause-by-clause check of a candidate decomposition. Never throws on bad
/// input; failures are report entries.
ValidityReport verify_decomposition(const Representation& rep, const std::vector<Subspace>& parts,
                                    std::uint64_t seed = 0);

}  // namespace holo
