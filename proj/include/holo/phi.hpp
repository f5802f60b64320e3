#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holo/decompose.hpp"
#include "holo/oracle.hpp"

namespace holo {

enum class ModuleVerdict { indecomposable_certified, indecomposable_probabilistic, decomposable };
const char* to_string(ModuleVerdict verdict);

struct ModuleIndecomposability {
  ModuleVerdict verdict = ModuleVerdict::indecomposable_probabilistic;
  std::optional<Matrix> witness;  // nontrivial idempotent of the commutant
  std::string method;
};

/// Whether rep splits as a direct sum of invariant subspaces, orthogonal or
/// not, by an idempotent search in the full commutant.
ModuleIndecomposability module_indecomposable(const Representation& rep, std::uint64_t seed = 0);

struct IsotropicPair {
  Subspace u1;
  Subspace u2;
};

/// Complementary invariant totally isotropic subspaces, starting from the
/// idempotent `witness`. Throws PreconditionError unless witness is a
/// nontrivial idempotent commuting with every generator.
std::optional<IsotropicPair> isotropic_pair_split(const Representation& rep, const Matrix& witness,
                                                  std::uint64_t seed = 0);

/// Per summand of the report: true iff the summand is fixed_isotropic with
/// n_plus = n_minus.
std::vector<bool> neutral_signature_screen(const DecompositionReport& report);

enum class PhiStatus { satisfied_certified, satisfied_probabilistic, violated, inconclusive };
const char* to_string(PhiStatus status);

/// Evidence for one summand with nonzero fixed space. Matrices and
/// subspaces are in ambient coordinates.
struct PhiWitness {
  std::size_t summand_index = 0;
  Subspace summand;
  bool neutral = false;
  ModuleVerdict verdict = ModuleVerdict::indecomposable_probabilistic;
  std::string method;
  std::optional<Matrix> projector;
  std::optional<IsotropicPair> isotropic_pair;
};

struct PhiVerdict {
  PhiStatus status = PhiStatus::satisfied_certified;
  std::vector<PhiWitness> witnesses;
  bool oracle_used = false;

  bool satisfied() const {
    return status == PhiStatus::satisfied_certified || status == PhiStatus::satisfied_probabilistic;
  }
  std::size_t decomposable_count() const;
};

struct PhiOptions {
  std::uint64_t seed = 0;
  /// When nonempty, the finite-field search runs on every summand left
  /// without a certificate, over the given primes (extended past invalid
  /// ones to three valid primes).
  std::vector<std::uint64_t> oracle_primes;
};

/// Throws PreconditionError when the report does not fit rep.
PhiVerdict phi_check(const Representation& rep, const DecompositionReport& report, const PhiOptions& options = {});

/// Claims of the rational engine on rep, in the form crosscheck consumes.
oracle::RationalVerdicts rational_verdicts(const Representation& rep, std::uint64_t seed = 0);

}  // namespace holo
