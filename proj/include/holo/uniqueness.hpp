#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holo/decompose.hpp"
#include "holo/phi.hpp"

namespace holo {

/// partner[i] is the index in b.summands matched to a.summands[i].
struct Pairing {
  std::vector<std::size_t> partner;
  bool ok = true;
  std::string failure;
};

/// Greedy pivot on nonzero intersection of moved spans, preferring an
/// identical subspace, then a partner of the same kind and dimension.
Pairing match_summands(const Representation& rep, const DecompositionReport& a, const DecompositionReport& b);

/// Linear map of the ambient space preserving the form and carrying every
/// part of one decomposition onto its partner in the other.
struct IsometryMap {
  Matrix matrix;
  std::vector<std::string> block_structure;
  bool equivariant = false;  // commutes with every generator
};

/// Throws PreconditionError when the pairing is unusable or the correction
/// system has no solution, InternalInconsistency when the assembled matrix
/// fails its final check.
IsometryMap build_isometry(const Representation& rep, const DecompositionReport& a, const DecompositionReport& b,
                           const Pairing& pairing);

/// Per matched pair, whether the factor generator data spans agree. Group
/// generators enter through all products of at most three of them, so
/// their comparison is bounded.
std::vector<bool> factors_equal(const Representation& rep, const FactorDecomposition& fa,
                                const FactorDecomposition& fb, const Pairing& pairing);

enum class ComparisonVerdict { identical, equivalent_up_to_isometry, distinct };
const char* to_string(ComparisonVerdict verdict);

struct ComparisonReport {
  Pairing matching;
  bool p1_equal = false;
  bool p2_equal = false;
  bool trivial_identical = false;
  std::vector<bool> dims_equal;
  std::vector<bool> moved_spans_equal;
  std::vector<bool> subspace_identical;
  std::vector<bool> factors_equal;
  bool factor_comparison_bounded = false;
  std::optional<IsometryMap> isometry;
  ComparisonVerdict verdict = ComparisonVerdict::distinct;
  std::vector<std::string> diagnostics;
};

ComparisonReport compare(const Representation& rep, const DecompositionReport& a, const DecompositionReport& b);

enum class Uniqueness { unique_up_to_order, unique_one_bad_factor, nonunique_witnessed, unknown };
const char* to_string(Uniqueness verdict);

struct UniquenessResult {
  Uniqueness verdict = Uniqueness::unknown;
  bool probabilistic = false;
  /// A second valid decomposition (all parts, trivial part first when
  /// nonzero) differing from the report's.
  std::optional<std::vector<Subspace>> witness;
  std::string detail;
};

/// Mixes summands i and j of the report: each is replaced by the graph of
/// a map into the fixed vectors of the other, keeping invariance and
/// orthogonality. Nothing when either has no fixed vectors.
std::optional<std::vector<Subspace>> mixing_witness(const Representation& rep, const DecompositionReport& report,
                                                    std::size_t i, std::size_t j);

UniquenessResult uniqueness_verdict(const Representation& rep, const DecompositionReport& report,
                                    const PhiVerdict& phi);

}  // namespace holo
