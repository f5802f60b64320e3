#pragma once

#include <string>
#include <vector>

#include "holo/quadratic_space.hpp"
#include "holo/subspace.hpp"

namespace holo {

enum class GeneratorKind { group, infinitesimal };

const char* to_string(GeneratorKind kind);

/// A group element g (g^T G g = G) or an infinitesimal element n of the
/// orthogonal Lie algebra (n^T G + G n = 0). A one-parameter group exp(t n)
/// is represented by n.
struct Generator {
  GeneratorKind kind = GeneratorKind::group;
  Matrix matrix;

  /// g - I for group elements, n itself for infinitesimal ones. Fixed
  /// vectors are its kernel, moved vectors its image.
  Matrix action() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A form-preserving action of a finitely generated group on a quadratic
/// space. Whether the generators generate the intended closed group is the
/// caller's business.
class Representation {
 public:
  /// Throws InvariantViolation when a generator does not preserve the form
  /// (or is singular, for group kind) and DimensionError on shape mismatch.
  Representation(QuadraticSpace space, std::vector<Generator> generators, std::string label = {});

  const QuadraticSpace& space() const noexcept { return space_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t dim() const noexcept { return space_.dim(); }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  QuadraticSpace space_;
  std::vector<Generator> generators_;
  std::string label_;
};

/// Vectors fixed by every generator: the intersection of ker(g - I) and ker(n).
Subspace fixed_space(const Representation& rep);
/// Sum of im(g - I) and im(n) over the generators. For group kind this is
/// already the span of all v - hv over the generated group, because
/// gh - I = g(h - I) + (g - I) and the sum is invariant.
Subspace moved_span(const Representation& rep);
/// Moved span of the action restricted to an invariant subspace.
Subspace moved_span(const Representation& rep, const Subspace& s);
bool is_invariant(const Representation& rep, const Subspace& s);
/// True when every generator acts trivially on s.
bool acts_trivially(const Representation& rep, const Subspace& s);

/// The action on an invariant nondegenerate subspace, in coordinates of its
/// canonical basis. Throws PreconditionError otherwise.
Representation restrict(const Representation& rep, const Subspace& s);
/// Same, in coordinates of the given basis rows.
Representation restrict_to_basis(const Representation& rep, const Matrix& basis_rows);

/// Basis of {X : X A = A X for every generator matrix A}.
std::vector<Matrix> commutant(const Representation& rep);
/// Basis of the commutant elements with G X = X^T G.
std::vector<Matrix> selfadjoint_commutant(const Representation& rep);

struct Factor {
  Subspace summand;
  std::vector<Generator> generators;
};

/// Generators of the normal subgroups H^i belonging to an orthogonal
/// decomposition: factor i acts as the original on summand i and trivially
/// everywhere else.
struct FactorDecomposition {
  std::vector<Factor> factors;
};

/// `summands` must be pairwise orthogonal, invariant and nondegenerate, and
/// the action must be trivial on the orthogonal complement of their sum.
FactorDecomposition factor_generators(const Representation& rep, const std::vector<Subspace>& summands);

}  // namespace holo
