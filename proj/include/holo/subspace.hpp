#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "holo/matrix.hpp"

namespace holo {

/// Linear subspace of Q^n held in canonical form: the basis rows are the
/// nonzero rows of a reduced row echelon form, so two subspaces are equal
/// exactly when their bases are entrywise equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  /// Span of the rows of `rows`.
  static Subspace span(const Matrix& rows);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  /// dim() x ambient_dim(), rows are the canonical basis vectors.
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Ambient vector with the given coordinates.
  Vector from_coordinates(const Vector& coords) const;
  /// Unit vectors on the non-pivot columns; spans a complement.
  Subspace standard_complement() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;
  /// Canonical order: dimension first, then basis entries lexicographically.
  friend std::strong_ordering canonical_order(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Sum of dimensions equals the dimension of the sum.
bool independent(const std::vector<Subspace>& parts);

/// Greedily picks, in order, the candidates that are independent modulo
/// `base` and of each other.
std::vector<Vector> extend_independent(const Subspace& base, const std::vector<Vector>& candidates);

/// {x : m x = 0}.
Subspace kernel_basis(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// Image of a subspace under m (columns act on column vectors).
Subspace apply(const Matrix& m, const Subspace& s);

/// Fitting decomposition of x: ker(x^n) and im(x^n).
struct FittingSplit {
  Subspace kernel_part;
  Subspace image_part;
};
FittingSplit fitting_split(const Matrix& x);

/// Projector onto `onto` along `along`; the two must be complementary.
Matrix projector(const Subspace& onto, const Subspace& along);

}  // namespace holo
