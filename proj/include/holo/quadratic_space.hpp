#pragma once

#include <cstddef>
#include <vector>

#include "holo/matrix.hpp"
#include "holo/subspace.hpp"

namespace holo {

/// A finite-dimensional rational vector space with a nondegenerate
/// symmetric bilinear form, given by its Gram matrix in the standard basis.
class QuadraticSpace {
 public:
  QuadraticSpace() = default;
  /// Throws InvariantViolation when `gram` is not symmetric or is degenerate.
  explicit QuadraticSpace(Matrix gram);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  Rational pair(const Vector& x, const Vector& y) const;

  friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;

 private:
  Matrix gram_;
};

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  bool neutral() const noexcept { return n_plus == n_minus; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Congruence diagonalization of a symmetric matrix: rows of `basis` are
/// vectors x_i with x_i^T S x_j = 0 for i != j and x_i^T S x_i = values[i].
/// Zero values come last.
struct FormDiagonalization {
  Matrix basis;
  Vector values;
};
FormDiagonalization diagonalize_form(const Matrix& symmetric);

Signature form_signature(const Matrix& symmetric);
Signature signature(const QuadraticSpace& qs);

/// Gram matrix of the form over the rows of `basis_rows`.
Matrix restrict_form(const QuadraticSpace& qs, const Matrix& basis_rows);
Matrix restrict_form(const QuadraticSpace& qs, const Subspace& s);
/// Gram block <a_i, b_j> between two subspaces.
Matrix cross_form(const QuadraticSpace& qs, const Subspace& a, const Subspace& b);

Subspace orth_complement(const QuadraticSpace& qs, const Subspace& s);
/// s intersected with its orthogonal complement.
Subspace radical(const QuadraticSpace& qs, const Subspace& s);
bool is_nondegenerate(const QuadraticSpace& qs, const Subspace& s);
bool is_totally_isotropic(const QuadraticSpace& qs, const Subspace& s);
bool orthogonal(const QuadraticSpace& qs, const Subspace& a, const Subspace& b);

/// Basis x_1..x_{q+r} of a nondegenerate v with fixed = span(x_1..x_r),
/// moved = span(x_1..x_q) and Gram matrix
///
///     [ 0    0   I_r ]
///     [ 0    A   0   ]
///     [ I_r  0   0   ]
///
/// where A = diag(a_diagonal). The a_i are not normalized to +-1 (that
/// needs square roots); `signs` carries their signs.
struct AdaptedBasis {
  Matrix basis;
  std::size_t r = 0;
  std::size_t q = 0;
  Vector a_diagonal;
  std::vector<int> signs;
};
/// Throws PreconditionError naming the first failing clause.
AdaptedBasis adapted_basis(const QuadraticSpace& qs, const Subspace& v, const Subspace& fixed_part,
                           const Subspace& moved_part);

/// G^-1 X^T G, the adjoint of X with respect to the form.
Matrix adjoint(const QuadraticSpace& qs, const Matrix& x);

}  // namespace holo
