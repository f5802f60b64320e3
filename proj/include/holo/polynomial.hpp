#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holo/matrix.hpp"

namespace holo {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({0, 1}); }
  /// x - root
  static Polynomial linear(const Rational& root) { return Polynomial({-root, 1}); }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  Matrix evaluate(const Matrix& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws PreconditionError on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial power(const Polynomial& p, unsigned k);

/// Yun's algorithm: monic squarefree factors paired with their multiplicity,
/// multiplicities strictly increasing. The product of f_i^i is monic(p).
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p);

/// Distinct rational roots. Candidate enumeration is skipped (returns the
/// roots found so far) when the integer coefficients at either end exceed
/// `search_limit` in absolute value.
std::vector<Rational> rational_roots(const Polynomial& p, unsigned long search_limit = 1000000UL);

/// Irreducibility over the rationals when it can be decided cheaply
/// (degree <= 3); nothing otherwise.
std::optional<bool> irreducible_small_degree(const Polynomial& p);

/// Refines a family of monic polynomials into pairwise coprime monic
/// factors whose products recover every radical in the family.
std::vector<Polynomial> coprime_base(const std::vector<Polynomial>& family);

/// Monic polynomial of least degree annihilating m. Throws DimensionError
/// for non-square input.
Polynomial minimal_polynomial(const Matrix& m);
Polynomial characteristic_polynomial(const Matrix& m);

/// exp(t n) for nilpotent n, as the finite exact sum. Throws
/// PreconditionError when n^dim != 0.
Matrix nilpotent_exp(const Matrix& n, const Rational& t);

}  // namespace holo
