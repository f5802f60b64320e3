#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Matrices act on column
/// vectors: `m * v`.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix diagonal(const Vector& diag);
  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  /// Block-diagonal sum.
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const noexcept { return data_; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Rational trace() const;
  Matrix pow(std::size_t k) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row-reduced echelon form with the pivot columns of each nonzero row.
struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

/// Some x with a * x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Throws PreconditionError when singular.
Matrix inverse(const Matrix& m);
/// Basis (as columns) of {x : m x = 0}, in the order of the free columns.
std::vector<Vector> null_space(const Matrix& m);

/// Row-major flattening, used to treat matrices as vectors.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, const Rational& s);
bool is_zero(const Vector& v);
std::string to_string(const Vector& v);

}  // namespace holo
