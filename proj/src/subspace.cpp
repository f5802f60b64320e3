#include "holo/subspace.hpp"

#include "holo/errors.hpp"

namespace holo {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  const RrefResult red = rref(rows);
  s.basis_ = red.reduced.block(0, 0, red.rank, rows.cols());
  s.pivots_ = red.pivot_columns;
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw DimensionError("span: vector length mismatch");
  return span(Matrix::from_rows(vectors, ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("coordinates: length mismatch");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vector Subspace::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) throw DimensionError("from_coordinates: length mismatch");
  Vector v(ambient_, Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i] == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) v[c] += coords[i] * basis_(i, c);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("contains: length mismatch");
  // In RREF coordinates are read off the pivots; v is inside iff it is
  // reproduced from them.
  return from_coordinates(coordinates(v)) == v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::standard_complement() const {
  std::vector<bool> pivot(ambient_, false);
  for (auto p : pivots_) pivot[p] = true;
  std::vector<Vector> units;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (pivot[c]) continue;
    Vector e(ambient_, Rational(0));
    e[c] = 1;
    units.push_back(std::move(e));
  }
  return span(ambient_, units);
}

std::strong_ordering canonical_order(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  const auto& ea = a.basis_.entries();
  const auto& eb = b.basis_.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    // Larger leading entries first so that earlier pivots sort first.
    if (ea[i] != eb[i]) return ea[i] > eb[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace sum: ambient mismatch");
  return Subspace::span(Matrix::vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersection: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  // sum_i x_i a_i = sum_j y_j b_j  <=>  [A^T | -B^T] (x, y) = 0
  const Matrix system = Matrix::hstack(a.basis().transpose(), -b.basis().transpose());
  std::vector<Vector> common;
  for (const auto& sol : null_space(system)) {
    Vector coords(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    common.push_back(a.from_coordinates(coords));
  }
  return Subspace::span(n, common);
}

bool independent(const std::vector<Subspace>& parts) {
  if (parts.empty()) return true;
  Subspace total(parts.front().ambient_dim());
  std::size_t dims = 0;
  for (const auto& p : parts) {
    total = total + p;
    dims += p.dim();
  }
  return total.dim() == dims;
}

std::vector<Vector> extend_independent(const Subspace& base, const std::vector<Vector>& candidates) {
  std::vector<Vector> picked;
  Subspace current = base;
  for (const auto& c : candidates) {
    if (current.contains(c)) continue;
    picked.push_back(c);
    current = current + Subspace::span(base.ambient_dim(), {c});
  }
  return picked;
}

Subspace kernel_basis(const Matrix& m) { return Subspace::span(m.cols(), null_space(m)); }

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("apply: shape mismatch");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(m * s.basis_vector(i));
  return Subspace::span(m.rows(), images);
}

FittingSplit fitting_split(const Matrix& x) {
  if (!x.is_square()) throw DimensionError("fitting_split of non-square matrix");
  const Matrix xn = x.pow(x.rows());
  return {kernel_basis(xn), image(xn)};
}

Matrix projector(const Subspace& onto, const Subspace& along) {
  const std::size_t n = onto.ambient_dim();
  if (along.ambient_dim() != n || onto.dim() + along.dim() != n || !independent({onto, along})) {
    throw PreconditionError("projector: subspaces are not complementary");
  }
  // Columns: basis of `along` then of `onto`; P = B diag(0, I) B^-1.
  const Matrix b = Matrix::vstack(along.basis(), onto.basis()).transpose();
  Matrix d(n, n);
  for (std::size_t i = along.dim(); i < n; ++i) d(i, i) = 1;
  return b * d * inverse(b);
}

}  // namespace holo
