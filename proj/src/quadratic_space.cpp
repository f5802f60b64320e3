#include "holo/quadratic_space.hpp"

#include <string>

#include "holo/errors.hpp"

namespace holo {

QuadraticSpace::QuadraticSpace(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw InvariantViolation("gram matrix is not symmetric");
  if (rank(gram_) != gram_.rows()) throw InvariantViolation("gram matrix is degenerate");
}

Rational QuadraticSpace::pair(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

FormDiagonalization diagonalize_form(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw PreconditionError("diagonalize_form: matrix is not symmetric");
  const std::size_t n = symmetric.rows();
  auto form = [&](const Vector& a, const Vector& b) { return dot(a, symmetric * b); };

  std::vector<Vector> pending;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, Rational(0));
    e[i] = 1;
    pending.push_back(std::move(e));
  }
  std::vector<Vector> basis;
  Vector values;
  while (!pending.empty()) {
    std::size_t pick = pending.size();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (form(pending[i], pending[i]) != 0) {
        pick = i;
        break;
      }
    }
    if (pick == pending.size()) {
      // Every remaining vector is isotropic: replace u by u + v for a pair
      // with <u, v> != 0, giving <u+v, u+v> = 2<u, v>.
      for (std::size_t i = 0; i < pending.size() && pick == pending.size(); ++i) {
        for (std::size_t j = i + 1; j < pending.size(); ++j) {
          if (form(pending[i], pending[j]) != 0) {
            pending[i] = add(pending[i], pending[j]);
            pick = i;
            break;
          }
        }
      }
    }
    if (pick == pending.size()) break;  // the rest spans the radical
    const Vector v = pending[pick];
    const Rational qv = form(v, v);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    for (auto& x : pending) {
      const Rational c = form(x, v) / qv;
      if (c != 0) x = add(x, scaled(v, -c));
    }
    basis.push_back(v);
    values.push_back(qv);
  }
  for (auto& x : pending) {
    basis.push_back(x);
    values.emplace_back(0);
  }
  return {Matrix::from_rows(basis, n), values};
}

Signature form_signature(const Matrix& symmetric) {
  Signature sig;
  for (const auto& v : diagonalize_form(symmetric).values) {
    if (v > 0)
      ++sig.n_plus;
    else if (v < 0)
      ++sig.n_minus;
    else
      ++sig.n_zero;
  }
  return sig;
}

Signature signature(const QuadraticSpace& qs) { return form_signature(qs.gram()); }

Matrix restrict_form(const QuadraticSpace& qs, const Matrix& basis_rows) {
  if (basis_rows.cols() != qs.dim()) throw DimensionError("restrict_form: dimension mismatch");
  return basis_rows * qs.gram() * basis_rows.transpose();
}

Matrix restrict_form(const QuadraticSpace& qs, const Subspace& s) {
  if (s.ambient_dim() != qs.dim()) throw DimensionError("restrict_form: dimension mismatch");
  return restrict_form(qs, s.basis());
}

Matrix cross_form(const QuadraticSpace& qs, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != qs.dim() || b.ambient_dim() != qs.dim()) {
    throw DimensionError("cross_form: dimension mismatch");
  }
  return a.basis() * qs.gram() * b.basis().transpose();
}

Subspace orth_complement(const QuadraticSpace& qs, const Subspace& s) {
  if (s.ambient_dim() != qs.dim()) throw DimensionError("orth_complement: dimension mismatch");
  if (s.is_zero()) return Subspace::full(qs.dim());
  return kernel_basis(s.basis() * qs.gram());
}

Subspace radical(const QuadraticSpace& qs, const Subspace& s) { return intersect(s, orth_complement(qs, s)); }

bool is_nondegenerate(const QuadraticSpace& qs, const Subspace& s) { return radical(qs, s).is_zero(); }

bool is_totally_isotropic(const QuadraticSpace& qs, const Subspace& s) { return restrict_form(qs, s).is_zero(); }

bool orthogonal(const QuadraticSpace& qs, const Subspace& a, const Subspace& b) {
  return cross_form(qs, a, b).is_zero();
}

AdaptedBasis adapted_basis(const QuadraticSpace& qs, const Subspace& v, const Subspace& fixed_part,
                           const Subspace& moved_part) {
  const std::size_t n = qs.dim();
  if (v.ambient_dim() != n || fixed_part.ambient_dim() != n || moved_part.ambient_dim() != n) {
    throw DimensionError("adapted_basis: dimension mismatch");
  }
  if (!is_nondegenerate(qs, v)) throw PreconditionError("adapted_basis: v is degenerate");
  if (!moved_part.contains(fixed_part)) throw PreconditionError("adapted_basis: fixed part not inside moved part");
  if (!v.contains(moved_part)) throw PreconditionError("adapted_basis: moved part not inside v");
  if (!is_totally_isotropic(qs, fixed_part)) {
    throw PreconditionError("adapted_basis: fixed part is not totally isotropic");
  }
  if (intersect(orth_complement(qs, fixed_part), v) != moved_part) {
    throw PreconditionError("adapted_basis: moved part is not the complement of the fixed part within v");
  }

  const std::size_t r = fixed_part.dim();
  const std::size_t q = moved_part.dim();
  const std::vector<Vector> u = fixed_part.basis_vectors();

  // Nondegenerate middle block: a complement of the fixed part in the moved
  // part, diagonalized.
  const std::vector<Vector> c = extend_independent(fixed_part, moved_part.basis_vectors());
  std::vector<Vector> y;
  Vector a_diag;
  if (!c.empty()) {
    const Matrix cmat = Matrix::from_rows(c, n);
    const FormDiagonalization diag = diagonalize_form(restrict_form(qs, cmat));
    const Matrix ymat = diag.basis * cmat;
    for (std::size_t i = 0; i < ymat.rows(); ++i) {
      if (diag.values[i] == 0) throw InternalInconsistency("adapted_basis: middle block is degenerate");
      y.push_back(ymat.row(i));
      a_diag.push_back(diag.values[i]);
    }
  }

  // Hyperbolic partners for the fixed vectors inside the orthogonal
  // complement of the middle block.
  std::vector<Vector> w;
  if (r > 0) {
    const Subspace middle = Subspace::span(n, y);
    const Subspace p = intersect(v, orth_complement(qs, middle));
    const std::vector<Vector> z = extend_independent(fixed_part, p.basis_vectors());
    if (z.size() != r) throw InternalInconsistency("adapted_basis: wrong partner count");
    Matrix pairing(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) pairing(i, j) = qs.pair(u[i], z[j]);
    const Matrix pinv = inverse(pairing);
    std::vector<Vector> wp(r, Vector(n, Rational(0)));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (pinv(k, j) != 0) wp[j] = add(wp[j], scaled(z[k], pinv(k, j)));
    for (std::size_t i = 0; i < r; ++i) {
      Vector wi = wp[i];
      for (std::size_t j = 0; j < r; ++j) {
        const Rational s = qs.pair(wp[i], wp[j]);
        if (s != 0) wi = add(wi, scaled(u[j], -s / 2));
      }
      w.push_back(std::move(wi));
    }
  }

  AdaptedBasis out;
  std::vector<Vector> rows = u;
  rows.insert(rows.end(), y.begin(), y.end());
  rows.insert(rows.end(), w.begin(), w.end());
  out.basis = Matrix::from_rows(rows, n);
  out.r = r;
  out.q = q;
  out.a_diagonal = a_diag;
  for (const auto& a : a_diag) out.signs.push_back(sign(a));
  return out;
}

Matrix adjoint(const QuadraticSpace& qs, const Matrix& x) {
  return inverse(qs.gram()) * x.transpose() * qs.gram();
}

}  // namespace holo
