#include "holo/representation.hpp"

#include "holo/errors.hpp"

namespace holo {

const char* to_string(GeneratorKind kind) {
  return kind == GeneratorKind::group ? "group" : "infinitesimal";
}

Matrix Generator::action() const {
  if (kind == GeneratorKind::infinitesimal) return matrix;
  return matrix - Matrix::identity(matrix.rows());
}

Representation::Representation(QuadraticSpace space, std::vector<Generator> generators, std::string label)
    : space_(std::move(space)), generators_(std::move(generators)), label_(std::move(label)) {
  const Matrix& g = space_.gram();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Matrix& m = generators_[i].matrix;
    const std::string where = "generator " + std::to_string(i);
    if (m.rows() != dim() || m.cols() != dim()) throw DimensionError(where + " has the wrong shape");
    if (generators_[i].kind == GeneratorKind::group) {
      if (m.transpose() * g * m != g) throw InvariantViolation(where + " does not preserve the form");
      if (rank(m) != dim()) throw InvariantViolation(where + " is singular");
    } else if (!(m.transpose() * g + g * m).is_zero()) {
      throw InvariantViolation(where + " is not skew-adjoint for the form");
    }
  }
}

Subspace fixed_space(const Representation& rep) {
  Matrix stacked(0, rep.dim());
  for (const auto& gen : rep.generators()) stacked = Matrix::vstack(stacked, gen.action());
  return kernel_basis(stacked);
}

Subspace moved_span(const Representation& rep) {
  Subspace total(rep.dim());
  for (const auto& gen : rep.generators()) total = total + image(gen.action());
  return total;
}

Subspace moved_span(const Representation& rep, const Subspace& s) {
  Subspace total(rep.dim());
  for (const auto& gen : rep.generators()) total = total + apply(gen.action(), s);
  return total;
}

bool is_invariant(const Representation& rep, const Subspace& s) {
  if (s.ambient_dim() != rep.dim()) throw DimensionError("is_invariant: dimension mismatch");
  for (const auto& gen : rep.generators()) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (!s.contains(gen.matrix * s.basis_vector(i))) return false;
    }
  }
  return true;
}

bool acts_trivially(const Representation& rep, const Subspace& s) {
  return fixed_space(rep).contains(s);
}

Representation restrict_to_basis(const Representation& rep, const Matrix& basis_rows) {
  if (basis_rows.cols() != rep.dim()) throw DimensionError("restrict: dimension mismatch");
  if (rank(basis_rows) != basis_rows.rows()) throw PreconditionError("restrict: basis rows are dependent");
  const Subspace s = Subspace::span(basis_rows);
  if (!is_invariant(rep, s)) throw PreconditionError("restrict: subspace is not invariant");
  const Matrix gram = restrict_form(rep.space(), basis_rows);
  if (rank(gram) != gram.rows()) throw PreconditionError("restrict: restricted form is degenerate");
  const Matrix columns = basis_rows.transpose();
  std::vector<Generator> gens;
  for (const auto& gen : rep.generators()) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < basis_rows.rows(); ++j) {
      auto coords = solve(columns, gen.matrix * basis_rows.row(j));
      if (!coords) throw InternalInconsistency("restrict: image left the invariant subspace");
      cols.push_back(std::move(*coords));
    }
    gens.push_back({gen.kind, Matrix::from_columns(cols, basis_rows.rows())});
  }
  return Representation(QuadraticSpace(gram), std::move(gens), rep.label());
}

Representation restrict(const Representation& rep, const Subspace& s) {
  if (s.ambient_dim() != rep.dim()) throw DimensionError("restrict: dimension mismatch");
  return restrict_to_basis(rep, s.basis());
}

namespace {

// Rows of the linear system X A - A X = 0 in the row-major entries of X.
Matrix commutation_rows(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix rows(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t eq = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        rows(eq, i * n + k) += a(k, j);
        rows(eq, k * n + j) -= a(i, k);
      }
    }
  }
  return rows;
}

std::vector<Matrix> solution_matrices(const Matrix& system, std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& v : null_space(system)) out.push_back(unflatten(v, n, n));
  return out;
}

Matrix commutant_system(const Representation& rep) {
  const std::size_t n = rep.dim();
  Matrix system(0, n * n);
  for (const auto& gen : rep.generators()) system = Matrix::vstack(system, commutation_rows(gen.matrix));
  return system;
}

}  // namespace

std::vector<Matrix> commutant(const Representation& rep) {
  const std::size_t n = rep.dim();
  Matrix system = commutant_system(rep);
  if (system.rows() == 0) system = Matrix(1, n * n);
  return solution_matrices(system, n);
}

std::vector<Matrix> selfadjoint_commutant(const Representation& rep) {
  const std::size_t n = rep.dim();
  const Matrix& g = rep.space().gram();
  // G X - X^T G = 0
  Matrix sa(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t eq = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        sa(eq, k * n + j) += g(i, k);
        sa(eq, k * n + i) -= g(k, j);
      }
    }
  }
  return solution_matrices(Matrix::vstack(commutant_system(rep), sa), n);
}

FactorDecomposition factor_generators(const Representation& rep, const std::vector<Subspace>& summands) {
  const QuadraticSpace& qs = rep.space();
  const std::size_t n = rep.dim();
  Subspace total(n);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const Subspace& s = summands[i];
    const std::string where = "factor_generators: summand " + std::to_string(i);
    if (s.ambient_dim() != n) throw DimensionError(where + " has the wrong ambient dimension");
    if (!is_invariant(rep, s)) throw PreconditionError(where + " is not invariant");
    if (!is_nondegenerate(qs, s)) throw PreconditionError(where + " is degenerate");
    for (std::size_t j = 0; j < i; ++j) {
      if (!orthogonal(qs, s, summands[j])) {
        throw PreconditionError(where + " is not orthogonal to summand " + std::to_string(j));
      }
    }
    total = total + s;
  }
  const Subspace trivial = orth_complement(qs, total);
  if (!acts_trivially(rep, trivial)) {
    throw PreconditionError("factor_generators: the action is not trivial off the summands");
  }

  Matrix basis_rows = trivial.basis();
  std::vector<std::size_t> offsets;
  for (const auto& s : summands) {
    offsets.push_back(basis_rows.rows());
    basis_rows = Matrix::vstack(basis_rows, s.basis());
  }
  const Matrix b = basis_rows.transpose();
  const Matrix binv = inverse(b);

  FactorDecomposition out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    Factor factor{summands[i], {}};
    const std::size_t lo = offsets[i];
    const std::size_t hi = lo + summands[i].dim();
    for (const auto& gen : rep.generators()) {
      const Matrix local = binv * gen.matrix * b;
      Matrix block = gen.kind == GeneratorKind::group ? Matrix::identity(n) : Matrix(n, n);
      for (std::size_t r = lo; r < hi; ++r)
        for (std::size_t c = lo; c < hi; ++c) block(r, c) = local(r, c);
      Matrix m = b * block * binv;
      const bool trivial_factor = gen.kind == GeneratorKind::group ? m.is_identity() : m.is_zero();
      if (!trivial_factor) factor.generators.push_back({gen.kind, std::move(m)});
    }
    out.factors.push_back(std::move(factor));
  }
  return out;
}

}  // namespace holo
