#include "holo/splitting.hpp"

#include <algorithm>

#include "holo/subspace.hpp"

namespace holo {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

std::uint64_t SeededStream::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return splitmix64(state_);
}

std::int64_t SeededStream::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

bool is_nontrivial_idempotent(const Matrix& p) {
  return p.is_square() && !p.is_zero() && !p.is_identity() && p * p == p;
}

namespace {

std::optional<IdempotentWitness> from_fitting(const Matrix& y, const std::string& source) {
  const FittingSplit split = fitting_split(y);
  if (split.kernel_part.is_zero() || split.image_part.is_zero()) return std::nullopt;
  return IdempotentWitness{projector(split.image_part, split.kernel_part), source};
}

Polynomial radical_of(const Polynomial& p) { return divmod(p.monic(), gcd(p, p.derivative())).first.monic(); }

}  // namespace

std::optional<IdempotentWitness> split_by_element(const Matrix& x, std::vector<Polynomial>& known_factors) {
  if (auto w = from_fitting(x, "fitting")) return w;
  const Polynomial minpoly = minimal_polynomial(x);
  if (minpoly.degree() <= 1) return std::nullopt;
  const Polynomial rad = radical_of(minpoly);

  std::optional<Polynomial> factor;
  std::string how;
  if (rad.degree() > 1) {
    const auto roots = rational_roots(rad);
    if (!roots.empty()) {
      factor = Polynomial::linear(roots.front());
      how = "rational eigenvalue " + to_string(roots.front());
    }
  }
  if (!factor) {
    const auto layers = squarefree_decomposition(minpoly);
    if (layers.size() >= 2) {
      factor = layers.front().first;
      how = "squarefree layer";
    }
  }
  if (!factor) {
    for (const auto& h : known_factors) {
      const Polynomial g = gcd(rad, h);
      if (g.degree() >= 1 && g.degree() < rad.degree()) {
        factor = g;
        how = "gcd with " + h.to_string();
        break;
      }
    }
  }
  if (std::find(known_factors.begin(), known_factors.end(), rad) == known_factors.end()) {
    known_factors.push_back(rad);
  }
  if (!factor) return std::nullopt;
  const Matrix fx = factor->evaluate(x);
  return from_fitting(fx, how + " of minimal polynomial " + minpoly.to_string());
}

std::optional<IdempotentWitness> find_idempotent(const std::vector<Matrix>& basis, std::size_t n,
                                                 SeededStream& stream, const SplitSearchOptions& options) {
  if (n <= 1) return std::nullopt;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (is_nontrivial_idempotent(basis[i])) return IdempotentWitness{basis[i], "basis element"};
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Matrix s = basis[i] + basis[j];
      if (is_nontrivial_idempotent(s)) return IdempotentWitness{s, "pairwise sum of basis elements"};
    }
  }
  std::vector<Polynomial> factors;
  for (const auto& x : basis) {
    if (auto w = split_by_element(x, factors)) {
      w->source = "basis element: " + w->source;
      return w;
    }
  }
  if (basis.size() < 2) return std::nullopt;
  for (std::size_t attempt = 0; attempt < options.random_attempts; ++attempt) {
    Matrix x(n, n);
    for (const auto& b : basis) {
      const auto c = stream.uniform(-options.coefficient_bound, options.coefficient_bound);
      if (c != 0) x += b * Rational(static_cast<long>(c));
    }
    if (auto w = split_by_element(x, factors)) {
      w->source = "random combination " + std::to_string(attempt) + ": " + w->source;
      return w;
    }
  }
  return std::nullopt;
}

bool scalar_plus_nilpotent(const std::vector<Matrix>& basis, std::size_t n) {
  const Matrix id = Matrix::identity(n);
  std::vector<Matrix> traceless;
  for (const auto& x : basis) {
    Matrix y = x - id * (x.trace() / static_cast<long>(n));
    if (!y.is_zero()) traceless.push_back(std::move(y));
  }
  if (traceless.empty()) return true;
  auto span_of = [&](const std::vector<Matrix>& ms) {
    std::vector<Vector> flat;
    for (const auto& m : ms) flat.push_back(flatten(m));
    return Subspace::span(n * n, flat);
  };
  Subspace words = span_of(traceless);
  for (std::size_t length = 1; length <= n; ++length) {
    std::vector<Matrix> longer;
    for (const auto& y : traceless)
      for (const auto& w : words.basis_vectors()) longer.push_back(y * unflatten(w, n, n));
    words = span_of(longer);
    if (words.is_zero()) return true;
  }
  return false;
}

}  // namespace holo
