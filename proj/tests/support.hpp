#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "holo/representation.hpp"

namespace support {

using holo::Matrix;
using holo::Rational;
using holo::Vector;

inline Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

// Plain Gaussian elimination, kept apart from the library on purpose.
inline std::size_t naive_rank(std::vector<Vector> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = naive_rank(both);
  return r == naive_rank(a) && r == naive_rank(b);
}

inline bool in_span(const std::vector<Vector>& rows, const Vector& v) {
  std::vector<Vector> more = rows;
  more.push_back(v);
  return naive_rank(more) == naive_rank(rows);
}

inline Rational pairing(const Matrix& g, const Vector& x, const Vector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

inline Vector apply(const Matrix& m, const Vector& v) {
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool chance(int one_in) { return range(0, one_in - 1) == 0; }
  Rational small_rational() {
    const long den = range(1, 4);
    Rational q(range(-6, 6), den);
    q.canonicalize();
    return q;
  }
  Matrix matrix(std::size_t r, std::size_t c, long bound) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = range(-bound, bound);
    return m;
  }
  Matrix invertible(std::size_t n, long bound) {
    while (true) {
      Matrix m = matrix(n, n, bound);
      if (holo::rank(m) == n) return m;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// gram = P^T D P with D a random diagonal of either sign.
inline Matrix random_gram(Rng& rng, std::size_t n) {
  Vector d(n);
  for (auto& x : d) x = Rational(rng.range(1, 3) * (rng.chance(2) ? 1 : -1));
  const Matrix p = rng.invertible(n, 2);
  return p.transpose() * Matrix::diagonal(d) * p;
}

// Skew-adjoint element G^{-1} K with K sparse antisymmetric.
inline Matrix random_skew(Rng& rng, const Matrix& gram) {
  const std::size_t n = gram.rows();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!rng.chance(3)) continue;
      k(i, j) = rng.range(-2, 2);
      k(j, i) = -k(i, j);
    }
  }
  return holo::inverse(gram) * k;
}

inline Matrix random_isometry(Rng& rng, const Matrix& gram) {
  const std::size_t n = gram.rows();
  const Matrix id = Matrix::identity(n);
  if (rng.chance(2)) {
    while (true) {
      Vector v(n);
      for (auto& x : v) x = rng.range(-2, 2);
      const Rational q = pairing(gram, v, v);
      if (q == 0) continue;
      // Reflection x -> x - 2 <x,v>/<v,v> v.
      Matrix r = id;
      const Vector gv = support::apply(gram, v);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) -= 2 * v[i] * gv[j] / q;
      return r;
    }
  }
  while (true) {
    const Matrix s = random_skew(rng, gram);
    if (holo::rank(id - s) < n) continue;
    // Cayley transform.
    return holo::inverse(id - s) * (id + s);
  }
}

inline holo::Representation random_representation(Rng& rng, std::size_t n) {
  const Matrix gram = random_gram(rng, n);
  std::vector<holo::Generator> gens;
  const long count = rng.range(1, 3);
  for (long i = 0; i < count; ++i) {
    if (rng.chance(2)) {
      gens.push_back({holo::GeneratorKind::infinitesimal, random_skew(rng, gram)});
    } else {
      gens.push_back({holo::GeneratorKind::group, random_isometry(rng, gram)});
    }
  }
  return holo::Representation(holo::QuadraticSpace(gram), gens, "random");
}

// Dimension of {X : X A = A X for every generator action A}, optionally
// also requiring G X = X^T G, by rank of the stacked linear conditions.
inline std::size_t commutant_dim(const holo::Representation& rep, bool self_adjoint) {
  const std::size_t n = rep.dim();
  std::vector<Vector> rows;
  auto unknown = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (const auto& gen : rep.generators()) {
    const Matrix a = gen.action();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[unknown(i, k)] += a(k, j);
          row[unknown(k, j)] -= a(i, k);
        }
        rows.push_back(row);
      }
    }
  }
  if (self_adjoint) {
    const Matrix& g = rep.space().gram();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[unknown(k, j)] += g(i, k);
          row[unknown(k, i)] -= g(k, j);
        }
        rows.push_back(row);
      }
    }
  }
  return n * n - (rows.empty() ? 0 : naive_rank(rows));
}

}  // namespace support
