#include "holo/polynomial.hpp"

#include <algorithm>
#include <set>

#include "holo/errors.hpp"

namespace holo {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(c));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  if (!m.is_square()) throw DimensionError("polynomial evaluated at non-square matrix");
  Matrix acc(m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (k == 0 || mag != 1) s += holo::to_string(mag);
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead_inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial power(const Polynomial& p, unsigned k) {
  Polynomial acc = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) acc = acc * p;
  return acc;
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (p.degree() < 1) return out;
  const Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(f.derivative(), a).first;
  Polynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() >= 1) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

// Scales to primitive integer coefficients.
std::vector<Integer> integer_coefficients(const Polynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content != 0)
    for (auto& v : out) v /= content;
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> small;
  std::vector<Integer> large;
  const Integer m = abs(n);
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p, unsigned long search_limit) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  std::vector<Integer> ic = integer_coefficients(p);
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const Integer& constant = ic[low];
  const Integer& lead = ic.back();
  if (ic.size() - low == 1) return roots;
  if (abs(constant) > search_limit || abs(lead) > search_limit) return roots;
  std::set<Rational> found;
  for (const auto& num : divisors(constant)) {
    for (const auto& den : divisors(lead)) {
      for (int s : {1, -1}) {
        Rational cand(num * s, den);
        cand.canonicalize();
        if (found.count(cand)) continue;
        if (p.evaluate(cand) == 0) found.insert(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<bool> irreducible_small_degree(const Polynomial& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (p.degree() > 3) return std::nullopt;
  // Without a size-limited search the root test would be inconclusive.
  const auto ic = integer_coefficients(p);
  if (abs(ic.front()) > 1000000UL || abs(ic.back()) > 1000000UL) return std::nullopt;
  return rational_roots(p).empty();
}

std::vector<Polynomial> coprime_base(const std::vector<Polynomial>& family) {
  std::vector<Polynomial> base;
  for (const auto& f : family) {
    if (f.degree() < 1) continue;
    // radical of f
    Polynomial rad = divmod(f.monic(), gcd(f, f.derivative())).first.monic();
    base.push_back(rad);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const Polynomial g = gcd(base[i], base[j]);
        if (g.degree() < 1) continue;
        std::vector<Polynomial> next;
        for (std::size_t k = 0; k < base.size(); ++k)
          if (k != i && k != j) next.push_back(base[k]);
        for (const Polynomial& part : {g, divmod(base[i], g).first.monic(), divmod(base[j], g).first.monic()}) {
          if (part.degree() >= 1) next.push_back(part);
        }
        base = std::move(next);
        changed = true;
      }
    }
  }
  // Identical entries collapse.
  std::vector<Polynomial> unique;
  for (auto& f : base) {
    if (std::find(unique.begin(), unique.end(), f) == unique.end()) unique.push_back(f);
  }
  return unique;
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> powers{flatten(Matrix::identity(n))};
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    const Vector target = flatten(current);
    const Matrix basis = Matrix::from_columns(powers, n * n);
    if (auto coeffs = solve(basis, target)) {
      std::vector<Rational> c(k + 1);
      for (std::size_t i = 0; i < k; ++i) c[i] = -(*coeffs)[i];
      c[k] = 1;
      return Polynomial(std::move(c));
    }
    powers.push_back(target);
  }
  throw InternalInconsistency("minimal polynomial exceeded the matrix dimension");
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

Matrix nilpotent_exp(const Matrix& n, const Rational& t) {
  if (!n.is_square()) throw DimensionError("exponential of non-square matrix");
  const std::size_t dim = n.rows();
  if (!n.pow(dim).is_zero()) throw PreconditionError("nilpotent_exp: matrix is not nilpotent");
  Matrix result = Matrix::identity(dim);
  Matrix term = Matrix::identity(dim);
  for (std::size_t k = 1; k < dim; ++k) {
    term = term * n * (t / static_cast<long>(k));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

}  // namespace holo
