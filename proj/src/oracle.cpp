#include "holo/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "holo/errors.hpp"

namespace holo::oracle {

namespace {

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) {
  std::uint64_t result = 1, base = x % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> reduce_scalar(const Rational& q, std::uint64_t p) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return num * inv_mod(den, p) % p;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Basis of the null space, as vectors indexed by column.
std::vector<std::vector<std::uint64_t>> null_space(const FpMatrix& m) {
  const FpMatrix r = rref_rows(m);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < r.rows; ++i) {
    for (std::size_t j = 0; j < r.cols; ++j) {
      if (r(i, j) != 0) {
        pivots.push_back(j);
        break;
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<std::uint64_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (m.p - r(i, f)) % m.p;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FpMatrix> commutant_mod_p(const FieldReduction& red, bool self_adjoint) {
  const std::size_t n = red.gram.rows;
  const std::uint64_t p = red.prime;
  std::size_t equations = red.actions.size() * n * n + (self_adjoint ? n * n : 0);
  FpMatrix sys(equations, n * n, p);
  std::size_t row = 0;
  for (const auto& a : red.actions) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          sys(row, k * n + j) = (sys(row, k * n + j) + a(i, k)) % p;
          sys(row, i * n + k) = (sys(row, i * n + k) + p - a(k, j)) % p;
        }
      }
    }
  }
  if (self_adjoint) {
    const FpMatrix& g = red.gram;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          sys(row, k * n + j) = (sys(row, k * n + j) + g(i, k)) % p;
          sys(row, k * n + i) = (sys(row, k * n + i) + p - g(k, j)) % p;
        }
      }
    }
  }
  std::vector<FpMatrix> out;
  for (const auto& v : null_space(sys)) {
    FpMatrix x(n, n, p);
    x.a = v;
    out.push_back(std::move(x));
  }
  return out;
}

bool is_idempotent(const FpMatrix& x) {
  const std::size_t n = x.rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += x(i, k) * x(k, j);
      if (s % x.p != x(i, j)) return false;
    }
  }
  return true;
}

bool commutes_with(const FpMatrix& x, const FieldReduction& red) {
  for (const auto& a : red.actions)
    if (a * x != x * a) return false;
  return true;
}

bool self_adjoint_mod_p(const FpMatrix& x, const FpMatrix& g) { return g * x == x.transpose() * g; }

double gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t k) {
  double out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= (std::pow(double(p), double(n - i)) - 1) / (std::pow(double(p), double(k - i)) - 1);
  }
  return out;
}

FieldReduction require_valid(const Representation& rep, std::uint64_t p) {
  FieldReduction red = reduce(rep, p);
  if (!red.valid) throw PreconditionError("invalid reduction mod " + std::to_string(p) + ": " + red.reason);
  return red;
}

}  // namespace

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t prime) {
  FpMatrix m(n, n, prime);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % prime;
  return m;
}

bool FpMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols, rows, p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
  if (x.cols != y.rows || x.p != y.p) throw DimensionError("FpMatrix product: shape or field mismatch");
  FpMatrix out(x.rows, y.cols, x.p);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const std::uint64_t v = x(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) = (out(i, j) + v * y(k, j)) % x.p;
    }
  }
  return out;
}

FpMatrix operator+(const FpMatrix& x, const FpMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.p != y.p) throw DimensionError("FpMatrix sum: shape mismatch");
  FpMatrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = (out.a[i] + y.a[i]) % x.p;
  return out;
}

FpMatrix operator-(const FpMatrix& x, const FpMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.p != y.p) throw DimensionError("FpMatrix difference: shape mismatch");
  FpMatrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = (out.a[i] + x.p - y.a[i]) % x.p;
  return out;
}

std::optional<FpMatrix> reduce(const Matrix& m, std::uint64_t p) {
  FpMatrix out(m.rows(), m.cols(), p);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto v = reduce_scalar(m(i, j), p);
      if (!v) return std::nullopt;
      out(i, j) = *v;
    }
  }
  return out;
}

FpMatrix rref_rows(const FpMatrix& m) {
  FpMatrix r = m;
  const std::uint64_t p = m.p;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
    std::size_t piv = lead;
    while (piv < r.rows && r(piv, col) == 0) ++piv;
    if (piv == r.rows) continue;
    for (std::size_t j = 0; j < r.cols; ++j) std::swap(r(lead, j), r(piv, j));
    const std::uint64_t inv = inv_mod(r(lead, col), p);
    for (std::size_t j = 0; j < r.cols; ++j) r(lead, j) = r(lead, j) * inv % p;
    for (std::size_t i = 0; i < r.rows; ++i) {
      if (i == lead || r(i, col) == 0) continue;
      const std::uint64_t f = r(i, col);
      for (std::size_t j = 0; j < r.cols; ++j) r(i, j) = (r(i, j) + (p - f) * r(lead, j)) % p;
    }
    ++lead;
  }
  FpMatrix out(lead, r.cols, p);
  std::copy(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(lead * r.cols), out.a.begin());
  return out;
}

std::size_t rank(const FpMatrix& m) { return rref_rows(m).rows; }

FieldReduction reduce(const Representation& rep, std::uint64_t p) {
  FieldReduction red;
  red.prime = p;
  if (!is_prime(p)) {
    red.reason = "not a prime";
    return red;
  }
  auto gram = reduce(rep.space().gram(), p);
  if (!gram) {
    red.reason = "a Gram entry has a denominator divisible by p";
    return red;
  }
  if (rank(*gram) < gram->rows) {
    red.reason = "the Gram determinant vanishes mod p";
    return red;
  }
  red.gram = std::move(*gram);
  for (const auto& g : rep.generators()) {
    auto a = reduce(g.action(), p);
    if (!a) {
      red.reason = "a generator entry has a denominator divisible by p";
      red.actions.clear();
      return red;
    }
    red.actions.push_back(std::move(*a));
  }
  red.valid = true;
  return red;
}

IdempotentEnumeration enumerate_idempotents_mod_p(const Representation& rep, std::uint64_t p, bool self_adjoint,
                                                  std::size_t max_witnesses) {
  const FieldReduction red = require_valid(rep, p);
  const std::vector<FpMatrix> basis = commutant_mod_p(red, self_adjoint);
  const std::size_t d = basis.size();
  if (std::pow(double(p), double(d)) > search_bound) {
    throw PreconditionError("idempotent search space " + std::to_string(p) + "^" + std::to_string(d) +
                            " exceeds the bound");
  }
  IdempotentEnumeration out;
  out.prime = p;
  out.commutant_dim = d;
  const std::size_t n = rep.dim();
  const FpMatrix id = FpMatrix::identity(n, p);
  FpMatrix x(n, n, p);
  std::vector<std::uint64_t> digits(d, 0);
  // Odometer walk: each step adds the basis element at the carry position,
  // which keeps x equal to the current combination mod p.
  while (true) {
    if (is_idempotent(x)) {
      ++out.idempotents;
      if (!x.is_zero() && x != id) {
        ++out.nontrivial;
        if (out.witnesses.size() < max_witnesses) out.witnesses.push_back(x);
      }
    }
    std::size_t pos = 0;
    while (pos < d && digits[pos] == p - 1) {
      digits[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
    ++digits[pos];
    x = x + basis[pos];
  }
  return out;
}

std::vector<FpSubspace> enumerate_invariant_subspaces_mod_p(const Representation& rep, std::uint64_t p,
                                                            std::size_t k) {
  const FieldReduction red = require_valid(rep, p);
  const std::size_t n = rep.dim();
  if (k > n) return {};
  if (gaussian_binomial(p, n, k) > search_bound) {
    throw PreconditionError("subspace search space exceeds the bound");
  }
  std::vector<FpSubspace> out;
  auto consider = [&](const FpMatrix& b, const std::vector<std::size_t>& pivots) {
    for (const auto& a : red.actions) {
      for (std::size_t r = 0; r < k; ++r) {
        std::vector<std::uint64_t> w(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t s = 0;
          for (std::size_t j = 0; j < n; ++j) s += a(i, j) * b(r, j);
          w[i] = s % p;
        }
        for (std::size_t q = 0; q < k; ++q) {
          const std::uint64_t f = w[pivots[q]];
          if (f == 0) continue;
          for (std::size_t j = 0; j < n; ++j) w[j] = (w[j] + (p - f) * b(q, j)) % p;
        }
        if (std::any_of(w.begin(), w.end(), [](std::uint64_t v) { return v != 0; })) return;
      }
    }
    const FpMatrix form = b * red.gram * b.transpose();
    out.push_back({b, form.is_zero(), rank(form) == k});
  };

  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = pivots[r] + 1; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(r, j);
    FpMatrix b(k, n, p);
    for (std::size_t r = 0; r < k; ++r) b(r, pivots[r]) = 1;
    std::vector<std::uint64_t> digits(free.size(), 0);
    while (true) {
      consider(b, pivots);
      std::size_t pos = 0;
      while (pos < free.size() && digits[pos] == p - 1) {
        digits[pos] = 0;
        b(free[pos].first, free[pos].second) = 0;
        ++pos;
      }
      if (pos == free.size()) break;
      ++digits[pos];
      b(free[pos].first, free[pos].second) = digits[pos];
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

std::vector<std::uint64_t> default_primes() { return {5, 7, 11}; }

CrosscheckReport crosscheck(const Representation& rep, const RationalVerdicts& verdicts,
                            const std::vector<std::uint64_t>& primes, std::size_t want) {
  CrosscheckReport out;
  std::vector<std::uint64_t> candidates = primes;
  std::uint64_t next = candidates.empty() ? 5 : *std::max_element(candidates.begin(), candidates.end()) + 1;
  std::size_t valid_count = 0;
  std::size_t module_runs = 0, module_split_runs = 0;
  std::size_t orth_runs = 0, orth_split_runs = 0;
  for (std::size_t idx = 0; valid_count < want; ++idx) {
    if (idx >= candidates.size()) {
      while (!is_prime(next)) ++next;
      candidates.push_back(next++);
    }
    const std::uint64_t p = candidates[idx];
    PrimeCheck check;
    check.prime = p;
    const FieldReduction red = reduce(rep, p);
    if (!red.valid) {
      check.note = red.reason;
      out.primes.push_back(std::move(check));
      continue;
    }
    check.valid = true;
    ++valid_count;
    const std::string at = " mod " + std::to_string(p);

    auto check_witness = [&](const std::optional<Matrix>& w, bool self_adjoint, const char* what) {
      if (!w) return;
      auto r = reduce(*w, p);
      if (!r) {
        out.notes.push_back(std::string(what) + " witness has a denominator divisible by " + std::to_string(p));
        return;
      }
      const bool ok = is_idempotent(*r) && !r->is_zero() && *r != FpMatrix::identity(rep.dim(), p) &&
                      commutes_with(*r, red) && (!self_adjoint || self_adjoint_mod_p(*r, red.gram));
      if (!ok) out.soundness_violations.push_back(std::string(what) + " witness does not reduce to a witness" + at);
    };
    check_witness(verdicts.module_witness, false, "module");
    check_witness(verdicts.orthogonal_witness, true, "orthogonal");

    try {
      check.module = enumerate_idempotents_mod_p(rep, p, false, 4);
      ++module_runs;
      if (check.module->nontrivial > 0) ++module_split_runs;
      if (verdicts.module_witness && check.module->nontrivial == 0) {
        out.soundness_violations.push_back("rational module splitting but no idempotent" + at);
      }
    } catch (const PreconditionError& e) {
      check.note += std::string(check.note.empty() ? "" : "; ") + "module search skipped: " + e.what();
    }
    try {
      check.orthogonal = enumerate_idempotents_mod_p(rep, p, true, 4);
      ++orth_runs;
      if (check.orthogonal->nontrivial > 0) ++orth_split_runs;
      if (verdicts.orthogonal_witness && check.orthogonal->nontrivial == 0) {
        out.soundness_violations.push_back("rational orthogonal splitting but no self-adjoint idempotent" + at);
      }
    } catch (const PreconditionError& e) {
      check.note += std::string(check.note.empty() ? "" : "; ") + "orthogonal search skipped: " + e.what();
    }
    out.primes.push_back(std::move(check));
  }

  auto review = [&](bool has_witness, bool certified, std::size_t runs, std::size_t splits, const char* what) {
    if (has_witness || runs == 0 || splits == 0) return;
    const std::string msg = std::string(what) + " idempotents exist mod p at " + std::to_string(splits) + " of " +
                            std::to_string(runs) + " primes while the rational side found none";
    if (!certified && splits == runs) {
      out.review_flags.push_back(msg + " (mod-p splitting need not lift)");
    } else {
      out.notes.push_back(msg);
    }
  };
  review(verdicts.module_witness.has_value(), verdicts.module_certified, module_runs, module_split_runs, "module");
  review(verdicts.orthogonal_witness.has_value(), verdicts.orthogonal_certified, orth_runs, orth_split_runs,
         "self-adjoint");
  return out;
}

}  // namespace holo::oracle
