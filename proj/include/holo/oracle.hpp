#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holo/representation.hpp"

namespace holo::oracle {

/// Dense matrix over the prime field F_p, entries in [0, p).
struct FpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> a;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c, std::uint64_t prime) : rows(r), cols(c), p(prime), a(r * c, 0) {}
  static FpMatrix identity(std::size_t n, std::uint64_t prime);

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool is_zero() const;
  FpMatrix transpose() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix operator*(const FpMatrix& x, const FpMatrix& y);
FpMatrix operator+(const FpMatrix& x, const FpMatrix& y);
FpMatrix operator-(const FpMatrix& x, const FpMatrix& y);

/// Reduction of a rational matrix; nothing when p divides a denominator.
std::optional<FpMatrix> reduce(const Matrix& m, std::uint64_t p);
/// Reduced row echelon form with zero rows dropped.
FpMatrix rref_rows(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

struct FieldReduction {
  std::uint64_t prime = 0;
  bool valid = false;
  std::string reason;  // why the reduction is invalid
  FpMatrix gram;
  std::vector<FpMatrix> actions;  // g - I or n, per generator
};

FieldReduction reduce(const Representation& rep, std::uint64_t p);

inline constexpr double search_bound = 1e7;

struct IdempotentEnumeration {
  std::uint64_t prime = 0;
  std::size_t commutant_dim = 0;
  std::uint64_t idempotents = 0;  // including 0 and I
  std::uint64_t nontrivial = 0;
  std::vector<FpMatrix> witnesses;  // first few nontrivial ones
};

/// Exhaustive walk over the (optionally self-adjoint) commutant mod p.
/// Throws PreconditionError for an invalid reduction or when p^d exceeds
/// search_bound.
IdempotentEnumeration enumerate_idempotents_mod_p(const Representation& rep, std::uint64_t p, bool self_adjoint,
                                                  std::size_t max_witnesses = 16);

struct FpSubspace {
  FpMatrix basis;  // k x n, reduced row echelon
  bool isotropic = false;
  bool nondegenerate = false;
};

/// All k-dimensional invariant subspaces of the reduced space. Throws
/// PreconditionError for an invalid reduction or when the number of
/// k-subspaces exceeds search_bound.
std::vector<FpSubspace> enumerate_invariant_subspaces_mod_p(const Representation& rep, std::uint64_t p,
                                                            std::size_t k);

/// Decomposability claims on the rational side, as fed to crosscheck.
struct RationalVerdicts {
  std::optional<Matrix> module_witness;
  bool module_certified = false;
  std::optional<Matrix> orthogonal_witness;
  bool orthogonal_certified = false;
};

struct PrimeCheck {
  std::uint64_t prime = 0;
  bool valid = false;
  std::string note;
  std::optional<IdempotentEnumeration> module;
  std::optional<IdempotentEnumeration> orthogonal;
};

struct CrosscheckReport {
  std::vector<PrimeCheck> primes;
  std::vector<std::string> soundness_violations;
  std::vector<std::string> review_flags;
  std::vector<std::string> notes;

  bool sound() const { return soundness_violations.empty(); }
  bool agreement() const { return soundness_violations.empty() && review_flags.empty(); }
};

std::vector<std::uint64_t> default_primes();

/// Runs both idempotent enumerations over `want` valid primes, taking the
/// given ones first and continuing with larger primes past invalid ones.
CrosscheckReport crosscheck(const Representation& rep, const RationalVerdicts& verdicts,
                            const std::vector<std::uint64_t>& primes = default_primes(), std::size_t want = 3);

}  // namespace holo::oracle
