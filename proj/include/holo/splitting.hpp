#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holo/matrix.hpp"
#include "holo/polynomial.hpp"

namespace holo {

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic pseudo-random stream. Everything random in the engine is
/// drawn from one of these, so a seed fixes every result bit for bit.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Independent child stream; the parent is not advanced.
  SeededStream fork(std::uint64_t salt) const { return SeededStream(splitmix64(state_ ^ splitmix64(salt))); }

 private:
  std::uint64_t state_;
};

struct SplitSearchOptions {
  std::size_t random_attempts = 32;
  std::int64_t coefficient_bound = 3;
};

/// A nontrivial idempotent in the span of the searched algebra together
/// with a note on how it was found.
struct IdempotentWitness {
  Matrix projector;
  std::string source;
};

bool is_nontrivial_idempotent(const Matrix& p);

/// Splits via x itself: the Fitting decomposition of x, then coprime
/// factors of its minimal polynomial (rational roots, squarefree layers and
/// gcds against `known_factors`). The returned projector is a polynomial in x.
/// Newly seen radicals are appended to `known_factors`.
std::optional<IdempotentWitness> split_by_element(const Matrix& x, std::vector<Polynomial>& known_factors);

/// Search order: idempotents among the basis elements and their pairwise
/// sums; splitting by each basis element; splitting by random integer
/// combinations drawn from `stream`.
std::optional<IdempotentWitness> find_idempotent(const std::vector<Matrix>& basis, std::size_t n,
                                                 SeededStream& stream, const SplitSearchOptions& options);

/// True when every element of span(basis) is a scalar plus a nilpotent,
/// checked by showing that the traceless parts generate a nilpotent
/// algebra. Such a span holds no idempotent other than 0 and I.
bool scalar_plus_nilpotent(const std::vector<Matrix>& basis, std::size_t n);

}  // namespace holo
