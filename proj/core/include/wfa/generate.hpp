#pragma once

#include "wfa/automaton.hpp"
#include "wfa/matrix.hpp"
#include "wfa/series.hpp"

#include <cstdint>
#include <random>

namespace wfa {

/// Seeded instance generation for property tests and the bench harness.
/// Everything downstream of a fixed seed is deterministic.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n);  // uniform in [0, n)
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

/// A small random carrier element; zeros included.
Value random_value(SemiringId sid, Rng& rng);

/// A small random nonzero carrier element.
Value random_nonzero_value(SemiringId sid, Rng& rng);

/// Dense-ish random matrix: each entry nonzero with probability density.
Matrix random_matrix(SemiringId sid, std::size_t rows, std::size_t cols, Rng& rng,
                     double density = 0.5);

/// Strictly upper-triangular random matrix, hence nilpotent. When max_index
/// is nonzero, instances whose nilpotence index exceeds it are redrawn, which
/// keeps downstream brute-force preimage enumeration affordable.
Matrix random_nilpotent_matrix(SemiringId sid, std::size_t n, Rng& rng,
                               std::size_t max_index = 0);

/// Random silent-transition automaton over the first alphabet_size letters of
/// "abc". With nilpotent_eps the silent matrix is strictly upper-triangular
/// (index capped by max_index); otherwise it is a sparse matrix redrawn until
/// its power sums go stationary within max_index steps (boolean/tropical
/// semirings), so exact-mode equivalence bounds stay small.
EpsilonAutomaton random_eps_automaton(SemiringId sid, std::size_t dim,
                                      std::size_t alphabet_size, Rng& rng, bool nilpotent_eps,
                                      std::size_t max_index = 3);

/// Random polynomial with at most max_terms nonzero terms on words of length
/// <= max_len (over the alphabet, plus '@' when allow_epsilon_letter).
Polynomial random_polynomial(SemiringId sid, const Alphabet& alphabet, std::size_t max_terms,
                             std::size_t max_len, Rng& rng, bool allow_epsilon_letter);

}  // namespace wfa
