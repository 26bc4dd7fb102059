#pragma once

#include "wfa/matrix.hpp"
#include "wfa/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wfa {

/// A weighted automaton as a linear representation: input row vector lambda
/// (1 x n), one n x n transition matrix per letter, output column vector
/// gamma (n x 1). The weight of a word is lambda mu(a1)...mu(ak) gamma, with
/// mu extended to words as a monoid morphism (mu of the empty word is the
/// identity matrix). Immutable after construction.
class LinearRepresentation {
 public:
  LinearRepresentation(Alphabet alphabet, Matrix lambda, std::map<char, Matrix> mu,
                       Matrix gamma);

  std::size_t dim() const { return dim_; }
  SemiringId semiring() const { return lambda_.semiring(); }
  const Alphabet& alphabet() const { return alphabet_; }
  const Matrix& lambda() const { return lambda_; }
  const Matrix& gamma() const { return gamma_; }

  /// Transition matrix of one letter; usage_error for a foreign letter.
  const Matrix& mu(char letter) const;
  const std::map<char, Matrix>& transitions() const { return mu_; }

 private:
  Alphabet alphabet_;
  Matrix lambda_;
  std::map<char, Matrix> mu_;
  Matrix gamma_;
  std::size_t dim_;
};

/// An automaton over Sigma extended with the silent letter: the base
/// representation plus the transition matrix of '@'.
class EpsilonAutomaton {
 public:
  EpsilonAutomaton(LinearRepresentation base, Matrix eps);

  const LinearRepresentation& base() const { return base_; }
  const Matrix& eps() const { return eps_; }
  std::size_t dim() const { return base_.dim(); }
  SemiringId semiring() const { return base_.semiring(); }

 private:
  LinearRepresentation base_;
  Matrix eps_;
};

/// Weight of a word over Sigma.
Value weight(const LinearRepresentation& a, const Word& u);

/// Weight of a word over Sigma extended with '@' (the silent letter is an
/// ordinary letter here).
Value weight(const EpsilonAutomaton& a, const Word& u);

/// Sum of weight(u) u over all words of length <= max_len, as a polynomial.
Polynomial behaviour_truncated(const LinearRepresentation& a, std::size_t max_len);

/// Same, over the extended alphabet including '@'.
Polynomial behaviour_truncated(const EpsilonAutomaton& a, std::size_t max_len);

enum class ClosureStrategy { automatic, nilpotent, block, iterative };

/// Step limit used by the iterative strategy when driven by `automatic`.
std::size_t default_iteration_limit(std::size_t dim);

/// The star of the silent-transition matrix. `automatic` picks the nilpotent
/// finite sum whenever the matrix is nilpotent (exact in any semiring), else
/// stationary power sums for boolean/tropical/nat_inf, else the block
/// recursion (rationals). Every candidate is re-verified against both star
/// identities before being returned; a failed or unavailable star is an
/// empty optional, never a wrong answer. An explicit `nilpotent` strategy on
/// a non-nilpotent matrix is a usage_error.
std::optional<Matrix> epsilon_closure(const EpsilonAutomaton& a, ClosureStrategy strategy,
                                      OpCounter& ctr);
std::optional<Matrix> epsilon_closure(const EpsilonAutomaton& a,
                                      ClosureStrategy strategy = ClosureStrategy::automatic);

enum class EliminationVariant { left_closure, right_closure };

/// Silent-transition removal. With E the closure:
///   left_closure:  lambda' = lambda, mu'(a) = E mu(a), gamma' = E gamma
///   right_closure: lambda' = lambda E, mu'(a) = mu(a) E, gamma' = gamma
/// Beyond the closure itself this costs exactly |Sigma| matrix products plus
/// one matrix-vector product, tallied into product_ctr (the closure's own
/// cost goes to closure_ctr).
std::optional<LinearRepresentation> eliminate(const EpsilonAutomaton& a,
                                              EliminationVariant variant,
                                              ClosureStrategy strategy,
                                              OpCounter& product_ctr, OpCounter& closure_ctr);
std::optional<LinearRepresentation> eliminate(
    const EpsilonAutomaton& a, EliminationVariant variant = EliminationVariant::left_closure,
    ClosureStrategy strategy = ClosureStrategy::automatic);

/// Brute-force reference for the erased weight of u: sums lambda mu(v) gamma
/// over every preimage v of u whose '@'-runs are shorter than bound (all
/// bound^(|u|+1) of them, from enumerate_preimages). Exact when the silent
/// matrix is nilpotent and bound >= its index, or once the power sums are
/// stationary and bound exceeds the stationarity point; otherwise a partial
/// sum. Deliberately independent of every star/closure routine.
Value phi_weight_oracle(const EpsilonAutomaton& a, const Word& u, std::size_t bound);

struct EquivalenceRow {
  Word word;
  Value lhs;  // weight in the plain automaton
  Value rhs;  // oracle partial sum in the silent-transition automaton
  bool equal;
};

struct EquivalenceReport {
  bool exact = false;       // comparisons are exact, not partial sums
  std::string note;         // how exactness was decided (or why not)
  std::vector<EquivalenceRow> rows;
  bool all_equal = true;    // conjunction over rows (only meaningful when exact)
  std::optional<Word> first_difference;
};

/// Compares weight(a, u) against phi_weight_oracle(ae, u, bound) for every
/// word of length <= max_len. Exact mode is claimed only when the bound
/// provably covers all preimage mass (nilpotent silent matrix with
/// bound >= index, or stationary power sums with bound past the stationarity
/// point); anything else is reported as partial-sum mode.
EquivalenceReport check_equivalence(const LinearRepresentation& a, const EpsilonAutomaton& ae,
                                    std::size_t max_len, std::size_t bound);

/// True when the silent matrix is nilpotent — a sufficient condition for the
/// behaviour to meet every erasure fiber finitely. (The converse needs a
/// minimal representation and is not decided here.)
bool is_phi_finite_representation(const EpsilonAutomaton& a);

/// All words over the alphabet with length <= max_len, shortest first.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len);

}  // namespace wfa
