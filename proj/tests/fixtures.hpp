#pragma once

// Worked-example automata used across the test suites, built in code so the
// expected values stay independent of the file-format path.

#include "wfa/automaton.hpp"
#include "wfa/matrix.hpp"

#include <map>

namespace fixtures {

using namespace wfa;

// Two-state automaton over {a,b} with weights in the naturals; the weight of
// "aba" is 21.
inline LinearRepresentation fig1() {
  Matrix lambda = make_matrix(SemiringId::nat, 1, 2, {"3", "0"});
  Matrix gamma = make_matrix(SemiringId::nat, 2, 1, {"0", "1"});
  std::map<char, Matrix> mu;
  mu.emplace('a', make_matrix(SemiringId::nat, 2, 2, {"3", "1", "0", "1"}));
  mu.emplace('b', make_matrix(SemiringId::nat, 2, 2, {"1", "0", "0", "4"}));
  return LinearRepresentation(Alphabet("ab"), lambda, std::move(mu), gamma);
}

// Three-state silent-transition automaton over {a} with nilpotent silent
// matrix (index 3); the erased weight of a^i is 18 * 2^i.
inline EpsilonAutomaton fig2() {
  Matrix lambda = make_matrix(SemiringId::nat, 1, 3, {"3", "0", "0"});
  Matrix gamma = make_matrix(SemiringId::nat, 3, 1, {"0", "0", "1"});
  std::map<char, Matrix> mu;
  mu.emplace('a', make_matrix(SemiringId::nat, 3, 3, {"0", "0", "0", "1", "0", "0", "0", "0", "0"}));
  Matrix eps = make_matrix(SemiringId::nat, 3, 3, {"0", "2", "0", "0", "0", "3", "0", "0", "0"});
  return EpsilonAutomaton(
      LinearRepresentation(Alphabet("a"), lambda, std::move(mu), gamma), eps);
}

inline Matrix fig2_eps_star_golden() {
  return make_matrix(SemiringId::nat, 3, 3, {"1", "2", "6", "0", "1", "3", "0", "0", "1"});
}

// Four-state boolean silent-transition automaton; its silent matrix is the
// shift with the chain 1->2->3->4.
inline EpsilonAutomaton fig3() {
  Matrix lambda = make_matrix(SemiringId::boolean, 1, 4, {"1", "0", "0", "0"});
  Matrix gamma = make_matrix(SemiringId::boolean, 4, 1, {"0", "0", "1", "1"});
  std::map<char, Matrix> mu;
  mu.emplace('a', make_matrix(SemiringId::boolean, 4, 4,
                              {"1", "1", "0", "0",
                               "0", "0", "0", "0",
                               "0", "0", "0", "0",
                               "0", "0", "0", "1"}));
  mu.emplace('b', make_matrix(SemiringId::boolean, 4, 4,
                              {"0", "0", "1", "0",
                               "0", "1", "1", "1",
                               "0", "0", "0", "0",
                               "0", "0", "0", "1"}));
  Matrix eps = make_matrix(SemiringId::boolean, 4, 4,
                           {"0", "1", "0", "0",
                            "0", "0", "1", "0",
                            "0", "0", "0", "1",
                            "0", "0", "0", "0"});
  return EpsilonAutomaton(
      LinearRepresentation(Alphabet("ab"), lambda, std::move(mu), gamma), eps);
}

// The recomputed star of fig3's silent matrix: full reachability above the
// diagonal, including the (3,4) entry.
inline Matrix fig3_eps_star_recomputed() {
  return make_matrix(SemiringId::boolean, 4, 4,
                     {"1", "1", "1", "1",
                      "0", "1", "1", "1",
                      "0", "0", "1", "1",
                      "0", "0", "0", "1"});
}

// Four-state rational silent-transition automaton with a silent cycle of
// weight 1/6 between states 2 and 3 and a 1/3 silent self-loop on state 3.
inline EpsilonAutomaton fig5() {
  Matrix lambda = make_matrix(SemiringId::rational, 1, 4, {"1", "0", "0", "0"});
  Matrix gamma = make_matrix(SemiringId::rational, 4, 1, {"0", "0", "0", "1"});
  std::map<char, Matrix> mu;
  mu.emplace('a', make_matrix(SemiringId::rational, 4, 4,
                              {"0", "1/2", "0", "0",
                               "0", "0", "0", "0",
                               "0", "0", "0", "1/2",
                               "0", "0", "0", "0"}));
  mu.emplace('b', make_matrix(SemiringId::rational, 4, 4,
                              {"0", "0", "1/4", "0",
                               "0", "0", "0", "0",
                               "0", "1/2", "0", "0",
                               "0", "0", "0", "0"}));
  Matrix eps = make_matrix(SemiringId::rational, 4, 4,
                           {"0", "0", "0", "0",
                            "0", "0", "1/2", "0",
                            "0", "1/3", "1/3", "0",
                            "0", "0", "0", "0"});
  return EpsilonAutomaton(
      LinearRepresentation(Alphabet("ab"), lambda, std::move(mu), gamma), eps);
}

inline Matrix fig5_eps_star_golden() {
  return make_matrix(SemiringId::rational, 4, 4,
                     {"1", "0", "0", "0",
                      "0", "4/3", "1", "0",
                      "0", "2/3", "2", "0",
                      "0", "0", "0", "1"});
}

inline Matrix fig6_mu_a_golden() {
  return make_matrix(SemiringId::rational, 4, 4,
                     {"0", "1/2", "0", "0",
                      "0", "0", "0", "1/2",
                      "0", "0", "0", "1",
                      "0", "0", "0", "0"});
}

inline Matrix fig6_mu_b_golden() {
  return make_matrix(SemiringId::rational, 4, 4,
                     {"0", "0", "1/4", "0",
                      "0", "1/2", "0", "0",
                      "0", "1", "0", "0",
                      "0", "0", "0", "0"});
}

inline Matrix fig6_gamma_golden() {
  return make_matrix(SemiringId::rational, 4, 1, {"0", "0", "0", "1"});
}

// Independent reference for finite stars: I + M + ... + M^(terms-1), written
// with raw scalar loops so it shares nothing with the star routines.
inline Matrix power_sum_oracle(const Matrix& m, std::size_t terms) {
  const std::size_t n = m.rows();
  Matrix sum = Matrix::identity(n, m.semiring());
  Matrix power = Matrix::identity(n, m.semiring());
  for (std::size_t t = 1; t < terms; ++t) {
    Matrix next(n, n, m.semiring());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Value acc = Value::zero(m.semiring());
        for (std::size_t k = 0; k < n; ++k) {
          acc = add(acc, mul(power.at(i, k), m.at(k, j)));
        }
        next.set(i, j, acc);
      }
    }
    power = next;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sum.set(i, j, add(sum.at(i, j), power.at(i, j)));
      }
    }
  }
  return sum;
}

}  // namespace fixtures
