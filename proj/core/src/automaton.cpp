#include "wfa/automaton.hpp"

#include <utility>

namespace wfa {

namespace {

// Both defining identities, checked exactly; guards every closure result.
bool is_two_sided_star(const Matrix& m, const Matrix& candidate) {
  OpCounter discard;
  const Matrix id = Matrix::identity(m.rows(), m.semiring());
  if (mat_add(mat_mul(m, candidate, discard), id, discard) != candidate) return false;
  return mat_add(mat_mul(candidate, m, discard), id, discard) == candidate;
}

const Matrix& letter_matrix(const EpsilonAutomaton& a, char letter) {
  if (letter == epsilon_letter) return a.eps();
  return a.base().mu(letter);
}

Value row_times_gamma(const Matrix& row, const Matrix& gamma) {
  OpCounter discard;
  return mat_mul(row, gamma, discard).at(0, 0);
}

// Shared walker for both behaviour_truncated overloads: words over `letters`,
// carrying the row vector lambda mu(prefix) down the tree.
void accumulate_behaviour(const std::string& letters, const std::map<char, Matrix>& mu,
                          const Matrix& gamma, std::size_t max_len, const Word& prefix,
                          const Matrix& vec, Polynomial& out) {
  out.add_term(prefix, row_times_gamma(vec, gamma));
  if (prefix.size() == max_len) return;
  OpCounter discard;
  for (char c : letters) {
    accumulate_behaviour(letters, mu, gamma, max_len, prefix + c,
                         mat_mul(vec, mu.at(c), discard), out);
  }
}

}  // namespace

LinearRepresentation::LinearRepresentation(Alphabet alphabet, Matrix lambda,
                                           std::map<char, Matrix> mu, Matrix gamma)
    : alphabet_(std::move(alphabet)),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      gamma_(std::move(gamma)),
      dim_(lambda_.cols()) {
  if (lambda_.rows() != 1 || gamma_.cols() != 1 || gamma_.rows() != dim_) {
    throw usage_error("LinearRepresentation: lambda must be 1 x n and gamma n x 1");
  }
  if (gamma_.semiring() != lambda_.semiring()) {
    throw usage_error("LinearRepresentation: mixed semirings");
  }
  if (mu_.size() != alphabet_.size()) {
    throw usage_error("LinearRepresentation: transition map must cover exactly the alphabet");
  }
  for (const auto& [letter, m] : mu_) {
    if (!alphabet_.contains(letter)) {
      throw usage_error(std::string("LinearRepresentation: transition for foreign letter '") +
                        letter + "'");
    }
    if (m.rows() != dim_ || m.cols() != dim_ || m.semiring() != lambda_.semiring()) {
      throw usage_error("LinearRepresentation: transition matrix shape/semiring mismatch");
    }
  }
}

const Matrix& LinearRepresentation::mu(char letter) const {
  auto it = mu_.find(letter);
  if (it == mu_.end()) {
    throw usage_error(std::string("unknown letter '") + letter + "'");
  }
  return it->second;
}

EpsilonAutomaton::EpsilonAutomaton(LinearRepresentation base, Matrix eps)
    : base_(std::move(base)), eps_(std::move(eps)) {
  if (eps_.rows() != base_.dim() || eps_.cols() != base_.dim() ||
      eps_.semiring() != base_.semiring()) {
    throw usage_error("EpsilonAutomaton: silent matrix shape/semiring mismatch");
  }
}

Value weight(const LinearRepresentation& a, const Word& u) {
  OpCounter discard;
  Matrix vec = a.lambda();
  for (char c : u) {
    vec = mat_mul(vec, a.mu(c), discard);
  }
  return row_times_gamma(vec, a.gamma());
}

Value weight(const EpsilonAutomaton& a, const Word& u) {
  OpCounter discard;
  Matrix vec = a.base().lambda();
  for (char c : u) {
    vec = mat_mul(vec, letter_matrix(a, c), discard);
  }
  return row_times_gamma(vec, a.base().gamma());
}

Polynomial behaviour_truncated(const LinearRepresentation& a, std::size_t max_len) {
  Polynomial out(a.semiring(), a.alphabet());
  accumulate_behaviour(a.alphabet().letters(), a.transitions(), a.gamma(), max_len, Word(),
                       a.lambda(), out);
  return out;
}

Polynomial behaviour_truncated(const EpsilonAutomaton& a, std::size_t max_len) {
  const auto& base = a.base();
  std::map<char, Matrix> extended = base.transitions();
  extended.emplace(epsilon_letter, a.eps());
  std::string letters = std::string(1, epsilon_letter) + base.alphabet().letters();
  Polynomial out(base.semiring(), base.alphabet());
  accumulate_behaviour(letters, extended, base.gamma(), max_len, Word(), base.lambda(), out);
  return out;
}

std::size_t default_iteration_limit(std::size_t dim) { return 4 * dim + 16; }

std::optional<Matrix> epsilon_closure(const EpsilonAutomaton& a, ClosureStrategy strategy,
                                      OpCounter& ctr) {
  const Matrix& e = a.eps();
  std::optional<Matrix> candidate;
  switch (strategy) {
    case ClosureStrategy::automatic: {
      if (is_nilpotent(e).nilpotent) {
        candidate = star_nilpotent(e, ctr);
      } else {
        switch (a.semiring()) {
          case SemiringId::boolean:
          case SemiringId::tropical:
          case SemiringId::nat_inf:
            candidate = star_iterative(e, default_iteration_limit(a.dim()));
            break;
          default:
            candidate = star_block(e, StarSide::right, ctr);
            break;
        }
      }
      break;
    }
    case ClosureStrategy::nilpotent:
      candidate = star_nilpotent(e, ctr);  // throws usage_error if not nilpotent
      break;
    case ClosureStrategy::block:
      candidate = star_block(e, StarSide::right, ctr);
      break;
    case ClosureStrategy::iterative:
      candidate = star_iterative(e, default_iteration_limit(a.dim()));
      break;
  }
  if (!candidate) return std::nullopt;
  if (!is_two_sided_star(e, *candidate)) return std::nullopt;
  return candidate;
}

std::optional<Matrix> epsilon_closure(const EpsilonAutomaton& a, ClosureStrategy strategy) {
  OpCounter discard;
  return epsilon_closure(a, strategy, discard);
}

std::optional<LinearRepresentation> eliminate(const EpsilonAutomaton& a,
                                              EliminationVariant variant,
                                              ClosureStrategy strategy,
                                              OpCounter& product_ctr, OpCounter& closure_ctr) {
  auto closure = epsilon_closure(a, strategy, closure_ctr);
  if (!closure) return std::nullopt;
  const auto& base = a.base();
  std::map<char, Matrix> mu2;
  if (variant == EliminationVariant::left_closure) {
    for (const auto& [letter, m] : base.transitions()) {
      mu2.emplace(letter, mat_mul(*closure, m, product_ctr));
    }
    Matrix gamma2 = mat_mul(*closure, base.gamma(), product_ctr);
    return LinearRepresentation(base.alphabet(), base.lambda(), std::move(mu2),
                                std::move(gamma2));
  }
  for (const auto& [letter, m] : base.transitions()) {
    mu2.emplace(letter, mat_mul(m, *closure, product_ctr));
  }
  Matrix lambda2 = mat_mul(base.lambda(), *closure, product_ctr);
  return LinearRepresentation(base.alphabet(), std::move(lambda2), std::move(mu2),
                              base.gamma());
}

std::optional<LinearRepresentation> eliminate(const EpsilonAutomaton& a,
                                              EliminationVariant variant,
                                              ClosureStrategy strategy) {
  OpCounter discard_products, discard_closure;
  return eliminate(a, variant, strategy, discard_products, discard_closure);
}

Value phi_weight_oracle(const EpsilonAutomaton& a, const Word& u, std::size_t bound) {
  if (bound < 1) throw usage_error("phi_weight_oracle: bound must be >= 1");
  if (!a.base().alphabet().valid_word(u, /*allow_epsilon_letter=*/false)) {
    throw usage_error("phi_weight_oracle: word \"" + u + "\" not over the alphabet");
  }
  OpCounter discard;
  const Matrix& lambda = a.base().lambda();
  const Matrix& gamma = a.base().gamma();

  Value total = Value::zero(a.semiring());
  // Consecutive preimages share long prefixes (the runs advance like an
  // odometer), so keep a stack of lambda-prefix products.
  std::vector<Matrix> prefix;
  Word previous;
  for (const Word& v : enumerate_preimages(u, bound)) {
    std::size_t common = 0;
    while (common < previous.size() && common < v.size() && previous[common] == v[common]) {
      ++common;
    }
    prefix.erase(prefix.begin() + static_cast<std::ptrdiff_t>(common), prefix.end());
    for (std::size_t i = common; i < v.size(); ++i) {
      const Matrix& left = (i == 0) ? lambda : prefix.back();
      prefix.push_back(mat_mul(left, letter_matrix(a, v[i]), discard));
    }
    total = add(total, row_times_gamma(v.empty() ? lambda : prefix.back(), gamma));
    previous = v;
  }
  return total;
}

bool is_phi_finite_representation(const EpsilonAutomaton& a) {
  return is_nilpotent(a.eps()).nilpotent;
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (char c : alphabet.letters()) {
        out.push_back(out[i] + c);
      }
    }
    level_begin = level_end;
  }
  return out;
}

EquivalenceReport check_equivalence(const LinearRepresentation& a, const EpsilonAutomaton& ae,
                                    std::size_t max_len, std::size_t bound) {
  if (a.semiring() != ae.semiring() || !(a.alphabet() == ae.base().alphabet())) {
    throw usage_error("check_equivalence: automata must share alphabet and semiring");
  }

  EquivalenceReport report;
  Nilpotence nil = is_nilpotent(ae.eps());
  if (nil.nilpotent) {
    if (bound >= nil.index) {
      report.exact = true;
      report.note = "silent matrix nilpotent (index " + std::to_string(nil.index) +
                    "), bound " + std::to_string(bound) + " covers all preimages: exact";
    } else {
      report.note = "silent matrix nilpotent (index " + std::to_string(nil.index) +
                    ") but bound " + std::to_string(bound) + " is short: partial-sum mode";
    }
  } else {
    switch (ae.semiring()) {
      case SemiringId::boolean:
      case SemiringId::tropical:
      case SemiringId::nat_inf: {
        auto it = star_iterative_detail(ae.eps(), default_iteration_limit(ae.dim()));
        if (it && bound >= it->stationary_at + 1) {
          report.exact = true;
          report.note = "power sums stationary at " + std::to_string(it->stationary_at) +
                        ", bound " + std::to_string(bound) + " suffices: exact";
        } else if (it) {
          report.note = "power sums stationary at " + std::to_string(it->stationary_at) +
                        " but bound " + std::to_string(bound) +
                        " is short: partial-sum mode";
        } else {
          report.note = "power sums not stationary within the step limit: partial-sum mode";
        }
        break;
      }
      default:
        report.note = "silent matrix not nilpotent over a ring semiring: partial-sum mode "
                      "(no exact claim)";
        break;
    }
  }

  for (const Word& u : words_up_to(a.alphabet(), max_len)) {
    Value lhs = weight(a, u);
    Value rhs = phi_weight_oracle(ae, u, bound);
    bool equal = eq(lhs, rhs);
    if (!equal) {
      report.all_equal = false;
      if (!report.first_difference) report.first_difference = u;
    }
    report.rows.push_back(EquivalenceRow{u, std::move(lhs), std::move(rhs), equal});
  }
  return report;
}

}  // namespace wfa
