#include "wfa/generate.hpp"

namespace wfa {

std::size_t Rng::below(std::size_t n) {
  if (n == 0) return 0;
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

bool Rng::chance(double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
}

Value random_value(SemiringId sid, Rng& rng) {
  switch (sid) {
    case SemiringId::boolean:
      return Value::boolean(rng.chance(0.5));
    case SemiringId::nat:
      return Value::nat(static_cast<unsigned long>(rng.below(5)));
    case SemiringId::rational: {
      long num = static_cast<long>(rng.below(9)) - 4;  // -4..4
      unsigned long den = 1 + static_cast<unsigned long>(rng.below(4));
      return Value::rational(num, den);
    }
    case SemiringId::tropical:
      if (rng.chance(0.15)) return Value::tropical_infinity();
      return Value::tropical(mpq_class(rng.below(7), 1 + rng.below(2)));
    case SemiringId::nat_inf:
      if (rng.chance(0.1)) return Value::nat_inf_infinity();
      return Value::nat_inf(static_cast<unsigned long>(rng.below(4)));
  }
  throw usage_error("random_value: unknown semiring");
}

Value random_nonzero_value(SemiringId sid, Rng& rng) {
  for (;;) {
    Value v = random_value(sid, rng);
    if (!v.is_zero()) return v;
  }
}

Matrix random_matrix(SemiringId sid, std::size_t rows, std::size_t cols, Rng& rng,
                     double density) {
  Matrix out(rows, cols, sid);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng.chance(density)) out.set(i, j, random_nonzero_value(sid, rng));
    }
  }
  return out;
}

Matrix random_nilpotent_matrix(SemiringId sid, std::size_t n, Rng& rng,
                               std::size_t max_index) {
  double density = 0.45;
  for (;;) {
    Matrix out(n, n, sid);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.chance(density)) out.set(i, j, random_nonzero_value(sid, rng));
      }
    }
    if (max_index == 0 || is_nilpotent(out).index <= max_index) return out;
    density *= 0.8;
  }
}

EpsilonAutomaton random_eps_automaton(SemiringId sid, std::size_t dim,
                                      std::size_t alphabet_size, Rng& rng, bool nilpotent_eps,
                                      std::size_t max_index) {
  Alphabet alphabet(std::string("abc").substr(0, alphabet_size));
  Matrix lambda = random_matrix(sid, 1, dim, rng, 0.7);
  Matrix gamma = random_matrix(sid, dim, 1, rng, 0.7);
  std::map<char, Matrix> mu;
  for (char c : alphabet.letters()) {
    mu.emplace(c, random_matrix(sid, dim, dim, rng, 0.4));
  }

  Matrix eps(dim, dim, sid);
  if (nilpotent_eps) {
    eps = random_nilpotent_matrix(sid, dim, rng, max_index);
  } else {
    double density = 0.25;
    for (;;) {
      eps = random_matrix(sid, dim, dim, rng, density);
      auto it = star_iterative_detail(eps, default_iteration_limit(dim));
      if (it && it->stationary_at <= max_index) break;
      density *= 0.8;
    }
  }
  return EpsilonAutomaton(
      LinearRepresentation(std::move(alphabet), std::move(lambda), std::move(mu),
                           std::move(gamma)),
      std::move(eps));
}

Polynomial random_polynomial(SemiringId sid, const Alphabet& alphabet, std::size_t max_terms,
                             std::size_t max_len, Rng& rng, bool allow_epsilon_letter) {
  std::string letters = alphabet.letters();
  if (allow_epsilon_letter) letters += epsilon_letter;
  Polynomial out(sid, alphabet);
  const std::size_t terms = rng.below(max_terms + 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Word w;
    const std::size_t len = rng.below(max_len + 1);
    for (std::size_t i = 0; i < len && !letters.empty(); ++i) {
      w.push_back(letters[rng.below(letters.size())]);
    }
    out.add_term(w, random_value(sid, rng));
  }
  return out;
}

}  // namespace wfa
