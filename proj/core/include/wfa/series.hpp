#pragma once

#include "wfa/semiring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wfa {

/// The distinguished letter that the erasing morphism phi deletes. It is an
/// ordinary letter of the extended alphabet, not the empty word; the empty
/// word is the empty string.
inline constexpr char epsilon_letter = '@';

/// A word over an alphabet-with-epsilon-letter context, in the same literal
/// syntax the CLI uses: one char per letter, '@' for the silent letter, ""
/// for the empty word.
using Word = std::string;

/// A plain alphabet Sigma (the silent letter is implicit and reserved).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string letters);  // deduplicated and sorted; '@' rejected

  bool contains(char letter) const;
  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  /// Letters of w all in Sigma (plus '@' when allow_epsilon_letter).
  bool valid_word(const Word& w, bool allow_epsilon_letter) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

/// The erasing morphism on words: deletes every '@', fixes Sigma.
Word phi_word(const Word& v);

/// All preimages of u (a word over Sigma) under phi whose '@'-runs are each
/// shorter than bound: @^n0 a1 @^n1 ... ak @^nk with every ni < bound, in
/// ascending lexicographic order of (n0..nk). Exactly bound^(|u|+1) words.
std::vector<Word> enumerate_preimages(const Word& u, std::size_t bound);

/// Length-then-lexicographic order; keeps polynomial iteration in the order
/// truncation and display want.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// A finitely supported map from words to nonzero coefficients, over one
/// semiring and one alphabet context. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial(SemiringId sid, Alphabet alphabet);

  SemiringId semiring() const { return sid_; }
  const Alphabet& alphabet() const { return alphabet_; }

  /// Accumulates v into the coefficient of w ((+) with any existing one),
  /// pruning the term if the sum is zero.
  void add_term(const Word& w, const Value& v);

  /// Coefficient of w (zero when absent).
  Value coeff(const Word& w) const;

  const std::map<Word, Value, WordOrder>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

 private:
  SemiringId sid_;
  Alphabet alphabet_;
  std::map<Word, Value, WordOrder> terms_;
};

bool operator==(const Polynomial& p, const Polynomial& q);
inline bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

/// Coefficientwise sum. Throws usage_error when the contexts differ.
Polynomial operator+(const Polynomial& p, const Polynomial& q);

/// Cauchy product: the coefficient of w in pq is the finite sum of
/// p(w1) (*) q(w2) over all splits w = w1 w2.
Polynomial operator*(const Polynomial& p, const Polynomial& q);

Polynomial scale_left(const Value& alpha, const Polynomial& p);
Polynomial scale_right(const Polynomial& p, const Value& alpha);

/// The erasing morphism on polynomials: the coefficient of u in the image is
/// the (+)-sum of the coefficients of all preimages of u in the support.
/// Always defined on polynomials (supports are finite).
Polynomial phi(const Polynomial& p);

/// Drops every term longer than max_len.
Polynomial truncate(const Polynomial& p, std::size_t max_len);

/// The length-<=max_len slice of p*, solved layer by layer from
/// Y = 1 (+) pY: the empty-word layer is the scalar star of the constant
/// term, and each longer coefficient is that star times the already-known
/// shorter layers. Empty optional when the constant term has no star.
std::optional<Polynomial> poly_star_truncated(const Polynomial& p, std::size_t max_len);

/// Debug/display form, e.g. "2 a@b + 3 eps".
std::string to_string(const Polynomial& p);

}  // namespace wfa
