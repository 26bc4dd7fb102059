#include "wfa/series.hpp"

#include <algorithm>

namespace wfa {

namespace {

void require_same_context(const Polynomial& p, const Polynomial& q, const char* op) {
  if (p.semiring() != q.semiring() || !(p.alphabet() == q.alphabet())) {
    throw usage_error(std::string(op) + ": mismatched semiring or alphabet context");
  }
}

}  // namespace

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
  if (letters_.find(epsilon_letter) != std::string::npos) {
    throw usage_error("Alphabet: '@' is reserved for the silent letter");
  }
}

bool Alphabet::contains(char letter) const {
  return letters_.find(letter) != std::string::npos;
}

bool Alphabet::valid_word(const Word& w, bool allow_epsilon_letter) const {
  for (char c : w) {
    if (c == epsilon_letter) {
      if (!allow_epsilon_letter) return false;
    } else if (!contains(c)) {
      return false;
    }
  }
  return true;
}

Word phi_word(const Word& v) {
  Word out;
  out.reserve(v.size());
  for (char c : v) {
    if (c != epsilon_letter) out.push_back(c);
  }
  return out;
}

std::vector<Word> enumerate_preimages(const Word& u, std::size_t bound) {
  if (u.find(epsilon_letter) != std::string::npos) {
    throw usage_error("enumerate_preimages: input word must be over the plain alphabet");
  }
  std::vector<Word> out;
  if (bound == 0) return out;
  const std::size_t k = u.size();
  std::vector<std::size_t> runs(k + 1, 0);
  for (;;) {
    Word w;
    for (std::size_t i = 0; i <= k; ++i) {
      w.append(runs[i], epsilon_letter);
      if (i < k) w.push_back(u[i]);
    }
    out.push_back(std::move(w));
    std::size_t i = k + 1;
    while (i > 0 && ++runs[i - 1] == bound) {
      runs[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

Polynomial::Polynomial(SemiringId sid, Alphabet alphabet)
    : sid_(sid), alphabet_(std::move(alphabet)) {}

void Polynomial::add_term(const Word& w, const Value& v) {
  if (v.semiring() != sid_) throw usage_error("Polynomial: mixed-semiring coefficient");
  if (!alphabet_.valid_word(w, /*allow_epsilon_letter=*/true)) {
    throw usage_error("Polynomial: word \"" + w + "\" not over the alphabet context");
  }
  if (v.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, v);
    return;
  }
  Value sum = add(it->second, v);
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

Value Polynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  if (it == terms_.end()) return Value::zero(sid_);
  return it->second;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.semiring() != q.semiring() || !(p.alphabet() == q.alphabet())) return false;
  if (p.terms().size() != q.terms().size()) return false;
  auto it = q.terms().begin();
  for (const auto& [w, v] : p.terms()) {
    if (it->first != w || !eq(it->second, v)) return false;
    ++it;
  }
  return true;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_context(p, q, "poly_add");
  Polynomial out = p;
  for (const auto& [w, v] : q.terms()) out.add_term(w, v);
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_context(p, q, "poly_cauchy");
  Polynomial out(p.semiring(), p.alphabet());
  for (const auto& [wp, vp] : p.terms()) {
    for (const auto& [wq, vq] : q.terms()) {
      out.add_term(wp + wq, mul(vp, vq));
    }
  }
  return out;
}

Polynomial scale_left(const Value& alpha, const Polynomial& p) {
  Polynomial out(p.semiring(), p.alphabet());
  for (const auto& [w, v] : p.terms()) out.add_term(w, mul(alpha, v));
  return out;
}

Polynomial scale_right(const Polynomial& p, const Value& alpha) {
  Polynomial out(p.semiring(), p.alphabet());
  for (const auto& [w, v] : p.terms()) out.add_term(w, mul(v, alpha));
  return out;
}

Polynomial phi(const Polynomial& p) {
  Polynomial out(p.semiring(), p.alphabet());
  for (const auto& [w, v] : p.terms()) out.add_term(phi_word(w), v);
  return out;
}

Polynomial truncate(const Polynomial& p, std::size_t max_len) {
  Polynomial out(p.semiring(), p.alphabet());
  for (const auto& [w, v] : p.terms()) {
    if (w.size() <= max_len) out.add_term(w, v);
  }
  return out;
}

std::optional<Polynomial> poly_star_truncated(const Polynomial& p, std::size_t max_len) {
  auto constant_star = star_scalar(p.coeff(Word()));
  if (!constant_star) return std::nullopt;

  Polynomial result(p.semiring(), p.alphabet());
  result.add_term(Word(), *constant_star);
  for (std::size_t len = 1; len <= max_len; ++len) {
    // b_u = sum over splits u = vw with v a nonempty term of p and |w| < len.
    Polynomial layer(p.semiring(), p.alphabet());
    for (const auto& [v, pv] : p.terms()) {
      if (v.empty() || v.size() > len) continue;
      for (const auto& [w, yw] : result.terms()) {
        if (w.size() + v.size() != len) continue;
        layer.add_term(v + w, mul(pv, yw));
      }
    }
    for (const auto& [u, b] : layer.terms()) {
      result.add_term(u, mul(*constant_star, b));
    }
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, v] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(v);
    out += ' ';
    out += w.empty() ? "eps" : w;
  }
  return out;
}

}  // namespace wfa
