#include "wfa/generate.hpp"
#include "wfa/series.hpp"

#include <doctest.h>

#include <vector>

using namespace wfa;

namespace {

Polynomial poly(SemiringId sid, const Alphabet& a,
                std::initializer_list<std::pair<const char*, const char*>> terms) {
  Polynomial out(sid, a);
  for (const auto& [w, c] : terms) out.add_term(w, parse_value(sid, c));
  return out;
}

unsigned long binomial(unsigned long n, unsigned long k) {
  unsigned long out = 1;
  for (unsigned long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("word erasure") {
  CHECK(phi_word("@a@@b") == "ab");
  CHECK(phi_word("@@") == "");
  CHECK(phi_word("abc") == "abc");
  CHECK(phi_word("") == "");

  Rng rng(41);
  Alphabet sigma("ab");
  for (int i = 0; i < 50; ++i) {
    Word v, w;
    for (std::size_t k = rng.below(6); k > 0; --k) v.push_back("ab@"[rng.below(3)]);
    for (std::size_t k = rng.below(6); k > 0; --k) w.push_back("ab@"[rng.below(3)]);
    CHECK(phi_word(v + w) == phi_word(v) + phi_word(w));
  }
}

TEST_CASE("preimage enumeration") {
  CHECK(enumerate_preimages("", 2) == std::vector<Word>{"", "@"});
  CHECK(enumerate_preimages("a", 1) == std::vector<Word>{"a"});
  CHECK(enumerate_preimages("a", 2) == std::vector<Word>{"a", "a@", "@a", "@a@"});
  CHECK(enumerate_preimages("ab", 0).empty());

  for (std::size_t bound = 1; bound <= 3; ++bound) {
    for (const Word& u : {Word(""), Word("a"), Word("ab"), Word("aba")}) {
      auto all = enumerate_preimages(u, bound);
      std::size_t expected = 1;
      for (std::size_t i = 0; i <= u.size(); ++i) expected *= bound;
      CHECK(all.size() == expected);
      for (const Word& v : all) CHECK(phi_word(v) == u);
    }
  }
  CHECK_THROWS_AS(enumerate_preimages("a@", 2), usage_error);
}

TEST_CASE("polynomial erasure merges preimage coefficients") {
  Alphabet sigma("ab");
  Polynomial p = poly(SemiringId::nat, sigma, {{"@a", "2"}, {"a@", "3"}, {"b", "1"}});
  Polynomial expected = poly(SemiringId::nat, sigma, {{"a", "5"}, {"b", "1"}});
  CHECK(phi(p) == expected);

  Polynomial silent = poly(SemiringId::nat, sigma, {{"@@", "18"}});
  CHECK(phi(silent) == poly(SemiringId::nat, sigma, {{"", "18"}}));

  CHECK(phi(Polynomial(SemiringId::nat, sigma)).is_zero());
}

TEST_CASE("polynomial arithmetic basics") {
  Alphabet sigma("ab");
  Polynomial p = poly(SemiringId::nat, sigma, {{"a", "1"}, {"b", "1"}});
  CHECK(p + Polynomial(SemiringId::nat, sigma) == p);
  CHECK(scale_left(Value::zero(SemiringId::nat), p).is_zero());
  CHECK(p + poly(SemiringId::nat, sigma, {{"a", "1"}}) ==
        poly(SemiringId::nat, sigma, {{"a", "2"}, {"b", "1"}}));

  // cancellation prunes terms over a ring
  Polynomial q = poly(SemiringId::rational, sigma, {{"a", "1/2"}});
  CHECK((q + poly(SemiringId::rational, sigma, {{"a", "-1/2"}})).is_zero());

  CHECK(poly(SemiringId::nat, sigma, {{"a", "1"}}) *
            poly(SemiringId::nat, sigma, {{"b", "1"}}) ==
        poly(SemiringId::nat, sigma, {{"ab", "1"}}));
  CHECK(poly(SemiringId::nat, sigma, {{"a", "1"}, {"", "1"}}) *
            poly(SemiringId::nat, sigma, {{"a", "1"}}) ==
        poly(SemiringId::nat, sigma, {{"aa", "1"}, {"a", "1"}}));

  Polynomial other(SemiringId::nat, Alphabet("abc"));
  CHECK_THROWS_AS(p + other, usage_error);
  CHECK_THROWS_AS(p * other, usage_error);
}

TEST_CASE("erasure is a semiring map on polynomials") {
  Rng rng(42);
  Alphabet sigma("ab");
  for (SemiringId sid : {SemiringId::nat, SemiringId::boolean}) {
    for (int i = 0; i < 60; ++i) {
      Polynomial p = random_polynomial(sid, sigma, 8, 4, rng, true);
      Polynomial q = random_polynomial(sid, sigma, 8, 4, rng, true);
      Value alpha = random_value(sid, rng);
      CHECK(phi(p + q) == phi(p) + phi(q));
      CHECK(phi(p * q) == phi(p) * phi(q));
      CHECK(phi(scale_left(alpha, p)) == scale_left(alpha, phi(p)));
      CHECK(phi(scale_right(p, alpha)) == scale_right(phi(p), alpha));
    }
  }
}

TEST_CASE("support inclusions") {
  Rng rng(43);
  Alphabet sigma("ab");
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_polynomial(SemiringId::nat, sigma, 8, 3, rng, true);
    Polynomial q = random_polynomial(SemiringId::nat, sigma, 8, 3, rng, true);

    for (const auto& [w, v] : (p + q).terms()) {
      CHECK((!p.coeff(w).is_zero() || !q.coeff(w).is_zero()));
    }
    // every product-support word splits into support words of the factors
    for (const auto& [w, v] : (p * q).terms()) {
      bool found = false;
      for (std::size_t cut = 0; cut <= w.size() && !found; ++cut) {
        found = !p.coeff(w.substr(0, cut)).is_zero() &&
                !q.coeff(w.substr(cut)).is_zero();
      }
      CHECK(found);
    }
  }
}

TEST_CASE("truncated star") {
  Alphabet sigma("ab");
  Polynomial a_bool = poly(SemiringId::boolean, sigma, {{"a", "1"}});
  auto s = poly_star_truncated(a_bool, 3);
  REQUIRE(s.has_value());
  CHECK(*s == poly(SemiringId::boolean, sigma,
                   {{"", "1"}, {"a", "1"}, {"aa", "1"}, {"aaa", "1"}}));

  Polynomial two_a = poly(SemiringId::rational, sigma, {{"a", "2"}});
  auto geo = poly_star_truncated(two_a, 2);
  REQUIRE(geo.has_value());
  CHECK(*geo == poly(SemiringId::rational, sigma, {{"", "1"}, {"a", "2"}, {"aa", "4"}}));

  // constant term without a star
  CHECK(!poly_star_truncated(poly(SemiringId::nat, sigma, {{"", "1"}, {"a", "1"}}), 3));

  // constant term whose star exists feeds every layer
  Polynomial with_const = poly(SemiringId::rational, sigma, {{"", "1/2"}, {"a", "1"}});
  auto t = poly_star_truncated(with_const, 2);
  REQUIRE(t.has_value());
  CHECK(t->coeff("") == Value::rational(2));
  // y_a = c* (p_a y_eps) = 2 * (1 * 2) = 4; y_aa = c* p_a y_a = 8
  CHECK(t->coeff("a") == Value::rational(4));
  CHECK(t->coeff("aa") == Value::rational(8));

  // fixpoint: truncate(P Y + 1, L) = Y when the constant term is absent
  Rng rng(44);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_polynomial(SemiringId::nat, sigma, 6, 3, rng, false);
    if (!p.coeff("").is_zero()) continue;
    auto y = poly_star_truncated(p, 4);
    REQUIRE(y.has_value());
    Polynomial unit(SemiringId::nat, sigma);
    unit.add_term("", Value::one(SemiringId::nat));
    CHECK(truncate(p * *y + unit, 4) == *y);
  }
}

TEST_CASE("a fiber-finite truncation that is not a geometric series") {
  // Words with as many 'a's as silent letters, up to length 6: each erasure
  // fiber over a^k meets the support in exactly binomial(2k, k) words. (The
  // full series is a standard example of fiber-finiteness without
  // rationality.)
  Alphabet sigma("a");
  Polynomial s(SemiringId::nat, sigma);
  std::vector<Word> frontier{""};
  for (std::size_t len = 0; len <= 6; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      std::size_t as = 0, eps = 0;
      for (char c : w) (c == 'a' ? as : eps) += 1;
      if (as == eps) s.add_term(w, Value::one(SemiringId::nat));
      if (w.size() < 6) {
        next.push_back(w + 'a');
        next.push_back(w + '@');
      }
    }
    frontier = std::move(next);
  }
  for (unsigned long k = 0; k <= 3; ++k) {
    Word image(k, 'a');
    std::size_t count = 0;
    for (const auto& [w, v] : s.terms()) {
      if (phi_word(w) == image) ++count;
    }
    CHECK(count == binomial(2 * k, k));
  }
}
