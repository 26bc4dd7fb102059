#include "wfa/generate.hpp"
#include "wfa/semiring.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace wfa;

namespace {

const SemiringId kAll[] = {SemiringId::boolean, SemiringId::nat, SemiringId::rational,
                           SemiringId::tropical, SemiringId::nat_inf};

Value fold_sum(const std::vector<Value>& family, SemiringId sid) {
  Value acc = Value::zero(sid);
  for (const Value& v : family) acc = add(acc, v);
  return acc;
}

}  // namespace

TEST_CASE("descriptor flags") {
  CHECK(descriptor(SemiringId::rational).is_ring);
  CHECK(descriptor(SemiringId::rational).is_field);
  for (SemiringId sid : kAll) {
    const auto& d = descriptor(sid);
    if (d.is_field) CHECK(d.is_ring);
    CHECK(d.is_commutative);
    if (sid != SemiringId::rational) {
      CHECK(!d.is_ring);
      CHECK(!d.is_field);
    }
    CHECK(semiring_from_name(d.name) == sid);
  }
  CHECK(!semiring_from_name("complex"));
}

TEST_CASE("addition examples") {
  CHECK(add(Value::nat(2ul), Value::nat(3ul)) == Value::nat(5ul));
  CHECK(add(Value::tropical(2ul), Value::tropical(3ul)) == Value::tropical(2ul));
  CHECK(add(Value::boolean(true), Value::boolean(true)) == Value::boolean(true));
}

TEST_CASE("multiplication examples") {
  CHECK(mul(Value::tropical(2ul), Value::tropical(3ul)) == Value::tropical(5ul));
  CHECK(mul(Value::rational(1, 2), Value::rational(2, 3)) == Value::rational(1, 3));
  Rng rng(11);
  for (SemiringId sid : kAll) {
    for (int i = 0; i < 20; ++i) {
      Value x = random_value(sid, rng);
      CHECK(mul(Value::zero(sid), x) == Value::zero(sid));
      CHECK(mul(x, Value::zero(sid)) == Value::zero(sid));
    }
  }
  // zero annihilates even the infinite element
  CHECK(mul(Value::zero(SemiringId::nat_inf), Value::nat_inf_infinity()) ==
        Value::zero(SemiringId::nat_inf));
}

TEST_CASE("scalar star examples") {
  auto half = star_scalar(Value::rational(1, 2));
  REQUIRE(half.has_value());
  CHECK(*half == Value::rational(2));

  auto nat0 = star_scalar(Value::nat(0ul));
  REQUIRE(nat0.has_value());
  CHECK(*nat0 == Value::nat(1ul));
  for (unsigned long n = 1; n <= 5; ++n) {
    CHECK(!star_scalar(Value::nat(n)));
    // no natural y solves y = n*y + 1 (exhaustive scan far past any fixpoint)
    for (unsigned long y = 0; y <= 50; ++y) {
      CHECK(n * y + 1 != y);
    }
  }

  // tropical star solves min(x + y, 0) = y; y = 0 is the unique solution
  auto trop = star_scalar(Value::tropical(3ul));
  REQUIRE(trop.has_value());
  CHECK(*trop == Value::one(SemiringId::tropical));
  for (unsigned long y = 0; y <= 6; ++y) {
    Value candidate = Value::tropical(y);
    bool fixes = add(mul(Value::tropical(3ul), candidate), Value::one(SemiringId::tropical)) ==
                 candidate;
    CHECK(fixes == (y == 0));
  }
  CHECK(star_scalar(Value::tropical_infinity()).value() == Value::one(SemiringId::tropical));

  auto two_inf = star_scalar(Value::nat_inf(2ul));
  REQUIRE(two_inf.has_value());
  CHECK(*two_inf == Value::nat_inf_infinity());
}

TEST_CASE("star partiality per instance") {
  CHECK(!star_scalar(Value::rational(1)));
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    Value x = random_value(SemiringId::rational, rng);
    if (x == Value::rational(1)) continue;
    CHECK(star_scalar(x).has_value());
  }
  for (int i = 0; i < 50; ++i) {
    CHECK(star_scalar(random_value(SemiringId::tropical, rng)).has_value());
    CHECK(star_scalar(random_value(SemiringId::boolean, rng)) ==
          Value::boolean(true));
    CHECK(star_scalar(random_value(SemiringId::nat_inf, rng)).has_value());
  }
}

TEST_CASE("star identities whenever defined") {
  Rng rng(13);
  for (SemiringId sid : kAll) {
    for (int i = 0; i < 80; ++i) {
      Value x = random_value(sid, rng);
      auto y = star_scalar(x);
      if (!y) continue;
      CHECK(add(mul(x, *y), Value::one(sid)) == *y);
      CHECK(add(mul(*y, x), Value::one(sid)) == *y);
    }
  }
}

TEST_CASE("equality is canonical and same-semiring only") {
  CHECK(Value::rational(1, 2) == Value::rational(2, 4));
  CHECK(Value::tropical_infinity() == Value::tropical_infinity());
  CHECK(Value::nat(2ul) != Value::nat(3ul));
  CHECK_THROWS_AS((void)eq(Value::nat(1ul), Value::boolean(true)), usage_error);
  CHECK_THROWS_AS((void)add(Value::nat(1ul), Value::rational(1)), usage_error);
  CHECK_THROWS_AS((void)mul(Value::tropical(1ul), Value::nat_inf(1ul)), usage_error);
}

TEST_CASE("semiring laws on random triples") {
  Rng rng(14);
  for (SemiringId sid : kAll) {
    const Value zero = Value::zero(sid);
    const Value one = Value::one(sid);
    for (int i = 0; i < 120; ++i) {
      Value a = random_value(sid, rng);
      Value b = random_value(sid, rng);
      Value c = random_value(sid, rng);
      CHECK(add(add(a, b), c) == add(a, add(b, c)));
      CHECK(add(a, b) == add(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
      CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
      CHECK(add(a, zero) == a);
      CHECK(mul(a, one) == a);
      CHECK(mul(one, a) == a);
    }
  }
}

TEST_CASE("finite summation behaves like a sum function") {
  // The countable-sum axioms restricted to finite families: order
  // independence, termwise addition, and finite partitioning.
  Rng rng(15);
  for (SemiringId sid : kAll) {
    for (int i = 0; i < 30; ++i) {
      std::vector<Value> family;
      const std::size_t len = rng.below(7);
      for (std::size_t k = 0; k < len; ++k) family.push_back(random_value(sid, rng));

      Value total = fold_sum(family, sid);
      std::vector<Value> shuffled = family;
      for (std::size_t k = shuffled.size(); k > 1; --k) {
        std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
      }
      CHECK(fold_sum(shuffled, sid) == total);

      std::vector<Value> other;
      for (std::size_t k = 0; k < len; ++k) other.push_back(random_value(sid, rng));
      std::vector<Value> pointwise;
      for (std::size_t k = 0; k < len; ++k) pointwise.push_back(add(family[k], other[k]));
      CHECK(fold_sum(pointwise, sid) == add(total, fold_sum(other, sid)));

      const std::size_t cut = rng.below(len + 1);
      std::vector<Value> front(family.begin(), family.begin() + cut);
      std::vector<Value> back(family.begin() + cut, family.end());
      CHECK(add(fold_sum(front, sid), fold_sum(back, sid)) == total);
    }
  }
}

TEST_CASE("text encodings") {
  CHECK(parse_value(SemiringId::boolean, "1") == Value::boolean(true));
  CHECK(parse_value(SemiringId::nat, "42") == Value::nat(42ul));
  CHECK(parse_value(SemiringId::rational, "-7/3") == Value::rational(-7, 3));
  CHECK(parse_value(SemiringId::rational, "5") == Value::rational(5));
  CHECK(parse_value(SemiringId::tropical, "2.5") == Value::tropical(mpq_class(5, 2)));
  CHECK(parse_value(SemiringId::tropical, "inf") == Value::tropical_infinity());
  CHECK(parse_value(SemiringId::nat_inf, "inf") == Value::nat_inf_infinity());

  CHECK(to_string(Value::rational(2, 4)) == "1/2");
  CHECK(to_string(Value::tropical(mpq_class(5, 2))) == "2.5");
  CHECK(to_string(Value::tropical(mpq_class(1, 3))) == "1/3");
  CHECK(to_string(Value::tropical_infinity()) == "inf");
  CHECK(to_string(Value::nat(0ul)) == "0");

  CHECK_THROWS_AS(parse_value(SemiringId::boolean, "2"), usage_error);
  CHECK_THROWS_AS(parse_value(SemiringId::nat, "-1"), usage_error);
  CHECK_THROWS_AS(parse_value(SemiringId::nat, "1.5"), usage_error);
  CHECK_THROWS_AS(parse_value(SemiringId::rational, "1/0"), usage_error);
  CHECK_THROWS_AS(parse_value(SemiringId::tropical, "-2"), usage_error);
  CHECK_THROWS_AS(parse_value(SemiringId::nat_inf, "infinity"), usage_error);

  Rng rng(16);
  for (SemiringId sid : kAll) {
    for (int i = 0; i < 60; ++i) {
      Value v = random_value(sid, rng);
      CHECK(parse_value(sid, to_string(v)) == v);
    }
  }
}
