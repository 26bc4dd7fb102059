#include "wfa/semiring.hpp"

#include <array>
#include <cstddef>

namespace wfa {

namespace {

const std::array<SemiringDescriptor, 5> kDescriptors = {{
    {SemiringId::boolean, false, false, true, "bool"},
    {SemiringId::nat, false, false, true, "nat"},
    {SemiringId::rational, true, true, true, "rational"},
    {SemiringId::tropical, false, false, true, "tropical"},
    {SemiringId::nat_inf, false, false, true, "nat_inf"},
}};

void require_same(const Value& x, const Value& y, const char* op) {
  if (x.semiring() != y.semiring()) {
    throw usage_error(std::string(op) + ": mixed-semiring operands (" +
                      descriptor(x.semiring()).name + " vs " +
                      descriptor(y.semiring()).name + ")");
  }
}

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_unsigned(const std::string& s, const char* what) {
  if (!is_digits(s)) throw usage_error(std::string(what) + ": expected decimal digits, got \"" + s + "\"");
  return mpz_class(s);
}

// "p" or "p/q" with optional leading '-', canonicalized.
mpq_class parse_fraction(const std::string& s, const char* what) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body = body.substr(1);
  }
  mpq_class q;
  auto slash = body.find('/');
  if (slash == std::string::npos) {
    q = mpq_class(parse_unsigned(body, what));
  } else {
    mpz_class num = parse_unsigned(body.substr(0, slash), what);
    mpz_class den = parse_unsigned(body.substr(slash + 1), what);
    if (den == 0) throw usage_error(std::string(what) + ": zero denominator in \"" + s + "\"");
    q = mpq_class(num, den);
    q.canonicalize();
  }
  return neg ? mpq_class(-q) : q;
}

// "p", "p/q" or a decimal such as "2.5"; nonnegative only.
mpq_class parse_nonneg_decimal(const std::string& s, const char* what) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class q = parse_fraction(s, what);
    if (q < 0) throw usage_error(std::string(what) + ": negative value \"" + s + "\" not in carrier");
    return q;
  }
  std::string whole = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  if (whole.empty()) whole = "0";
  if (!is_digits(whole) || !is_digits(frac)) {
    throw usage_error(std::string(what) + ": malformed decimal \"" + s + "\"");
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  mpq_class q(parse_unsigned(whole, what) * scale + parse_unsigned(frac, what), scale);
  q.canonicalize();
  return q;
}

// Exact decimal expansion when the denominator is 2^a 5^b, else "p/q".
std::string nonneg_rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  mpz_class den = q.get_den();
  std::size_t twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
    ++fives;
  }
  if (den != 1) return q.get_str();
  std::size_t places = twos > fives ? twos : fives;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class digits = q.get_num() * scale / q.get_den();
  std::string text = digits.get_str();
  if (text.size() <= places) text.insert(0, places + 1 - text.size(), '0');
  text.insert(text.size() - places, ".");
  return text;
}

}  // namespace

const SemiringDescriptor& descriptor(SemiringId id) {
  return kDescriptors[static_cast<std::size_t>(id)];
}

std::optional<SemiringId> semiring_from_name(const std::string& name) {
  for (const auto& d : kDescriptors) {
    if (name == d.name) return d.id;
  }
  return std::nullopt;
}

Value::Value(SemiringId sid, bool inf, mpq_class q) : sid_(sid), inf_(inf), q_(std::move(q)) {}

Value Value::zero(SemiringId sid) {
  switch (sid) {
    case SemiringId::tropical:
      return Value(sid, true, 0);
    default:
      return Value(sid, false, 0);
  }
}

Value Value::one(SemiringId sid) {
  switch (sid) {
    case SemiringId::tropical:
      return Value(sid, false, 0);  // multiplicative unit of (min,+) is real 0
    default:
      return Value(sid, false, 1);
  }
}

Value Value::boolean(bool bit) { return Value(SemiringId::boolean, false, bit ? 1 : 0); }

Value Value::nat(unsigned long n) { return Value(SemiringId::nat, false, mpq_class(n)); }

Value Value::nat(const mpz_class& n) {
  if (n < 0) throw usage_error("nat: negative value not in carrier");
  return Value(SemiringId::nat, false, mpq_class(n));
}

Value Value::rational(long num, unsigned long den) {
  if (den == 0) throw usage_error("rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Value(SemiringId::rational, false, q);
}

Value Value::rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Value(SemiringId::rational, false, c);
}

Value Value::tropical(unsigned long v) { return Value(SemiringId::tropical, false, mpq_class(v)); }

Value Value::tropical(const mpq_class& v) {
  mpq_class c(v);
  c.canonicalize();
  if (c < 0) throw usage_error("tropical: carrier is the closed half-ray [0,+inf]");
  return Value(SemiringId::tropical, false, c);
}

Value Value::tropical_infinity() { return Value(SemiringId::tropical, true, 0); }

Value Value::nat_inf(unsigned long n) { return Value(SemiringId::nat_inf, false, mpq_class(n)); }

Value Value::nat_inf(const mpz_class& n) {
  if (n < 0) throw usage_error("nat_inf: negative value not in carrier");
  return Value(SemiringId::nat_inf, false, mpq_class(n));
}

Value Value::nat_inf_infinity() { return Value(SemiringId::nat_inf, true, 0); }

bool Value::is_zero() const { return eq(*this, zero(sid_)); }

bool Value::is_one() const { return eq(*this, one(sid_)); }

Value add(const Value& x, const Value& y) {
  require_same(x, y, "add");
  switch (x.semiring()) {
    case SemiringId::boolean:
      return Value::boolean(x.numeric() != 0 || y.numeric() != 0);
    case SemiringId::nat:
      return Value::nat(mpz_class(x.numeric().get_num() + y.numeric().get_num()));
    case SemiringId::rational:
      return Value::rational(mpq_class(x.numeric() + y.numeric()));
    case SemiringId::tropical: {
      if (x.is_infinite()) return y;
      if (y.is_infinite()) return x;
      return Value::tropical(x.numeric() < y.numeric() ? x.numeric() : y.numeric());
    }
    case SemiringId::nat_inf:
      if (x.is_infinite() || y.is_infinite()) return Value::nat_inf_infinity();
      return Value::nat_inf(mpz_class(x.numeric().get_num() + y.numeric().get_num()));
  }
  throw usage_error("add: unknown semiring");
}

Value mul(const Value& x, const Value& y) {
  require_same(x, y, "mul");
  switch (x.semiring()) {
    case SemiringId::boolean:
      return Value::boolean(x.numeric() != 0 && y.numeric() != 0);
    case SemiringId::nat:
      return Value::nat(mpz_class(x.numeric().get_num() * y.numeric().get_num()));
    case SemiringId::rational:
      return Value::rational(mpq_class(x.numeric() * y.numeric()));
    case SemiringId::tropical:
      if (x.is_infinite() || y.is_infinite()) return Value::tropical_infinity();
      return Value::tropical(mpq_class(x.numeric() + y.numeric()));
    case SemiringId::nat_inf: {
      // 0 annihilates even +inf.
      if (x.is_zero() || y.is_zero()) return Value::zero(SemiringId::nat_inf);
      if (x.is_infinite() || y.is_infinite()) return Value::nat_inf_infinity();
      return Value::nat_inf(mpz_class(x.numeric().get_num() * y.numeric().get_num()));
    }
  }
  throw usage_error("mul: unknown semiring");
}

std::optional<Value> star_scalar(const Value& x) {
  switch (x.semiring()) {
    case SemiringId::boolean:
      return Value::boolean(true);
    case SemiringId::nat:
      // y = x*y + 1 has a natural solution only for x = 0.
      if (x.is_zero()) return Value::one(SemiringId::nat);
      return std::nullopt;
    case SemiringId::rational: {
      if (x.numeric() == 1) return std::nullopt;
      mpq_class y(1);
      y /= mpq_class(1 - x.numeric());
      return Value::rational(y);
    }
    case SemiringId::tropical:
      // min(x + y, 0) = y forces y = 0 on the half-ray, for every x.
      return Value::one(SemiringId::tropical);
    case SemiringId::nat_inf:
      if (x.is_zero()) return Value::one(SemiringId::nat_inf);
      return Value::nat_inf_infinity();
  }
  return std::nullopt;
}

bool eq(const Value& x, const Value& y) {
  require_same(x, y, "eq");
  if (x.is_infinite() != y.is_infinite()) return false;
  if (x.is_infinite()) return true;
  return x.numeric() == y.numeric();
}

Value parse_value(SemiringId sid, const std::string& text) {
  switch (sid) {
    case SemiringId::boolean:
      if (text == "0") return Value::boolean(false);
      if (text == "1") return Value::boolean(true);
      throw usage_error("bool: expected 0 or 1, got \"" + text + "\"");
    case SemiringId::nat:
      return Value::nat(parse_unsigned(text, "nat"));
    case SemiringId::rational:
      return Value::rational(parse_fraction(text, "rational"));
    case SemiringId::tropical:
      if (text == "inf") return Value::tropical_infinity();
      return Value::tropical(parse_nonneg_decimal(text, "tropical"));
    case SemiringId::nat_inf:
      if (text == "inf") return Value::nat_inf_infinity();
      return Value::nat_inf(parse_unsigned(text, "nat_inf"));
  }
  throw usage_error("parse_value: unknown semiring");
}

std::string to_string(const Value& v) {
  switch (v.semiring()) {
    case SemiringId::boolean:
      return v.numeric() != 0 ? "1" : "0";
    case SemiringId::nat:
      return v.numeric().get_num().get_str();
    case SemiringId::rational:
      return v.numeric().get_str();
    case SemiringId::tropical:
      if (v.is_infinite()) return "inf";
      return nonneg_rational_text(v.numeric());
    case SemiringId::nat_inf:
      if (v.is_infinite()) return "inf";
      return v.numeric().get_num().get_str();
  }
  throw usage_error("to_string: unknown semiring");
}

}  // namespace wfa
