#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace wfa {

/// Contract violation: mixed-semiring operands, shape mismatches, malformed
/// encodings, precondition failures. Distinct from value-level outcomes (an
/// undefined star is an empty optional, never an exception).
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// The five built-in semiring instances.
///
///   boolean   ({0,1}, or, and, 0, 1)
///   nat       (N, +, *, 0, 1), arbitrary precision
///   rational  (Q, +, *, 0, 1), exact fractions in lowest terms
///   tropical  ([0,+inf], min, +, +inf, 0), exact rational payloads
///   nat_inf   (N u {+inf}, +, *, 0, 1)
///
/// The tropical carrier is deliberately the closed nonnegative half-ray, which
/// makes its star total (the unique solution of min(x+y, 0) = y is y = 0).
enum class SemiringId { boolean, nat, rational, tropical, nat_inf };

struct SemiringDescriptor {
  SemiringId id;
  bool is_ring;         // additive inverses exist (required by Strassen)
  bool is_field;
  bool is_commutative;
  const char* name;     // id string used by the file formats
};

const SemiringDescriptor& descriptor(SemiringId id);

/// Maps a file-format id string ("bool", "nat", "rational", "tropical",
/// "nat_inf") back to the instance.
std::optional<SemiringId> semiring_from_name(const std::string& name);

/// One element of one semiring instance. Immutable after construction, safe
/// to share across threads. All carriers are exact: naturals and rational
/// numerators/denominators are arbitrary precision, tropical payloads are
/// exact rationals, and equality is bit-exact on the canonical form
/// (fractions in lowest terms, infinity normalized).
class Value {
 public:
  static Value zero(SemiringId sid);
  static Value one(SemiringId sid);

  static Value boolean(bool bit);
  static Value nat(unsigned long n);
  static Value nat(const mpz_class& n);
  static Value rational(long num, unsigned long den = 1);
  static Value rational(const mpq_class& q);
  static Value tropical(unsigned long v);
  static Value tropical(const mpq_class& v);
  static Value tropical_infinity();
  static Value nat_inf(unsigned long n);
  static Value nat_inf(const mpz_class& n);
  static Value nat_inf_infinity();

  SemiringId semiring() const { return sid_; }
  bool is_infinite() const { return inf_; }
  /// Finite payload; meaningless when is_infinite().
  const mpq_class& numeric() const { return q_; }

  bool is_zero() const;
  bool is_one() const;

 private:
  Value(SemiringId sid, bool inf, mpq_class q);

  SemiringId sid_;
  bool inf_;
  mpq_class q_;
};

/// x (+) y. Throws usage_error on mixed-semiring operands.
Value add(const Value& x, const Value& y);

/// x (*) y. Throws usage_error on mixed-semiring operands.
Value mul(const Value& x, const Value& y);

/// The star of x: a y with (x*y)+1 = y and (y*x)+1 = y, when one exists in
/// the carrier. Nonexistence is an ordinary outcome (empty optional), e.g.
/// star of any n >= 1 over the naturals. Over the rationals the star is the
/// unique (1-x)^-1 for x != 1. Stars can fail to exist, and in exotic
/// semirings a right star need not be unique nor a left star (the semiring
/// of linear operators on polynomials is the classic counterexample); the
/// five instances here all have two-sided stars wherever defined.
std::optional<Value> star_scalar(const Value& x);

/// Exact structural equality. Throws usage_error on mixed semirings.
bool eq(const Value& x, const Value& y);

inline bool operator==(const Value& x, const Value& y) { return eq(x, y); }
inline bool operator!=(const Value& x, const Value& y) { return !eq(x, y); }

/// Parses the per-semiring text encoding:
///   boolean   "0" | "1"
///   nat       decimal digits
///   rational  "p" | "p/q" (q >= 1, stored in lowest terms)
///   tropical  decimal ("2", "2.5"), "p/q", or "inf"
///   nat_inf   decimal digits or "inf"
/// Throws usage_error on malformed or out-of-carrier input.
Value parse_value(SemiringId sid, const std::string& text);

/// Canonical inverse of parse_value (parse_value(sid, to_string(v)) == v).
std::string to_string(const Value& v);

}  // namespace wfa
