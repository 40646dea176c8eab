#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "magnus/errors.hpp"

namespace magnus {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Q_p stored as unit * p^valuation, with the unit known modulo
/// p^precision (capped relative precision).
///
/// `cap` is the ring-wide precision M: freshly embedded values carry M
/// relative digits, multiplication keeps the smaller relative precision and
/// addition keeps the smaller absolute precision. A sum whose digits all
/// cancel at the available precision becomes the exact zero.
class PAdic {
 public:
  PAdic(unsigned long p, int cap);

  static PAdic from_integer(const Integer& value, unsigned long p, int cap);
  static PAdic from_rational(const Rational& value, unsigned long p, int cap);
  /// unit * p^valuation known to `prec` relative digits; unit must be
  /// prime to p and 1 <= prec <= cap.
  static PAdic from_parts(unsigned long p, int cap, long valuation, const Integer& unit, int prec);

  unsigned long prime() const { return p_; }
  int cap() const { return cap_; }
  bool is_zero() const { return zero_; }

  /// Valuation of a nonzero element; throws on zero.
  long valuation() const;
  /// Unit part in [0, p^relative_precision).
  const Integer& unit() const { return unit_; }
  int relative_precision() const { return zero_ ? cap_ : prec_; }
  /// valuation + relative precision; nullopt for the exact zero.
  std::optional<long> absolute_precision() const;

  /// Residue of an integral element modulo p^k.
  /// Throws PreconditionError for negative valuation and PrecisionError
  /// when fewer than k absolute digits are known.
  Integer residue(int k) const;

  /// Smallest nonnegative integer representative of the known digits times
  /// p^valuation (rational when the valuation is negative).
  Rational lift() const;

  PAdic operator-() const;
  PAdic& operator+=(const PAdic& other);
  PAdic& operator-=(const PAdic& other);
  PAdic& operator*=(const PAdic& other);
  PAdic inverse() const;

  friend PAdic operator+(PAdic a, const PAdic& b) { return a += b; }
  friend PAdic operator-(PAdic a, const PAdic& b) { return a -= b; }
  friend PAdic operator*(PAdic a, const PAdic& b) { return a *= b; }
  friend PAdic operator/(const PAdic& a, const PAdic& b) { return a * b.inverse(); }

  /// Agreement at the smaller of the two precisions.
  friend bool operator==(const PAdic& a, const PAdic& b);

  std::string to_string() const;

 private:
  void check_compatible(const PAdic& other) const;
  void set_from(Integer value, long valuation, int prec);

  unsigned long p_;
  int cap_;
  bool zero_ = true;
  long val_ = 0;
  int prec_ = 0;
  Integer unit_;
};

PAdic rational_to_padic(const Rational& q, unsigned long p, int cap);

/// Integer p^k.
Integer prime_power(unsigned long p, unsigned long k);
/// Largest e with p^e | value (value nonzero).
unsigned long valuation_of(const Integer& value, unsigned long p);

/// Selects the coefficient ring shared by every coefficient of a series.
class RingTag {
 public:
  enum class Kind { Integer, Rational, PAdic };

  static RingTag integers() { return RingTag(Kind::Integer, 0, 0); }
  static RingTag rationals() { return RingTag(Kind::Rational, 0, 0); }
  static RingTag padics(unsigned long p, int cap);

  Kind kind() const { return kind_; }
  unsigned long prime() const { return p_; }
  int cap() const { return cap_; }

  /// Q is a subring (exp, ln and fractional powers are available).
  bool contains_rationals() const { return kind_ != Kind::Integer; }

  std::string to_string() const;

  friend bool operator==(const RingTag&, const RingTag&) = default;

 private:
  friend class Coefficient;
  RingTag(Kind kind, unsigned long p, int cap) : kind_(kind), p_(p), cap_(cap) {}

  Kind kind_;
  unsigned long p_;
  int cap_;
};

/// Exact scalar of one of the supported rings.
class Coefficient {
 public:
  explicit Coefficient(Integer v) : value_(std::move(v)) {}
  explicit Coefficient(Rational v) : value_(std::move(v)) { std::get<Rational>(value_).canonicalize(); }
  explicit Coefficient(PAdic v) : value_(std::move(v)) {}

  static Coefficient zero(const RingTag& ring);
  static Coefficient one(const RingTag& ring);
  static Coefficient from_integer(const Integer& v, const RingTag& ring);
  /// Integer ring rejects non-integral q.
  static Coefficient from_rational(const Rational& q, const RingTag& ring);

  RingTag ring() const;
  bool is_zero() const;
  bool is_one() const;

  /// Z for Integer/Rational; Z_p for PAdic.
  bool is_integral() const;

  const Integer* as_integer() const { return std::get_if<Integer>(&value_); }
  const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
  const PAdic* as_padic() const { return std::get_if<PAdic>(&value_); }

  /// Exact rational value, available for the Integer and Rational rings.
  std::optional<Rational> to_rational() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  /// this += a * b, without a temporary for the integer and rational rings.
  void add_product(const Coefficient& a, const Coefficient& b);

  /// Multiplicative inverse. Integer ring: only +-1.
  Coefficient inverse() const;

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  std::string to_string() const;

 private:
  void check_ring(const Coefficient& o) const;

  std::variant<Integer, Rational, PAdic> value_;
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

/// Generalized binomial coefficient t(t-1)...(t-m+1)/m!.
///
/// Over the Integer ring t is an integer and the result is the exact
/// integer binomial (negative t included).
Coefficient binomial(const Coefficient& t, unsigned m);

/// Exact integer binomial for integer t of any sign.
Integer integer_binomial(const Integer& t, unsigned m);

}  // namespace magnus
