#include "magnus/coeff.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace magnus {

Integer prime_power(unsigned long p, unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

unsigned long valuation_of(const Integer& value, unsigned long p) {
  if (value == 0) throw PreconditionError("valuation of zero");
  Integer q = value;
  unsigned long e = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++e;
  }
  return e;
}

namespace {

bool is_prime(unsigned long p) {
  Integer v(p);
  return p >= 2 && mpz_probab_prime_p(v.get_mpz_t(), 30) > 0;
}

Integer mod_nonneg(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// PAdic

PAdic::PAdic(unsigned long p, int cap) : p_(p), cap_(cap) {
  if (p < 2) throw PreconditionError("p-adic prime must be >= 2");
  if (cap < 1) throw PreconditionError("p-adic precision must be positive");
}

void PAdic::set_from(Integer value, long valuation, int prec) {
  // value is known modulo p^prec (relative to p^valuation)
  prec = std::min(prec, cap_);
  if (prec <= 0) {
    zero_ = true;
    val_ = 0;
    prec_ = 0;
    unit_ = 0;
    return;
  }
  Integer modulus = prime_power(p_, static_cast<unsigned long>(prec));
  value = mod_nonneg(value, modulus);
  if (value == 0) {
    zero_ = true;
    val_ = 0;
    prec_ = 0;
    unit_ = 0;
    return;
  }
  unsigned long k = valuation_of(value, p_);
  Integer pk = prime_power(p_, k);
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), pk.get_mpz_t());
  zero_ = false;
  val_ = valuation + static_cast<long>(k);
  prec_ = prec - static_cast<int>(k);
  unit_ = mod_nonneg(value, prime_power(p_, static_cast<unsigned long>(prec_)));
}

PAdic PAdic::from_integer(const Integer& value, unsigned long p, int cap) {
  PAdic r(p, cap);
  if (value == 0) return r;
  unsigned long k = valuation_of(value, p);
  Integer u = value;
  Integer pk = prime_power(p, k);
  mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), pk.get_mpz_t());
  r.set_from(u, static_cast<long>(k), cap);
  return r;
}

PAdic PAdic::from_rational(const Rational& value, unsigned long p, int cap) {
  PAdic r(p, cap);
  if (value == 0) return r;
  Integer num = value.get_num();
  Integer den = value.get_den();
  unsigned long a = valuation_of(num, p);
  unsigned long b = valuation_of(den, p);
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prime_power(p, a).get_mpz_t());
  mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), prime_power(p, b).get_mpz_t());
  Integer modulus = prime_power(p, static_cast<unsigned long>(cap));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  r.set_from(num * inv, static_cast<long>(a) - static_cast<long>(b), cap);
  return r;
}

PAdic PAdic::from_parts(unsigned long p, int cap, long valuation, const Integer& unit, int prec) {
  PAdic r(p, cap);
  if (prec < 1 || prec > cap) throw PreconditionError("p-adic relative precision out of range");
  if (unit % p == 0) throw PreconditionError("p-adic unit " + unit.get_str() + " is divisible by p");
  r.set_from(unit, valuation, prec);
  return r;
}

PAdic rational_to_padic(const Rational& q, unsigned long p, int cap) {
  if (!is_prime(p)) throw PreconditionError("p-adic modulus " + std::to_string(p) + " is not prime");
  return PAdic::from_rational(q, p, cap);
}

long PAdic::valuation() const {
  if (zero_) throw PreconditionError("valuation of the zero p-adic number");
  return val_;
}

std::optional<long> PAdic::absolute_precision() const {
  if (zero_) return std::nullopt;
  return val_ + prec_;
}

Integer PAdic::residue(int k) const {
  if (zero_ || k <= 0) return 0;
  if (val_ < 0) throw PreconditionError("residue of a non-integral p-adic number");
  if (val_ >= k) return 0;
  if (val_ + prec_ < k) {
    throw PrecisionError("p-adic value known only modulo " + std::to_string(p_) + "^" +
                         std::to_string(val_ + prec_) + ", need " + std::to_string(k) + " digits");
  }
  Integer v = unit_ * prime_power(p_, static_cast<unsigned long>(val_));
  return mod_nonneg(v, prime_power(p_, static_cast<unsigned long>(k)));
}

Rational PAdic::lift() const {
  if (zero_) return 0;
  Rational r(unit_);
  if (val_ >= 0) {
    r *= Rational(prime_power(p_, static_cast<unsigned long>(val_)));
  } else {
    r /= Rational(prime_power(p_, static_cast<unsigned long>(-val_)));
  }
  r.canonicalize();
  return r;
}

void PAdic::check_compatible(const PAdic& other) const {
  if (p_ != other.p_ || cap_ != other.cap_) {
    throw RingMismatch("p-adic operands over different rings");
  }
}

PAdic PAdic::operator-() const {
  PAdic r = *this;
  if (!zero_) r.unit_ = mod_nonneg(-unit_, prime_power(p_, static_cast<unsigned long>(prec_)));
  return r;
}

PAdic& PAdic::operator+=(const PAdic& o) {
  check_compatible(o);
  if (o.zero_) return *this;
  if (zero_) return *this = o;
  const long abs_prec = std::min(val_ + prec_, o.val_ + o.prec_);
  const long vmin = std::min(val_, o.val_);
  Integer x = unit_ * prime_power(p_, static_cast<unsigned long>(val_ - vmin)) +
              o.unit_ * prime_power(p_, static_cast<unsigned long>(o.val_ - vmin));
  set_from(std::move(x), vmin, static_cast<int>(abs_prec - vmin));
  return *this;
}

PAdic& PAdic::operator-=(const PAdic& o) { return *this += -o; }

PAdic& PAdic::operator*=(const PAdic& o) {
  check_compatible(o);
  if (zero_) return *this;
  if (o.zero_) return *this = o;
  const int prec = std::min(prec_, o.prec_);
  val_ += o.val_;
  prec_ = prec;
  unit_ = mod_nonneg(unit_ * o.unit_, prime_power(p_, static_cast<unsigned long>(prec)));
  return *this;
}

PAdic PAdic::inverse() const {
  if (zero_) throw DivisionByZero("inverse of the zero p-adic number");
  PAdic r = *this;
  r.val_ = -val_;
  Integer modulus = prime_power(p_, static_cast<unsigned long>(prec_));
  mpz_invert(r.unit_.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

bool operator==(const PAdic& a, const PAdic& b) {
  if (a.p_ != b.p_ || a.cap_ != b.cap_) return false;
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  if (a.val_ != b.val_) return false;
  const int prec = std::min(a.prec_, b.prec_);
  Integer modulus = prime_power(a.p_, static_cast<unsigned long>(prec));
  return mod_nonneg(a.unit_ - b.unit_, modulus) == 0;
}

std::string PAdic::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  os << unit_.get_str();
  if (val_ != 0) os << "*" << p_ << "^" << val_;
  os << " + O(" << p_ << "^" << (val_ + prec_) << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// RingTag

RingTag RingTag::padics(unsigned long p, int cap) {
  if (!is_prime(p)) throw PreconditionError("p-adic modulus " + std::to_string(p) + " is not prime");
  if (cap < 1) throw PreconditionError("p-adic precision must be positive");
  return RingTag(Kind::PAdic, p, cap);
}

std::string RingTag::to_string() const {
  switch (kind_) {
    case Kind::Integer:
      return "int";
    case Kind::Rational:
      return "rat";
    case Kind::PAdic:
      return "padic(" + std::to_string(p_) + "," + std::to_string(cap_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Coefficient

Coefficient Coefficient::zero(const RingTag& ring) { return from_integer(0, ring); }

Coefficient Coefficient::one(const RingTag& ring) { return from_integer(1, ring); }

Coefficient Coefficient::from_integer(const Integer& v, const RingTag& ring) {
  switch (ring.kind()) {
    case RingTag::Kind::Integer:
      return Coefficient(v);
    case RingTag::Kind::Rational:
      return Coefficient(Rational(v));
    case RingTag::Kind::PAdic:
      return Coefficient(PAdic::from_integer(v, ring.prime(), ring.cap()));
  }
  throw PreconditionError("unknown ring");
}

Coefficient Coefficient::from_rational(const Rational& q, const RingTag& ring) {
  switch (ring.kind()) {
    case RingTag::Kind::Integer:
      if (q.get_den() != 1) throw PreconditionError("value " + q.get_str() + " is not an integer");
      return Coefficient(Integer(q.get_num()));
    case RingTag::Kind::Rational:
      return Coefficient(q);
    case RingTag::Kind::PAdic:
      return Coefficient(PAdic::from_rational(q, ring.prime(), ring.cap()));
  }
  throw PreconditionError("unknown ring");
}

RingTag Coefficient::ring() const {
  if (std::holds_alternative<Integer>(value_)) return RingTag::integers();
  if (std::holds_alternative<Rational>(value_)) return RingTag::rationals();
  const auto& p = std::get<PAdic>(value_);
  return RingTag(RingTag::Kind::PAdic, p.prime(), p.cap());
}

bool Coefficient::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PAdic>) {
          return v.is_zero();
        } else {
          return sgn(v) == 0;
        }
      },
      value_);
}

bool Coefficient::is_one() const {
  if (auto z = as_integer()) return *z == 1;
  if (auto q = as_rational()) return *q == 1;
  const auto& p = std::get<PAdic>(value_);
  return !p.is_zero() && p.valuation() == 0 && p.unit() == 1;
}

bool Coefficient::is_integral() const {
  if (as_integer()) return true;
  if (auto q = as_rational()) return q->get_den() == 1;
  const auto& p = std::get<PAdic>(value_);
  return p.is_zero() || p.valuation() >= 0;
}

std::optional<Rational> Coefficient::to_rational() const {
  if (auto z = as_integer()) return Rational(*z);
  if (auto q = as_rational()) return *q;
  return std::nullopt;
}

void Coefficient::check_ring(const Coefficient& o) const {
  if (value_.index() != o.value_.index()) {
    throw RingMismatch("coefficients over different rings: " + ring().to_string() + " vs " +
                       o.ring().to_string());
  }
}

Coefficient Coefficient::operator-() const {
  return std::visit([](const auto& v) { return Coefficient(std::decay_t<decltype(v)>(-v)); }, value_);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  check_ring(o);
  std::visit([&](auto& v) { v += std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  check_ring(o);
  std::visit([&](auto& v) { v -= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  check_ring(o);
  std::visit([&](auto& v) { v *= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  return *this;
}

void Coefficient::add_product(const Coefficient& a, const Coefficient& b) {
  check_ring(a);
  check_ring(b);
  if (auto z = std::get_if<Integer>(&value_)) {
    mpz_addmul(z->get_mpz_t(), std::get<Integer>(a.value_).get_mpz_t(),
               std::get<Integer>(b.value_).get_mpz_t());
  } else if (auto q = std::get_if<Rational>(&value_)) {
    thread_local Rational scratch;
    mpq_mul(scratch.get_mpq_t(), std::get<Rational>(a.value_).get_mpq_t(),
            std::get<Rational>(b.value_).get_mpq_t());
    mpq_add(q->get_mpq_t(), q->get_mpq_t(), scratch.get_mpq_t());
  } else {
    std::get<PAdic>(value_) += std::get<PAdic>(a.value_) * std::get<PAdic>(b.value_);
  }
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (auto z = as_integer()) {
    if (*z == 1 || *z == -1) return *this;
    throw DivisionByZero("integer " + z->get_str() + " is not a unit");
  }
  if (auto q = as_rational()) return Coefficient(Rational(1) / *q);
  return Coefficient(std::get<PAdic>(value_).inverse());
}

bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }

std::string Coefficient::to_string() const {
  if (auto z = as_integer()) return z->get_str();
  if (auto q = as_rational()) return q->get_str();
  return std::get<PAdic>(value_).to_string();
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

// ---------------------------------------------------------------------------
// binomials

Integer integer_binomial(const Integer& t, unsigned m) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), t.get_mpz_t(), m);
  return r;
}

Coefficient binomial(const Coefficient& t, unsigned m) {
  if (auto z = t.as_integer()) return Coefficient(integer_binomial(*z, m));
  if (auto q = t.as_rational()) {
    if (q->get_den() == 1) return Coefficient(Rational(integer_binomial(q->get_num(), m)));
    Rational acc = 1;
    for (unsigned j = 0; j < m; ++j) acc *= (*q - j) / Rational(j + 1);
    return Coefficient(acc);
  }
  const RingTag ring = t.ring();
  Coefficient num = Coefficient::one(ring);
  Integer factorial = 1;
  for (unsigned j = 0; j < m; ++j) {
    num *= t - Coefficient::from_integer(j, ring);
    factorial *= j + 1;
  }
  return num / Coefficient::from_integer(factorial, ring);
}

}  // namespace magnus
