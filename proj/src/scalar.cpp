#include "linkmod/scalar.hpp"

namespace linkmod {

namespace {

bool is_prime_small(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t p) {
  int64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = (__int128)r * base % p;
    base = (__int128)base * base % p;
    exp >>= 1;
  }
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime(int64_t p) {
  if (p >= (int64_t(1) << 31) || !is_prime_small(p))
    throw Error("FieldSpec: characteristic must be 0 or a prime < 2^31");
  return {Kind::prime_field, p};
}

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

void Rational::normalize() {
  if (den.is_zero()) throw Error("Rational: zero denominator");
  if (num.is_zero()) { den = BigInt(1); return; }
  if (den.sign() < 0) { num = -num; den = -den; }
  BigInt g = BigInt::gcd(num, den);
  if (!g.is_one()) { num = num / g; den = den / g; }
}

std::string Rational::to_string() const {
  if (den.is_one()) return num.to_string();
  return num.to_string() + "/" + den.to_string();
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldSpec::Kind::prime_field) {
    s.zval_ = v % f.characteristic;
    if (s.zval_ < 0) s.zval_ += f.characteristic;
  } else {
    s.rat_ = Rational(v);
  }
  return s;
}

Scalar Scalar::from_fraction(const FieldSpec& f, const BigInt& num, const BigInt& den) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldSpec::Kind::prime_field) {
    int64_t p = f.characteristic;
    int64_t n = num.mod_small(p);
    int64_t d = den.mod_small(p);
    if (d == 0) throw Error("Scalar: denominator is zero in GF(" + std::to_string(p) + ")");
    s.zval_ = (__int128)n * mod_pow(d, p - 2, p) % p;
  } else {
    s.rat_ = Rational(num, den);
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldSpec::Kind::prime_field ? zval_ == 0 : rat_.is_zero();
}

bool Scalar::is_one() const {
  return field_.kind == FieldSpec::Kind::prime_field ? zval_ == 1
                                                     : (rat_.num.is_one() && rat_.den.is_one());
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) throw Error("Scalar: mixed coefficient fields");
}

Scalar Scalar::neg() const {
  Scalar r = *this;
  if (field_.kind == FieldSpec::Kind::prime_field) {
    if (r.zval_ != 0) r.zval_ = field_.characteristic - r.zval_;
  } else {
    r.rat_.num = -r.rat_.num;
  }
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("Scalar: inverse of zero");
  Scalar r = *this;
  if (field_.kind == FieldSpec::Kind::prime_field) {
    r.zval_ = mod_pow(zval_, field_.characteristic - 2, field_.characteristic);
  } else {
    r.rat_ = Rational(rat_.den, rat_.num);
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar r = a;
  if (a.field_.kind == FieldSpec::Kind::prime_field) {
    r.zval_ = (a.zval_ + b.zval_) % a.field_.characteristic;
  } else {
    r.rat_ = Rational(a.rat_.num * b.rat_.den + b.rat_.num * a.rat_.den, a.rat_.den * b.rat_.den);
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + b.neg(); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar r = a;
  if (a.field_.kind == FieldSpec::Kind::prime_field) {
    r.zval_ = (__int128)a.zval_ * b.zval_ % a.field_.characteristic;
  } else {
    r.rat_ = Rational(a.rat_.num * b.rat_.num, a.rat_.den * b.rat_.den);
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.kind == FieldSpec::Kind::prime_field) return a.zval_ == b.zval_;
  return BigInt::cmp(a.rat_.num, b.rat_.num) == 0 && BigInt::cmp(a.rat_.den, b.rat_.den) == 0;
}

std::string Scalar::to_string() const {
  if (field_.kind == FieldSpec::Kind::prime_field) return std::to_string(zval_);
  return rat_.to_string();
}

}  // namespace linkmod
