#ifndef LINKMOD_SCALAR_HPP
#define LINKMOD_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "linkmod/bigint.hpp"

namespace linkmod {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Coefficient field: exact rationals, or Z/p for prime p < 2^31.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  int64_t characteristic = 0;  // 0 or prime p

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime(int64_t p);

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.characteristic == b.characteristic;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

/// Reduced fraction, denominator > 0.
struct Rational {
  BigInt num;
  BigInt den{1};

  Rational() = default;
  Rational(BigInt n, BigInt d);
  explicit Rational(long long n) : num(n) {}

  void normalize();
  bool is_zero() const { return num.is_zero(); }
  std::string to_string() const;
};

/// Element of the coefficient field. Prime-field values are canonical in [0, p).
class Scalar {
public:
  Scalar() = default;  // rational zero
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long long v);
  static Scalar from_fraction(const FieldSpec& f, const BigInt& num, const BigInt& den);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar neg() const;
  Scalar inv() const;  // throws on zero
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

private:
  static void check_same(const Scalar& a, const Scalar& b);
  FieldSpec field_ = FieldSpec::rationals();
  int64_t zval_ = 0;   // prime field value
  Rational rat_;       // rationals value
};

}  // namespace linkmod

#endif
