#ifndef LINKMOD_BIGINT_HPP
#define LINKMOD_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace linkmod {

/// Arbitrary-precision signed integer, base 10^9 limbs.
/// Sized for exact rational coefficients of desk-scale polynomials;
/// no asymptotically fast multiplication.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Truncated division (quotient toward zero), b != 0.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  /// Three-way compare: -1, 0, 1.
  static int cmp(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }

  static BigInt gcd(BigInt a, BigInt b);  // nonnegative

  /// Value mod m for 0 < m < 2^31, result in [0, m).
  long long mod_small(long long m) const;

  std::string to_string() const;

private:
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  void trim();

  int sign_ = 0;                 // -1, 0, 1
  std::vector<uint32_t> mag_;    // little-endian base 10^9; empty iff zero
};

}  // namespace linkmod

#endif
