#include "linkmod/bigint.hpp"

#include <stdexcept>

namespace linkmod {

namespace {
constexpr uint32_t kBase = 1000000000u;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  while (u) {
    mag_.push_back(static_cast<uint32_t>(u % kBase));
    u /= kBase;
  }
}

BigInt BigInt::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  size_t i = 0;
  int sign = 1;
  if (s[0] == '-') { sign = -1; i = 1; }
  else if (s[0] == '+') { i = 1; }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  size_t end = s.size();
  while (end > i) {
    size_t begin = end >= i + 9 ? end - 9 : i;
    uint32_t limb = 0;
    for (size_t j = begin; j < end; ++j) {
      char c = s[j];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      limb = limb * 10 + static_cast<uint32_t>(c - '0');
    }
    r.mag_.push_back(limb);
    end = begin;
  }
  r.trim();
  if (!r.mag_.empty()) r.sign_ = sign;
  return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  uint32_t carry = 0;
  for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<uint32_t>(s % kBase));
    carry = static_cast<uint32_t>(s / kBase);
  }
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r = a;
  int64_t borrow = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    int64_t d = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) { d += kBase; borrow = 1; } else borrow = 0;
    r[i] = static_cast<uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_;
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) { r.mag_ = BigInt::sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
    else       { r.mag_ = BigInt::sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (size_t i = 0; i < a.mag_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.mag_.size() || carry; ++j) {
      uint64_t cur = r.mag_[i + j] + carry;
      if (j < b.mag_.size()) cur += static_cast<uint64_t>(a.mag_[i]) * b.mag_[j];
      r.mag_[i + j] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
  }
  r.sign_ = a.sign_ * b.sign_;
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  // long division on magnitudes, binary search per digit
  std::vector<uint32_t> qm(a.mag_.size(), 0);
  BigInt rem;  // nonnegative magnitude accumulator
  for (size_t i = a.mag_.size(); i-- > 0;) {
    // rem = rem * base + digit
    rem.mag_.insert(rem.mag_.begin(), a.mag_[i]);
    rem.trim();
    if (!rem.mag_.empty()) rem.sign_ = 1;
    uint32_t lo = 0, hi = kBase - 1, val = 0;
    while (lo <= hi) {
      uint32_t mid = lo + (hi - lo) / 2;
      BigInt t = b.abs() * BigInt(static_cast<long long>(mid));
      if (cmp_mag(t.mag_, rem.mag_) <= 0) { val = mid; lo = mid + 1; }
      else { if (mid == 0) break; hi = mid - 1; }
    }
    qm[i] = val;
    if (val) {
      BigInt t = b.abs() * BigInt(static_cast<long long>(val));
      rem.mag_ = sub_mag(rem.mag_, t.mag_);
      rem.trim();
      rem.sign_ = rem.mag_.empty() ? 0 : 1;
    }
  }
  q.mag_ = std::move(qm);
  q.sign_ = a.sign_ * b.sign_;
  q.trim();
  r = rem;
  if (!r.mag_.empty()) r.sign_ = a.sign_;  // remainder follows dividend sign
  else r.sign_ = 0;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

long long BigInt::mod_small(long long m) const {
  long long r = 0;
  for (size_t i = mag_.size(); i-- > 0;)
    r = (r * static_cast<long long>(kBase) + mag_[i]) % m;
  if (sign_ < 0 && r != 0) r = m - r;
  return r;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string s = sign_ < 0 ? "-" : "";
  s += std::to_string(mag_.back());
  for (size_t i = mag_.size() - 1; i-- > 0;) {
    std::string limb = std::to_string(mag_[i]);
    s += std::string(9 - limb.size(), '0') + limb;
  }
  return s;
}

}  // namespace linkmod
