#ifndef LINKMOD_MONOMIAL_HPP
#define LINKMOD_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "linkmod/scalar.hpp"

namespace linkmod {

/// Exponent vector; length equals the ring's variable count.
struct Monomial {
  std::vector<int32_t> exp;

  Monomial() = default;
  explicit Monomial(size_t nvars) : exp(nvars, 0) {}

  int32_t degree() const {
    int32_t d = 0;
    for (int32_t e : exp) d += e;
    return d;
  }
  bool is_one() const {
    for (int32_t e : exp)
      if (e) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

enum class MonomialOrder {
  grevlex_global,          // well-order: 1 is smallest
  antigraded_revlex_local  // 1 > x_i: leading term has minimal total degree
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Total order on monomials of equal length.
Cmp compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

/// All monomials of total degree exactly k, deterministic order.
std::vector<Monomial> monomials_of_degree(size_t nvars, int32_t k);

}  // namespace linkmod

#endif
