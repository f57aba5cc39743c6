#ifndef LINKMOD_MVEC_HPP
#define LINKMOD_MVEC_HPP

#include "linkmod/polynomial.hpp"

namespace linkmod {

/// One term of a free-module element: c * x^m * e_comp.
struct MTerm {
  Scalar coeff;
  Monomial mono;
  int32_t comp = 0;
};

/// Free-module element, terms strictly descending under the module order.
struct MVec {
  std::vector<MTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const MTerm& leading() const {
    if (terms.empty()) throw Error("MVec: leading term of zero");
    return terms.front();
  }
  int32_t max_degree() const {
    int32_t d = 0;
    for (const auto& t : terms)
      if (t.mono.degree() > d) d = t.mono.degree();
    return d;
  }
  int32_t ecart() const { return terms.empty() ? 0 : max_degree() - terms.front().mono.degree(); }
};

/// Module monomial order: components below `split` form a dominant block
/// (used to eliminate ambient components in syzygy computations); within a
/// block the ring order decides, ties broken by smaller component first.
struct ModOrder {
  const RingSpec* ring;
  int32_t split;  // comps < split beat comps >= split

  Cmp cmp(const MTerm& a, const MTerm& b) const {
    bool ba = a.comp < split, bb = b.comp < split;
    if (ba != bb) return ba ? Cmp::GT : Cmp::LT;
    Cmp c = compare_monomials(a.mono, b.mono, ring->order);
    if (c != Cmp::EQ) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? Cmp::GT : Cmp::LT;
    return Cmp::EQ;
  }
};

/// Drop terms of degree >= ring's truncation bound (valid modulo the quotient).
void mvec_truncate(const RingSpec& R, MVec& v);

MVec mvec_from_poly(const Polynomial& f, int32_t comp);
MVec mvec_from_column(const RingSpec& R, const std::vector<Polynomial>& col, const ModOrder& ord);
std::vector<Polynomial> mvec_to_column(const RingSpec& R, const MVec& v, int32_t ncomp);

MVec mvec_add(const ModOrder& ord, const MVec& a, const MVec& b);
/// a + c * x^m * b
MVec mvec_axpy(const ModOrder& ord, const MVec& a, const Scalar& c, const Monomial& m, const MVec& b);
MVec mvec_scale(const MVec& a, const Scalar& c);
/// f * b for a ring element f
MVec mvec_mul_poly(const ModOrder& ord, const Polynomial& f, const MVec& b);
bool mvec_eq(const MVec& a, const MVec& b);

}  // namespace linkmod

#endif
