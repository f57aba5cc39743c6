#include "linkmod/mvec.hpp"

#include <algorithm>

namespace linkmod {

void mvec_truncate(const RingSpec& R, MVec& v) {
  if (!R.trunc_degree) return;
  int32_t T = *R.trunc_degree;
  v.terms.erase(std::remove_if(v.terms.begin(), v.terms.end(),
                               [T](const MTerm& t) { return t.mono.degree() >= T; }),
                v.terms.end());
}

MVec mvec_from_poly(const Polynomial& f, int32_t comp) {
  MVec v;
  v.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) v.terms.push_back({t.coeff, t.mono, comp});
  return v;  // poly sort matches module sort within one component
}

MVec mvec_from_column(const RingSpec& R, const std::vector<Polynomial>& col, const ModOrder& ord) {
  MVec v;
  for (size_t i = 0; i < col.size(); ++i) {
    MVec part = mvec_from_poly(col[i], static_cast<int32_t>(i));
    v = mvec_add(ord, v, part);
  }
  mvec_truncate(R, v);
  return v;
}

std::vector<Polynomial> mvec_to_column(const RingSpec& R, const MVec& v, int32_t ncomp) {
  std::vector<Polynomial> col(static_cast<size_t>(ncomp));
  // terms within one component arrive in descending ring order
  for (const auto& t : v.terms) {
    if (t.comp < 0 || t.comp >= ncomp) throw Error("mvec_to_column: component out of range");
    col[static_cast<size_t>(t.comp)].terms.push_back({t.coeff, t.mono});
  }
  (void)R;
  return col;
}

MVec mvec_add(const ModOrder& ord, const MVec& a, const MVec& b) {
  MVec r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    Cmp c = ord.cmp(a.terms[i], b.terms[j]);
    if (c == Cmp::GT) {
      r.terms.push_back(a.terms[i++]);
    } else if (c == Cmp::LT) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Scalar s = a.terms[i].coeff + b.terms[j].coeff;
      if (!s.is_zero()) r.terms.push_back({s, a.terms[i].mono, a.terms[i].comp});
      ++i;
      ++j;
    }
  }
  while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
  while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
  return r;
}

MVec mvec_axpy(const ModOrder& ord, const MVec& a, const Scalar& c, const Monomial& m, const MVec& b) {
  if (c.is_zero()) return a;
  MVec shifted;
  shifted.terms.reserve(b.terms.size());
  for (const auto& t : b.terms) shifted.terms.push_back({t.coeff * c, mono_mul(t.mono, m), t.comp});
  MVec r = mvec_add(ord, a, shifted);
  mvec_truncate(*ord.ring, r);
  return r;
}

MVec mvec_scale(const MVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  MVec r = a;
  for (auto& t : r.terms) t.coeff = t.coeff * c;
  return r;
}

MVec mvec_mul_poly(const ModOrder& ord, const Polynomial& f, const MVec& b) {
  MVec acc;
  for (const auto& t : f.terms) acc = mvec_axpy(ord, acc, t.coeff, t.mono, b);
  return acc;
}

bool mvec_eq(const MVec& a, const MVec& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].comp != b.terms[i].comp || a.terms[i].mono != b.terms[i].mono ||
        a.terms[i].coeff != b.terms[i].coeff)
      return false;
  }
  return true;
}

}  // namespace linkmod
