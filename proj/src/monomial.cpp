#include "linkmod/monomial.hpp"

namespace linkmod {

Cmp compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.exp.size() != b.exp.size()) throw Error("compare_monomials: length mismatch");
  int32_t da = a.degree(), db = b.degree();
  if (da != db) {
    bool a_greater = (order == MonomialOrder::grevlex_global) ? da > db : da < db;
    return a_greater ? Cmp::GT : Cmp::LT;
  }
  // revlex tie-break: last nonzero entry of a-b negative => a > b
  for (size_t i = a.exp.size(); i-- > 0;) {
    int32_t d = a.exp[i] - b.exp[i];
    if (d != 0) return d < 0 ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (size_t i = 0; i < r.exp.size(); ++i) {
    r.exp[i] -= a.exp[i];
    if (r.exp[i] < 0) throw Error("mono_div: not divisible");
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i)
    if (b.exp[i] > r.exp[i]) r.exp[i] = b.exp[i];
  return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i)
    if (b.exp[i] < r.exp[i]) r.exp[i] = b.exp[i];
  return r;
}

namespace {
void compositions(Monomial& cur, size_t v, int32_t rem, std::vector<Monomial>& out) {
  if (v + 1 == cur.exp.size()) {
    cur.exp[v] = rem;
    out.push_back(cur);
    return;
  }
  for (int32_t e = rem; e >= 0; --e) {
    cur.exp[v] = e;
    compositions(cur, v + 1, rem - e, out);
  }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(size_t nvars, int32_t k) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  Monomial cur(nvars);
  compositions(cur, 0, k, out);
  return out;
}

}  // namespace linkmod
