#include "linkmod/polynomial.hpp"

#include <algorithm>

namespace linkmod {

Scalar Polynomial::constant_coeff(const FieldSpec& f) const {
  for (const auto& t : terms)
    if (t.mono.is_one()) return t.coeff;
  return Scalar::zero(f);
}

int RingSpec::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

bool same_frame(const RingSpec& a, const RingSpec& b) {
  return a.field == b.field && a.vars == b.vars && a.order == b.order;
}

void require_same_frame(const RingSpec& a, const RingSpec& b, const char* op) {
  if (!same_frame(a, b)) throw Error(std::string(op) + ": ring mismatch");
}

Polynomial poly_zero() { return {}; }

Polynomial poly_const(const RingSpec& R, const Scalar& c) {
  Polynomial f;
  if (!c.is_zero()) f.terms.push_back({c, Monomial(R.nvars())});
  return f;
}

Polynomial poly_var(const RingSpec& R, int v, int32_t e) {
  Polynomial f;
  if (e < 0) throw Error("poly_var: negative exponent");
  Monomial m(R.nvars());
  m.exp[v] = e;
  f.terms.push_back({Scalar::one(R.field), m});
  return f;
}

Polynomial poly_term(const RingSpec& R, const Scalar& c, const Monomial& m) {
  Polynomial f;
  (void)R;
  if (!c.is_zero()) f.terms.push_back({c, m});
  return f;
}

Polynomial poly_add(const RingSpec& R, const Polynomial& f, const Polynomial& g) {
  Polynomial r;
  r.terms.reserve(f.terms.size() + g.terms.size());
  size_t i = 0, j = 0;
  while (i < f.terms.size() && j < g.terms.size()) {
    Cmp c = compare_monomials(f.terms[i].mono, g.terms[j].mono, R.order);
    if (c == Cmp::GT) {
      r.terms.push_back(f.terms[i++]);
    } else if (c == Cmp::LT) {
      r.terms.push_back(g.terms[j++]);
    } else {
      Scalar s = f.terms[i].coeff + g.terms[j].coeff;
      if (!s.is_zero()) r.terms.push_back({s, f.terms[i].mono});
      ++i;
      ++j;
    }
  }
  while (i < f.terms.size()) r.terms.push_back(f.terms[i++]);
  while (j < g.terms.size()) r.terms.push_back(g.terms[j++]);
  return r;
}

Polynomial poly_neg(const Polynomial& f) {
  Polynomial r = f;
  for (auto& t : r.terms) t.coeff = t.coeff.neg();
  return r;
}

Polynomial poly_sub(const RingSpec& R, const Polynomial& f, const Polynomial& g) {
  return poly_add(R, f, poly_neg(g));
}

Polynomial poly_scale(const Polynomial& f, const Scalar& c) {
  if (c.is_zero()) return {};
  Polynomial r = f;
  for (auto& t : r.terms) t.coeff = t.coeff * c;
  return r;
}

Polynomial poly_mul_term(const RingSpec& R, const Polynomial& f, const Scalar& c, const Monomial& m) {
  (void)R;
  if (c.is_zero()) return {};
  Polynomial r;
  r.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) r.terms.push_back({t.coeff * c, mono_mul(t.mono, m)});
  return r;  // multiplying by a monomial preserves the sort
}

Polynomial poly_mul(const RingSpec& R, const Polynomial& f, const Polynomial& g) {
  Polynomial acc;
  for (const auto& t : f.terms) acc = poly_add(R, acc, poly_mul_term(R, g, t.coeff, t.mono));
  return acc;
}

Polynomial poly_pow(const RingSpec& R, const Polynomial& f, uint32_t e) {
  Polynomial r = poly_const(R, Scalar::one(R.field));
  Polynomial base = f;
  while (e) {
    if (e & 1) r = poly_mul(R, r, base);
    e >>= 1;
    if (e) base = poly_mul(R, base, base);
  }
  return r;
}

bool poly_eq(const Polynomial& f, const Polynomial& g) {
  if (f.terms.size() != g.terms.size()) return false;
  for (size_t i = 0; i < f.terms.size(); ++i)
    if (f.terms[i].mono != g.terms[i].mono || f.terms[i].coeff != g.terms[i].coeff) return false;
  return true;
}

std::string mono_to_string(const RingSpec& R, const Monomial& m) {
  std::string s;
  for (size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += R.vars[i];
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::string poly_to_string(const RingSpec& R, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    const Term& t = f.terms[i];
    std::string c = t.coeff.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (i == 0) {
      if (neg) { s += "-"; c = c.substr(1); }
    } else {
      s += neg ? " - " : " + ";
      if (neg) c = c.substr(1);
    }
    bool unit_coeff = (c == "1");
    if (t.mono.is_one()) {
      s += c;
    } else if (unit_coeff) {
      s += mono_to_string(R, t.mono);
    } else {
      s += c + "*" + mono_to_string(R, t.mono);
    }
  }
  return s;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

struct PolyParser {
  Lexer lx;
  const RingSpec& R;

  PolyParser(const std::string& text, const RingSpec& ring) : lx{text}, R(ring) {}

  Polynomial parse() {
    Polynomial f = expr();
    if (!lx.eof()) throw ParseError("unexpected trailing input", lx.pos);
    return f;
  }

  Polynomial expr() {
    bool lead_neg = false;
    if (lx.peek() == '-') { ++lx.pos; lead_neg = true; }  // unary minus convenience
    Polynomial f = term();
    if (lead_neg) f = poly_neg(f);
    while (true) {
      char c = lx.peek();
      if (c == '+') {
        ++lx.pos;
        f = poly_add(R, f, term());
      } else if (c == '-') {
        ++lx.pos;
        f = poly_sub(R, f, term());
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (lx.peek() == '*') {
      ++lx.pos;
      f = poly_mul(R, f, factor());
    }
    return f;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lx.peek() == '^') {
      ++lx.pos;
      uint32_t e = parse_uint();
      b = poly_pow(R, b, e);
    }
    return b;
  }

  Polynomial base() {
    char c = lx.peek();
    size_t at = lx.pos;
    if (c == '(') {
      ++lx.pos;
      Polynomial f = expr();
      if (lx.peek() != ')') throw ParseError("expected ')'", lx.pos);
      ++lx.pos;
      return f;
    }
    if (isdigit(static_cast<unsigned char>(c))) return literal();
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      int v = R.var_index(name);
      if (v < 0) throw ParseError("unknown variable '" + name + "'", at);
      return poly_var(R, v);
    }
    throw ParseError("expected variable, literal or '('", lx.pos);
  }

  Polynomial literal() {
    BigInt num = parse_int();
    if (lx.peek() == '/') {
      ++lx.pos;
      size_t at = lx.pos;
      if (!isdigit(static_cast<unsigned char>(lx.peek())))
        throw ParseError("division allowed only between integer literals", at);
      BigInt den = parse_int();
      if (den.is_zero()) throw ParseError("division by zero", at);
      return poly_const(R, Scalar::from_fraction(R.field, num, den));
    }
    return poly_const(R, Scalar::from_fraction(R.field, num, BigInt(1)));
  }

  BigInt parse_int() {
    lx.skip_ws();
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() && isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (start == lx.pos) throw ParseError("expected integer", start);
    return BigInt::from_string(lx.s.substr(start, lx.pos - start));
  }

  uint32_t parse_uint() {
    lx.skip_ws();
    size_t start = lx.pos;
    uint64_t v = 0;
    while (lx.pos < lx.s.size() && isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
      v = v * 10 + static_cast<uint64_t>(lx.s[lx.pos] - '0');
      if (v > 1000000) throw ParseError("exponent too large", start);
      ++lx.pos;
    }
    if (start == lx.pos) throw ParseError("expected exponent", start);
    return static_cast<uint32_t>(v);
  }

  std::string ident() {
    lx.skip_ws();
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           (isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
      ++lx.pos;
    return lx.s.substr(start, lx.pos - start);
  }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingSpec& R) {
  PolyParser p(text, R);
  return p.parse();
}

}  // namespace linkmod
