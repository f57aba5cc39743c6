#ifndef LINKMOD_POLYNOMIAL_HPP
#define LINKMOD_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "linkmod/monomial.hpp"

namespace linkmod {

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Terms strictly sorted descending by the ring's order; zero = empty list.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& leading() const {
    if (terms.empty()) throw Error("Polynomial: leading term of zero");
    return terms.front();
  }
  int32_t max_degree() const {
    int32_t d = 0;
    for (const auto& t : terms)
      if (t.mono.degree() > d) d = t.mono.degree();
    return d;
  }
  /// Coefficient of the constant monomial, or zero scalar of f's field.
  Scalar constant_coeff(const FieldSpec& f) const;
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].mono.is_one()); }
};

/// Ring declaration: localized polynomial ring with optional quotient ideal.
/// quotient_std / trunc_degree are filled by make_ring (stdbasis layer);
/// plain construction is enough for arithmetic and parsing.
struct RingSpec {
  FieldSpec field;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex_global;
  std::vector<Polynomial> quotient;       // generators of the quotient ideal (may be empty)
  std::vector<Polynomial> quotient_std;   // reduced standard basis of quotient
  std::optional<int32_t> trunc_degree;    // minimal N with m^N inside quotient, when Artinian
  std::optional<int32_t> cached_dim;

  size_t nvars() const { return vars.size(); }
  bool is_local() const { return order == MonomialOrder::antigraded_revlex_local; }
  int var_index(const std::string& name) const;  // -1 if unknown
};

/// Arithmetic compatibility: same field, variables, order (quotients may differ).
bool same_frame(const RingSpec& a, const RingSpec& b);
void require_same_frame(const RingSpec& a, const RingSpec& b, const char* op);

// Canonicalizing arithmetic. Results are not reduced modulo the quotient;
// reduction is explicit via normal_form.
Polynomial poly_zero();
Polynomial poly_const(const RingSpec& R, const Scalar& c);
Polynomial poly_var(const RingSpec& R, int v, int32_t e = 1);
Polynomial poly_term(const RingSpec& R, const Scalar& c, const Monomial& m);
Polynomial poly_add(const RingSpec& R, const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const RingSpec& R, const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_scale(const Polynomial& f, const Scalar& c);
/// c * x^m * f
Polynomial poly_mul_term(const RingSpec& R, const Polynomial& f, const Scalar& c, const Monomial& m);
Polynomial poly_mul(const RingSpec& R, const Polynomial& f, const Polynomial& g);
Polynomial poly_pow(const RingSpec& R, const Polynomial& f, uint32_t e);
bool poly_eq(const Polynomial& f, const Polynomial& g);

/// Canonical printer; parse_poly(poly_to_string(f)) == f.
std::string poly_to_string(const RingSpec& R, const Polynomial& f);
std::string mono_to_string(const RingSpec& R, const Monomial& m);

/// Recursive-descent parser for the expression grammar:
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := base ('^' uint)? ; base := ident | literal | '(' expr ')' ;
///   literal := int ('/' uint)?
/// Errors carry a 0-based character position.
struct ParseError : Error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : Error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};
Polynomial parse_poly(const std::string& text, const RingSpec& R);

}  // namespace linkmod

#endif
