#include "linkmod/script.hpp"

#include <fstream>
#include <json.hpp>
#include <map>

#include "linkmod/cone.hpp"
#include "linkmod/complexity.hpp"
#include "linkmod/eisenbud.hpp"
#include "linkmod/verdicts.hpp"

namespace linkmod {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- lexer

struct Token {
  enum class K { ident, integer, punct, end } k;
  std::string text;
  size_t pos;
};

struct ScriptParseError : Error {
  size_t pos;
  ScriptParseError(const std::string& m, size_t p)
      : Error(m + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '#') {  // comment to end of line
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::K::ident, s.substr(start, i - start), start});
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::K::integer, s.substr(start, i - start), start});
      continue;
    }
    if (c == '=' && i + 1 < s.size() && s[i + 1] == '=') {
      out.push_back({Token::K::punct, "==", i});
      i += 2;
      continue;
    }
    if (c == '!' && i + 1 < s.size() && s[i + 1] == '=') {
      out.push_back({Token::K::punct, "!=", i});
      i += 2;
      continue;
    }
    if (std::string("()+-*^/,;=").find(c) != std::string::npos) {
      out.push_back({Token::K::punct, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ScriptParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::K::end, "", s.size()});
  return out;
}

// ---------------------------------------------------------------- AST

struct Expr {
  enum class K { call, ident, integer, binop, neg } k;
  std::string name;  // call/ident name or operator
  long long ival = 0;
  std::vector<Expr> args;
  size_t pos = 0;
};

struct RingDecl {
  std::string name;
  int64_t characteristic = 0;
  std::vector<std::string> vars;
  bool local = true;
  std::vector<Expr> quotient;
};

struct Stmt {
  enum class K { ring, let, show, check } k;
  std::string name;     // let target / ring name
  RingDecl ring;
  Expr expr;            // let/show value, check lhs
  std::string cmp;      // check: "", "==", "!="
  Expr rhs;
  std::string source;   // original text for check records
  size_t pos = 0;
};

struct Parser {
  const std::vector<Token>& t;
  size_t i = 0;

  const Token& peek() const { return t[i]; }
  Token take() { return t[i++]; }
  bool accept(const std::string& p) {
    if (t[i].k == Token::K::punct && t[i].text == p) { ++i; return true; }
    return false;
  }
  void expect(const std::string& p) {
    if (!accept(p)) throw ScriptParseError("expected '" + p + "'", t[i].pos);
  }
  std::string expect_ident() {
    if (t[i].k != Token::K::ident) throw ScriptParseError("expected identifier", t[i].pos);
    return take().text;
  }
  bool accept_kw(const std::string& kw) {
    if (t[i].k == Token::K::ident && t[i].text == kw) { ++i; return true; }
    return false;
  }

  Expr expr() {
    Expr e = term();
    while (t[i].k == Token::K::punct && (t[i].text == "+" || t[i].text == "-")) {
      Expr b;
      b.k = Expr::K::binop;
      b.name = take().text;
      b.pos = e.pos;
      b.args.push_back(std::move(e));
      b.args.push_back(term());
      e = std::move(b);
    }
    return e;
  }
  Expr term() {
    Expr e = factor();
    while (t[i].k == Token::K::punct && (t[i].text == "*" || t[i].text == "/")) {
      Expr b;
      b.k = Expr::K::binop;
      b.name = take().text;
      b.pos = e.pos;
      b.args.push_back(std::move(e));
      b.args.push_back(factor());
      e = std::move(b);
    }
    return e;
  }
  Expr factor() {
    if (accept("-")) {
      Expr n;
      n.k = Expr::K::neg;
      n.pos = t[i].pos;
      n.args.push_back(factor());
      return n;
    }
    Expr b = base();
    while (accept("^")) {
      Expr p;
      p.k = Expr::K::binop;
      p.name = "^";
      p.pos = b.pos;
      p.args.push_back(std::move(b));
      p.args.push_back(base());
      b = std::move(p);
    }
    return b;
  }
  Expr base() {
    const Token& tok = peek();
    if (tok.k == Token::K::integer) {
      Expr e;
      e.k = Expr::K::integer;
      e.ival = std::stoll(take().text);
      e.pos = tok.pos;
      return e;
    }
    if (tok.k == Token::K::ident) {
      Expr e;
      e.name = take().text;
      e.pos = tok.pos;
      if (accept("(")) {
        e.k = Expr::K::call;
        if (!accept(")")) {
          while (true) {
            e.args.push_back(expr());
            if (accept(")")) break;
            expect(",");
          }
        }
      } else {
        e.k = Expr::K::ident;
      }
      return e;
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    throw ScriptParseError("expected expression", tok.pos);
  }

  RingDecl ring_decl() {
    RingDecl d;
    d.name = expect_ident();
    expect("=");
    if (!accept_kw("char")) throw ScriptParseError("expected 'char'", t[i].pos);
    if (t[i].k != Token::K::integer) throw ScriptParseError("expected characteristic", t[i].pos);
    d.characteristic = std::stoll(take().text);
    if (!accept_kw("vars")) throw ScriptParseError("expected 'vars'", t[i].pos);
    d.vars.push_back(expect_ident());
    while (accept(",") || (t[i].k == Token::K::ident && t[i].text != "order")) {
      if (t[i].k != Token::K::ident) throw ScriptParseError("expected variable name", t[i].pos);
      d.vars.push_back(take().text);
    }
    if (!accept_kw("order")) throw ScriptParseError("expected 'order'", t[i].pos);
    std::string ord = expect_ident();
    if (ord == "local") d.local = true;
    else if (ord == "grevlex") d.local = false;
    else throw ScriptParseError("order must be 'local' or 'grevlex'", t[i].pos);
    if (accept_kw("mod")) {
      d.quotient.push_back(expr());
      while (accept(",")) d.quotient.push_back(expr());
    }
    return d;
  }

  std::vector<Stmt> script(const std::string& source) {
    std::vector<Stmt> out;
    while (peek().k != Token::K::end) {
      Stmt s;
      s.pos = peek().pos;
      if (accept_kw("ring")) {
        s.k = Stmt::K::ring;
        s.ring = ring_decl();
      } else if (accept_kw("let")) {
        s.k = Stmt::K::let;
        s.name = expect_ident();
        expect("=");
        s.expr = expr();
      } else if (accept_kw("show")) {
        s.k = Stmt::K::show;
        s.expr = expr();
      } else if (accept_kw("check")) {
        s.k = Stmt::K::check;
        s.expr = expr();
        if (t[i].k == Token::K::punct && (t[i].text == "==" || t[i].text == "!=")) {
          s.cmp = take().text;
          s.rhs = expr();
        }
      } else {
        throw ScriptParseError("expected 'ring', 'let', 'show' or 'check'", peek().pos);
      }
      size_t end = peek().pos;
      expect(";");
      s.source = source.substr(s.pos, end - s.pos);
      // normalize whitespace in the echoed statement
      std::string norm;
      bool sp = false;
      for (char c : s.source) {
        if (isspace(static_cast<unsigned char>(c))) { sp = true; continue; }
        if (sp && !norm.empty()) norm += ' ';
        sp = false;
        norm += c;
      }
      s.source = norm;
      out.push_back(std::move(s));
    }
    return out;
  }
};

// ---------------------------------------------------------------- values

struct Value {
  enum class K {
    ring, poly, ideal, polylist, module, resolution, betti, cone, mcm, link,
    cx, cxreport, verdict, fingerprint, ops, integer, boolean, intlist
  } k = K::integer;

  RingSpec ring;  // context for poly/ideal/polylist; the ring itself for K::ring
  Polynomial poly;
  Ideal ideal;
  std::vector<Polynomial> polylist;
  PresentedModule module;
  std::shared_ptr<Resolution> resolution;
  std::vector<int64_t> ints;  // betti / intlist
  std::shared_ptr<ConeComplex> cone;
  std::shared_ptr<MCMApprox> mcm;
  std::shared_ptr<LinkageDatum> link;
  std::shared_ptr<ComplexityEstimate> cx;
  std::shared_ptr<ComplexityTransferReport> cxrep;
  VanishingVerdict verdict;
  Fingerprint fp;
  std::shared_ptr<CohomOperators> ops;
  int64_t i = 0;
  bool b = false;
};

const char* kind_name(Value::K k) {
  switch (k) {
    case Value::K::ring: return "ring";
    case Value::K::poly: return "poly";
    case Value::K::ideal: return "ideal";
    case Value::K::polylist: return "polylist";
    case Value::K::module: return "module";
    case Value::K::resolution: return "betti";
    case Value::K::betti: return "betti";
    case Value::K::cone: return "cone-report";
    case Value::K::mcm: return "mcm-report";
    case Value::K::link: return "link";
    case Value::K::cx: return "cx";
    case Value::K::cxreport: return "cx-transfer";
    case Value::K::verdict: return "verdict";
    case Value::K::fingerprint: return "fingerprint";
    case Value::K::ops: return "eisenbud";
    case Value::K::integer: return "int";
    case Value::K::boolean: return "bool";
    case Value::K::intlist: return "intlist";
  }
  return "?";
}

// ---------------------------------------------------------------- interpreter

struct Interp {
  ScriptOptions opt;
  std::map<std::string, Value> env;
  std::optional<RingSpec> current;
  std::vector<OutputRecord>* records;
  bool any_check_failed = false;

  const RingSpec& ring() {
    if (!current) throw Error("no ring declared yet");
    return *current;
  }

  Provenance provenance() {
    Provenance p;
    p.characteristic = current ? current->field.characteristic : opt.characteristic;
    p.order = current ? (current->is_local() ? "local" : "grevlex") : "";
    p.resolution_bound = opt.bound;
    p.window_lo = 2;
    p.window_hi = opt.bound;
    p.seed = opt.seed;
    return p;
  }

  Value as_poly(const Value& v) {
    if (v.k == Value::K::poly) return v;
    if (v.k == Value::K::integer) {
      Value p;
      p.k = Value::K::poly;
      p.ring = ring();
      p.poly = poly_const(p.ring, Scalar::from_int(p.ring.field, v.i));
      return p;
    }
    throw Error("expected a polynomial");
  }

  int64_t as_int(const Value& v) {
    if (v.k != Value::K::integer) throw Error("expected an integer");
    return v.i;
  }

  const PresentedModule& as_module(const Value& v) {
    if (v.k != Value::K::module) throw Error("expected a module");
    return v.module;
  }

  Ideal as_ideal(const Value& v) {
    if (v.k == Value::K::ideal) return v.ideal;
    if (v.k == Value::K::poly) return make_ideal(v.ring, {v.poly});
    if (v.k == Value::K::polylist) return make_ideal(v.ring, v.polylist);
    throw Error("expected an ideal");
  }

  Value eval(const Expr& e) {
    switch (e.k) {
      case Expr::K::integer: {
        Value v;
        v.k = Value::K::integer;
        v.i = e.ival;
        return v;
      }
      case Expr::K::ident: {
        if (e.name == "true" || e.name == "false") {
          Value v;
          v.k = Value::K::boolean;
          v.b = e.name == "true";
          return v;
        }
        auto it = env.find(e.name);
        if (it != env.end()) return it->second;
        if (current) {
          int vi = current->var_index(e.name);
          if (vi >= 0) {
            Value v;
            v.k = Value::K::poly;
            v.ring = *current;
            v.poly = poly_var(*current, vi);
            return v;
          }
        }
        throw Error("unknown name '" + e.name + "'");
      }
      case Expr::K::neg: {
        Value a = eval(e.args[0]);
        if (a.k == Value::K::integer) { a.i = -a.i; return a; }
        Value p = as_poly(a);
        p.poly = poly_neg(p.poly);
        return p;
      }
      case Expr::K::binop:
        return binop(e);
      case Expr::K::call:
        return call(e);
    }
    throw Error("bad expression");
  }

  Value binop(const Expr& e) {
    Value a = eval(e.args[0]);
    Value b = eval(e.args[1]);
    if (e.name == "^") {
      int64_t exp = as_int(b);
      if (exp < 0) throw Error("negative exponent");
      if (a.k == Value::K::integer) {
        Value v;
        v.k = Value::K::integer;
        v.i = 1;
        for (int64_t t = 0; t < exp; ++t) v.i *= a.i;
        return v;
      }
      Value p = as_poly(a);
      p.poly = poly_pow(p.ring, p.poly, static_cast<uint32_t>(exp));
      return p;
    }
    if (e.name == "/") {
      if (a.k == Value::K::integer && b.k == Value::K::integer) {
        Value p;
        p.k = Value::K::poly;
        p.ring = ring();
        p.poly = poly_const(p.ring, Scalar::from_fraction(p.ring.field, BigInt(a.i), BigInt(b.i)));
        return p;
      }
      throw Error("'/' is defined for integer literals only");
    }
    if (a.k == Value::K::integer && b.k == Value::K::integer) {
      Value v;
      v.k = Value::K::integer;
      v.i = e.name == "+" ? a.i + b.i : e.name == "-" ? a.i - b.i : a.i * b.i;
      return v;
    }
    Value pa = as_poly(a), pb = as_poly(b);
    require_same_frame(pa.ring, pb.ring, "script arithmetic");
    Value v;
    v.k = Value::K::poly;
    v.ring = pa.ring;
    v.poly = e.name == "+"   ? poly_add(pa.ring, pa.poly, pb.poly)
             : e.name == "-" ? poly_sub(pa.ring, pa.poly, pb.poly)
                             : poly_mul(pa.ring, pa.poly, pb.poly);
    return v;
  }

  Value call(const Expr& e);

  // -------- records

  json poly_json(const RingSpec& R, const Polynomial& p) { return poly_to_string(R, p); }

  json value_payload(const Value& v) {
    json j;
    switch (v.k) {
      case Value::K::ring: {
        j["characteristic"] = v.ring.field.characteristic;
        j["vars"] = v.ring.vars;
        j["order"] = v.ring.is_local() ? "local" : "grevlex";
        json q = json::array();
        for (const auto& g : v.ring.quotient) q.push_back(poly_to_string(v.ring, g));
        j["quotient"] = q;
        break;
      }
      case Value::K::poly:
        j["poly"] = poly_to_string(v.ring, v.poly);
        break;
      case Value::K::ideal: {
        json g = json::array();
        for (const auto& p : v.ideal.gens) g.push_back(poly_to_string(v.ideal.ring, p));
        j["gens"] = g;
        if (v.ideal.has_sbasis) {
          json s = json::array();
          for (const auto& p : v.ideal.sbasis) s.push_back(poly_to_string(v.ideal.ring, p));
          j["std"] = s;
        }
        break;
      }
      case Value::K::polylist: {
        json g = json::array();
        for (const auto& p : v.polylist) g.push_back(poly_to_string(v.ring, p));
        j["polys"] = g;
        j["count"] = v.polylist.size();
        break;
      }
      case Value::K::module: {
        j["gens"] = v.module.pres.rows;
        j["relations"] = v.module.pres.cols;
        json rows = json::array();
        for (int32_t r = 0; r < v.module.pres.rows; ++r) {
          json row = json::array();
          for (int32_t c = 0; c < v.module.pres.cols; ++c)
            row.push_back(poly_to_string(v.module.ring, v.module.pres.at(r, c)));
          rows.push_back(row);
        }
        j["presentation"] = rows;
        j["minimal"] = v.module.minimal;
        break;
      }
      case Value::K::resolution:
      case Value::K::betti: {
        json b = json::array();
        for (int64_t x : v.ints) b.push_back(x);
        j["betti"] = b;
        break;
      }
      case Value::K::cone: {
        j["g"] = v.cone->g;
        json r = json::array();
        for (int32_t x : v.cone->C.ranks) r.push_back(x);
        j["ranks"] = r;
        j["lo"] = v.cone->C.lo;
        j["d2_zero"] = true;  // certified at construction
        break;
      }
      case Value::K::mcm: {
        j["projdim_Y"] = v.mcm->projdim_Y;
        j["Y_inside_X"] = v.mcm->y_inside_x;
        j["X_mcm"] = v.mcm->x_mcm;
        j["lengths_match"] = v.mcm->lengths_match;
        break;
      }
      case Value::K::link: {
        j["g"] = v.link->g;
        json q = json::array();
        for (const auto& p : v.link->q.gens) q.push_back(poly_to_string(v.link->ambient, p));
        j["q"] = q;
        j["M_gens"] = v.link->M_B.pres.rows;
        j["N_gens"] = v.link->N_B.pres.rows;
        break;
      }
      case Value::K::cx: {
        j["class"] = cx_class_name(v.cx->cls);
        j["certified"] = v.cx->certified;
        json b = json::array();
        for (int32_t x : v.cx->betti.betti) b.push_back(x);
        j["betti"] = b;
        j["evidence"] = v.cx->evidence;
        j["label"] = v.cx->certified ? "certified" : "window evidence";
        break;
      }
      case Value::K::cxreport: {
        j["cx_M"] = cx_class_name(v.cxrep->cx_M.cls);
        j["cx_N"] = cx_class_name(v.cxrep->cx_N.cls);
        j["cx_Aq"] = cx_class_name(v.cxrep->cx_Aq.cls);
        j["q_type"] = v.cxrep->q_type;
        j["q_gorenstein_evidence"] = v.cxrep->q_gorenstein_evidence;
        j["regime"] = v.cxrep->regime;
        j["matches_prediction"] = v.cxrep->matches_prediction;
        j["label"] = v.cxrep->label;
        break;
      }
      case Value::K::verdict: {
        j["vanishes_on_window"] = v.verdict.vanishes_on_window;
        j["periodic_upgrade"] = v.verdict.periodic_upgrade;
        j["window"] = {v.verdict.window_lo, v.verdict.window_hi};
        json nz = json::array();
        for (int32_t x : v.verdict.nonzero_indices) nz.push_back(x);
        j["nonzero"] = nz;
        j["label"] = v.verdict.label;
        break;
      }
      case Value::K::fingerprint: {
        json b = json::array(), f = json::array(), a = json::array();
        for (int32_t x : v.fp.betti) b.push_back(x);
        for (int64_t x : v.fp.filt) f.push_back(x);
        for (const auto& s : v.fp.ann_leads) a.push_back(s);
        j["betti"] = b;
        j["filt"] = f;
        j["ann_leads"] = a;
        j["note"] = "necessary condition for isomorphism, not sufficient";
        break;
      }
      case Value::K::ops: {
        j["operators"] = v.ops->f.size();
        j["bound"] = v.ops->bound;
        j["identity_exact"] = true;
        j["chain_maps"] = true;
        break;
      }
      case Value::K::integer:
        j["value"] = v.i;
        break;
      case Value::K::boolean:
        j["value"] = v.b;
        break;
      case Value::K::intlist: {
        json b = json::array();
        for (int64_t x : v.ints) b.push_back(x);
        j["values"] = b;
        break;
      }
    }
    return j;
  }

  std::string value_text(const Value& v) {
    switch (v.k) {
      case Value::K::poly:
        return poly_to_string(v.ring, v.poly);
      case Value::K::resolution:
      case Value::K::betti: {
        std::vector<int32_t> b(v.ints.begin(), v.ints.end());
        return format_betti_text(b);
      }
      case Value::K::integer:
        return std::to_string(v.i);
      case Value::K::boolean:
        return v.b ? "true" : "false";
      case Value::K::fingerprint:
        return v.fp.to_string();
      default:
        return value_payload(v).dump();
    }
  }

  void emit_value(const Value& v) {
    OutputRecord rec;
    rec.kind = kind_name(v.k);
    rec.payload_json = value_payload(v).dump();
    rec.payload_text = value_text(v);
    rec.provenance = provenance();
    records->push_back(std::move(rec));
  }

  bool values_equal(const Value& a, const Value& b) {
    if (a.k == Value::K::integer && b.k == Value::K::integer) return a.i == b.i;
    if (a.k == Value::K::boolean && b.k == Value::K::boolean) return a.b == b.b;
    if ((a.k == Value::K::polylist || a.k == Value::K::betti || a.k == Value::K::intlist) &&
        b.k == Value::K::integer)
      return static_cast<int64_t>(a.k == Value::K::polylist ? a.polylist.size() : a.ints.size()) == b.i;
    if (a.k == Value::K::integer &&
        (b.k == Value::K::polylist || b.k == Value::K::betti || b.k == Value::K::intlist))
      return values_equal(b, a);
    if ((a.k == Value::K::betti || a.k == Value::K::intlist) &&
        (b.k == Value::K::betti || b.k == Value::K::intlist))
      return a.ints == b.ints;
    if (a.k == Value::K::poly || b.k == Value::K::poly) {
      Value pa = as_poly(a), pb = as_poly(b);
      return poly_eq(nf_mod_quotient(pa.ring, pa.poly), nf_mod_quotient(pb.ring, pb.poly));
    }
    if (a.k == Value::K::fingerprint && b.k == Value::K::fingerprint) return a.fp == b.fp;
    if (a.k == Value::K::ideal && b.k == Value::K::ideal) {
      Ideal ia = a.ideal, ib = b.ideal;
      for (const auto& g : ia.gens)
        if (!ideal_member(g, ib)) return false;
      for (const auto& g : ib.gens)
        if (!ideal_member(g, ia)) return false;
      return true;
    }
    throw Error("cannot compare these value kinds");
  }

  void run(const Stmt& s) {
    switch (s.k) {
      case Stmt::K::ring: {
        if (env.count(s.ring.name)) throw Error("name '" + s.ring.name + "' already bound");
        FieldSpec f = s.ring.characteristic == 0 ? FieldSpec::rationals()
                                                 : FieldSpec::prime(s.ring.characteristic);
        RingSpec frame;
        frame.field = f;
        frame.vars = s.ring.vars;
        frame.order = s.ring.local ? MonomialOrder::antigraded_revlex_local
                                   : MonomialOrder::grevlex_global;
        std::optional<RingSpec> saved = current;
        current = frame;  // quotient expressions parse in the new frame
        std::vector<Polynomial> quot;
        try {
          for (const auto& qe : s.ring.quotient) quot.push_back(as_poly(eval(qe)).poly);
        } catch (...) {
          current = saved;
          throw;
        }
        RingSpec R = make_ring(f, s.ring.vars, frame.order, quot);
        current = R;
        Value v;
        v.k = Value::K::ring;
        v.ring = R;
        env.emplace(s.ring.name, v);
        break;
      }
      case Stmt::K::let: {
        if (env.count(s.name)) throw Error("name '" + s.name + "' already bound");
        env.emplace(s.name, eval(s.expr));
        break;
      }
      case Stmt::K::show:
        emit_value(eval(s.expr));
        break;
      case Stmt::K::check: {
        Value lhs = eval(s.expr);
        bool pass;
        if (s.cmp.empty()) {
          if (lhs.k != Value::K::boolean) throw Error("bare check expects a boolean");
          pass = lhs.b;
        } else {
          Value rhs = eval(s.rhs);
          pass = values_equal(lhs, rhs);
          if (s.cmp == "!=") pass = !pass;
        }
        if (!pass) any_check_failed = true;
        OutputRecord rec;
        rec.kind = "check";
        rec.payload_json = value_payload(lhs).dump();
        rec.payload_text = std::string(pass ? "PASS" : "FAIL") + ": " + s.source;
        rec.provenance = provenance();
        rec.check = CheckInfo{s.source, pass};
        records->push_back(std::move(rec));
        break;
      }
    }
  }
};

Value Interp::call(const Expr& e) {
  const std::string& fn = e.name;
  auto argc = e.args.size();
  auto arg = [&](size_t k) { return eval(e.args[k]); };
  auto need = [&](size_t n) {
    if (argc != n) throw Error(fn + ": expected " + std::to_string(n) + " arguments");
  };

  if (fn == "ideal") {
    Value v;
    v.k = Value::K::ideal;
    v.ring = ring();
    std::vector<Polynomial> gens;
    for (size_t k = 0; k < argc; ++k) gens.push_back(as_poly(arg(k)).poly);
    v.ideal = make_ideal(v.ring, gens);
    return v;
  }
  if (fn == "poly") {
    need(1);
    return as_poly(arg(0));
  }
  if (fn == "std") {
    need(1);
    Value v;
    v.k = Value::K::ideal;
    v.ideal = std_basis(as_ideal(arg(0)));
    v.ring = v.ideal.ring;
    return v;
  }
  if (fn == "nf") {
    need(2);
    Value f = as_poly(arg(0));
    Ideal I = as_ideal(arg(1));
    Value v;
    v.k = Value::K::poly;
    v.ring = I.ring;
    v.poly = normal_form(f.poly, I);
    return v;
  }
  if (fn == "member") {
    need(2);
    Value f = as_poly(arg(0));
    Ideal I = as_ideal(arg(1));
    Value v;
    v.k = Value::K::boolean;
    v.b = ideal_member(f.poly, I);
    return v;
  }
  if (fn == "colon") {
    need(2);
    Value v;
    v.k = Value::K::ideal;
    v.ideal = colon_ideal(as_ideal(arg(0)), as_ideal(arg(1)));
    v.ring = v.ideal.ring;
    return v;
  }
  if (fn == "intersect") {
    need(2);
    Value v;
    v.k = Value::K::ideal;
    v.ideal = intersect_ideals(as_ideal(arg(0)), as_ideal(arg(1)));
    v.ring = v.ideal.ring;
    return v;
  }
  if (fn == "mingens") {
    need(1);
    Value v;
    v.k = Value::K::polylist;
    Ideal I = as_ideal(arg(0));
    v.ring = I.ring;
    v.polylist = minimal_generators(I);
    return v;
  }
  if (fn == "inpower") {
    need(2);
    Value v;
    v.k = Value::K::boolean;
    v.b = contained_in_power(as_ideal(arg(0)), static_cast<int32_t>(as_int(arg(1))));
    return v;
  }
  if (fn == "count") {
    need(1);
    Value a = arg(0);
    Value v;
    v.k = Value::K::integer;
    if (a.k == Value::K::polylist) v.i = static_cast<int64_t>(a.polylist.size());
    else if (a.k == Value::K::betti || a.k == Value::K::intlist) v.i = static_cast<int64_t>(a.ints.size());
    else if (a.k == Value::K::ideal) v.i = static_cast<int64_t>(a.ideal.gens.size());
    else throw Error("count: unsupported value");
    return v;
  }
  if (fn == "dim" || fn == "vdim" || fn == "socle" || fn == "gorenstein") {
    const RingSpec& R = argc == 1 && arg(0).k == Value::K::ring ? eval(e.args[0]).ring : ring();
    Value v;
    if (fn == "gorenstein") {
      v.k = Value::K::boolean;
      v.b = is_gorenstein_artinian(R);
    } else {
      v.k = Value::K::integer;
      v.i = fn == "dim" ? krull_dim(R) : fn == "vdim" ? vspace_dim(R) : socle_dim(R);
    }
    return v;
  }
  if (fn == "cyclic") {
    need(1);
    Value v;
    v.k = Value::K::module;
    Ideal I = as_ideal(arg(0));
    v.module = cyclic_module(I.ring, I);
    return v;
  }
  if (fn == "free") {
    need(1);
    Value v;
    v.k = Value::K::module;
    v.module = free_module(ring(), static_cast<int32_t>(as_int(arg(0))));
    return v;
  }
  if (fn == "kmod") {
    need(0);
    Value v;
    v.k = Value::K::module;
    v.module = residue_field_module(ring());
    return v;
  }
  if (fn == "module") {
    if (argc < 2) throw Error("module: expected rows, cols, entries...");
    int32_t rows = static_cast<int32_t>(as_int(arg(0)));
    int32_t cols = static_cast<int32_t>(as_int(arg(1)));
    if (argc != static_cast<size_t>(rows) * cols + 2) throw Error("module: wrong entry count");
    FreeModuleMap f(ring(), rows, cols);
    for (int32_t r = 0; r < rows; ++r)
      for (int32_t c = 0; c < cols; ++c)
        f.at(r, c) = as_poly(arg(2 + static_cast<size_t>(r) * cols + c)).poly;
    Value v;
    v.k = Value::K::module;
    v.module = coker(f);
    return v;
  }
  if (fn == "resolve") {
    need(2);
    Value v;
    v.k = Value::K::resolution;
    v.resolution = std::make_shared<Resolution>(
        resolve_module(as_module(arg(0)), static_cast<int32_t>(as_int(arg(1)))));
    for (int32_t x : v.resolution->betti.betti) v.ints.push_back(x);
    return v;
  }
  if (fn == "betti") {
    Value a = arg(0);
    Value v;
    v.k = Value::K::betti;
    if (a.k == Value::K::resolution) {
      v.ints = a.ints;
    } else {
      int32_t bound = argc >= 2 ? static_cast<int32_t>(as_int(arg(1))) : opt.bound;
      Resolution r = resolve_module(as_module(a), bound);
      for (int32_t x : r.betti.betti) v.ints.push_back(x);
    }
    return v;
  }
  if (fn == "transpose" || fn == "omega" || fn == "dagger" || fn == "dual" || fn == "link") {
    need(1);
    Value a = arg(0);
    const PresentedModule& M = as_module(a);
    Value v;
    v.k = Value::K::module;
    v.module = fn == "transpose" ? transpose_module(M)
               : fn == "omega"   ? syzygy_module_of(M)
               : fn == "dagger"  ? dagger_dual(M)
               : fn == "dual"    ? artinian_dual(M)
                                 : horizontal_link(M);
    return v;
  }
  if (fn == "hom" || fn == "tensor") {
    need(2);
    Value v;
    v.k = Value::K::module;
    v.module = fn == "hom" ? hom_modules(as_module(arg(0)), as_module(arg(1)))
                           : tensor_modules(as_module(arg(0)), as_module(arg(1)));
    return v;
  }
  if (fn == "ext" || fn == "tor") {
    need(3);
    Value v;
    v.k = Value::K::module;
    int32_t i = static_cast<int32_t>(as_int(arg(2)));
    v.module = fn == "ext" ? ext_module(as_module(arg(0)), as_module(arg(1)), i)
                           : tor_module(as_module(arg(0)), as_module(arg(1)), i);
    return v;
  }
  if (fn == "ann") {
    need(1);
    Value v;
    v.k = Value::K::ideal;
    v.ideal = annihilator_of(as_module(arg(0)));
    v.ring = v.ideal.ring;
    return v;
  }
  if (fn == "trace") {
    need(1);
    Value v;
    v.k = Value::K::ideal;
    v.ideal = trace_and_stability(as_module(arg(0))).trace;
    v.ring = v.ideal.ring;
    return v;
  }
  if (fn == "stable") {
    need(1);
    Value v;
    v.k = Value::K::boolean;
    v.b = trace_and_stability(as_module(arg(0))).stable;
    return v;
  }
  if (fn == "iszero") {
    need(1);
    Value v;
    v.k = Value::K::boolean;
    v.b = module_is_zero(as_module(arg(0)));
    return v;
  }
  if (fn == "length") {
    need(1);
    auto l = module_length(as_module(arg(0)));
    if (!l) throw Error("length: module has infinite length");
    Value v;
    v.k = Value::K::integer;
    v.i = *l;
    return v;
  }
  if (fn == "fingerprint") {
    Value v;
    v.k = Value::K::fingerprint;
    int32_t bb = argc >= 2 ? static_cast<int32_t>(as_int(arg(1))) : opt.bound;
    int32_t fb = argc >= 3 ? static_cast<int32_t>(as_int(arg(2))) : 6;
    v.fp = module_fingerprint(as_module(arg(0)), bb, fb);
    return v;
  }
  if (fn == "linkvia") {
    need(2);
    Value v;
    v.k = Value::K::link;
    v.link = std::make_shared<LinkageDatum>(link_via(as_module(arg(0)), as_ideal(arg(1))));
    return v;
  }
  if (fn == "linkof") {
    need(1);
    Value a = arg(0);
    if (a.k != Value::K::link) throw Error("linkof: expected a linkage datum");
    Value v;
    v.k = Value::K::module;
    v.module = a.link->N_A;
    return v;
  }
  if (fn == "cone") {
    need(3);
    Value v;
    v.k = Value::K::cone;
    v.cone = std::make_shared<ConeComplex>(
        ferrand_cone(as_module(arg(0)), as_ideal(arg(1)), static_cast<int32_t>(as_int(arg(2)))));
    return v;
  }
  if (fn == "hcoh") {
    need(2);
    Value a = arg(0);
    if (a.k != Value::K::cone) throw Error("hcoh: expected a cone");
    Value v;
    v.k = Value::K::module;
    v.module = cone_cohomology(*a.cone, static_cast<int32_t>(as_int(arg(1))));
    return v;
  }
  if (fn == "mcmapprox") {
    need(1);
    Value a = arg(0);
    if (a.k != Value::K::cone) throw Error("mcmapprox: expected a cone");
    Value v;
    v.k = Value::K::mcm;
    v.mcm = std::make_shared<MCMApprox>(mcm_approx(*a.cone, opt.bound));
    return v;
  }
  if (fn == "cx") {
    need(2);
    Value v;
    v.k = Value::K::cx;
    v.cx = std::make_shared<ComplexityEstimate>(
        complexity_estimate(as_module(arg(0)), static_cast<int32_t>(as_int(arg(1)))));
    return v;
  }
  if (fn == "cxclass") {
    need(1);
    Value a = arg(0);
    if (a.k != Value::K::cx) throw Error("cxclass: expected a complexity estimate");
    Value v;
    v.k = Value::K::integer;
    switch (a.cx->cls) {
      case CxClass::zero: v.i = 0; break;
      case CxClass::one: v.i = 1; break;
      case CxClass::two: v.i = 2; break;
      case CxClass::three_plus: v.i = 3; break;
      default: v.i = -1;
    }
    return v;
  }
  if (fn == "cxtransfer") {
    need(2);
    Value a = arg(0);
    if (a.k != Value::K::link) throw Error("cxtransfer: expected a linkage datum");
    Value v;
    v.k = Value::K::cxreport;
    v.cxrep = std::make_shared<ComplexityTransferReport>(
        complexity_transfer_check(*a.link, static_cast<int32_t>(as_int(arg(1)))));
    return v;
  }
  if (fn == "eisenbud") {
    need(2);
    Value v;
    v.k = Value::K::ops;
    v.ops = std::make_shared<CohomOperators>(
        eisenbud_operators(as_module(arg(0)), static_cast<int32_t>(as_int(arg(1)))));
    return v;
  }
  if (fn == "verdict") {
    need(5);
    if (e.args[2].k != Expr::K::ident)
      throw Error("verdict: mode must be ext_from, ext_into or tor");
    const std::string& m = e.args[2].name;
    VanishingMode mode = m == "ext_from"   ? VanishingMode::ext_from
                         : m == "ext_into" ? VanishingMode::ext_into
                         : m == "tor"      ? VanishingMode::tor
                                           : throw Error("verdict: unknown mode '" + m + "'");
    Value v;
    v.k = Value::K::verdict;
    v.verdict = vanishing_verdict(as_module(arg(0)), as_module(arg(1)), mode,
                                  static_cast<int32_t>(as_int(arg(3))),
                                  static_cast<int32_t>(as_int(arg(4))));
    return v;
  }
  if (fn == "vanishes" || fn == "periodic") {
    need(1);
    Value a = arg(0);
    if (a.k != Value::K::verdict) throw Error(fn + ": expected a verdict");
    Value v;
    v.k = Value::K::boolean;
    v.b = fn == "vanishes" ? a.verdict.vanishes_on_window : a.verdict.periodic_upgrade;
    return v;
  }
  if (fn == "matches") {
    need(1);
    Value a = arg(0);
    if (a.k != Value::K::cxreport) throw Error("matches: expected a transfer report");
    Value v;
    v.k = Value::K::boolean;
    v.b = a.cxrep->matches_prediction;
    return v;
  }
  if (fn == "list") {
    Value v;
    v.k = Value::K::intlist;
    for (size_t k = 0; k < argc; ++k) v.ints.push_back(as_int(arg(k)));
    return v;
  }
  if (fn == "minimize") {
    need(1);
    Value a = arg(0);
    if (a.k != Value::K::resolution) throw Error("minimize: expected a resolution");
    FreeComplex m = minimize_complex(a.resolution->complex);
    Value v;
    v.k = Value::K::betti;
    for (int32_t r : m.ranks) v.ints.push_back(r);
    return v;
  }
  throw Error("unknown function '" + fn + "'");
}

}  // namespace

ScriptResult run_script_text(const std::string& text, const ScriptOptions& opt) {
  ScriptResult out;
  std::vector<Stmt> stmts;
  try {
    std::vector<Token> toks = lex(text);
    Parser p{toks};
    stmts = p.script(text);
  } catch (const ScriptParseError& e) {
    out.exit_code = 2;
    out.error = e.what();
    return out;
  } catch (const std::exception& e) {
    out.exit_code = 2;
    out.error = e.what();
    return out;
  }

  Interp in;
  in.opt = opt;
  in.records = &out.records;
  for (const auto& s : stmts) {
    try {
      in.run(s);
    } catch (const std::exception& e) {
      out.exit_code = 3;
      out.error = std::string(e.what()) + " [in statement: " + s.source + "]";
      return out;
    }
    if (opt.fail_fast && in.any_check_failed) break;
  }
  if (in.any_check_failed) out.exit_code = 1;
  return out;
}

ScriptResult run_script_file(const std::string& path, const ScriptOptions& opt) {
  std::ifstream f(path);
  if (!f) {
    ScriptResult out;
    out.exit_code = 2;
    out.error = "cannot open script: " + path;
    return out;
  }
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return run_script_text(text, opt);
}

}  // namespace linkmod
