#include "linkmod/eisenbud.hpp"

namespace linkmod {

namespace {

FreeModuleMap to_ambient(const FreeModuleMap& m, const RingSpec& P) {
  FreeModuleMap out(P, m.rows, m.cols);
  out.entries = m.entries;  // representatives are honest polynomials
  return out;
}

}  // namespace

CohomOperators eisenbud_operators(const PresentedModule& M, int32_t bound) {
  const RingSpec& A = M.ring;
  if (A.quotient.empty()) throw Error("eisenbud_operators: ring has no defining regular sequence");
  CohomOperators ops;
  ops.ambient = ambient_ring(A);
  ops.f = A.quotient;
  ops.bound = bound;
  const RingSpec& P = ops.ambient;
  size_t c = ops.f.size();

  for (const auto& fj : ops.f)
    for (const auto& t : fj.terms)
      if (t.mono.degree() < 2)
        throw Error("eisenbud_operators: defining equations must lie in m^2");
  if (krull_dim(A) != static_cast<int32_t>(A.nvars()) - static_cast<int32_t>(c))
    throw Error("eisenbud_operators: defining equations are not a regular sequence");

  ops.res = resolve_module(M, bound);
  ops.t.assign(c, {});
  ops.t_lifted.assign(c, {});
  for (size_t j = 0; j < c; ++j) {
    ops.t[j].resize(static_cast<size_t>(bound) + 1);
    ops.t_lifted[j].resize(static_cast<size_t>(bound) + 1);
  }

  for (int32_t s = 2; s <= bound; ++s) {
    int32_t rs = ops.res.complex.rank_at(s);
    int32_t rt = ops.res.complex.rank_at(s - 2);
    for (size_t j = 0; j < c; ++j) {
      ops.t[j][static_cast<size_t>(s)] = FreeModuleMap(A, rt, rs);
      ops.t_lifted[j][static_cast<size_t>(s)] = FreeModuleMap(P, rt, rs);
    }
    if (rs == 0 || rt == 0) continue;
    FreeModuleMap d1 = to_ambient(ops.res.complex.maps[static_cast<size_t>(s) - 2], P);  // F_{s-1} -> F_{s-2}
    FreeModuleMap d2 = to_ambient(ops.res.complex.maps[static_cast<size_t>(s) - 1], P);  // F_s -> F_{s-1}
    FreeModuleMap square = compose(d1, d2);
    std::vector<MVec> fgens;
    for (const auto& fj : ops.f) fgens.push_back(mvec_from_poly(fj, 0));
    for (int32_t a = 0; a < square.rows; ++a) {
      for (int32_t b = 0; b < square.cols; ++b) {
        const Polynomial& e = square.at(a, b);
        if (e.is_zero()) continue;
        auto sol = solve_membership(P, 1, mvec_from_poly(e, 0), fgens);
        if (!sol)
          throw Error("eisenbud_operators: lifted square is not in (f) — decomposition infeasible");
        for (size_t j = 0; j < c; ++j) {
          ops.t_lifted[j][static_cast<size_t>(s)].at(a, b) = (*sol)[j];
          ops.t[j][static_cast<size_t>(s)].at(a, b) = nf_mod_quotient(A, (*sol)[j]);
        }
      }
    }
  }

  if (!operators_identity_exact(ops))
    throw Error("eisenbud_operators: decomposition identity failed");
  if (!operators_chain_maps(ops))
    throw Error("eisenbud_operators: operators do not commute with the differential");
  return ops;
}

bool operators_identity_exact(const CohomOperators& ops) {
  const RingSpec& P = ops.ambient;
  for (int32_t s = 2; s <= ops.bound; ++s) {
    int32_t rs = ops.res.complex.rank_at(s);
    int32_t rt = ops.res.complex.rank_at(s - 2);
    if (rs == 0 || rt == 0) continue;
    FreeModuleMap d1 = to_ambient(ops.res.complex.maps[static_cast<size_t>(s) - 2], P);
    FreeModuleMap d2 = to_ambient(ops.res.complex.maps[static_cast<size_t>(s) - 1], P);
    FreeModuleMap square = compose(d1, d2);
    for (int32_t a = 0; a < rt; ++a)
      for (int32_t b = 0; b < rs; ++b) {
        Polynomial acc = square.at(a, b);
        for (size_t j = 0; j < ops.f.size(); ++j)
          acc = poly_sub(P, acc,
                         poly_mul(P, ops.f[j], ops.t_lifted[j][static_cast<size_t>(s)].at(a, b)));
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

bool operators_chain_maps(const CohomOperators& ops) {
  const RingSpec& A = ops.res.complex.ring;
  for (size_t j = 0; j < ops.f.size(); ++j) {
    for (int32_t s = 3; s <= ops.bound; ++s) {
      // d_{s-2} ∘ t_j^{(s)}  =  t_j^{(s-1)} ∘ d_s : F_s -> F_{s-3}
      int32_t rs = ops.res.complex.rank_at(s);
      int32_t r3 = ops.res.complex.rank_at(s - 3);
      if (rs == 0 || r3 == 0) continue;
      const FreeModuleMap& dm2 = ops.res.complex.maps[static_cast<size_t>(s) - 3];  // F_{s-2} -> F_{s-3}
      const FreeModuleMap& ds = ops.res.complex.maps[static_cast<size_t>(s) - 1];   // F_s -> F_{s-1}
      FreeModuleMap lhs = compose(dm2, ops.t[j][static_cast<size_t>(s)]);
      FreeModuleMap rhs = compose(ops.t[j][static_cast<size_t>(s) - 1], ds);
      FreeModuleMap diff(A, lhs.rows, lhs.cols);
      for (size_t k = 0; k < lhs.entries.size(); ++k)
        diff.entries[k] = poly_sub(A, lhs.entries[k], rhs.entries[k]);
      if (!map_is_zero_mod_quotient(diff)) return false;
    }
  }
  return true;
}

bool map_is_isomorphism(const FreeModuleMap& m) {
  if (m.rows != m.cols) return false;
  if (m.rows == 0) return true;
  StandardBasis sb(m.ring, m.rows, m.rows);
  sb.add_extras(columns_to_mvecs(m));
  sb.adjoin_quotient(m.rows);
  sb.complete();
  for (int32_t j = 0; j < m.rows; ++j) {
    MVec e;
    e.terms.push_back({Scalar::one(m.ring.field), Monomial(m.ring.nvars()), j});
    if (!sb.member(e)) return false;
  }
  return true;
}

}  // namespace linkmod
