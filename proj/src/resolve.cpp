#include "linkmod/resolve.hpp"

namespace linkmod {

bool complex_d2_zero(const FreeComplex& C) {
  for (size_t k = 0; k + 1 < C.maps.size(); ++k) {
    const FreeModuleMap& a = C.maps[k];
    const FreeModuleMap& b = C.maps[k + 1];
    if (a.cols == 0 || b.cols == 0) continue;
    FreeModuleMap comp = C.cohomological ? compose(b, a) : compose(a, b);
    if (!map_is_zero_mod_quotient(comp)) return false;
  }
  return true;
}

Resolution resolve_module(const PresentedModule& M, int32_t bound, std::string id) {
  if (bound < 0) throw Error("resolve_module: negative bound");
  const RingSpec& R = M.ring;
  MinimalPresentation mp = minimal_presentation(M);

  Resolution out;
  out.complex.ring = R;
  out.complex.lo = 0;
  out.complex.cohomological = false;
  out.betti.module_id = std::move(id);
  out.betti.bound = bound;

  out.complex.ranks.push_back(mp.module.pres.rows);
  FreeModuleMap d = mp.module.pres;
  for (int32_t i = 1; i <= bound; ++i) {
    out.complex.ranks.push_back(d.cols);
    out.complex.maps.push_back(d);
    if (d.cols == 0) {
      // free tail: zero maps onward
      for (int32_t j = i + 1; j <= bound; ++j) {
        out.complex.ranks.push_back(0);
        out.complex.maps.push_back(FreeModuleMap(R, 0, 0));
      }
      break;
    }
    // next differential: minimal generators of ker(d)
    auto rel = syzygy_columns(R, d.rows, columns_to_mvecs(d), {});
    ModOrder ord{&R, d.cols};
    std::vector<MVec> relvecs;
    for (const auto& col : rel) relvecs.push_back(mvec_from_column(R, col, ord));
    std::vector<size_t> keep = module_mingens(R, d.cols, relvecs);
    FreeModuleMap next(R, d.cols, static_cast<int32_t>(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j)
      for (int32_t t = 0; t < d.cols; ++t)
        next.at(t, static_cast<int32_t>(j)) =
            nf_mod_quotient(R, rel[keep[j]][static_cast<size_t>(t)]);
    d = std::move(next);
  }

  for (int32_t r : out.complex.ranks) out.betti.betti.push_back(r);
  while (static_cast<int32_t>(out.betti.betti.size()) <= bound) out.betti.betti.push_back(0);

  // certification: d² = 0 and minimality
  if (!complex_d2_zero(out.complex)) throw Error("resolve_module: d² != 0");
  for (const auto& m : out.complex.maps)
    if (!entries_in_max_ideal(m)) throw Error("resolve_module: non-minimal differential");
  return out;
}

namespace {

// locate an entry whose reduced form is a nonzero constant
bool find_constant_unit(const FreeModuleMap& m, int32_t& ai, int32_t& bj, Scalar& c) {
  for (int32_t i = 0; i < m.rows; ++i)
    for (int32_t j = 0; j < m.cols; ++j) {
      Polynomial e = nf_mod_quotient(m.ring, m.at(i, j));
      if (!e.is_zero() && e.is_constant()) {
        ai = i;
        bj = j;
        c = e.constant_coeff(m.ring.field);
        return true;
      }
    }
  return false;
}

void drop_row(FreeModuleMap& m, int32_t row) {
  FreeModuleMap n(m.ring, m.rows - 1, m.cols);
  for (int32_t i = 0, ii = 0; i < m.rows; ++i) {
    if (i == row) continue;
    for (int32_t j = 0; j < m.cols; ++j) n.at(ii, j) = m.at(i, j);
    ++ii;
  }
  m = std::move(n);
}

void drop_col(FreeModuleMap& m, int32_t col) {
  FreeModuleMap n(m.ring, m.rows, m.cols - 1);
  for (int32_t i = 0; i < m.rows; ++i)
    for (int32_t j = 0, jj = 0; j < m.cols; ++j) {
      if (j == col) continue;
      n.at(i, jj++) = m.at(i, j);
    }
  m = std::move(n);
}

}  // namespace

FreeComplex minimize_complex(const FreeComplex& C) {
  if (C.cohomological) throw Error("minimize_complex: homological complexes only");
  FreeComplex W = C;
  const RingSpec& R = W.ring;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (size_t k = 0; k < W.maps.size(); ++k) {
      FreeModuleMap& d = W.maps[k];  // term(k+1) -> term(k)
      int32_t a = 0, b = 0;
      Scalar c = Scalar::zero(R.field);
      if (!find_constant_unit(d, a, b, c)) continue;
      Scalar cinv = c.inv();
      // clear row a (column ops on the source): col_l -= (d[a][l]/c) col_b
      std::vector<Polynomial> colfac(static_cast<size_t>(d.cols));
      for (int32_t l = 0; l < d.cols; ++l) {
        if (l == b) continue;
        Polynomial f = poly_scale(d.at(a, l), cinv);
        colfac[static_cast<size_t>(l)] = f;
        if (f.is_zero()) continue;
        for (int32_t i = 0; i < d.rows; ++i)
          d.at(i, l) = poly_sub(R, d.at(i, l), poly_mul(R, f, d.at(i, b)));
      }
      // inverse basis change on the next map: row_b += Σ_l f_l · row_l
      if (k + 1 < W.maps.size()) {
        FreeModuleMap& up = W.maps[k + 1];  // term(k+2) -> term(k+1)
        for (int32_t l = 0; l < d.cols; ++l) {
          const Polynomial& f = colfac[static_cast<size_t>(l)];
          if (l == b || f.is_zero()) continue;
          for (int32_t j = 0; j < up.cols; ++j)
            up.at(b, j) = poly_add(R, up.at(b, j), poly_mul(R, f, up.at(l, j)));
        }
      }
      // clear column b (row ops on the target): row_i -= (d[i][b]/c) row_a
      std::vector<Polynomial> rowfac(static_cast<size_t>(d.rows));
      for (int32_t i = 0; i < d.rows; ++i) {
        if (i == a) continue;
        Polynomial f = poly_scale(d.at(i, b), cinv);
        rowfac[static_cast<size_t>(i)] = f;
        if (f.is_zero()) continue;
        for (int32_t j = 0; j < d.cols; ++j)
          d.at(i, j) = poly_sub(R, d.at(i, j), poly_mul(R, f, d.at(a, j)));
      }
      // inverse basis change on the previous map: col_a += Σ_i f_i · col_i
      if (k > 0) {
        FreeModuleMap& down = W.maps[k - 1];  // term(k+1... term(k) -> term(k-1)
        for (int32_t i = 0; i < d.rows; ++i) {
          const Polynomial& f = rowfac[static_cast<size_t>(i)];
          if (i == a || f.is_zero()) continue;
          for (int32_t t = 0; t < down.rows; ++t)
            down.at(t, a) = poly_add(R, down.at(t, a), poly_mul(R, f, down.at(t, i)));
        }
      }
      // delete the cancelled pair
      drop_row(d, a);
      drop_col(d, b);
      if (k + 1 < W.maps.size()) drop_row(W.maps[k + 1], b);
      if (k > 0) drop_col(W.maps[k - 1], a);
      W.ranks[k]--;
      W.ranks[k + 1]--;
      for (auto& m : W.maps)
        for (auto& e : m.entries) e = nf_mod_quotient(R, e);
      progressed = true;
      break;
    }
  }

  // leftover non-constant units: recompute from the cokernel
  bool clean = true;
  for (const auto& m : W.maps)
    if (!entries_in_max_ideal(m)) { clean = false; break; }
  if (!clean) {
    if (W.maps.empty()) return W;
    PresentedModule M = coker(W.maps[0]);
    return resolve_module(M, static_cast<int32_t>(W.ranks.size()) - 1).complex;
  }
  if (!complex_d2_zero(W)) throw Error("minimize_complex: d² broke");
  return W;
}

PresentedModule syzygy_module_of(const PresentedModule& M) {
  Resolution res = resolve_module(M, 2);
  if (res.complex.maps.size() < 2) return zero_module(M.ring);
  PresentedModule S = coker(res.complex.maps[1]);
  S.minimal = entries_in_max_ideal(S.pres);
  return S;
}

}  // namespace linkmod
