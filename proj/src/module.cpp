#include "linkmod/module.hpp"

#include <algorithm>

namespace linkmod {

std::vector<Polynomial> FreeModuleMap::column(int32_t j) const {
  std::vector<Polynomial> c(static_cast<size_t>(rows));
  for (int32_t i = 0; i < rows; ++i) c[static_cast<size_t>(i)] = at(i, j);
  return c;
}

FreeModuleMap transpose_map(const FreeModuleMap& f) {
  FreeModuleMap t(f.ring, f.cols, f.rows);
  for (int32_t i = 0; i < f.rows; ++i)
    for (int32_t j = 0; j < f.cols; ++j) t.at(j, i) = f.at(i, j);
  return t;
}

FreeModuleMap compose(const FreeModuleMap& f, const FreeModuleMap& g) {
  if (f.cols != g.rows) throw Error("compose: rank mismatch");
  FreeModuleMap h(f.ring, f.rows, g.cols);
  for (int32_t i = 0; i < f.rows; ++i)
    for (int32_t j = 0; j < g.cols; ++j) {
      Polynomial acc;
      for (int32_t k = 0; k < f.cols; ++k)
        acc = poly_add(f.ring, acc, poly_mul(f.ring, f.at(i, k), g.at(k, j)));
      h.at(i, j) = std::move(acc);
    }
  return h;
}

bool map_is_zero_mod_quotient(const FreeModuleMap& f) {
  for (const auto& e : f.entries)
    if (!nf_mod_quotient(f.ring, e).is_zero()) return false;
  return true;
}

FreeModuleMap reduce_entries(const FreeModuleMap& f) {
  FreeModuleMap g = f;
  for (auto& e : g.entries) e = nf_mod_quotient(g.ring, e);
  return g;
}

bool entries_in_max_ideal(const FreeModuleMap& f) {
  for (const auto& e : f.entries)
    if (!nf_mod_quotient(f.ring, e).constant_coeff(f.ring.field).is_zero()) return false;
  return true;
}

MVec column_to_mvec(const FreeModuleMap& f, int32_t j) {
  ModOrder ord{&f.ring, f.rows};
  return mvec_from_column(f.ring, f.column(j), ord);
}

std::vector<MVec> columns_to_mvecs(const FreeModuleMap& f) {
  std::vector<MVec> out;
  out.reserve(static_cast<size_t>(f.cols));
  for (int32_t j = 0; j < f.cols; ++j) out.push_back(column_to_mvec(f, j));
  return out;
}

FreeModuleMap map_from_columns(const RingSpec& R, int32_t rows,
                               const std::vector<std::vector<Polynomial>>& cols) {
  FreeModuleMap f(R, rows, static_cast<int32_t>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int32_t>(cols[j].size()) != rows) throw Error("map_from_columns: bad column");
    for (int32_t i = 0; i < rows; ++i) f.at(i, static_cast<int32_t>(j)) = cols[j][static_cast<size_t>(i)];
  }
  return f;
}

PresentedModule free_module(const RingSpec& R, int32_t rank) {
  PresentedModule M;
  M.ring = R;
  M.pres = FreeModuleMap(R, rank, 0);
  M.minimal = true;
  return M;
}

PresentedModule zero_module(const RingSpec& R) { return free_module(R, 0); }

PresentedModule cyclic_module(const RingSpec& R, const Ideal& I) {
  FreeModuleMap f(R, 1, static_cast<int32_t>(I.gens.size()));
  for (size_t j = 0; j < I.gens.size(); ++j) f.at(0, static_cast<int32_t>(j)) = I.gens[j];
  return coker(f);
}

PresentedModule coker(const FreeModuleMap& f) {
  PresentedModule M;
  M.ring = f.ring;
  M.pres = f;
  M.minimal = false;
  return M;
}

PresentedModule residue_field_module(const RingSpec& R) {
  FreeModuleMap f(R, 1, static_cast<int32_t>(R.nvars()));
  for (size_t v = 0; v < R.nvars(); ++v) f.at(0, static_cast<int32_t>(v)) = poly_var(R, static_cast<int>(v));
  return coker(f);
}

bool module_is_zero(const PresentedModule& M) {
  if (M.pres.rows == 0) return true;
  StandardBasis sb(M.ring, M.pres.rows, M.pres.rows);
  sb.add_extras(columns_to_mvecs(M.pres));
  sb.adjoin_quotient(M.pres.rows);
  sb.complete();
  for (int32_t j = 0; j < M.pres.rows; ++j) {
    MVec e;
    e.terms.push_back({Scalar::one(M.ring.field), Monomial(M.ring.nvars()), j});
    if (!sb.member(e)) return false;
  }
  return true;
}

std::vector<size_t> module_mingens(const RingSpec& R, int32_t ncomp,
                                   const std::vector<MVec>& cols) {
  StandardBasis sb(R, ncomp, ncomp);
  // m * span(cols)
  std::vector<MVec> mcols;
  ModOrder ord{&R, ncomp};
  for (const auto& c : cols) {
    for (size_t v = 0; v < R.nvars(); ++v) {
      Monomial xm(R.nvars());
      xm.exp[static_cast<size_t>(v)] = 1;
      mcols.push_back(mvec_axpy(ord, MVec{}, Scalar::one(R.field), xm, c));
    }
  }
  sb.add_extras(mcols);
  sb.adjoin_quotient(ncomp);
  sb.complete();
  std::vector<size_t> kept;
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].is_zero() || sb.member(cols[j])) continue;
    kept.push_back(j);
    sb.add_extras({cols[j]});
    sb.complete();
  }
  return kept;
}

MinimalPresentation minimal_presentation(const PresentedModule& M) {
  const RingSpec& R = M.ring;
  int32_t r = M.pres.rows;
  MinimalPresentation out;
  if (r == 0) {
    out.module = zero_module(R);
    return out;
  }

  // Nakayama-select generators among e_1..e_r
  StandardBasis sel(R, r, r);
  std::vector<MVec> base = columns_to_mvecs(M.pres);
  {
    for (int32_t t = 0; t < r; ++t)
      for (size_t v = 0; v < R.nvars(); ++v) {
        MVec m;
        Monomial xm(R.nvars());
        xm.exp[v] = 1;
        m.terms.push_back({Scalar::one(R.field), xm, t});
        base.push_back(m);
      }
  }
  sel.add_extras(base);
  sel.adjoin_quotient(r);
  sel.complete();
  std::vector<int32_t> S;
  for (int32_t j = 0; j < r; ++j) {
    MVec e;
    e.terms.push_back({Scalar::one(R.field), Monomial(R.nvars()), j});
    if (sel.member(e)) continue;
    S.push_back(j);
    sel.add_extras({e});
    sel.complete();
  }

  if (S.empty()) {
    out.module = zero_module(R);
    return out;
  }

  // kernel of A^S -> M
  std::vector<MVec> main;
  for (int32_t s : S) {
    MVec e;
    e.terms.push_back({Scalar::one(R.field), Monomial(R.nvars()), s});
    main.push_back(e);
  }
  auto rel = syzygy_columns(R, r, main, columns_to_mvecs(M.pres));

  // minimal relation set
  ModOrder sord{&R, static_cast<int32_t>(S.size())};
  std::vector<MVec> relvecs;
  for (const auto& col : rel)
    relvecs.push_back(mvec_from_column(R, col, sord));
  std::vector<size_t> keep = module_mingens(R, static_cast<int32_t>(S.size()), relvecs);

  FreeModuleMap pres(R, static_cast<int32_t>(S.size()), static_cast<int32_t>(keep.size()));
  for (size_t jj = 0; jj < keep.size(); ++jj)
    for (size_t i = 0; i < S.size(); ++i)
      pres.at(static_cast<int32_t>(i), static_cast<int32_t>(jj)) =
          nf_mod_quotient(R, rel[keep[jj]][i]);
  out.module.ring = R;
  out.module.pres = std::move(pres);
  out.module.minimal = true;
  out.gen_map = S;
  return out;
}

PresentedModule present_subquotient(const RingSpec& R, int32_t ncomp,
                                    const std::vector<MVec>& U, const std::vector<MVec>& V,
                                    std::vector<MVec>* carriers) {
  if (U.empty()) {
    if (carriers) carriers->clear();
    return zero_module(R);
  }
  auto rel = syzygy_columns(R, ncomp, U, V);
  FreeModuleMap pres0(R, static_cast<int32_t>(U.size()), static_cast<int32_t>(rel.size()));
  for (size_t j = 0; j < rel.size(); ++j)
    for (size_t i = 0; i < U.size(); ++i)
      pres0.at(static_cast<int32_t>(i), static_cast<int32_t>(j)) = rel[j][i];
  MinimalPresentation mp = minimal_presentation(coker(pres0));
  if (carriers) {
    carriers->clear();
    for (int32_t s : mp.gen_map) carriers->push_back(U[static_cast<size_t>(s)]);
  }
  return mp.module;
}

FreeModuleMap syzygy_map(const FreeModuleMap& f) {
  auto syz = syzygy_columns(f.ring, f.rows, columns_to_mvecs(f), {});
  return map_from_columns(f.ring, f.cols, syz);
}

std::optional<int64_t> module_length(const PresentedModule& M) {
  const RingSpec& R = M.ring;
  int32_t r = M.pres.rows;
  if (r == 0) return 0;
  StandardBasis sb(R, r, r);
  sb.add_extras(columns_to_mvecs(M.pres));
  sb.adjoin_quotient(r);
  sb.complete();

  // per-component lead monomials
  std::vector<std::vector<Monomial>> leads(static_cast<size_t>(r));
  for (const auto& e : sb.elems())
    leads[static_cast<size_t>(e.v.leading().comp)].push_back(e.v.leading().mono);

  int64_t total = 0;
  for (int32_t c = 0; c < r; ++c) {
    // BFS standard monomials for this component; monomials at or beyond the
    // truncation degree vanish modulo the quotient
    const auto& L = leads[static_cast<size_t>(c)];
    if (!R.trunc_degree) {
      bool primary = true;
      for (size_t v = 0; v < R.nvars() && primary; ++v) {
        bool pure = false;
        for (const auto& l : L) {
          bool only_v = l.exp[v] > 0;
          for (size_t w = 0; w < R.nvars() && only_v; ++w)
            if (w != v && l.exp[w] > 0) only_v = false;
          if (only_v) { pure = true; break; }
        }
        primary = pure;
      }
      if (R.nvars() > 0 && !primary) return std::nullopt;  // infinite in this component
    }
    std::set<std::vector<int32_t>> seen;
    std::vector<Monomial> frontier{Monomial(R.nvars())};
    seen.insert(frontier[0].exp);
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& m : frontier) {
        if (R.trunc_degree && m.degree() >= *R.trunc_degree) continue;
        bool standard = true;
        for (const auto& l : L)
          if (mono_divides(l, m)) { standard = false; break; }
        if (!standard) continue;
        ++total;
        if (total > 2000000) throw Error("module_length: runaway enumeration");
        for (size_t v = 0; v < R.nvars(); ++v) {
          Monomial m2 = m;
          m2.exp[v]++;
          if (seen.insert(m2.exp).second) next.push_back(m2);
        }
      }
      frontier = std::move(next);
    }
  }
  return total;
}

PresentedModule restrict_scalars(const PresentedModule& M, const RingSpec& A) {
  require_same_frame(M.ring, A, "restrict_scalars");
  // relations of M over its own ring, plus M.ring's quotient generators acting
  // on every generator, all read over A
  const std::vector<Polynomial>& qs =
      M.ring.quotient_std.empty() ? M.ring.quotient : M.ring.quotient_std;
  FreeModuleMap pres(A, M.pres.rows,
                     M.pres.cols + static_cast<int32_t>(qs.size()) * M.pres.rows);
  for (int32_t i = 0; i < M.pres.rows; ++i)
    for (int32_t j = 0; j < M.pres.cols; ++j) pres.at(i, j) = M.pres.at(i, j);
  int32_t col = M.pres.cols;
  for (int32_t t = 0; t < M.pres.rows; ++t)
    for (const auto& q : qs) pres.at(t, col++) = q;
  return minimal_presentation(coker(pres)).module;
}

PresentedModule change_ring(const PresentedModule& M, const RingSpec& B) {
  require_same_frame(M.ring, B, "change_ring");
  PresentedModule N;
  N.ring = B;
  N.pres = FreeModuleMap(B, M.pres.rows, M.pres.cols);
  for (size_t k = 0; k < M.pres.entries.size(); ++k)
    N.pres.entries[k] = nf_mod_quotient(B, M.pres.entries[k]);
  N.minimal = false;
  return N;
}

}  // namespace linkmod
