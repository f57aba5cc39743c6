#include "linkmod/complexity.hpp"

namespace linkmod {

std::string cx_class_name(CxClass c) {
  switch (c) {
    case CxClass::zero: return "0";
    case CxClass::one: return "1";
    case CxClass::two: return "2";
    case CxClass::three_plus: return ">=3";
    case CxClass::inconclusive: return "inconclusive";
  }
  return "?";
}

ComplexityEstimate complexity_estimate(const PresentedModule& M, int32_t bound) {
  if (bound < 6) throw Error("complexity_estimate: bound must be at least 6");
  Resolution res = resolve_module(M, bound);
  ComplexityEstimate out;
  out.betti = res.betti;
  const std::vector<int32_t>& b = res.betti.betti;

  // class 0: a syzygy became zero (certified finite projective dimension)
  for (int32_t j = 0; j <= bound; ++j) {
    if (b[static_cast<size_t>(j)] == 0) {
      out.cls = CxClass::zero;
      out.certified = true;
      out.evidence = "syzygy vanished at step " + std::to_string(j);
      return out;
    }
  }

  auto constant_suffix = [&](const std::vector<int32_t>& v, int32_t from) {
    // length of the maximal constant suffix of v[from..]
    int32_t n = static_cast<int32_t>(v.size());
    int32_t len = 1;
    for (int32_t i = n - 1; i > from; --i) {
      if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(i) - 1]) ++len;
      else break;
    }
    return len;
  };

  if (constant_suffix(b, 2) >= 3 && b.back() > 0) {
    out.cls = CxClass::one;
    out.evidence = "betti constant " + std::to_string(b.back()) + " on the window tail";
    return out;
  }

  std::vector<int32_t> diff;
  for (size_t i = 2; i + 1 < b.size(); ++i) diff.push_back(b[i + 1] - b[i]);
  if (diff.size() >= 3 && constant_suffix(diff, 0) >= 3 && diff.back() > 0) {
    out.cls = CxClass::two;
    out.evidence = "first differences constant " + std::to_string(diff.back()) + " on the window tail";
    return out;
  }

  std::vector<int32_t> diff2;
  for (size_t i = 0; i + 1 < diff.size(); ++i) diff2.push_back(diff[i + 1] - diff[i]);
  if (diff2.size() >= 2 && constant_suffix(diff2, 0) >= 2 && diff2.back() > 0) {
    out.cls = CxClass::three_plus;
    out.evidence = "second differences constant positive on the window tail";
    return out;
  }

  out.cls = CxClass::inconclusive;
  out.evidence = "no stable growth pattern on the window";
  return out;
}

ComplexityTransferReport complexity_transfer_check(const LinkageDatum& datum, int32_t bound) {
  ComplexityTransferReport rep;
  const RingSpec& A = datum.ambient;
  rep.cx_M = complexity_estimate(datum.M_A, bound);
  rep.cx_N = complexity_estimate(datum.N_A, bound);

  std::vector<Polynomial> qg;
  for (const auto& g : datum.q.gens)
    if (!nf_mod_quotient(A, g).is_zero()) qg.push_back(g);
  PresentedModule Aq = cyclic_module(A, make_ideal(A, qg));
  rep.cx_Aq = complexity_estimate(Aq, bound);

  // Gorenstein evidence for q: socle test when B is Artinian, otherwise the
  // type of Ext^g(A/q, A) (no perfection check; flagged in the label)
  if (datum.B.trunc_degree) {
    rep.q_type = socle_dim(datum.B);
    rep.q_gorenstein_evidence = rep.q_type == 1;
    rep.label = "window evidence; q tested by Artinian socle dimension";
  } else {
    CodimProfile p = codim_profile_of(Aq);
    PresentedModule D = ext_module(Aq, free_module(A, 1), p.g);
    Resolution r0 = resolve_module(D, 0);
    rep.q_type = r0.betti.betti[0];
    rep.q_gorenstein_evidence = rep.q_type == 1;
    rep.label = "window evidence; q type from Ext^g(A/q, A), no perfection check";
  }

  auto cls_num = [](CxClass c) {
    switch (c) {
      case CxClass::zero: return 0;
      case CxClass::one: return 1;
      case CxClass::two: return 2;
      case CxClass::three_plus: return 3;
      default: return -1;
    }
  };

  if (rep.q_gorenstein_evidence) {
    rep.regime = "Gorenstein q: expect cx M = cx N";
    rep.matches_prediction = rep.cx_M.cls == rep.cx_N.cls && rep.cx_M.cls != CxClass::inconclusive;
  } else if (cls_num(rep.cx_Aq.cls) > 0 && cls_num(rep.cx_Aq.cls) > cls_num(rep.cx_M.cls)) {
    rep.regime = "non-Gorenstein q with cx A/q > cx M: expect cx N = cx A/q";
    rep.matches_prediction = rep.cx_N.cls == rep.cx_Aq.cls && rep.cx_N.cls != CxClass::inconclusive;
  } else {
    rep.regime = "no transfer clause applies";
    rep.matches_prediction = false;
  }
  return rep;
}

}  // namespace linkmod
