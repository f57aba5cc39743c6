#ifndef LINKMOD_STANDARD_BASIS_HPP
#define LINKMOD_STANDARD_BASIS_HPP

#include <optional>
#include <set>

#include "linkmod/mvec.hpp"

namespace linkmod {

struct SBOptions {
  bool track = false;               // carry cofactor expressions in the tracked generators
  long long max_steps = 200000000;  // reduction-step budget; exceeded => Error, never a hang
};

struct SBElem {
  MVec v;  // monic
  // When tracking: v = unit_cof * Σ cof[i]·gen_i modulo quotient/extra columns.
  std::vector<Polynomial> cof;
};

/// Standard basis of a submodule of A^ncomp under a block module order
/// (Buchberger for global orders, Mora with ecart selection for local ones).
/// Quotient-ideal generators are adjoined per component, so membership and
/// normal forms are modulo the ring's quotient.
class StandardBasis {
public:
  StandardBasis(const RingSpec& R, int32_t ncomp, int32_t split, SBOptions opt = {});

  /// Tracked generators (cofactors refer to these, in insertion order).
  void add_generators(const std::vector<MVec>& gens);
  /// Untracked side generators (relations we reduce by but do not solve for).
  void add_extras(const std::vector<MVec>& extras);
  /// Adjoin quotient generators q*e_j for components j < n.
  void adjoin_quotient(int32_t ncomps);

  /// Process all S-pairs, then canonicalize (monic, lead-interreduced,
  /// tails reduced as far as plain division terminates).
  void complete();
  bool completed() const { return completed_; }

  /// Seed with an already-computed standard basis (no pair processing).
  void seed_completed(const std::vector<MVec>& elems);

  const std::vector<SBElem>& elems() const { return basis_; }
  const ModOrder& order() const { return ord_; }
  const RingSpec& ring() const { return *ring_; }
  size_t tracked_count() const { return ngens_; }

  struct NF {
    MVec rem;
    // unit * f = Σ cof[i]·gen_i + (untracked combination) + rem, modulo quotient.
    Polynomial unit;
    std::vector<Polynomial> cof;
  };
  /// Weak normal form: Mora lead reduction until the lead is irreducible.
  /// Zero remainder is exact membership.
  NF reduce(const MVec& f, bool track_rel) const;
  bool member(const MVec& f) const;

  /// Best-effort fully reduced representative: plain division with fuel,
  /// canonical and linear whenever it terminates (always in truncated rings
  /// and for homogeneous data).
  MVec nf_plain(const MVec& f, long long fuel = 200000) const;

  /// Certification pass: re-reduce every S-pair; true iff all reach zero.
  bool certify_spairs() const;

private:
  struct Pair {
    int32_t deg;
    Monomial lcm;
    int32_t comp;
    int32_t i, j;
  };
  struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const;
  };

  static constexpr int32_t kBoundary = -1;  // pair against the truncation bound

  void insert_elem(MVec v, std::vector<Polynomial> cof, bool qcol = false);
  void make_pairs(int32_t idx);
  MVec spair(int32_t i, int32_t j) const;
  std::vector<Polynomial> spair_cof(int32_t i, int32_t j) const;
  void interreduce();

  const RingSpec* ring_;
  ModOrder ord_;
  int32_t ncomp_;
  SBOptions opt_;
  std::vector<SBElem> basis_;
  std::vector<int32_t> ecart_;  // cached per basis element
  std::vector<bool> qcol_;      // element is an adjoined quotient column
  std::set<Pair, PairLess> queue_;
  size_t ngens_ = 0;
  bool completed_ = false;
  mutable long long steps_ = 0;
};

/// Generators of { a in A^k : Σ a_i·main_i ≡ 0 mod (extras + quotient·A^ncomp) },
/// k = main.size(), computed with shadow components (no elimination variables,
/// valid for local orders). Each result column has main.size() entries.
std::vector<std::vector<Polynomial>> syzygy_columns(const RingSpec& R, int32_t ncomp,
                                                    const std::vector<MVec>& main,
                                                    const std::vector<MVec>& extras,
                                                    SBOptions opt = {});

/// Exact division: find c with Σ c_i·gens_i ≡ target mod quotient, if target is
/// a member. Units produced by Mora reduction are resolved by scalar division
/// or, in Artinian rings, by inverting the unit in the finite-dimensional
/// algebra. Returns nullopt if target is not a member.
/// Throws if a non-constant unit cannot be resolved (non-Artinian ring).
std::optional<std::vector<Polynomial>> solve_membership(const RingSpec& R, int32_t ncomp,
                                                        const MVec& target,
                                                        const std::vector<MVec>& gens);

/// Inverse of a unit u modulo the quotient of an Artinian ring.
Polynomial invert_unit(const RingSpec& R, const Polynomial& u);

/// Monomials outside the lead ideal of the quotient standard basis
/// (requires Artinian ring; they form a k-basis of A).
std::vector<Monomial> ring_standard_monomials(const RingSpec& R);

}  // namespace linkmod

#endif
