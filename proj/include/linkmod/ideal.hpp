#ifndef LINKMOD_IDEAL_HPP
#define LINKMOD_IDEAL_HPP

#include "linkmod/standard_basis.hpp"

namespace linkmod {

/// Builds a ring, computing the quotient's standard basis and, when the
/// quotient is m-primary, the Artinian truncation data. All ideal and module
/// computations over the ring are modulo the quotient.
RingSpec make_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order,
                   std::vector<Polynomial> quotient = {});
RingSpec parse_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order,
                    const std::vector<std::string>& quotient_texts = {});

/// Ambient polynomial ring: same frame, no quotient.
RingSpec ambient_ring(const RingSpec& R);

struct Ideal {
  RingSpec ring;
  std::vector<Polynomial> gens;
  std::vector<Polynomial> sbasis;  // cached standard basis (of I + quotient); empty until computed
  bool has_sbasis = false;
};

Ideal make_ideal(const RingSpec& R, std::vector<Polynomial> gens);
Ideal parse_ideal(const RingSpec& R, const std::vector<std::string>& gen_texts);

/// Returns I with the standard basis cache populated: reduced, monic,
/// descending leading monomials, deterministic.
Ideal std_basis(Ideal I);
const std::vector<Polynomial>& ensure_std(Ideal& I);

/// Minimal monomial generators of the lead-term ideal of std(I).
std::vector<Monomial> lead_ideal(Ideal& I);

/// Weak normal form modulo I (and the ring quotient). Fully reduced whenever
/// plain division terminates (always over Artinian rings and for homogeneous
/// data); otherwise falls back to Mora reduction, so membership is exact.
Polynomial normal_form(const Polynomial& f, Ideal& I);
bool ideal_member(const Polynomial& f, Ideal& I);

/// (I : J) via the syzygy method, intersecting per-generator colons.
Ideal colon_ideal(Ideal I, const Ideal& J);
/// I ∩ J via syzygies of the two-row presentation (no elimination variables).
Ideal intersect_ideals(const Ideal& I, const Ideal& J);

/// Nakayama-minimal generators. Requires a local order or homogeneous input.
/// Selection prefers input generators in order, then standard-basis elements
/// by ascending leading monomial.
std::vector<Polynomial> minimal_generators(Ideal I);

/// true iff every generator of I lies in m^k (modulo the quotient).
bool contained_in_power(Ideal I, int32_t k);

/// Standard-basis reducer for the ring quotient alone.
Polynomial nf_mod_quotient(const RingSpec& R, const Polynomial& f);

int32_t krull_dim(const RingSpec& R);
int32_t vspace_dim(const RingSpec& R);       // requires Artinian
int32_t socle_dim(const RingSpec& R);        // requires Artinian
bool is_gorenstein_artinian(const RingSpec& R);

/// All monomials of total degree exactly k.
std::vector<Monomial> monomials_of_degree(const RingSpec& R, int32_t k);

}  // namespace linkmod

#endif
