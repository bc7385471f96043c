#pragma once

// Characteristic-p closure operations: bracket powers, Frobenius roots,
// bounded Frobenius/tight closure membership, Fedder's F-purity test.

#include <optional>
#include <string>
#include <vector>

#include "fchar/groebner.hpp"

namespace fchar {

enum class ClosureStatus { Member, NotMemberUpToBound, NoWitnessFoundUpToBound, Inconclusive };

std::string to_string(ClosureStatus s);

struct TranscriptEntry {
  unsigned e;
  std::string condition;
  bool result;
};

/// Outcome of a bounded semi-decision over exponents q = p^e.
struct ClosureVerdict {
  ClosureStatus status = ClosureStatus::Inconclusive;
  unsigned e_max = 0;
  /// Frobenius closure: the exponent at which x^q ∈ I^[q] held.
  std::optional<unsigned> exponent;
  /// Tight closure: c with c x^q ∈ I^[q] for every e in [witness_e_min, e_max].
  std::optional<Polynomial> witness;
  std::optional<unsigned> witness_e_min;
  std::vector<TranscriptEntry> transcript;
  std::vector<std::string> notes;
};

/// Caller-asserted elements of R⁰ (outside every minimal prime). The
/// assertion is recorded, not verified.
struct WitnessSet {
  std::vector<Polynomial> candidates;
  bool asserted_in_r0 = true;
};

inline constexpr unsigned kDefaultClosureEmax = 4;

/// {1} ∪ generators of I ∪ extras, without repeats.
WitnessSet default_witnesses(const Ideal& ideal, const std::vector<Polynomial>& extras = {});

/// I^[q], generated by the q-th powers of the generators of I.
Ideal bracket_power(const Ideal& ideal, unsigned e);

/// Smallest K with I ⊆ K^[q] in a polynomial ring: every generator is split
/// as f = Σ_μ f_μ^q x^μ over μ ∈ [0,q)^n and all f_μ are collected.
Ideal frobenius_root(const Ideal& ideal, unsigned e, const GroebnerLimits& limits = {});
Ideal frobenius_root(const Ideal& ideal, unsigned e, const QuotientRing& ring, const GroebnerLimits& limits = {});

/// Member(e) once x^q ∈ I^[q] + modulus for some 0 ≤ e ≤ e_max (and the
/// condition is spot-checked at e+1); NotMemberUpToBound otherwise.
ClosureVerdict frobenius_closure_member(const Polynomial& x, const Ideal& ideal, const QuotientRing& ring,
                                        unsigned e_max, const GroebnerLimits& limits = {});

/// Member with witness c when c x^q ∈ I^[q] + modulus for every e in
/// [e_min, e_max]. One-sided: Member is evidence on a finite window, and
/// NoWitnessFoundUpToBound is not a disproof.
ClosureVerdict tight_closure_member_bounded(const Polynomial& x, const Ideal& ideal, const QuotientRing& ring,
                                            const WitnessSet& witnesses, unsigned e_min, unsigned e_max,
                                            const GroebnerLimits& limits = {});

inline constexpr const char* kTightClosureCaveat =
    "bounded evidence only: Member means the witness condition held on the tested exponent window; "
    "NoWitnessFoundUpToBound does not prove non-membership";

struct FedderResult {
  bool f_pure;
  Ideal colon;  // (J^[p] : J)
  /// A generator of the colon outside m^[p], when F-pure.
  std::optional<Polynomial> escaping_element;
};

/// Fedder's criterion at the origin: F_p[x]/J is F-pure there iff
/// (J^[p] : J) ⊄ m^[p]. Requires J ⊆ m.
FedderResult fedder_is_fpure(const Ideal& j, const GroebnerLimits& limits = {});

struct IdentityCheck {
  bool holds;
  Ideal lhs;  // (I : z)^[q]
  Ideal rhs;  // (I^[q] : z^q)
};

/// Computes (I : z)^[q] and (I^[q] : z^q) independently and compares their
/// reduced bases. Polynomial ambients only.
IdentityCheck colon_bracket_identity_check(const Ideal& ideal, const Polynomial& z, unsigned e,
                                           const GroebnerLimits& limits = {});

struct ProbeRecord {
  Polynomial probe;
  ClosureVerdict frobenius;
  ClosureVerdict tight;
  /// Tight Member while Frobenius is NotMemberUpToBound.
  bool tension;
};

struct ClosureComparison {
  std::vector<ProbeRecord> probes;
  std::size_t tensions = 0;
};

/// Runs both closure tests on each probe, flagging bounded-evidence tension
/// with I^F = I^* on rings the caller asserts F-coherent.
ClosureComparison closure_comparison(const Ideal& ideal, const QuotientRing& ring, const WitnessSet& witnesses,
                                     unsigned e_max, const std::vector<Polynomial>& probes,
                                     const GroebnerLimits& limits = {});

/// Same, probing every monomial of total degree ≤ probe_degree.
ClosureComparison closure_comparison(const Ideal& ideal, const QuotientRing& ring, const WitnessSet& witnesses,
                                     unsigned e_max, unsigned probe_degree, const GroebnerLimits& limits = {});

/// Monomials of total degree ≤ degree, in canonical (grevlex) ascending order.
std::vector<Polynomial> monomials_up_to(const RingPtr& ring, unsigned degree);

}  // namespace fchar
