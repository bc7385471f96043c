#pragma once

// One-dimensional classification: numerical semigroup rings k[S] and curve
// algebras k[g_1(u),...,g_m(u)] inside k[u].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fchar/charp.hpp"
#include "fchar/verdict.hpp"

namespace fchar {

/// Cofinite submonoid of ℕ given by generators with gcd 1. Membership uses
/// the Apéry set with respect to the smallest generator m, so queries are
/// O(1) after an O(m · #gens · log m) setup.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const noexcept { return gens_; }
  std::int64_t multiplicity() const noexcept { return gens_.front(); }

  bool contains(std::int64_t n) const;
  /// Largest gap, or -1 when S = ℕ.
  std::int64_t frobenius_number() const noexcept { return frobenius_; }
  std::vector<std::int64_t> gaps() const;
  /// Smallest element of S congruent to r modulo the multiplicity.
  const std::vector<std::int64_t>& apery_set() const noexcept { return apery_; }

  /// Multiplicities of generators() summing to n, when n ∈ S.
  std::optional<std::vector<std::int64_t>> representation(std::int64_t n) const;

 private:
  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> apery_;
  std::vector<std::size_t> via_;  // generator used on the last Dijkstra step
  std::int64_t frobenius_ = -1;
};

/// Raised when k[u] cannot be confirmed as the normalization of the curve algebra.
class NormalizationUnvalidated : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline constexpr unsigned kDefaultCurveEmax = 5;

/// FCoherent(e) with e minimal such that p^e ∈ S. Never NotFCoherent: the
/// normalization k[t] is always purely inseparable over k[S].
FCoherenceVerdict ns_classify_fcoherent(const NumericalSemigroup& s, const PrimeChar& p);

struct CurvePresentation {
  /// Nonconstant polynomials in a one-variable ring.
  std::vector<Polynomial> generators;
  /// Caller claims k[u] is the normalization; still validated before use.
  bool normalization_asserted = true;

  const Ring& ring() const { return generators.front().ring(); }
  const PrimeChar& characteristic() const { return ring().characteristic; }
};

/// Parses generators in the variable "u".
CurvePresentation make_curve(std::uint32_t p, const std::vector<std::string>& gens_in_u);

struct CurvePiResult {
  bool purely_inseparable = false;
  unsigned e_max = 0;
  std::optional<unsigned> exponent;
  /// u^q as a polynomial in y_1..y_m standing for the generators.
  std::optional<Polynomial> representation;
  bool representation_verified = false;
  std::optional<bool> next_exponent_holds;
  std::vector<TranscriptEntry> transcript;
};

/// PurelyInseparable(e) when u^(p^e) lies in k[g] for some e ≤ e_max.
/// Throws NormalizationUnvalidated unless u lies in the fraction field of k[g].
CurvePiResult curve_pi_normalization_test(const CurvePresentation& curve, unsigned e_max = kDefaultCurveEmax,
                                          const GroebnerLimits& limits = {});

/// FCoherent(e) on a certificate; NotFCoherent only with a verified
/// caller-supplied obstruction; Unknown otherwise.
FCoherenceVerdict curve_classify_fcoherent(const CurvePresentation& curve, unsigned e_max = kDefaultCurveEmax,
                                           const std::optional<BranchPointObstruction>& obstruction = std::nullopt,
                                           const GroebnerLimits& limits = {});

bool verify_branch_obstruction(const CurvePresentation& curve, const BranchPointObstruction& ob);

/// Exhaustive search over pairs of F_p points; only for p below 2^16.
std::optional<BranchPointObstruction> find_branch_obstruction(const CurvePresentation& curve);

}  // namespace fchar
