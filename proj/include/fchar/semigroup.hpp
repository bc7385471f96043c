#pragma once

// Affine semigroups C ⊆ ℕ^d and the combinatorics of k[C]: membership,
// lattice group, cone, faces, saturation, purely inseparable certificates
// and the F-coherence classifier. Cones and faces are supported for d ≤ 3.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fchar/polyring.hpp"
#include "fchar/verdict.hpp"

namespace fchar {

/// Generators are stored distinct, sorted lexicographically descending.
class AffineSemigroup {
 public:
  AffineSemigroup(std::size_t dim, std::vector<IntVec> generators);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVec>& generators() const noexcept { return gens_; }

  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<IntVec> gens_;
};

struct SemigroupMembership {
  bool member = false;
  /// Coefficients on generators() when member.
  std::vector<std::int64_t> multiplicities;
};

/// Exact membership by memoized search over generators supported inside
/// supp(v); one-dimensional supports use the Apéry set.
SemigroupMembership sg_member(const IntVec& v, const AffineSemigroup& c);

/// Subgroup of ℤ^d spanned by a set of vectors, kept as a row Hermite
/// normal form (positive pivots, entries above a pivot reduced).
class LatticeGroup {
 public:
  LatticeGroup(std::size_t dim, const std::vector<IntVec>& spanning);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVec>& basis() const noexcept { return basis_; }

  bool contains(const IntVec& v) const;
  /// Smallest n ≥ 1 with n·v in the group; nullopt outside the rational span.
  std::optional<std::int64_t> order_of(const IntVec& v) const;

 private:
  std::size_t dim_;
  std::vector<IntVec> basis_;
  std::vector<std::size_t> pivots_;
};

LatticeGroup sg_group(const AffineSemigroup& c);

/// Pointed rational cone of dimension ≤ 3. Rays are primitive; for a
/// three-dimensional cone they are listed in cyclic order and facet i lies
/// between rays i and i+1.
struct RationalCone {
  std::size_t dim = 0;
  std::size_t span_dim = 0;
  std::vector<IntVec> rays;
  /// Linear forms, nonnegative on the cone, cutting it out inside its span.
  std::vector<IntVec> inequalities;
  /// Linear forms vanishing on the span (ambient equations).
  std::vector<IntVec> equations;

  bool contains(const IntVec& v) const;
};

RationalCone sg_cone(const AffineSemigroup& c);

/// A face of cone(C), cut out by a linear form ℓ ≥ 0 on the cone:
/// F = cone ∩ {ℓ = 0}. The full cone uses ℓ = 0.
struct Face {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  IntVec functional;
  std::string label;

  bool contains(const IntVec& v) const;
  friend bool operator==(const Face& a, const Face& b) { return a.functional == b.functional && a.rays == b.rays; }
};

/// Origin, rays, 2D faces (when the cone is 3-dimensional) and the full cone,
/// ordered by dimension.
std::vector<Face> sg_faces(const AffineSemigroup& c);

/// Hilbert basis of group(C) ∩ cone(C). Exact for d ≤ 3: lattice points in
/// the fundamental parallelepipeds of a triangulation are enumerated and
/// then minimalized.
AffineSemigroup sg_saturation(const AffineSemigroup& c);

struct NormalityResult {
  bool normal = true;
  /// Largest (lexicographically) Hilbert basis element missing from C.
  std::optional<IntVec> witness;
};

NormalityResult sg_is_normal(const AffineSemigroup& c);

inline constexpr unsigned kDefaultSandwichCap = 6;

/// Smallest e ≤ e_cap with p^e·e_i ∈ C for every unit vector e_i.
std::optional<unsigned> sg_pi_sandwich_certificate(const AffineSemigroup& c, const PrimeChar& p,
                                                   unsigned e_cap = kDefaultSandwichCap);

struct PiElementResult {
  IntVec element;
  std::string face;
  /// n with n·h in group(C ∩ F) minimal.
  std::int64_t order = 1;
  bool pass = false;
  /// Smallest e found with p^e·h ∈ C, when the search bound allowed it.
  std::optional<unsigned> exponent;
  std::optional<FaceCongruenceObstruction> obstruction;
  std::string reason;
};

struct NormalizationPiResult {
  bool pass = true;
  std::vector<PiElementResult> elements;
};

/// Decides, for each Hilbert basis element h of the saturation, whether
/// some p^e·h lies in C: with F the smallest face containing h, this holds
/// iff the order of h modulo group(C ∩ F) is a power of p.
NormalizationPiResult sg_normalization_pi_test(const AffineSemigroup& c, const PrimeChar& p);

/// Re-checks an obstruction: p^e mod order ≠ 0 for e ≤ e_limit, and
/// p^e·h ∉ C by direct membership while p^e·h stays small.
bool verify_face_obstruction(const AffineSemigroup& c, const FaceCongruenceObstruction& ob, unsigned e_limit);

/// FCoherent(e) on a sandwich certificate (or, for one-dimensional C, on a
/// passing normalization test), NotFCoherent when the normalization test
/// fails, Unknown otherwise.
FCoherenceVerdict sg_classify_fcoherent(const AffineSemigroup& c, const PrimeChar& p,
                                        unsigned e_cap = kDefaultSandwichCap);

struct Retraction {
  Face face;
  std::vector<IntVec> kept;    // generators in F
  std::vector<IntVec> killed;  // generators of P_F
  std::size_t pairs_checked = 0;
  bool idempotent = true;
  bool identity_on_face = true;
  bool multiplicative = true;

  bool self_check_passed() const noexcept { return idempotent && identity_on_face && multiplicative; }
  /// Image of the monomial x^v; nullopt stands for 0.
  std::optional<IntVec> apply(const IntVec& v) const;
};

/// k[C] → k[C ∩ F], x^v ↦ x^v on F and 0 off F, with a sampled self-check.
Retraction sg_retract(const AffineSemigroup& c, const Face& face, std::size_t samples = 100,
                      std::uint64_t seed = 1);

std::string vec_to_string(const IntVec& v);

}  // namespace fchar
