#pragma once

// F-coherence verdicts shared by the semigroup and curve classifiers.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fchar {

using IntVec = std::vector<std::int64_t>;

enum class FCoherenceStatus { FCoherent, NotFCoherent, Unknown };

std::string to_string(FCoherenceStatus s);

/// h lies in the normalization, but the smallest n with n·h in the group
/// of the face semigroup C ∩ F has a prime factor other than p, so no
/// p^e·h lies in C.
struct FaceCongruenceObstruction {
  IntVec element;
  std::vector<IntVec> face_rays;
  std::vector<IntVec> face_generators;
  std::vector<IntVec> face_lattice;  // HNF basis of group(C ∩ F)
  std::int64_t order = 0;
  std::uint32_t p = 0;
  std::int64_t blocking_prime = 0;
};

/// Two distinct points a, b of F_p with g_i(a) = g_i(b) for every
/// generator: the curve is singular with two branches over a rational point,
/// so k[u] is not purely inseparable over the subalgebra.
struct BranchPointObstruction {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};

using Obstruction = std::variant<FaceCongruenceObstruction, BranchPointObstruction>;

struct FCoherenceVerdict {
  FCoherenceStatus status = FCoherenceStatus::Unknown;
  /// Exponent e of the purely inseparable certificate when FCoherent.
  std::optional<unsigned> certificate_e;
  std::string certificate_kind;
  /// Normalization element with no p-power multiple in C, when NotFCoherent.
  std::optional<IntVec> witness;
  std::optional<Obstruction> obstruction;
  std::vector<std::string> evidence;
};

}  // namespace fchar
