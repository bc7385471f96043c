#pragma once

// Buchberger engine over F_p and the ideal operations built on it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fchar/polyring.hpp"

namespace fchar {

/// Exceeding either cap raises ResourceCapError.
struct GroebnerLimits {
  std::size_t max_pairs = 10'000;  // S-pairs reduced
  std::uint64_t max_degree = 60;   // total degree of an S-pair lcm
};

/// Ideal of an ambient polynomial ring. Zero generators are dropped, so
/// the zero ideal has an empty generator list. An ideal returned by
/// groebner_basis() carries its reduced basis and the order it was
/// computed for.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Order for which generators() is the reduced Gröbner basis, if any.
  const std::optional<MonomialOrder>& basis_order() const noexcept { return basis_order_; }
  bool is_reduced_basis_for(const MonomialOrder& order) const noexcept {
    return basis_order_ && *basis_order_ == order;
  }

  std::string to_string() const;

 private:
  friend Ideal groebner_basis(const Ideal&, const MonomialOrder&, const GroebnerLimits&);

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::optional<MonomialOrder> basis_order_;
};

/// R = ambient / modulus. `reduced` and `domain` are caller assertions that
/// reports echo; they are never verified.
struct QuotientRing {
  explicit QuotientRing(RingPtr ambient);
  QuotientRing(Ideal modulus, bool asserted_reduced = true, bool asserted_domain = false);

  RingPtr ambient;
  Ideal modulus;
  bool asserted_reduced = true;
  bool asserted_domain = false;

  bool is_polynomial_ring() const noexcept { return modulus.is_zero(); }
  /// Preimage of I in the ambient ring: I + modulus.
  Ideal lift(const Ideal& ideal) const;
};

/// Reduced Gröbner basis, sorted by leading monomial (descending). The
/// result is independent of generator order.
Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits = {});

/// Reduced basis under grevlex in declared variable order.
Ideal groebner_basis(const Ideal& ideal, const GroebnerLimits& limits = {});

/// Remainder of f modulo the reduced basis of `ideal` for `order`.
Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order,
                       const GroebnerLimits& limits = {});
Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits = {});

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits = {});

/// True when every generator of `small` lies in `big`.
bool ideal_contains(const Ideal& big, const Ideal& small, const GroebnerLimits& limits = {});

/// Equality of ideals via their reduced grevlex bases.
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// (I : f) = { g : g f ∈ I }, computed as (I ∩ (f)) / f. Requires f ≠ 0.
Ideal ideal_colon(const Ideal& ideal, const Polynomial& f, const GroebnerLimits& limits = {});

/// (I : J) = ∩_j (I : g_j); the unit ideal when J = 0.
Ideal ideal_colon(const Ideal& ideal, const Ideal& by, const GroebnerLimits& limits = {});

/// I ∩ J via the tag-variable construction tI + (1-t)J, eliminating t.
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});

/// I ∩ F_p[remaining variables], returned in the same ambient ring.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop, const GroebnerLimits& limits = {});

/// Exact division; throws PreconditionError when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Membership test in a one-variable subalgebra k[g_1..g_m] ⊆ k[u]. The
/// Gröbner basis of (y_i - g_i(u)) under an elimination order with u
/// greatest is computed once and reused by every query.
class SubalgebraOracle {
 public:
  SubalgebraOracle(std::vector<Polynomial> gens, const GroebnerLimits& limits = {});

  struct Result {
    bool member;
    /// Normal form in k[y_1..y_m] when member.
    std::optional<Polynomial> representation;
  };

  Result member(const Polynomial& f) const;

  /// True when u lies in the fraction field of k[g_1..g_m], i.e. the
  /// reduced basis has an element of u-degree exactly one. Since k[u] is
  /// integral over any subalgebra with a nonconstant generator, this is
  /// exactly "k[u] is the normalization".
  bool birational() const;

  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  /// Ring k[y_1..y_m] that representations live in.
  const RingPtr& representation_ring() const noexcept { return rep_ring_; }
  /// Substitute g_i for y_i.
  Polynomial evaluate(const Polynomial& representation) const;

 private:
  std::vector<Polynomial> gens_;
  RingPtr work_ring_;
  RingPtr rep_ring_;
  MonomialOrder order_;
  Ideal basis_;
};

SubalgebraOracle::Result subalgebra_member(const Polynomial& f, std::span<const Polynomial> gens,
                                           const GroebnerLimits& limits = {});

}  // namespace fchar
