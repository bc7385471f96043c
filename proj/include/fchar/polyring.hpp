#pragma once

// Exact multivariate polynomials over prime fields F_p.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fchar/error.hpp"

namespace fchar {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr std::uint32_t kMaxExponent = 1u << 20;

bool is_prime(std::uint64_t n);

/// Characteristic of the coefficient field; a prime below 2^31.
class PrimeChar {
 public:
  explicit PrimeChar(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t c) const noexcept;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const noexcept;

  /// p^e, or ExponentOverflow when it exceeds kMaxExponent.
  std::uint32_t power_of_p(unsigned e) const;

  friend bool operator==(const PrimeChar&, const PrimeChar&) = default;

 private:
  std::uint32_t p_;
};

/// Ambient polynomial ring F_p[vars].
struct Ring {
  Ring(PrimeChar p, std::vector<std::string> vars);

  PrimeChar characteristic;
  std::vector<std::string> variables;

  std::size_t nvars() const noexcept { return variables.size(); }
  /// Index of `name`, or nvars() when absent.
  std::size_t index_of(std::string_view name) const noexcept;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars);

/// Exponent vector with fixed capacity kMaxVars. Unused slots are zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exps);

  static Monomial variable(std::size_t i, std::uint32_t exp = 1);

  std::uint32_t operator[](std::size_t i) const noexcept { return e_[i]; }
  std::uint64_t degree() const noexcept { return deg_; }
  std::uint32_t support_mask() const noexcept { return mask_; }
  bool is_one() const noexcept { return deg_ == 0; }

  std::vector<std::uint32_t> exponents(std::size_t nvars) const;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept { return (mask_ & other.mask_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, num).
  Monomial quotient(const Monomial& divisor) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  Monomial scaled(std::uint32_t factor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  std::size_t hash() const noexcept;

 private:
  void refresh() noexcept;

  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint64_t deg_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Total, multiplicative well-order on monomials. The variable priority
/// list `priority` lists variable indices from most to least significant.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Elimination };

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder with_priority(Kind kind, std::vector<std::size_t> priority);
  /// Block order: grevlex on `first_block`, ties broken by grevlex on the
  /// remaining variables (declared order inside each block).
  static MonomialOrder elimination(std::size_t nvars, std::span<const std::size_t> first_block);

  Kind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return priority_.size(); }
  std::size_t block_size() const noexcept { return block_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::string name() const;

  /// <0, 0, >0 as a is smaller, equal, greater than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block);
  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const noexcept;

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::size_t block_ = 0;
  bool identity_ = true;
};

struct Term {
  Monomial mono;
  std::uint32_t coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Immutable polynomial. Terms are stored with nonzero coefficients and
/// distinct monomials, sorted grevlex-descending in declared variable
/// order (the canonical serialization order).
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t coef = 1);
  /// Terms may be unsorted, repeated or carry zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::uint64_t total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  /// Coefficient of the constant monomial.
  std::uint32_t constant_term() const noexcept;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_monomial(const Monomial& m, std::uint32_t c) const;
  Polynomial pow(std::uint64_t n) const;

  /// f^(p^e), computed termwise: coefficients are fixed by Fermat and
  /// exponents scale by p^e.
  Polynomial frobenius_power(unsigned e) const;

  /// Same polynomial in `target`, variable i sent to variable var_map[i].
  Polynomial embed(RingPtr target, std::span<const std::size_t> var_map) const;
  /// Substitute images[i] for variable i; all images share one ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Value at a point of F_p^n.
  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void require_same_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses `+ - * ^` expressions with integer coefficients, variables of
/// `ring`, and parentheses. Coefficients reduce mod p.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated list of polynomials; empty text yields an empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

/// Variable names appearing in `text`, sorted and deduplicated.
std::vector<std::string> scan_variables(std::string_view text);

}  // namespace fchar
