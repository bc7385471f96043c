#include "fchar/charp.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fchar {

std::string to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::Member: return "Member";
    case ClosureStatus::NotMemberUpToBound: return "NotMemberUpToBound";
    case ClosureStatus::NoWitnessFoundUpToBound: return "NoWitnessFoundUpToBound";
    case ClosureStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

void require_same_ring(const Polynomial& x, const Ideal& ideal, const QuotientRing& ring) {
  if (!(x.ring() == ideal.ring()) || !(ideal.ring() == *ring.ambient))
    throw PreconditionError("element, ideal and quotient ring must share one ambient ring");
}

// Reduced bases of I^[q] + modulus, computed once per exponent.
class BracketTower {
 public:
  BracketTower(const Ideal& ideal, const QuotientRing& ring, const GroebnerLimits& limits)
      : ideal_(ideal), ring_(ring), limits_(limits) {}

  bool contains(const Polynomial& f, unsigned e) {
    auto it = cache_.find(e);
    if (it == cache_.end())
      it = cache_.emplace(e, groebner_basis(ring_.lift(bracket_power(ideal_, e)), limits_)).first;
    return ideal_member(f, it->second, limits_);
  }

 private:
  const Ideal& ideal_;
  const QuotientRing& ring_;
  const GroebnerLimits& limits_;
  std::map<unsigned, Ideal> cache_;
};

std::string q_label(const PrimeChar& p, unsigned e) {
  return "q=" + std::to_string(p.power_of_p(e));
}

std::string ring_note(const QuotientRing& ring) {
  return std::string("ring modulus ") + ring.modulus.to_string() + "; caller asserts reduced=" +
         (ring.asserted_reduced ? "yes" : "no") + ", domain=" + (ring.asserted_domain ? "yes" : "no");
}

bool in_frobenius_maximal(const Polynomial& f, std::uint32_t p) {
  for (const Term& t : f.terms()) {
    bool hit = false;
    for (std::size_t i = 0; i < f.ring().nvars() && !hit; ++i) hit = t.mono[i] >= p;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

WitnessSet default_witnesses(const Ideal& ideal, const std::vector<Polynomial>& extras) {
  WitnessSet w;
  auto add = [&](const Polynomial& c) {
    if (c.is_zero()) return;
    for (const auto& existing : w.candidates)
      if (existing == c) return;
    w.candidates.push_back(c);
  };
  add(Polynomial::constant(ideal.ring_ptr(), 1));
  for (const auto& g : ideal.generators()) add(g);
  for (const auto& c : extras) add(c);
  return w;
}

Ideal bracket_power(const Ideal& ideal, unsigned e) {
  if (e == 0) return ideal;
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius_power(e));
  return {ideal.ring_ptr(), std::move(gens)};
}

Ideal frobenius_root(const Ideal& ideal, unsigned e, const GroebnerLimits& limits) {
  if (e == 0) return groebner_basis(ideal, limits);
  const RingPtr& ring = ideal.ring_ptr();
  const std::uint32_t q = ring->characteristic.power_of_p(e);
  const std::size_t n = ring->nvars();
  std::vector<Polynomial> pieces;
  for (const auto& f : ideal.generators()) {
    // Group terms by the residue μ of the exponent vector modulo q.
    std::map<std::vector<std::uint32_t>, std::vector<Term>> parts;
    for (const Term& t : f.terms()) {
      std::vector<std::uint32_t> mu(n), root(n);
      for (std::size_t i = 0; i < n; ++i) {
        mu[i] = t.mono[i] % q;
        root[i] = t.mono[i] / q;
      }
      // c^(1/q) = c in F_p.
      parts[mu].push_back({Monomial(root), t.coef});
    }
    for (auto& [mu, terms] : parts) pieces.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return groebner_basis(Ideal(ring, std::move(pieces)), limits);
}

Ideal frobenius_root(const Ideal& ideal, unsigned e, const QuotientRing& ring, const GroebnerLimits& limits) {
  if (!ring.is_polynomial_ring())
    throw PreconditionError("Frobenius roots are only supported in polynomial ambients (modulus must be zero)");
  return frobenius_root(ideal, e, limits);
}

ClosureVerdict frobenius_closure_member(const Polynomial& x, const Ideal& ideal, const QuotientRing& ring,
                                        unsigned e_max, const GroebnerLimits& limits) {
  require_same_ring(x, ideal, ring);
  if (e_max < 1) throw PreconditionError("e_max must be at least 1");
  const PrimeChar& p = ring.ambient->characteristic;
  ClosureVerdict v;
  v.e_max = e_max;
  v.notes.push_back(ring_note(ring));
  BracketTower tower(ideal, ring, limits);

  auto test = [&](unsigned e) { return tower.contains(x.frobenius_power(e), e); };
  for (unsigned e = 0; e <= e_max; ++e) {
    bool ok = test(e);
    v.transcript.push_back({e, "x^q in I^[q] + J, " + q_label(p, e), ok});
    if (!ok) continue;
    // In a reduced ring the condition persists for larger e.
    try {
      bool next = test(e + 1);
      v.transcript.push_back({e + 1, "spot check: x^q in I^[q] + J, " + q_label(p, e + 1), next});
      if (!next) {
        v.status = ClosureStatus::Inconclusive;
        v.notes.push_back("condition held at e=" + std::to_string(e) + " but failed at e=" +
                          std::to_string(e + 1) + "; is the ring really reduced?");
        return v;
      }
    } catch (const ExponentOverflow&) {
      v.notes.push_back("spot check at e+1 skipped: exponent cap");
    }
    v.status = ClosureStatus::Member;
    v.exponent = e;
    return v;
  }
  v.status = ClosureStatus::NotMemberUpToBound;
  return v;
}

ClosureVerdict tight_closure_member_bounded(const Polynomial& x, const Ideal& ideal, const QuotientRing& ring,
                                            const WitnessSet& witnesses, unsigned e_min, unsigned e_max,
                                            const GroebnerLimits& limits) {
  require_same_ring(x, ideal, ring);
  if (e_min > e_max) throw PreconditionError("e_min must not exceed e_max");
  if (witnesses.candidates.empty()) throw PreconditionError("witness set is empty");
  for (const auto& c : witnesses.candidates) {
    if (c.is_zero()) throw PreconditionError("witness set contains the zero polynomial");
    if (!(c.ring() == *ring.ambient)) throw PreconditionError("witness lives in a different ring");
  }
  const PrimeChar& p = ring.ambient->characteristic;
  ClosureVerdict v;
  v.e_max = e_max;
  v.notes.push_back(ring_note(ring));
  v.notes.push_back(std::string("witnesses ") + (witnesses.asserted_in_r0 ? "asserted" : "NOT asserted") +
                    " by the caller to avoid every minimal prime");
  v.notes.push_back(kTightClosureCaveat);
  BracketTower tower(ideal, ring, limits);

  for (const auto& c : witnesses.candidates) {
    bool all = true;
    for (unsigned e = e_min; e <= e_max; ++e) {
      bool ok = tower.contains(c * x.frobenius_power(e), e);
      v.transcript.push_back({e, "c*x^q in I^[q] + J, c=" + c.to_string() + ", " + q_label(p, e), ok});
      if (!ok) {
        all = false;
        break;
      }
    }
    if (all) {
      v.status = ClosureStatus::Member;
      v.witness = c;
      v.witness_e_min = e_min;
      return v;
    }
  }
  v.status = ClosureStatus::NoWitnessFoundUpToBound;
  return v;
}

FedderResult fedder_is_fpure(const Ideal& j, const GroebnerLimits& limits) {
  for (const auto& g : j.generators())
    if (g.constant_term() != 0)
      throw PreconditionError("Fedder's criterion needs J inside the maximal ideal at the origin; " +
                              g.to_string() + " has a nonzero constant term");
  const std::uint32_t p = j.ring().characteristic.value();
  Ideal colon = ideal_colon(bracket_power(j, 1), j, limits);
  for (const auto& g : colon.generators())
    if (!in_frobenius_maximal(g, p)) return {true, colon, g};
  return {false, colon, std::nullopt};
}

IdentityCheck colon_bracket_identity_check(const Ideal& ideal, const Polynomial& z, unsigned e,
                                           const GroebnerLimits& limits) {
  if (z.is_zero()) throw PreconditionError("z must be nonzero");
  if (!(z.ring() == ideal.ring())) throw PreconditionError("z and I live in different rings");
  Ideal lhs = groebner_basis(bracket_power(ideal_colon(ideal, z, limits), e), limits);
  Ideal rhs = groebner_basis(ideal_colon(bracket_power(ideal, e), z.frobenius_power(e), limits), limits);
  bool holds = lhs.generators() == rhs.generators();
  return {holds, std::move(lhs), std::move(rhs)};
}

ClosureComparison closure_comparison(const Ideal& ideal, const QuotientRing& ring, const WitnessSet& witnesses,
                                     unsigned e_max, const std::vector<Polynomial>& probes,
                                     const GroebnerLimits& limits) {
  ClosureComparison out;
  for (const auto& x : probes) {
    ClosureVerdict f = frobenius_closure_member(x, ideal, ring, e_max, limits);
    ClosureVerdict t = tight_closure_member_bounded(x, ideal, ring, witnesses, 1, e_max, limits);
    bool tension = t.status == ClosureStatus::Member && f.status == ClosureStatus::NotMemberUpToBound;
    if (tension) ++out.tensions;
    out.probes.push_back({x, std::move(f), std::move(t), tension});
  }
  return out;
}

ClosureComparison closure_comparison(const Ideal& ideal, const QuotientRing& ring, const WitnessSet& witnesses,
                                     unsigned e_max, unsigned probe_degree, const GroebnerLimits& limits) {
  return closure_comparison(ideal, ring, witnesses, e_max, monomials_up_to(ring.ambient, probe_degree), limits);
}

std::vector<Polynomial> monomials_up_to(const RingPtr& ring, unsigned degree) {
  const std::size_t n = ring->nvars();
  std::vector<Polynomial> out;
  std::vector<std::uint32_t> e(n, 0);
  for (unsigned d = 0; d <= degree; ++d) {
    std::vector<Polynomial> layer;
    // Compositions of d into n parts.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == n) {
        e[i] = left;
        layer.push_back(Polynomial::monomial(ring, Monomial(e)));
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
    };
    if (n == 0) {
      if (d == 0) out.push_back(Polynomial::constant(ring, 1));
      continue;
    }
    rec(rec, 0, d);
    const MonomialOrder grevlex = MonomialOrder::grevlex(n);
    std::sort(layer.begin(), layer.end(), [&](const Polynomial& a, const Polynomial& b) {
      return grevlex.compare(a.terms()[0].mono, b.terms()[0].mono) < 0;
    });
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace fchar
