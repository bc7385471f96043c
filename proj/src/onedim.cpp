#include "fchar/onedim.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <map>
#include <stdexcept>

namespace fchar {

namespace {

constexpr std::int64_t kMaxMultiplicity = std::int64_t{1} << 22;

// p^e, or nullopt past 2^62.
std::optional<std::int64_t> checked_power(std::uint32_t p, unsigned e) {
  std::int64_t v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (v > (std::int64_t{1} << 62) / p) return std::nullopt;
    v *= p;
  }
  return v;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
  if (generators.empty()) throw PreconditionError("numerical semigroup needs at least one generator");
  std::int64_t g = 0;
  for (auto a : generators) {
    if (a <= 0) throw PreconditionError("numerical semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw PreconditionError("numerical semigroup generators must have gcd 1 (got " + std::to_string(g) + ")");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  gens_ = std::move(generators);

  const std::int64_t m = gens_.front();
  if (m > kMaxMultiplicity) throw ResourceCapError("numerical semigroup multiplicity too large");
  const auto um = static_cast<std::size_t>(m);
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  apery_.assign(um, inf);
  via_.assign(um, 0);
  apery_[0] = 0;
  using Item = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != apery_[r]) continue;
    for (std::size_t k = 1; k < gens_.size(); ++k) {
      std::int64_t nd = d + gens_[k];
      auto nr = static_cast<std::size_t>(nd % m);
      if (nd < apery_[nr]) {
        apery_[nr] = nd;
        via_[nr] = k;
        queue.push({nd, nr});
      }
    }
  }
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m;
}

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  return n >= apery_[static_cast<std::size_t>(n % gens_.front())];
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= frobenius_; ++n)
    if (!contains(n)) out.push_back(n);
  return out;
}

std::optional<std::vector<std::int64_t>> NumericalSemigroup::representation(std::int64_t n) const {
  if (!contains(n)) return std::nullopt;
  const std::int64_t m = gens_.front();
  std::vector<std::int64_t> mult(gens_.size(), 0);
  auto r = static_cast<std::size_t>(n % m);
  mult[0] = (n - apery_[r]) / m;
  std::int64_t w = apery_[r];
  while (w != 0) {
    std::size_t k = via_[r];
    ++mult[k];
    w -= gens_[k];
    r = static_cast<std::size_t>(w % m);
  }
  return mult;
}

FCoherenceVerdict ns_classify_fcoherent(const NumericalSemigroup& s, const PrimeChar& p) {
  FCoherenceVerdict v;
  for (unsigned e = 0;; ++e) {
    auto q = checked_power(p.value(), e);
    if (!q) throw ResourceCapError("p^e overflowed while searching for a power in S");
    if (!s.contains(*q)) continue;
    auto rep = s.representation(*q);
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < rep->size(); ++k) sum += (*rep)[k] * s.generators()[k];
    if (sum != *q) throw std::logic_error("numerical semigroup representation does not re-verify");
    v.status = FCoherenceStatus::FCoherent;
    v.certificate_e = e;
    v.certificate_kind = "numerical-semigroup";
    std::string combo;
    for (std::size_t k = 0; k < rep->size(); ++k) {
      if ((*rep)[k] == 0) continue;
      if (!combo.empty()) combo += " + ";
      combo += std::to_string((*rep)[k]) + "*" + std::to_string(s.generators()[k]);
    }
    v.evidence.push_back("p^e = " + std::to_string(*q) + " lies in S" + (combo.empty() ? "" : " (" + combo + ")"));
    v.evidence.push_back("t^(p^e) in k[S] makes k[t] purely inseparable over k[S]; k[t] is the normalization");
    v.evidence.push_back("numerical semigroup rings are never NotFCoherent: some p^e exceeds the Frobenius number " +
                         std::to_string(s.frobenius_number()));
    return v;
  }
}

CurvePresentation make_curve(std::uint32_t p, const std::vector<std::string>& gens_in_u) {
  auto ring = make_ring(p, {"u"});
  CurvePresentation c;
  if (gens_in_u.empty()) throw PreconditionError("curve needs at least one generator");
  for (const auto& text : gens_in_u) {
    c.generators.push_back(parse_polynomial(text, ring));
    if (c.generators.back().is_constant())
      throw PreconditionError("curve generator " + c.generators.back().to_string() + " is constant");
  }
  return c;
}

namespace {

void validate_curve(const CurvePresentation& curve) {
  if (curve.generators.empty()) throw PreconditionError("curve needs at least one generator");
  const Ring& r = curve.generators.front().ring();
  if (r.nvars() != 1) throw PreconditionError("curve generators must live in a one-variable ring");
  for (const auto& g : curve.generators) {
    if (!(g.ring() == r)) throw PreconditionError("curve generators live in different rings");
    if (g.is_constant()) throw PreconditionError("curve generator " + g.to_string() + " is constant");
  }
}

}  // namespace

CurvePiResult curve_pi_normalization_test(const CurvePresentation& curve, unsigned e_max,
                                          const GroebnerLimits& limits) {
  validate_curve(curve);
  const SubalgebraOracle oracle(curve.generators, limits);
  if (!oracle.birational())
    throw NormalizationUnvalidated("k[u] is not the normalization: u is not in the fraction field of the curve algebra");
  const PrimeChar& p = curve.characteristic();
  const RingPtr& ring = curve.generators.front().ring_ptr();
  const Polynomial u = Polynomial::variable(ring, 0);

  CurvePiResult res;
  res.e_max = e_max;
  for (unsigned e = 0; e <= e_max; ++e) {
    const std::uint32_t q = p.power_of_p(e);
    auto m = oracle.member(u.pow(q));
    res.transcript.push_back({e, "u^" + std::to_string(q) + " in k[g]", m.member});
    if (!m.member) continue;
    res.purely_inseparable = true;
    res.exponent = e;
    res.representation = m.representation;
    res.representation_verified = oracle.evaluate(*m.representation) == u.pow(q);
    try {
      res.next_exponent_holds = oracle.member(u.pow(p.power_of_p(e + 1))).member;
    } catch (const ExponentOverflow&) {
    }
    return res;
  }
  return res;
}

bool verify_branch_obstruction(const CurvePresentation& curve, const BranchPointObstruction& ob) {
  validate_curve(curve);
  const std::uint32_t p = curve.characteristic().value();
  if (ob.p != p || ob.a >= p || ob.b >= p || ob.a == ob.b) return false;
  for (const auto& g : curve.generators) {
    std::uint32_t a = ob.a, b = ob.b;
    if (g.evaluate(std::span<const std::uint32_t>(&a, 1)) != g.evaluate(std::span<const std::uint32_t>(&b, 1)))
      return false;
  }
  return true;
}

std::optional<BranchPointObstruction> find_branch_obstruction(const CurvePresentation& curve) {
  validate_curve(curve);
  const std::uint32_t p = curve.characteristic().value();
  if (p >= (1u << 16)) throw ResourceCapError("branch point search is limited to p < 65536");
  std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
  for (std::uint32_t a = 0; a < p; ++a) {
    std::vector<std::uint32_t> values;
    for (const auto& g : curve.generators) values.push_back(g.evaluate(std::span<const std::uint32_t>(&a, 1)));
    auto [it, fresh] = seen.emplace(std::move(values), a);
    if (!fresh) return BranchPointObstruction{p, it->second, a};
  }
  return std::nullopt;
}

FCoherenceVerdict curve_classify_fcoherent(const CurvePresentation& curve, unsigned e_max,
                                           const std::optional<BranchPointObstruction>& obstruction,
                                           const GroebnerLimits& limits) {
  if (obstruction && !verify_branch_obstruction(curve, *obstruction))
    throw PreconditionError("supplied branch-point obstruction does not verify");
  CurvePiResult pi = curve_pi_normalization_test(curve, e_max, limits);
  FCoherenceVerdict v;
  if (pi.purely_inseparable) {
    if (!pi.representation_verified) throw std::logic_error("subalgebra representation does not re-verify");
    v.status = FCoherenceStatus::FCoherent;
    v.certificate_e = pi.exponent;
    v.certificate_kind = "purely-inseparable-normalization";
    const std::uint32_t q = curve.characteristic().power_of_p(*pi.exponent);
    v.evidence.push_back("u^" + std::to_string(q) + " = " + pi.representation->to_string() +
                         " with y_i standing for g_i (re-verified by substitution)");
    v.evidence.push_back("k[u] is the normalization and is purely inseparable over k[g]");
    if (pi.next_exponent_holds)
      v.evidence.push_back(std::string("spot check at e+1: ") + (*pi.next_exponent_holds ? "holds" : "FAILS"));
    return v;
  }
  for (const auto& t : pi.transcript)
    v.evidence.push_back("e=" + std::to_string(t.e) + ": " + t.condition + " -> " + (t.result ? "yes" : "no"));
  if (obstruction) {
    v.status = FCoherenceStatus::NotFCoherent;
    v.obstruction = *obstruction;
    v.evidence.push_back("g_i(" + std::to_string(obstruction->a) + ") = g_i(" + std::to_string(obstruction->b) +
                         ") for every generator; u^q in k[g] would force a^q = b^q, i.e. a = b in F_p");
    return v;
  }
  v.status = FCoherenceStatus::Unknown;
  v.evidence.push_back("no u^(p^e) in k[g] for e <= " + std::to_string(e_max) +
                       "; the bounded search cannot rule out larger e");
  return v;
}

}  // namespace fchar
