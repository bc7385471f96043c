#include "fchar/fixtures.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "fchar/charp.hpp"
#include "fchar/fixtures_embed.hpp"
#include "fchar/json_io.hpp"
#include "fchar/onedim.hpp"
#include "fchar/semigroup.hpp"

namespace fchar {

using nlohmann::json;

namespace {

json int_vecs(const std::vector<IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

RingPtr ring_of(const json& fx) {
  return make_ring(static_cast<std::uint64_t>(json_io::integer(fx.at("char"))),
                   fx.at("vars").get<std::vector<std::string>>());
}

Ideal ideal_of(const json& fx, const char* key, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  if (fx.contains(key))
    for (const auto& s : fx.at(key)) gens.push_back(parse_polynomial(s.get<std::string>(), ring));
  return {ring, std::move(gens)};
}

GroebnerLimits limits_of(const json& fx) {
  GroebnerLimits lim;
  if (fx.contains("max_degree")) lim.max_degree = static_cast<std::uint64_t>(json_io::integer(fx.at("max_degree")));
  if (fx.contains("max_pairs")) lim.max_pairs = static_cast<std::size_t>(json_io::integer(fx.at("max_pairs")));
  return lim;
}

unsigned uint_of(const json& fx, const char* key, unsigned fallback) {
  return fx.contains(key) ? static_cast<unsigned>(json_io::integer(fx.at(key))) : fallback;
}

json observe_semigroup(const std::string& kind, const json& fx) {
  const AffineSemigroup c = json_io::parse_semigroup(fx);
  if (kind == "sg-classify") {
    PrimeChar p(static_cast<std::uint64_t>(json_io::integer(fx.at("char"))));
    FCoherenceVerdict v = sg_classify_fcoherent(c, p, uint_of(fx, "e_cap", kDefaultSandwichCap));
    json o{{"status", to_string(v.status)}};
    o["e"] = v.certificate_e ? json(*v.certificate_e) : json(nullptr);
    o["witness"] = v.witness ? json(*v.witness) : json(nullptr);
    o["blocking_prime"] = nullptr;
    if (v.obstruction)
      if (const auto* f = std::get_if<FaceCongruenceObstruction>(&*v.obstruction)) o["blocking_prime"] = f->blocking_prime;
    o["normalization_pi"] = sg_normalization_pi_test(c, p).pass;
    bool eq = false;
    for (const auto& line : v.evidence) eq = eq || line.find("2n = p^e") != std::string::npos;
    o["equation_2n"] = eq;
    return o;
  }
  if (kind == "sg-normal") {
    NormalityResult r = sg_is_normal(c);
    return {{"normal", r.normal}, {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
  }
  if (kind == "sg-saturation") return {{"hilbert_basis", int_vecs(sg_saturation(c).generators())}};
  if (kind == "sg-member") return {{"member", sg_member(json_io::int_vec(fx.at("vector")), c).member}};
  throw PreconditionError("unknown fixture kind " + kind);
}

json observe(const json& fx) {
  const std::string kind = fx.at("kind").get<std::string>();
  if (kind.rfind("sg-", 0) == 0) return observe_semigroup(kind, fx);
  if (kind == "ns-classify") {
    NumericalSemigroup s(json_io::int_vec(fx.at("gens")));
    FCoherenceVerdict v = ns_classify_fcoherent(s, PrimeChar(static_cast<std::uint64_t>(json_io::integer(fx.at("char")))));
    return {{"status", to_string(v.status)}, {"e", v.certificate_e ? json(*v.certificate_e) : json(nullptr)}};
  }
  if (kind == "curve-classify") {
    CurvePresentation curve = json_io::parse_curve(fx);
    const unsigned emax = uint_of(fx, "emax", kDefaultCurveEmax);
    FCoherenceVerdict v = curve_classify_fcoherent(curve, emax);
    CurvePiResult pi = curve_pi_normalization_test(curve, emax);
    json failed = json::array();
    for (const auto& t : pi.transcript)
      if (t.e >= 1 && !t.result) failed.push_back(t.e);
    return {{"status", to_string(v.status)},
            {"e", v.certificate_e ? json(*v.certificate_e) : json(nullptr)},
            {"failed_exponents", failed}};
  }
  if (kind == "identity-battery") {
    std::mt19937_64 rng(static_cast<std::uint64_t>(json_io::integer(fx.at("seed"))));
    const auto count = json_io::integer(fx.at("count"));
    json failures = json::array();
    for (std::int64_t k = 0; k < count; ++k) {
      IdentityInstance inst = random_identity_instance(rng);
      if (!colon_bracket_identity_check(inst.ideal, inst.z, inst.e, identity_limits()).holds)
        failures.push_back({{"ideal", inst.ideal.to_string()}, {"z", inst.z.to_string()}, {"e", inst.e}});
    }
    return {{"all_hold", failures.empty()}, {"instances", count}, {"failures", failures}};
  }

  const RingPtr ring = ring_of(fx);
  const GroebnerLimits lim = limits_of(fx);
  const Ideal ideal = ideal_of(fx, "ideal", ring);
  if (kind == "fedder") return json_io::fedder(fedder_is_fpure(ideal, lim));
  if (kind == "identity-check") {
    IdentityCheck r = colon_bracket_identity_check(ideal, parse_polynomial(fx.at("z").get<std::string>(), ring),
                                                   uint_of(fx, "e", 1), lim);
    return json_io::identity(r);
  }

  const Ideal modulus = ideal_of(fx, "modulus", ring);
  const QuotientRing quotient = modulus.is_zero() ? QuotientRing(ring) : QuotientRing(modulus);
  if (kind == "member") {
    Polynomial x = parse_polynomial(fx.at("element").get<std::string>(), ring);
    return {{"member", ideal_member(x, quotient.lift(ideal), lim)}};
  }
  if (kind == "fclosure") {
    Polynomial x = parse_polynomial(fx.at("element").get<std::string>(), ring);
    return json_io::closure(frobenius_closure_member(x, ideal, quotient, uint_of(fx, "emax", kDefaultClosureEmax), lim));
  }
  if (kind == "tclosure") {
    Polynomial x = parse_polynomial(fx.at("element").get<std::string>(), ring);
    WitnessSet w = fx.contains("witnesses") ? WitnessSet{ideal_of(fx, "witnesses", ring).generators(), true}
                                            : default_witnesses(ideal);
    return json_io::closure(tight_closure_member_bounded(x, ideal, quotient, w, uint_of(fx, "emin", 1),
                                                         uint_of(fx, "emax", kDefaultClosureEmax), lim));
  }
  if (kind == "closure-comparison") {
    std::vector<Polynomial> probes = ideal_of(fx, "probes", ring).generators();
    return json_io::comparison(closure_comparison(ideal, quotient, default_witnesses(ideal),
                                                  uint_of(fx, "emax", kDefaultClosureEmax), probes, lim));
  }
  throw PreconditionError("unknown fixture kind " + kind);
}

}  // namespace

json embedded_fixture_table() { return json::parse(detail::kEmbeddedFixtures); }

json load_fixture_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureFileError(path, "cannot open fixture file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    json table = json::parse(buf.str());
    if (!table.is_object() || !table.contains("fixtures") || !table.at("fixtures").is_array())
      throw FixtureFileError(path, "fixture file has no \"fixtures\" array");
    return table;
  } catch (const json::exception& e) {
    throw FixtureFileError(path, std::string("corrupted fixture file: ") + e.what());
  }
}

std::vector<FixtureOutcome> run_fixture_table(const json& table, const std::optional<std::string>& only) {
  std::vector<FixtureOutcome> out;
  for (const auto& fx : table.at("fixtures")) {
    FixtureOutcome o;
    o.id = fx.at("id").get<std::string>();
    o.group = fx.at("group").get<std::string>();
    if (only && o.group != *only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o.observed = observe(fx);
      o.pass = true;
      for (const auto& [key, want] : fx.at("expect").items()) {
        const json got = o.observed.contains(key) ? o.observed.at(key) : json(nullptr);
        if (got != want) {
          o.pass = false;
          o.detail += key + ": expected " + want.dump() + ", got " + got.dump() + "; ";
        }
      }
    } catch (const json::exception& e) {
      throw PreconditionError("fixture " + o.id + " is malformed: " + e.what());
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    o.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(o));
  }
  return out;
}

IdentityInstance random_identity_instance(std::mt19937_64& rng) {
  static const std::uint32_t primes[] = {2, 3, 5};
  const std::uint32_t p = primes[rng() % 3];
  const std::size_t n = 1 + rng() % 3;
  std::vector<std::string> names{"x", "y", "z"};
  names.resize(n);
  const RingPtr ring = make_ring(p, names);
  auto random_poly = [&](unsigned max_deg, std::size_t max_terms) {
    while (true) {
      std::vector<Term> terms;
      const std::size_t t = 1 + rng() % max_terms;
      for (std::size_t i = 0; i < t; ++i) {
        std::vector<std::uint32_t> e(n, 0);
        const unsigned d = 1 + static_cast<unsigned>(rng() % max_deg);
        for (unsigned j = 0; j < d; ++j) ++e[rng() % n];
        terms.push_back({Monomial(e), static_cast<std::uint32_t>(1 + rng() % (p - 1))});
      }
      Polynomial f = Polynomial::from_terms(ring, std::move(terms));
      if (!f.is_zero()) return f;
    }
  };
  std::vector<Polynomial> gens;
  const std::size_t ngens = 1 + rng() % 3;
  for (std::size_t i = 0; i < ngens; ++i) gens.push_back(random_poly(4, 3));
  Polynomial z = random_poly(2, 2);
  const unsigned e = 1 + static_cast<unsigned>(rng() % 2);
  return {Ideal(ring, std::move(gens)), std::move(z), e};
}

GroebnerLimits identity_limits() {
  GroebnerLimits lim;
  lim.max_degree = 1024;
  lim.max_pairs = 200'000;
  return lim;
}

}  // namespace fchar
