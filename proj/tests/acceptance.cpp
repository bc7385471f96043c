// Acceptance run: one PASS/FAIL line per criterion, with its runtime budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "fchar/charp.hpp"
#include "fchar/fixtures.hpp"
#include "fchar/onedim.hpp"
#include "fchar/semigroup.hpp"
#include "oracles.hpp"

using namespace fchar;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream log;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "  failed: " << what << "\n";
    }
  }
};

Ideal ideal(const RingPtr& r, const std::string& gens) { return Ideal(r, parse_polynomial_list(gens, r)); }

bool has_line(const FCoherenceVerdict& v, const std::string& needle) {
  return std::any_of(v.evidence.begin(), v.evidence.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

const std::vector<IntVec> kEx1{{4, 0}, {3, 1}, {1, 3}, {0, 4}};
const std::vector<IntVec> kEx2{{4, 0}, {2, 1}, {1, 2}, {0, 4}};

void example_one(Check& c) {
  AffineSemigroup s(2, kEx1);
  FCoherenceVerdict v = sg_classify_fcoherent(s, PrimeChar(2));
  c.expect(v.status == FCoherenceStatus::FCoherent && v.certificate_e == 2u, "FCoherent(e=2) at p=2");
  NormalityResult n = sg_is_normal(s);
  c.expect(!n.normal && n.witness == IntVec{2, 2}, "not normal, witness (2,2)");
  c.expect(sg_saturation(s).generators() == std::vector<IntVec>{{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}},
           "Hilbert basis {(4,0),(3,1),(2,2),(1,3),(0,4)}");
  for (std::uint64_t p : {3, 5, 7}) {
    PrimeChar pc(p);
    c.expect(sg_classify_fcoherent(s, pc).status == FCoherenceStatus::Unknown, "Unknown at p=" + std::to_string(p));
    c.expect(!sg_pi_sandwich_certificate(s, pc), "sandwich fails at p=" + std::to_string(p));
    c.expect(sg_normalization_pi_test(s, pc).pass, "normalization test passes at p=" + std::to_string(p));
  }
}

void example_two(Check& c) {
  AffineSemigroup s(2, kEx2);
  for (std::uint64_t p : {3, 5, 7}) {
    FCoherenceVerdict v = sg_classify_fcoherent(s, PrimeChar(p));
    const std::string at = " at p=" + std::to_string(p);
    c.expect(v.status == FCoherenceStatus::NotFCoherent, "NotFCoherent" + at);
    c.expect(v.obstruction && std::holds_alternative<FaceCongruenceObstruction>(*v.obstruction),
             "face-congruence obstruction" + at);
    if (v.obstruction)
      if (const auto* f = std::get_if<FaceCongruenceObstruction>(&*v.obstruction)) {
        c.expect(f->blocking_prime == 2, "blocking prime 2" + at);
        c.expect(verify_face_obstruction(s, *f, 20), "obstruction re-verifies" + at);
      }
    c.expect(has_line(v, "2n = p^e has no solution"), "evidence states 2n = p^e is impossible" + at);
  }
  FCoherenceVerdict v2 = sg_classify_fcoherent(s, PrimeChar(2));
  c.expect(v2.status == FCoherenceStatus::FCoherent && v2.certificate_e == 2u, "FCoherent(e=2) at p=2");
}

void deformation(Check& c) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const std::string at = " at p=" + std::to_string(p);
    c.expect(ns_classify_fcoherent(NumericalSemigroup({2, 3}), PrimeChar(p)).status == FCoherenceStatus::FCoherent,
             "k[S] for S=<2,3> FCoherent" + at);
    c.expect(curve_classify_fcoherent(make_curve(p, {"u^2", "u^3"})).status == FCoherenceStatus::FCoherent,
             "cusp curve FCoherent" + at);
  }
  FCoherenceVerdict n2 = curve_classify_fcoherent(make_curve(2, {"u^2-1", "u^3-u"}));
  c.expect(n2.status == FCoherenceStatus::FCoherent && n2.certificate_e == 1u, "node FCoherent(e=1) at p=2");
  for (std::uint32_t p : {3u, 5u}) {
    CurvePresentation node = make_curve(p, {"u^2-1", "u^3-u"});
    const std::string at = " at p=" + std::to_string(p);
    c.expect(curve_classify_fcoherent(node, 5).status == FCoherenceStatus::Unknown, "node Unknown" + at);
    CurvePiResult r = curve_pi_normalization_test(node, 5);
    std::vector<unsigned> failed;
    for (const auto& t : r.transcript)
      if (t.e >= 1 && !t.result) failed.push_back(t.e);
    c.expect(failed == std::vector<unsigned>{1, 2, 3, 4, 5}, "failed transcript e=1..5" + at);
  }
}

void flatness(Check& c) {
  auto r = make_ring(2, {"x", "y"});
  IdentityCheck hand = colon_bracket_identity_check(ideal(r, "x^2,x*y"), parse_polynomial("y", r), 1);
  c.expect(hand.holds, "hand instance holds");
  c.expect(ideal_equal(hand.lhs, ideal(r, "x^2")) && ideal_equal(hand.rhs, ideal(r, "x^2")), "both sides (x^2)");
  std::mt19937_64 rng(20240607);
  int held = 0;
  for (int i = 0; i < 100; ++i) {
    IdentityInstance inst = random_identity_instance(rng);
    const bool ok = colon_bracket_identity_check(inst.ideal, inst.z, inst.e, identity_limits()).holds;
    held += ok;
    c.expect(ok, "random instance " + inst.ideal.to_string() + ", z=" + inst.z.to_string());
  }
  c.log << "  " << held << "/100 random instances hold\n";
}

void closures(Check& c) {
  auto rc = make_ring(2, {"a", "b"});
  QuotientRing cusp(ideal(rc, "a^3+b^2"), true, true);
  const Ideal t2 = ideal(rc, "a");
  const Polynomial t3 = parse_polynomial("b", rc);
  ClosureVerdict f = frobenius_closure_member(t3, t2, cusp, 3);
  c.expect(f.status == ClosureStatus::Member && f.exponent == 1u, "t^3 in (t^2)^F with e=1");
  ClosureVerdict t = tight_closure_member_bounded(t3, t2, cusp, WitnessSet{{parse_polynomial("a", rc)}, true}, 1, 4);
  c.expect(t.status == ClosureStatus::Member && t.witness == parse_polynomial("a", rc), "tight Member, witness t^2");

  auto r = make_ring(2, {"x", "y"});
  const Ideal sq = ideal(r, "x^2,y^2");
  const Polynomial xy = parse_polynomial("x*y", r);
  c.expect(frobenius_closure_member(xy, sq, QuotientRing(r), 4).status == ClosureStatus::NotMemberUpToBound,
           "xy not in (x^2,y^2)^F up to e=4");
  c.expect(tight_closure_member_bounded(xy, sq, QuotientRing(r), default_witnesses(sq), 1, 4).status ==
               ClosureStatus::NoWitnessFoundUpToBound,
           "no tight closure witness for xy");

  ClosureComparison cmp = closure_comparison(t2, cusp, default_witnesses(t2), 3,
                                             parse_polynomial_list("b,a^2,a*b", rc));
  c.expect(cmp.tensions == 0, "zero tensions on the cusp");
}

void fedder(Check& c) {
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring(p, {"x", "y"});
    c.expect(!fedder_is_fpure(ideal(r, "x^3-y^2")).f_pure, "cusp not F-pure at p=" + std::to_string(p));
  }
  auto r3 = make_ring(3, {"x", "y"});
  c.expect(fedder_is_fpure(ideal(r3, "y^2-x^3-x^2")).f_pure, "node F-pure at p=3");
  auto r2 = make_ring(2, {"x", "y"});
  c.expect(!fedder_is_fpure(ideal(r2, "y^2-x^3-x^2")).f_pure, "node not F-pure at p=2");
}

void quartic(Check& c) {
  auto r = make_ring(2, {"x", "y", "z", "t"});
  QuotientRing q(ideal(r, "z^4+x*y*z^2+x^3*z+y^3*z+t*x^2*y^2"));
  const Ideal I = ideal(r, "x^4,y^4,z^4");
  const Polynomial y3z3 = parse_polynomial("y^3*z^3", r);
  c.expect(!ideal_member(y3z3, q.lift(I)), "y^3 z^3 not in I");
  GroebnerLimits lim;
  lim.max_degree = 128;
  ClosureVerdict v = frobenius_closure_member(y3z3, I, q, 3, lim);
  c.expect(v.status == ClosureStatus::NotMemberUpToBound, "Frobenius closure NotMemberUpToBound for e<=3");
}

void properties(Check& c) {
  std::mt19937_64 rng(8675309);
  auto random_poly = [&](const RingPtr& ring, unsigned max_deg, std::size_t terms) {
    const std::uint32_t p = ring->characteristic.value();
    std::vector<Term> ts;
    for (std::size_t i = 0; i < terms; ++i) {
      std::vector<std::uint32_t> e(ring->nvars(), 0);
      const unsigned d = static_cast<unsigned>(rng() % (max_deg + 1));
      for (unsigned j = 0; j < d; ++j) ++e[rng() % ring->nvars()];
      ts.push_back({Monomial(e), static_cast<std::uint32_t>(1 + rng() % (p - 1))});
    }
    return Polynomial::from_terms(ring, std::move(ts));
  };

  int same = 0;
  for (int i = 0; i < 50; ++i) {
    auto ring = make_ring(std::vector<std::uint64_t>{2, 3, 5, 7}[i % 4], {"x", "y", "z"});
    std::vector<Polynomial> gens;
    while (gens.size() < 3) {
      Polynomial g = random_poly(ring, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    auto perm = gens;
    std::shuffle(perm.begin(), perm.end(), rng);
    same += groebner_basis(Ideal(ring, gens)).generators() == groebner_basis(Ideal(ring, perm)).generators();
  }
  c.expect(same == 50, "Groebner determinism " + std::to_string(same) + "/50");

  int round = 0;
  for (int i = 0; i < 50; ++i) {
    auto ring = make_ring(std::vector<std::uint64_t>{2, 3, 5}[i % 3], {"x", "y", "z"});
    const unsigned e = 1 + static_cast<unsigned>(rng() % 2);
    std::vector<Polynomial> gens;
    std::vector<oracle::Exps> exps;
    for (std::size_t j = 0, k = 1 + rng() % 4; j < k; ++j) {
      oracle::Exps a(3);
      for (auto& x : a) x = static_cast<std::uint32_t>(rng() % 7);
      exps.push_back(a);
      gens.push_back(Polynomial::monomial(ring, Monomial(a)));
    }
    Ideal I(ring, gens);
    Ideal root = frobenius_root(I, e);
    std::set<oracle::Exps> got;
    for (const auto& g : root.generators()) got.insert(g.terms()[0].mono.exponents(3));
    round += ideal_equal(frobenius_root(bracket_power(I, e), e), I) && ideal_contains(bracket_power(root, e), I) &&
             got == oracle::monomial_root(exps, ring->characteristic.power_of_p(e));
  }
  c.expect(round == 50, "root/bracket round trip " + std::to_string(round) + "/50");

  for (const auto& gens : {kEx1, kEx2}) {
    AffineSemigroup s(2, gens);
    for (const auto& face : sg_faces(s)) {
      Retraction r = sg_retract(s, face, 100);
      c.expect(r.pairs_checked >= 100 && r.self_check_passed(), "retraction onto " + face.label);
    }
  }

  int agree = 0, total = 0;
  for (int i = 0; i < 40; ++i) {
    std::vector<std::int64_t> gens;
    do {
      gens.clear();
      for (std::size_t k = 0, m = 2 + rng() % 3; k < m; ++k) gens.push_back(2 + static_cast<std::int64_t>(rng() % 20));
    } while (std::accumulate(gens.begin(), gens.end(), std::int64_t{0},
                             [](std::int64_t g, std::int64_t x) { return std::gcd(g, x); }) != 1);
    NumericalSemigroup s(gens);
    const std::int64_t limit = s.frobenius_number() + 10;
    const auto table = oracle::numerical_table(gens, limit);
    for (std::int64_t n = 0; n <= limit; ++n, ++total) agree += s.contains(n) == table[static_cast<std::size_t>(n)];
  }
  c.expect(agree == total, "numerical membership " + std::to_string(agree) + "/" + std::to_string(total));
}

struct Criterion {
  int number;
  const char* name;
  double budget_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "semigroup example 1", 5, example_one},
      {2, "semigroup example 2", 5, example_two},
      {3, "cusp and node deformation", 10, deformation},
      {4, "colon/bracket flatness identity", 60, flatness},
      {5, "closure fixtures", 30, closures},
      {6, "Fedder battery", 10, fedder},
      {7, "quartic bounded checks", 120, quartic},
      {8, "property suites", 60, properties},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(s < cr.budget_s, "runtime " + std::to_string(s) + " s over budget");
    const bool pass = c.ok;
    failed += !pass;
    std::printf("criterion %d: %s  %s (%.3f s, budget %.0f s)\n", cr.number, pass ? "PASS" : "FAIL", cr.name, s,
                cr.budget_s);
    const std::string detail = c.log.str();
    if (!pass || !detail.empty()) std::fputs(detail.c_str(), stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
