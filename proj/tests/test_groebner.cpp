#include <doctest.h>

#include <algorithm>
#include <random>

#include "fchar/charp.hpp"
#include "fchar/error.hpp"
#include "fchar/groebner.hpp"
#include "oracles.hpp"

using namespace fchar;

namespace {

Ideal ideal(const RingPtr& r, const std::string& gens) { return Ideal(r, parse_polynomial_list(gens, r)); }

std::vector<std::string> printed(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(g.to_string());
  return out;
}

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, unsigned max_deg, std::size_t terms) {
  const std::size_t n = r->nvars();
  const std::uint32_t p = r->characteristic.value();
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    const unsigned d = static_cast<unsigned>(rng() % (max_deg + 1));
    for (unsigned j = 0; j < d; ++j) ++e[rng() % n];
    ts.push_back({Monomial(e), static_cast<std::uint32_t>(1 + rng() % (p - 1))});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

std::vector<Polynomial> random_gens(const RingPtr& r, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  const std::size_t k = 1 + rng() % 3;
  while (gens.size() < k) {
    Polynomial g = random_poly(r, rng, 3, 3);
    if (!g.is_zero()) gens.push_back(g);
  }
  return gens;
}

}  // namespace

TEST_CASE("basis examples") {
  auto r2 = make_ring(2, {"x", "y"});
  CHECK(printed(groebner_basis(ideal(r2, "x+y"))) == std::vector<std::string>{"x+y"});
  auto mono = groebner_basis(ideal(r2, "x^2,x*y"));
  CHECK(mono.generators().size() == 2);

  auto r5 = make_ring(5, {"x", "y"});
  Ideal gb = groebner_basis(ideal(r5, "x^2-y,x^3"), MonomialOrder::lex(2));
  CHECK(ideal_equal(gb, ideal(r5, "x^2-y,x*y,y^2")));
  CHECK(gb.generators().size() == 3);
}

TEST_CASE("normal forms and membership examples") {
  auto r5 = make_ring(5, {"x", "y"});
  auto lex = MonomialOrder::lex(2);
  CHECK(normal_form(parse_polynomial("x^2*y", r5), ideal(r5, "x^2-y"), lex) == parse_polynomial("y^2", r5));
  CHECK(normal_form(parse_polynomial("y^2", r5), ideal(r5, "x^2-y,x^3"), lex).is_zero());
  CHECK(ideal_member(parse_polynomial("y^2", r5), ideal(r5, "x^2-y,x^3")));
  CHECK(ideal_member(parse_polynomial("x", r5), ideal(r5, "x")));

  auto r = make_ring(2, {"x", "y", "z", "t"});
  Ideal big = ideal(r, "x^4,y^4,z^4,z^4+x*y*z^2+x^3*z+y^3*z+t*x^2*y^2");
  CHECK_FALSE(ideal_member(parse_polynomial("y^3*z^3", r), big));
}

TEST_CASE("membership agrees with the Macaulay matrix oracle") {
  std::mt19937_64 rng(101);
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring(p, {"x", "y"});
    for (int i = 0; i < 25; ++i) {
      auto gens = random_gens(r, rng);
      Ideal I(r, gens);
      // A certified member: a random combination of the generators.
      Polynomial f(r);
      for (const auto& g : gens) f = f + random_poly(r, rng, 2, 2) * g;
      CHECK(ideal_member(f, I));
      CHECK(normal_form(f, I).is_zero());
      // A random element: whenever the oracle certifies membership, so must we;
      // whenever we say "no", the normal form is nonzero.
      Polynomial h = random_poly(r, rng, 4, 3);
      const bool member = ideal_member(h, I);
      CHECK(member == normal_form(h, I).is_zero());
      if (oracle::macaulay_member(h, gens, 9)) CHECK(member);
    }
  }
}

TEST_CASE("reduced basis does not depend on generator order") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
    auto r = make_ring(p, {"x", "y", "z"});
    auto gens = random_gens(r, rng);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::reverse(shuffled.begin(), shuffled.end());
    for (const auto& order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3)}) {
      CHECK(printed(groebner_basis(Ideal(r, gens), order)) == printed(groebner_basis(Ideal(r, shuffled), order)));
      ++checked;
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("basis generates the same ideal") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto r = make_ring(3, {"x", "y", "z"});
    auto gens = random_gens(r, rng);
    Ideal gb = groebner_basis(Ideal(r, gens));
    for (const auto& g : gens) CHECK(ideal_member(g, gb));
    for (const auto& g : gb.generators()) CHECK(ideal_member(g, Ideal(r, gens)));
    CHECK(printed(groebner_basis(gb)) == printed(gb));
  }
}

TEST_CASE("colon examples") {
  auto r = make_ring(3, {"x", "y"});
  CHECK(ideal_equal(ideal_colon(ideal(r, "x^2,x*y"), parse_polynomial("y", r)), ideal(r, "x")));
  Ideal I = ideal(r, "x^2+y,y^3");
  CHECK(ideal_equal(ideal_colon(I, Polynomial::constant(r, 1)), I));
  CHECK(ideal_colon(Ideal(r, {}), parse_polynomial("x+y", r)).is_zero());
}

TEST_CASE("colon is sound and complete on monomials of low degree") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    auto r = make_ring(std::vector<std::uint64_t>{2, 3}[i % 2], {"x", "y"});
    auto gens = random_gens(r, rng);
    Ideal I(r, gens);
    Polynomial f = random_poly(r, rng, 2, 2);
    if (f.is_zero()) continue;
    Ideal colon = ideal_colon(I, f);
    for (const auto& g : colon.generators()) CHECK(ideal_member(g * f, I));
    for (const auto& m : monomials_up_to(r, 4)) CHECK(ideal_member(m * f, I) == ideal_member(m, colon));
  }
}

TEST_CASE("intersection") {
  auto r = make_ring(2, {"x", "y"});
  CHECK(ideal_equal(ideal_intersect(ideal(r, "x"), ideal(r, "y")), ideal(r, "x*y")));
  CHECK(ideal_equal(ideal_intersect(ideal(r, "x"), ideal(r, "x")), ideal(r, "x")));
  Ideal I = ideal(r, "x^2+y,x*y");
  CHECK(ideal_equal(ideal_intersect(I, ideal(r, "1")), I));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto rr = make_ring(3, {"x", "y", "z"});
    Ideal a(rr, random_gens(rr, rng));
    Ideal b(rr, random_gens(rr, rng));
    Ideal both = ideal_intersect(a, b);
    for (const auto& h : both.generators()) {
      CHECK(ideal_member(h, a));
      CHECK(ideal_member(h, b));
    }
    // Products of members lie in both ideals.
    Polynomial u = random_poly(rr, rng, 1, 2) * a.generators().front();
    Polynomial v = random_poly(rr, rng, 1, 2) * b.generators().front();
    CHECK(ideal_member(u * v, both));
  }
}

TEST_CASE("elimination") {
  auto r = make_ring(7, {"u", "x", "y"});
  const std::size_t drop_u[] = {0};
  Ideal cusp = eliminate(ideal(r, "x-u^2,y-u^3"), drop_u);
  REQUIRE(cusp.generators().size() == 1);
  CHECK(ideal_equal(cusp, ideal(r, "x^3-y^2")));

  auto r2 = make_ring(2, {"u", "x"});
  CHECK(eliminate(ideal(r2, "x-u^2"), drop_u).is_zero());

  Ideal I = ideal(r2, "x^2+u,u*x");
  CHECK(ideal_equal(eliminate(I, std::span<const std::size_t>{}), I));
}

TEST_CASE("subalgebra membership examples") {
  auto r = make_ring(5, {"u"});
  std::vector<Polynomial> cusp{parse_polynomial("u^2", r), parse_polynomial("u^3", r)};
  SubalgebraOracle oc(cusp);
  auto m = oc.member(parse_polynomial("u^4", r));
  REQUIRE(m.member);
  CHECK(m.representation->to_string() == "y1^2");
  CHECK(oc.evaluate(*m.representation) == parse_polynomial("u^4", r));
  CHECK_FALSE(oc.member(parse_polynomial("u", r)).member);
  CHECK(oc.birational());

  auto r2 = make_ring(2, {"u"});
  SubalgebraOracle node({parse_polynomial("u^2-1", r2), parse_polynomial("u^3-u", r2)});
  auto n = node.member(parse_polynomial("u^2", r2));
  REQUIRE(n.member);
  CHECK(n.representation->to_string() == "y1+1");

  SubalgebraOracle squares({parse_polynomial("u^2", r)});
  CHECK_FALSE(squares.birational());
}

TEST_CASE("subalgebra membership agrees with span search") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 12; ++i) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[i % 3];
    auto r = make_ring(p, {"u"});
    std::vector<Polynomial> gens;
    std::vector<std::vector<std::uint32_t>> dense_gens;
    const std::size_t k = 2;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::uint32_t> c(2 + rng() % 3, 0);
      for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
      c[0] = 0;
      c.back() = 1;
      std::vector<Term> ts;
      for (std::size_t d = 0; d < c.size(); ++d)
        if (c[d]) ts.push_back({Monomial::variable(0, static_cast<std::uint32_t>(d)), c[d]});
      gens.push_back(Polynomial::from_terms(r, std::move(ts)));
      dense_gens.push_back(c);
    }
    SubalgebraOracle oc(gens);
    for (std::uint32_t d = 1; d <= 8; ++d) {
      std::vector<std::uint32_t> target(d + 1, 0);
      target[d] = 1;
      const bool mine = oc.member(parse_polynomial("u^" + std::to_string(d), r)).member;
      CHECK(mine == oracle::subalgebra_span(dense_gens, target, p, 12));
    }
  }
}

TEST_CASE("resource caps raise instead of truncating") {
  auto r = make_ring(2, {"x", "y", "z"});
  GroebnerLimits tight;
  tight.max_degree = 5;
  CHECK_THROWS_AS(groebner_basis(ideal(r, "x^3*y+z^4,y^3*z+x^4,z^3*x+y^4"), tight), ResourceCapError);
  GroebnerLimits few;
  few.max_pairs = 1;
  CHECK_THROWS_AS(groebner_basis(ideal(r, "x^3*y+z^4,y^3*z+x^4,z^3*x+y^4"), few), ResourceCapError);
}
