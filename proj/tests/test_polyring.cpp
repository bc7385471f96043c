#include <doctest.h>

#include <random>

#include "fchar/error.hpp"
#include "fchar/polyring.hpp"
#include "oracles.hpp"

using namespace fchar;

namespace {

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, unsigned max_deg, std::size_t terms) {
  const std::size_t n = r->nvars();
  const std::uint32_t p = r->characteristic.value();
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    const unsigned d = static_cast<unsigned>(rng() % (max_deg + 1));
    for (unsigned j = 0; j < d; ++j) ++e[rng() % n];
    ts.push_back({Monomial(e), static_cast<std::uint32_t>(rng() % p)});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::span<const std::uint32_t>(e)); }

}  // namespace

TEST_CASE("prime characteristic") {
  CHECK(is_prime(2));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_THROWS_AS(PrimeChar(4), PreconditionError);
  CHECK_THROWS_AS(PrimeChar(0), PreconditionError);
  PrimeChar p7(7);
  CHECK(p7.reduce(-1) == 6);
  CHECK(p7.mul(p7.inv(3), 3) == 1);
  CHECK(p7.power_of_p(2) == 49);
  CHECK_THROWS_AS(PrimeChar(2).power_of_p(40), ExponentOverflow);
}

TEST_CASE("parsing") {
  auto r = make_ring(2, {"x", "y", "z", "t"});
  Polynomial g = parse_polynomial("z^4+x*y*z^2+x^3*z+y^3*z+t*x^2*y^2", r);
  CHECK(g.size() == 5);
  CHECK(g.total_degree() == 5);
  CHECK(parse_polynomial("0", r).is_zero());

  auto r3 = make_ring(3, {"x"});
  CHECK(parse_polynomial("3*x + 2", r3) == Polynomial::constant(r3, 2));
  CHECK(parse_polynomial("-x", r3) == parse_polynomial("2*x", r3));
  CHECK(parse_polynomial("(x+1)^3", r3) == parse_polynomial("x^3+1", r3));

  CHECK_THROWS_AS(parse_polynomial("x^^2", r3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("w", r3), PreconditionError);
  CHECK_THROWS_AS(parse_polynomial("", r3), ParseError);
  try {
    parse_polynomial("x+*2", r3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3, 5, 101}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int i = 0; i < 30; ++i) {
      Polynomial f = random_poly(r, rng, 5, 6);
      CHECK(parse_polynomial(f.to_string(), r) == f);
    }
  }
}

TEST_CASE("small arithmetic examples") {
  auto r2 = make_ring(2, {"x", "y"});
  Polynomial s = parse_polynomial("x+y", r2);
  CHECK((s + s).is_zero());
  CHECK(s * s == parse_polynomial("x^2+y^2", r2));
  CHECK(s.frobenius_power(1) == parse_polynomial("x^2+y^2", r2));
  CHECK(s.frobenius_power(2) == parse_polynomial("x^4+y^4", r2));
  CHECK(s.frobenius_power(0) == s);

  auto r3 = make_ring(3, {"x"});
  CHECK(parse_polynomial("x+2", r3) * parse_polynomial("x+1", r3) == parse_polynomial("x^2+2", r3));
}

TEST_CASE("arithmetic agrees with the dense oracle") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    auto r = make_ring(p, {"x", "y", "z"});
    const auto pp = static_cast<std::uint32_t>(p);
    for (int i = 0; i < 40; ++i) {
      Polynomial f = random_poly(r, rng, 4, 5);
      Polynomial g = random_poly(r, rng, 4, 5);
      CHECK(oracle::dense(f + g) == oracle::add(oracle::dense(f), oracle::dense(g), pp));
      CHECK(oracle::dense(f * g) == oracle::mul(oracle::dense(f), oracle::dense(g), pp));
      CHECK((f - g) + g == f);
      CHECK(oracle::dense(f.pow(3)) == oracle::power(oracle::dense(f), 3, 3, pp));
    }
  }
}

TEST_CASE("Frobenius power equals repeated multiplication") {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring(p, {"x", "y"});
    for (int i = 0; i < 20; ++i) {
      Polynomial f = random_poly(r, rng, 3, 4);
      CHECK(f.frobenius_power(1) == f.pow(p));
      CHECK(f.frobenius_power(2) == f.pow(p * p));
    }
  }
}

TEST_CASE("monomial orders") {
  const Monomial x2 = mono({2, 0, 0});
  const Monomial xy = mono({1, 1, 0});
  const Monomial y3 = mono({0, 3, 0});
  const Monomial xz = mono({1, 0, 1});
  const Monomial y2 = mono({0, 2, 0});
  auto lex = MonomialOrder::lex(3);
  auto grevlex = MonomialOrder::grevlex(3);
  CHECK(lex.compare(x2, xy) > 0);
  CHECK(lex.compare(xy, y3) > 0);
  CHECK(grevlex.compare(y3, x2) > 0);
  CHECK(grevlex.compare(y2, xz) > 0);
  CHECK(lex.compare(xz, y2) > 0);
  CHECK(grevlex.compare(xy, xy) == 0);

  const std::size_t first[] = {2};
  auto elim = MonomialOrder::elimination(3, first);
  const Monomial z = mono({0, 0, 1});
  CHECK(elim.compare(z, y3) > 0);
  CHECK(elim.compare(xz, z) > 0);
}

TEST_CASE("monomial operations") {
  const Monomial a = mono({2, 1});
  const Monomial b = mono({1, 3});
  CHECK(a.lcm(b) == mono({2, 3}));
  CHECK((a * b).degree() == 7);
  CHECK(mono({1, 1}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK(a.scaled(3) == mono({6, 3}));
  CHECK_FALSE(a.coprime(b));
  CHECK(Monomial::variable(0).coprime(Monomial::variable(1)));
}

TEST_CASE("substitution and evaluation") {
  auto r = make_ring(5, {"x", "y"});
  auto ru = make_ring(5, {"u"});
  Polynomial f = parse_polynomial("x^3-y^2", r);
  std::vector<Polynomial> images{parse_polynomial("u^2", ru), parse_polynomial("u^3", ru)};
  CHECK(f.substitute(images).is_zero());
  const std::uint32_t pt[] = {2, 3};
  CHECK(f.evaluate(pt) == (8u + 25u - 9u) % 5u);
}

TEST_CASE("ring mismatch is rejected") {
  auto r = make_ring(2, {"x"});
  auto s = make_ring(3, {"x"});
  CHECK_THROWS_AS(Polynomial::variable(r, 0) + Polynomial::variable(s, 0), PreconditionError);
}
