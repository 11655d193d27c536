#include <doctest.h>

#include <algorithm>
#include <random>

#include "cagb/groebner.hpp"
#include "cagb/parse.hpp"

using namespace cagb;

namespace {

Ring lexRing(std::vector<std::string> names, Field k = Field::rationals()) {
  std::size_t n = names.size();
  return makeRing(n, MonomialOrder::lex(), k, std::move(names));
}

Ring grevlexRing(std::vector<std::string> names,
                 Field k = Field::rationals()) {
  std::size_t n = names.size();
  return makeRing(n, MonomialOrder::grevlex(), k, std::move(names));
}

Polynomial P(const Ring& r, const std::string& text) {
  return parsePolynomial(text, r);
}

// Criterion-free textbook Buchberger; the oracle for the optimised engine.
std::vector<Polynomial> naiveBuchberger(const Ideal& I) {
  std::vector<Polynomial> G;
  for (const auto& g : I.generators())
    G.push_back(g.scaled(g.leadCoeff().recip()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = G.size();
    for (std::size_t i = 0; i < n && !grew; ++i)
      for (std::size_t j = i + 1; j < n && !grew; ++j) {
        Polynomial s = sPoly(G[i], G[j]);
        if (s.isZero())
          continue;
        Polynomial r = normalForm(s, G).remainder;
        if (!r.isZero()) {
          G.push_back(r.scaled(r.leadCoeff().recip()));
          grew = true;
        }
      }
  }
  return G;
}

// Small random ideals over F_32003 (fast exact arithmetic).
struct RandomIdeals {
  std::mt19937_64 rng;
  Ring ring;

  explicit RandomIdeals(std::uint64_t seed, Ring r)
      : rng(seed), ring(std::move(r)) {}

  Polynomial poly(int maxTerms, std::uint32_t maxDeg) {
    std::uniform_int_distribution<int> nt(1, maxTerms);
    std::uniform_int_distribution<std::uint32_t> e(0, maxDeg);
    std::uniform_int_distribution<long> c(1, 100);
    for (;;) {
      std::vector<Polynomial::Term> ts;
      int terms = nt(rng);
      for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> exps(ring->arity());
        std::uint32_t left = maxDeg;
        for (auto& x : exps) {
          x = std::uniform_int_distribution<std::uint32_t>(0, left)(rng);
          left -= x;
        }
        ts.push_back({Monomial(std::move(exps)),
                      ring->field().fromInteger(c(rng))});
      }
      Polynomial f = Polynomial::fromTerms(ring, ts);
      if (!f.isZero())
        return f;
    }
  }

  Ideal ideal(int maxGens, int maxTerms, std::uint32_t maxDeg) {
    std::uniform_int_distribution<int> ng(1, maxGens);
    std::vector<Polynomial> gens;
    int n = ng(rng);
    for (int i = 0; i < n; ++i)
      gens.push_back(poly(maxTerms, maxDeg));
    return Ideal(ring, std::move(gens));
  }
};

} // namespace

TEST_CASE("normalForm fixtures") {
  Ring r = lexRing({"x", "y"});
  {
    DivisionResult d = normalForm(P(r, "x^2 + y"), {P(r, "x")});
    CHECK(d.quotients[0] == P(r, "x"));
    CHECK(d.remainder == P(r, "y"));
  }
  {
    Polynomial f = P(r, "x^2 - y");
    DivisionResult d = normalForm(f, {P(r, "x*y - 1"), f});
    CHECK(d.remainder.isZero());
  }
  {
    Polynomial f = P(r, "x - y^2");
    DivisionResult d = normalForm(f, {P(r, "x^2 - y"), P(r, "x*y - 1")});
    CHECK(d.remainder == f);
    CHECK(d.quotients[0].isZero());
    CHECK(d.quotients[1].isZero());
  }
}

TEST_CASE("division identity and remainder irreducibility on random input") {
  RandomIdeals gen(91, grevlexRing({"x", "y", "z"}, Field::prime(32003)));
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial f = gen.poly(5, 5);
    std::vector<Polynomial> G;
    int n = 1 + trial % 3;
    for (int i = 0; i < n; ++i)
      G.push_back(gen.poly(3, 3));
    DivisionResult d = normalForm(f, G);
    Polynomial recombined = d.remainder;
    for (std::size_t i = 0; i < G.size(); ++i)
      recombined = recombined + d.quotients[i] * G[i];
    CHECK(recombined == f);
    for (const auto& t : d.remainder.terms())
      for (const auto& g : G)
        CHECK_FALSE(g.leadMonomial().divides(t.mono));
  }
}

TEST_CASE("sPoly fixtures") {
  Ring r = lexRing({"x", "y"});
  CHECK(sPoly(P(r, "x^2"), P(r, "x*y")).isZero());
  CHECK(sPoly(P(r, "x^2 - y"), P(r, "x*y - 1")) == P(r, "x - y^2"));
  Polynomial f = P(r, "x^3 - 2*x*y + 1");
  CHECK(sPoly(f, f).isZero());
  CHECK_THROWS_AS(sPoly(f, Polynomial::zero(r)), ZeroPolynomial);
}

TEST_CASE("buchberger on principal and tiny ideals") {
  Ring r = lexRing({"x", "y"});
  std::vector<Polynomial> g = buchberger(Ideal(r, {P(r, "x")}));
  CHECK(reduceGB(g) == std::vector<Polynomial>{P(r, "x")});

  Ring r3 = lexRing({"x", "y", "z"});
  Ideal I(r3, {P(r3, "x^2 - y"), P(r3, "x^3 - z")});
  std::vector<Polynomial> mine = reduceGB(buchberger(I));
  std::vector<Polynomial> oracle = reduceGB(naiveBuchberger(I));
  CHECK(mine == oracle);
  CHECK(isGroebnerBasis(mine));
}

TEST_CASE("buchberger on cyclic-4 under grevlex") {
  Ring r = grevlexRing({"w", "x", "y", "z"});
  Ideal I(r, {P(r, "w + x + y + z"), P(r, "w*x + x*y + y*z + z*w"),
              P(r, "w*x*y + x*y*z + y*z*w + z*w*x"), P(r, "w*x*y*z - 1")});
  std::vector<Polynomial> g = buchberger(I);
  CHECK(isGroebnerBasis(g));
  for (const auto& gen : I.generators())
    CHECK(normalForm(gen, g).remainder.isZero());
}

TEST_CASE("criteria do not change the reduced basis") {
  RandomIdeals gen(1234, grevlexRing({"x", "y", "z"}, Field::prime(32003)));
  for (int trial = 0; trial < 25; ++trial) {
    Ideal I = gen.ideal(3, 3, 3);
    std::vector<Polynomial> fast = reduceGB(buchberger(I));
    std::vector<Polynomial> slow = reduceGB(naiveBuchberger(I));
    CHECK(fast == slow);
  }
}

TEST_CASE("buchberger output always passes the S-test") {
  RandomIdeals gen(777, grevlexRing({"x", "y"}, Field::prime(32003)));
  for (int trial = 0; trial < 40; ++trial) {
    Ideal I = gen.ideal(4, 4, 4);
    CHECK(isGroebnerBasis(buchberger(I)));
  }
}

TEST_CASE("reduceGB fixtures") {
  Ring r = lexRing({"x", "y"});
  {
    std::vector<Polynomial> out = reduceGB({P(r, "x"), P(r, "2*x + y")});
    CHECK(out == std::vector<Polynomial>{P(r, "x"), P(r, "y")});
  }
  {
    std::vector<Polynomial> already = {P(r, "x"), P(r, "y")};
    CHECK(reduceGB(already) == already);
  }
  {
    std::vector<Polynomial> out = reduceGB({P(r, "7*x")});
    CHECK(out == std::vector<Polynomial>{P(r, "x")});
  }
  CHECK_THROWS_AS(reduceGB({P(r, "x^2 - y"), P(r, "x^3 - y")}), NotABasis);
}

TEST_CASE("reduceGB is idempotent and order-canonical") {
  RandomIdeals gen(555, grevlexRing({"x", "y", "z"}, Field::prime(32003)));
  std::mt19937_64 shufRng(99);
  for (int trial = 0; trial < 15; ++trial) {
    Ideal I = gen.ideal(3, 3, 3);
    std::vector<Polynomial> G = buchberger(I);
    std::vector<Polynomial> reduced = reduceGB(G);
    CHECK(reduceGB(reduced) == reduced);
    for (int s = 0; s < 4; ++s) {
      std::vector<Polynomial> shuffled = G;
      std::shuffle(shuffled.begin(), shuffled.end(), shufRng);
      CHECK(reduceGB(shuffled) == reduced);
    }
  }
}

TEST_CASE("isGroebnerBasis fixtures") {
  Ring r = lexRing({"x", "y", "z"});
  CHECK(isGroebnerBasis({P(r, "x"), P(r, "y")}));
  CHECK_FALSE(isGroebnerBasis({P(r, "x^2 - y"), P(r, "x^3 - z")}));
}

TEST_CASE("ideal membership with cofactors") {
  Ring r = lexRing({"x", "y"});
  Ideal I(r, {P(r, "x^2 - y"), P(r, "x*y - 1")});

  MembershipResult m0 = idealMembership(I[0], I);
  REQUIRE(m0.member);
  CHECK((*m0.cofactors)[0] == P(r, "1"));
  CHECK((*m0.cofactors)[1].isZero());

  Ideal J(r, {P(r, "x")});
  CHECK_FALSE(idealMembership(P(r, "1"), J).member);

  Polynomial f = P(r, "x - y^2");
  MembershipResult m = idealMembership(f, I);
  REQUIRE(m.member);
  Polynomial expanded = Polynomial::zero(r);
  for (std::size_t k = 0; k < I.size(); ++k)
    expanded = expanded + (*m.cofactors)[k] * I[k];
  CHECK(expanded == f);
}

TEST_CASE("membership cofactors re-expand on random ideals") {
  RandomIdeals gen(2024, grevlexRing({"x", "y"}, Field::prime(32003)));
  for (int trial = 0; trial < 20; ++trial) {
    Ideal I = gen.ideal(3, 3, 3);
    // A sure member: a random combination of the generators.
    Polynomial f = Polynomial::zero(I.ring());
    for (const auto& g : I.generators())
      f = f + gen.poly(2, 2) * g;
    if (f.isZero())
      continue;
    MembershipResult m = idealMembership(f, I);
    REQUIRE(m.member);
    Polynomial expanded = Polynomial::zero(I.ring());
    for (std::size_t k = 0; k < I.size(); ++k)
      expanded = expanded + (*m.cofactors)[k] * I[k];
    CHECK(expanded == f);
  }
}
