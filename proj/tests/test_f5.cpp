#include <doctest.h>

#include <random>

#include "cagb/f5.hpp"
#include "cagb/groebner.hpp"
#include "cagb/parse.hpp"

using namespace cagb;

namespace {

Polynomial P(const Ring& r, const std::string& text) {
  return parsePolynomial(text, r);
}

void checkLabels(const std::vector<Polynomial>& inputs,
                 const std::vector<LabeledPolynomial>& basis) {
  for (const auto& b : basis) {
    Polynomial dot = Polynomial::zero(b.poly.ring());
    for (std::size_t i = 0; i < inputs.size(); ++i)
      dot = dot + b.vector[i] * inputs[i];
    CHECK(dot == b.poly);
  }
}

std::vector<Polynomial> polysOf(const std::vector<LabeledPolynomial>& basis) {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis)
    out.push_back(b.poly);
  return out;
}

} // namespace

TEST_CASE("monoize") {
  Ring r = makeRing(1, MonomialOrder::lex(), Field::rationals(),
                    std::vector<std::string>{"x"});
  CHECK(monoize(P(r, "2*x + 4")) == P(r, "x + 2"));
  CHECK(monoize(P(r, "x + 1")) == P(r, "x + 1"));
  CHECK(monoize(P(r, "3")) == P(r, "1"));
  CHECK_THROWS_AS(monoize(Polynomial::zero(r)), ZeroPolynomial);
}

TEST_CASE("signature order and divisibility") {
  MonomialOrder ord = MonomialOrder::grevlex();
  Signature a{0, Monomial{5, 5}};
  Signature b{1, Monomial{0, 0}};
  CHECK(compareSignatures(ord, a, b) == Ordering::LT); // position first
  Signature c{1, Monomial{1, 0}};
  CHECK(compareSignatures(ord, b, c) == Ordering::LT);
  CHECK(signatureDivides({1, Monomial{1, 0}}, {1, Monomial{2, 1}}));
  CHECK_FALSE(signatureDivides({0, Monomial{1, 0}}, {1, Monomial{2, 1}}));
}

TEST_CASE("koszul syzygies") {
  Ring r = makeRing(2, MonomialOrder::grevlex(), Field::rationals(),
                    std::vector<std::string>{"x", "y"});
  std::vector<Signature> sy = koszulSyzygies({P(r, "x"), P(r, "y")});
  REQUIRE(sy.size() == 1);
  CHECK(sy[0].index == 1);
  CHECK(sy[0].monomial == Monomial{1, 0});

  CHECK(koszulSyzygies({P(r, "x")}).empty());
  CHECK(koszulSyzygies({P(r, "x"), P(r, "y"), P(r, "x + y")}).size() == 3);
}

TEST_CASE("standard criterion") {
  std::vector<Signature> syz = {{1, Monomial{1, 0}}};
  CHECK(standardCriterion({1, Monomial{2, 1}}, syz));
  CHECK_FALSE(standardCriterion({0, Monomial{1, 0}}, syz));
  CHECK_FALSE(standardCriterion({0, Monomial{1, 0}}, {}));
}

TEST_CASE("reduceSignature") {
  Ring r = makeRing(2, MonomialOrder::lex(), Field::rationals(),
                    std::vector<std::string>{"x", "y"});
  std::vector<Polynomial> inputs = {P(r, "x^2 - y"), P(r, "x*y - 1")};

  // empty basis: unchanged
  LabeledPolynomial g{{0, Monomial{0, 0}},
                      {P(r, "1"), Polynomial::zero(r)},
                      P(r, "x^2 - y")};
  auto [v0, p0] = reduceSignature(inputs, g, {});
  CHECK(p0 == g.poly);
  CHECK(v0 == g.vector);

  // basis element with smaller signature reduces a single step
  LabeledPolynomial b0{{0, Monomial{0, 0}},
                       {P(r, "1"), Polynomial::zero(r)},
                       P(r, "x^2 - y")};

  // y * (x^2 - y), carrying signature x * e_1
  LabeledPolynomial h{{1, Monomial{1, 0}},
                      {P(r, "y"), Polynomial::zero(r)},
                      P(r, "x^2*y - y^2")};
  auto [v1, p1] = reduceSignature(inputs, h, {b0});
  CHECK(p1.isZero());
  CHECK(v1[0].isZero());
  CHECK(v1[1].isZero());

  // a reducer whose use would land exactly on the signature is refused
  LabeledPolynomial same{{0, Monomial{1, 0}},
                         {P(r, "x"), Polynomial::zero(r)},
                         P(r, "x^3 - x*y")};
  auto [v2, p2] = reduceSignature(inputs, same, {b0});
  CHECK(p2 == same.poly); // x * b0 carries signature x*e_0 == sig: unsafe
  CHECK(v2 == same.vector);

  // label inconsistency is caught
  LabeledPolynomial bad = g;
  bad.vector[0] = P(r, "2");
  CHECK_THROWS_AS(reduceSignature(inputs, bad, {}), InconsistentLabel);
}

TEST_CASE("regularSVector") {
  Ring r = makeRing(2, MonomialOrder::lex(), Field::rationals(),
                    std::vector<std::string>{"x", "y"});
  LabeledPolynomial a{{0, Monomial{0, 0}},
                      {P(r, "1"), Polynomial::zero(r)},
                      P(r, "x^2 - y")};
  LabeledPolynomial b{{1, Monomial{0, 0}},
                      {Polynomial::zero(r), P(r, "1")},
                      P(r, "x*y - 1")};

  auto s = regularSVector(a, b);
  REQUIRE(s.has_value());
  CHECK(s->poly == P(r, "x - y^2")); // y*a - x*b
  CHECK(s->signature.index == 1);    // x*e_1 beats y*e_0
  CHECK(s->signature.monomial == Monomial{1, 0});
  CHECK(s->vector[0] == P(r, "y"));
  CHECK(s->vector[1] == P(r, "-x"));

  // an element against itself is singular
  CHECK_FALSE(regularSVector(a, a).has_value());
}

TEST_CASE("f5 on a single polynomial") {
  Ring r = makeRing(2, MonomialOrder::lex(), Field::rationals(),
                    std::vector<std::string>{"x", "y"});
  std::vector<LabeledPolynomial> out = f5({P(r, "3*x")});
  REQUIRE(out.size() == 1);
  CHECK(out[0].poly == P(r, "x"));
  CHECK(out[0].vector[0] == P(r, "1/3"));
  checkLabels({P(r, "3*x")}, out);
}

TEST_CASE("f5 equals buchberger with consistent labels") {
  Ring ring = makeRing(3, MonomialOrder::grevlex(), Field::prime(32003),
                       std::vector<std::string>{"x", "y", "z"});
  std::mt19937_64 rng(515);
  std::uniform_int_distribution<long> c(1, 32002);
  std::uniform_int_distribution<int> nt(1, 3), ng(1, 3);
  auto randMono = [&] {
    std::vector<std::uint32_t> exps(3);
    std::uint32_t left = 4;
    for (auto& x : exps) {
      x = std::uniform_int_distribution<std::uint32_t>(0, left)(rng);
      left -= x;
    }
    return Monomial(std::move(exps));
  };
  int ran = 0;
  for (int trial = 0; trial < 40 && ran < 20; ++trial) {
    std::vector<Polynomial> gens;
    int gcount = ng(rng);
    for (int k = 0; k < gcount; ++k) {
      std::vector<Polynomial::Term> ts;
      int terms = nt(rng);
      for (int t = 0; t < terms; ++t)
        ts.push_back({randMono(), ring->field().fromInteger(c(rng))});
      Polynomial f = Polynomial::fromTerms(ring, ts);
      if (!f.isZero())
        gens.push_back(f);
    }
    if (gens.empty())
      continue;
    ++ran;
    std::vector<LabeledPolynomial> out = f5(gens);
    checkLabels(gens, out);
    CHECK(isGroebnerBasis(polysOf(out)));
    CHECK(reduceGB(polysOf(out)) == reduceGB(buchberger(Ideal(ring, gens))));
  }
  CHECK(ran == 20);
}

TEST_CASE("f5 on cyclic-4") {
  Ring r = makeRing(4, MonomialOrder::grevlex(), Field::prime(32003),
                    std::vector<std::string>{"w", "x", "y", "z"});
  std::vector<Polynomial> gens = {
      P(r, "w + x + y + z"), P(r, "w*x + x*y + y*z + z*w"),
      P(r, "w*x*y + x*y*z + y*z*w + z*w*x"), P(r, "w*x*y*z - 1")};
  std::vector<LabeledPolynomial> out = f5(gens);
  checkLabels(gens, out);
  CHECK(isGroebnerBasis(polysOf(out)));
  CHECK(reduceGB(polysOf(out)) == reduceGB(buchberger(Ideal(r, gens))));
}

TEST_CASE("f5 signatures never decrease and zero reductions grow syzygies") {
  // Indirect check via the degree bound machinery: a tight bound trips.
  Ring r = makeRing(2, MonomialOrder::grevlex(), Field::rationals(),
                    std::vector<std::string>{"x", "y"});
  std::vector<Polynomial> gens = {P(r, "x^3 - y^3"), P(r, "x*y^2 + x")};
  CHECK_THROWS_AS(f5(gens, F5Options{1}), DegreeBoundExceeded);
  std::vector<LabeledPolynomial> out = f5(gens);
  CHECK(isGroebnerBasis(polysOf(out)));
}

TEST_CASE("f5 rejects bad inputs") {
  Ring r = makeRing(2, MonomialOrder::lex(), Field::rationals(),
                    std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(f5({Polynomial::zero(r)}), ZeroPolynomial);
  Ring s = makeRing(2, MonomialOrder::grevlex(), Field::rationals(),
                    std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(f5({P(r, "x"), P(s, "y")}), RingMismatch);
}
