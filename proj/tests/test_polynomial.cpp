#include <doctest.h>

#include <random>

#include "cagb/parse.hpp"
#include "cagb/polynomial.hpp"

using namespace cagb;

namespace {

Ring ringQ(std::vector<std::string> names,
           MonomialOrder ord = MonomialOrder::grevlex()) {
  std::size_t n = names.size();
  return makeRing(n, std::move(ord), Field::rationals(), std::move(names));
}

Polynomial P(const Ring& r, const std::string& text) {
  return parsePolynomial(text, r);
}

} // namespace

TEST_CASE("ring arithmetic") {
  Ring r = ringQ({"x", "y", "z"});
  CHECK(P(r, "x+1") * P(r, "x-1") == P(r, "x^2-1"));
  Polynomial f = P(r, "x^2*y + 3*x + z + 1");
  CHECK(f + Polynomial::zero(r) == f);
  CHECK(f - P(r, "x^2*y") == P(r, "3*x + z + 1"));
  CHECK(f.scaled(Field::rationals().fromQuotient(1, 3)) ==
        P(r, "1/3*x^2*y + x + 1/3*z + 1/3"));
}

TEST_CASE("ring mismatches are errors") {
  Ring r = ringQ({"x", "y"});
  Ring s = ringQ({"x", "y"}, MonomialOrder::lex());
  CHECK_THROWS_AS(P(r, "x") + P(s, "y"), RingMismatch);
  Ring f5 = makeRing(2, MonomialOrder::grevlex(), Field::prime(5),
                     std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(P(r, "x") * P(f5, "x"), RingMismatch);
}

TEST_CASE("leadTerm under grevlex") {
  Ring r = ringQ({"x", "y", "z"});
  Polynomial f = P(r, "x^2*y + 3*x + z + 1");
  CHECK(f.leadMonomial() == Monomial{2, 1, 0});
  CHECK(f.leadCoeff().isOne());
  CHECK(P(r, "5").leadMonomial() == Monomial{0, 0, 0});
  CHECK(P(r, "5").leadCoeff() == Field::rationals().fromInteger(5));
  CHECK_THROWS_AS(Polynomial::zero(r).leadTerm(), ZeroPolynomial);
}

TEST_CASE("terms iterate strictly descending") {
  Ring r = ringQ({"x", "y", "z"}, MonomialOrder::lex());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> e(0, 4);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial::Term> ts;
    for (int i = 0; i < 8; ++i)
      ts.push_back({Monomial({e(rng), e(rng), e(rng)}),
                    Field::rationals().fromInteger(c(rng))});
    Polynomial f = Polynomial::fromTerms(r, ts);
    for (std::size_t i = 1; i < f.termCount(); ++i)
      CHECK(r->order().compare(f.terms()[i - 1].mono, f.terms()[i].mono) ==
            Ordering::GT);
  }
}

TEST_CASE("liftMap evaluates and is a ring homomorphism") {
  Ring r = ringQ({"x", "y"});
  Field q = Field::rationals();
  Polynomial f = P(r, "x*y + 1");
  CHECK(evaluate(f, {q.fromInteger(2), q.fromInteger(3)}) == q.fromInteger(7));

  // identity assignment
  std::vector<Polynomial> id = {Polynomial::variable(r, 0),
                                Polynomial::variable(r, 1)};
  CHECK(liftToRing(f, r, id) == f);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-4, 4);
  auto randPoly = [&] {
    std::vector<Polynomial::Term> ts;
    std::uniform_int_distribution<std::uint32_t> e(0, 3);
    for (int i = 0; i < 4; ++i)
      ts.push_back({Monomial({e(rng), e(rng)}), q.fromInteger(c(rng))});
    return Polynomial::fromTerms(r, ts);
  };
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = randPoly(), b = randPoly();
    std::vector<FieldElem> pt = {q.fromInteger(c(rng)), q.fromInteger(c(rng))};
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
  }
}

TEST_CASE("convPoly moves between equal-shape rings") {
  Ring r = ringQ({"x", "y"});
  Ring s = ringQ({"u", "v"});
  Polynomial f = P(r, "x^2 + 2*y");
  Polynomial g = convPoly(f, s);
  CHECK(g.str() == "u^2 + 2*v");
  CHECK(convPoly(f, r) == f);

  Ring lexRing = ringQ({"x", "y"}, MonomialOrder::lex());
  CHECK_THROWS_AS(convPoly(f, lexRing), IncompatibleRings);
}

TEST_CASE("injVarsOffset shifts variables") {
  Ring uni = ringQ({"X"}, MonomialOrder::lex());
  Ring five = ringQ({"X0", "X1", "X2", "X3", "X4"}, MonomialOrder::lex());
  Polynomial f = P(uni, "X^2 + X + 1");
  Polynomial g = injVarsOffset(3, f, five);
  CHECK(g == P(five, "X3^2 + X3 + 1"));

  // offset 0 with equal arity behaves like convPoly
  Ring uni2 = ringQ({"t"}, MonomialOrder::lex());
  CHECK(injVarsOffset(0, f, uni2).str() == "t^2 + t + 1");

  Ring three = ringQ({"a", "b", "c"});
  Ring two = ringQ({"a", "b"});
  CHECK_THROWS_AS(injVarsOffset(2, P(two, "a"), three), ArityOverflow);
  CHECK(injVarsAtEnd(P(two, "a*b"), three) == P(three, "b*c"));
}

TEST_CASE("injVarsOffset preserves coefficients and shifts every exponent") {
  Ring src = ringQ({"x", "y"});
  Ring dst = ringQ({"a", "b", "c", "d"}, MonomialOrder::lex());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> e(0, 4);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial::Term> ts;
    for (int i = 0; i < 5; ++i)
      ts.push_back({Monomial({e(rng), e(rng)}),
                    Field::rationals().fromInteger(c(rng))});
    Polynomial f = Polynomial::fromTerms(src, ts);
    Polynomial g = injVarsOffset(2, f, dst);
    CHECK(g.termCount() == f.termCount());
    for (const auto& t : f.terms()) {
      bool found = false;
      for (const auto& u : g.terms()) {
        if (u.mono == Monomial({0, 0, t.mono[0], t.mono[1]})) {
          CHECK(u.coeff == t.coeff);
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("remapVariables follows names") {
  Ring src = ringQ({"x", "y", "z"});
  Ring dst = ringQ({"w", "z", "y", "u", "x"}, MonomialOrder::lex());
  Polynomial f = P(src, "x*y*z + 2*y");
  Polynomial g = remapVariables(f, dst);
  CHECK(g == P(dst, "x*y*z + 2*y"));

  Ring dst2 = ringQ({"z", "y", "x"});
  CHECK(remapVariables(f, dst2) == P(dst2, "x*y*z + 2*y"));

  Ring missing = ringQ({"b", "c"});
  CHECK_THROWS_AS(remapVariables(P(ringQ({"a"}), "a"), missing), NameNotFound);
  Ring unnamed = makeRing(3, MonomialOrder::grevlex(), Field::rationals());
  CHECK_THROWS_AS(remapVariables(f, unnamed), NoNames);
}

TEST_CASE("homogenisation") {
  Ring r = ringQ({"x", "y"});
  Polynomial f = P(r, "x^2 + y");
  Polynomial h = homogenise(f);
  CHECK(h.ring()->arity() == 3);
  CHECK(h.ring()->order().kind() == MonomialOrder::Kind::HomogInduced);
  CHECK(h.str() == "x^2 + y*h");
  CHECK(isHomogeneous(h));
  CHECK_FALSE(isHomogeneous(f));
  CHECK(isHomogeneous(P(r, "x^2 + y*x")));
  CHECK(unhomogenise(h) == f);
  CHECK_THROWS_AS(unhomogenise(f), NotHomogenisedRing);

  Polynomial g = P(r, "x^3 - x - 1");
  CHECK(unhomogenise(homogenise(g)) == g);
}

TEST_CASE("homogenise roundtrip on random polynomials") {
  Ring r = ringQ({"x", "y", "z"});
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Polynomial::Term> ts;
    for (int i = 0; i < 4; ++i)
      ts.push_back({Monomial({e(rng), e(rng), e(rng)}),
                    Field::rationals().fromInteger(c(rng))});
    Polynomial f = Polynomial::fromTerms(r, ts);
    Polynomial h = homogenise(f);
    CHECK(isHomogeneous(h));
    CHECK(unhomogenise(h) == f);
  }
}

TEST_CASE("homogenising variable name avoids collisions") {
  Ring r = ringQ({"h", "y"});
  Ring hr = homogenisedRing(r);
  CHECK(hr->names() == std::vector<std::string>{"h", "y", "h0"});
}

TEST_CASE("printing is deterministic and descending") {
  Ring r = ringQ({"x", "y", "z"});
  CHECK(Polynomial::zero(r).str() == "0");
  CHECK(P(r, "z + x^2*y + 1 + 3*x").str() == "x^2*y + 3*x + z + 1");
  CHECK(P(r, "-x - 1").str() == "-x - 1");
  Ring fp = makeRing(2, MonomialOrder::lex(), Field::prime(7),
                     std::vector<std::string>{"x", "y"});
  CHECK(parsePolynomial("x - y", fp).str() == "x + 6*y");
}

TEST_CASE("parser round trips printed output") {
  Ring r = ringQ({"x", "y", "z"}, MonomialOrder::lex());
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint32_t> e(0, 5);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Polynomial::Term> ts;
    for (int i = 0; i < 5; ++i)
      ts.push_back({Monomial({e(rng), e(rng), e(rng)}),
                    Field::rationals().fromQuotient(num(rng), den(rng))});
    Polynomial f = Polynomial::fromTerms(r, ts);
    CHECK(parsePolynomial(f.str(), r) == f);
    CHECK(parsePolynomial(f.str(), r).str() == f.str());
  }
}

TEST_CASE("parser errors carry positions") {
  Ring r = ringQ({"x", "y"});
  CHECK_THROWS_AS(parsePolynomial("x + ", r), ParseError);
  CHECK_THROWS_AS(parsePolynomial("w + 1", r), UnknownVariable);
  CHECK_THROWS_AS(parsePolynomial("x ? y", r), ParseError);
  try {
    parsePolynomial("x + @", r, 4);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 5);
  }
  Ring fp = makeRing(1, MonomialOrder::lex(), Field::prime(5),
                     std::vector<std::string>{"x"});
  CHECK_THROWS_AS(parsePolynomial("1/2*x", fp), ParseError);
}

TEST_CASE("ring headers and jobs") {
  Ring r = parseRingHeader("ring Q [x,y,z] grevlex");
  CHECK(r->arity() == 3);
  CHECK(r->field().isRationals());
  CHECK(r->order() == MonomialOrder::grevlex());

  Ring r2 = parseRingHeader("ring fp:32003 [a, b] graded(lex)");
  CHECK(r2->field().modulus() == 32003);
  CHECK(r2->order() == MonomialOrder::graded(MonomialOrder::lex()));

  CHECK_THROWS_AS(parseRingHeader("ring Q [x,y,x] lex"), DuplicateVariable);
  CHECK_THROWS_AS(parseRingHeader("ring Z [x] lex"), ParseError);

  JobSpec job = parseJob("# comment\n"
                         "ring Q [x,y,z] grevlex\n"
                         "x*y*z + 2*y - 3*z*x + 1\n"
                         "\n"
                         "x - y\n");
  CHECK(job.generators.size() == 2);
  CHECK(job.generators[0] == P(job.ring, "x*y*z - 3*x*z + 2*y + 1"));
  CHECK_THROWS_AS(parseJob("x + y\n"), ParseError);
}

TEST_CASE("ideal construction validates generators") {
  Ring r = ringQ({"x", "y"});
  CHECK_THROWS_AS(Ideal(r, {Polynomial::zero(r)}), ZeroPolynomial);
  Ring s = ringQ({"x", "y"}, MonomialOrder::lex());
  CHECK_THROWS_AS(Ideal(r, {P(s, "x")}), RingMismatch);
  Ideal I(r, {P(r, "x"), P(r, "y")});
  CHECK(I.size() == 2);
}
