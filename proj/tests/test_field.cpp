#include <doctest.h>

#include <random>

#include "cagb/field.hpp"

using namespace cagb;

TEST_CASE("rational arithmetic is exact and canonical") {
  Field q = Field::rationals();
  FieldElem half = q.fromQuotient(1, 2);
  FieldElem third = q.fromQuotient(1, 3);
  CHECK((half + third).str() == "5/6");

  FieldElem sum = q.fromQuotient(2, 4) + q.fromQuotient(2, 6);
  CHECK(sum == half + third); // canonical regardless of construction route
  CHECK(sum.str() == "5/6");

  FieldElem x = q.fromQuotient(-7, 3);
  CHECK(x + q.zero() == x);
  CHECK(x.str() == "-7/3");
  CHECK((-x).str() == "7/3");
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.fromInteger(2) * f5.fromInteger(3) == f5.fromInteger(1));
  CHECK(f5.fromInteger(-1) == f5.fromInteger(4));
  CHECK(f5.fromInteger(2).recip() == f5.fromInteger(3));
  CHECK((f5.fromInteger(2) - f5.fromInteger(4)).residue() == 3);
}

TEST_CASE("recip") {
  Field q = Field::rationals();
  CHECK(q.fromQuotient(2, 3).recip().str() == "3/2");
  CHECK_THROWS_AS(q.zero().recip(), DivisionByZero);
  CHECK_THROWS_AS(Field::prime(5).zero().recip(), DivisionByZero);
}

TEST_CASE("mixed fields are rejected") {
  Field q = Field::rationals();
  Field f5 = Field::prime(5);
  Field f7 = Field::prime(7);
  CHECK_THROWS_AS(q.one() + f5.one(), MixedFieldError);
  CHECK_THROWS_AS(f5.one() * f7.one(), MixedFieldError);
  CHECK_THROWS_AS((void)(f5.one() == f7.one()), MixedFieldError);
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Field::prime(1), NotPrime);
  CHECK_THROWS_AS(Field::prime(4), NotPrime);
  CHECK_THROWS_AS(Field::prime(32004), NotPrime);
  CHECK(Field::prime(2).fromInteger(3).residue() == 1);
  CHECK(Field::prime(32003).modulus() == 32003);
}

TEST_CASE("deterministic Miller-Rabin") {
  CHECK(isPrime(2));
  CHECK(isPrime(32003));
  CHECK(isPrime(4294967291ull));        // largest 32-bit prime
  CHECK(isPrime(2305843009213693951ull)); // 2^61 - 1
  CHECK_FALSE(isPrime(1));
  CHECK_FALSE(isPrime(3215031751ull)); // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(isPrime(32004));
}

namespace {

// prop_division plus ring laws over random triples.
void checkFieldLaws(const Field& k, FieldElem (*gen)(std::mt19937_64&)) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    FieldElem a = gen(rng), b = gen(rng), c = gen(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * k.one() == a);
    CHECK(k.one() * a == a);
    if (!a.isZero()) {
      CHECK(a.recip() * a == k.one());
      CHECK(a * a.recip() == k.one());
    }
  }
}

FieldElem randomRational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return Field::rationals().fromQuotient(num(rng), den(rng));
}

FieldElem randomFp(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> v(0, 32002);
  return Field::prime(32003).fromInteger(v(rng));
}

} // namespace

TEST_CASE("division ring axioms hold on random samples") {
  checkFieldLaws(Field::rationals(), randomRational);
  checkFieldLaws(Field::prime(32003), randomFp);
}
