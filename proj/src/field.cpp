#include "cagb/field.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace cagb {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulMod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 addMod(u64 a, u64 b, u64 p) {
  // a, b < p; avoids overflow for p close to 2^63
  return a >= p - b ? a - (p - b) : a + b;
}

u64 subMod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powMod(u64 base, u64 exp, u64 p) {
  u64 acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1)
      acc = mulMod(acc, base, p);
    base = mulMod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

// Extended Euclid inverse of a mod p, a in (0, p).
u64 invMod(u64 a, u64 p) {
  __int128 t = 0, newT = 1;
  __int128 r = p, newR = a;
  while (newR != 0) {
    __int128 q = r / newR;
    t = std::exchange(newT, t - q * newT);
    r = std::exchange(newR, r - q * newR);
  }
  // r == 1 since p is prime and 0 < a < p
  if (t < 0)
    t += p;
  return static_cast<u64>(t);
}

constexpr u64 kMaxModulus = u64(1) << 62;

} // namespace

bool isPrime(u64 n) {
  if (n < 2)
    return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == q)
      return true;
    if (n % q == 0)
      return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for all n < 3.3 * 10^24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powMod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulMod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness)
      return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (p >= kMaxModulus)
    throw NotPrime("modulus too large (must be below 2^62): " +
                   std::to_string(p));
  if (!isPrime(p))
    throw NotPrime("modulus is not prime: " + std::to_string(p));
  return Field(p);
}

FieldElem Field::zero() const {
  return isRationals() ? FieldElem(BigRational(0)) : FieldElem(0, p_);
}

FieldElem Field::one() const {
  return isRationals() ? FieldElem(BigRational(1)) : FieldElem(1 % p_, p_);
}

FieldElem Field::fromInteger(const BigInt& z) const {
  if (isRationals())
    return FieldElem(BigRational(z));
  BigInt r = z % BigInt(static_cast<unsigned long>(p_));
  if (r < 0)
    r += BigInt(static_cast<unsigned long>(p_));
  return FieldElem(r.get_ui(), p_);
}

FieldElem Field::fromInteger(long z) const { return fromInteger(BigInt(z)); }

FieldElem Field::fromQuotient(const BigInt& num, const BigInt& den) const {
  if (den == 0)
    throw DivisionByZero("zero denominator");
  if (isRationals()) {
    BigRational q(num, den);
    q.canonicalize();
    return FieldElem(std::move(q));
  }
  FieldElem d = fromInteger(den);
  if (d.isZero())
    throw DivisionByZero("denominator vanishes mod " + std::to_string(p_));
  return fromInteger(num) * d.recip();
}

std::string Field::name() const {
  return isRationals() ? "Q" : "fp:" + std::to_string(p_);
}

Field FieldElem::field() const {
  // Moduli inside elements were validated when their Field was made.
  if (const auto* fp = std::get_if<Fp>(&rep_))
    return Field(fp->p);
  return Field::rationals();
}

bool FieldElem::isZero() const {
  if (const auto* fp = std::get_if<Fp>(&rep_))
    return fp->value == 0;
  return std::get<BigRational>(rep_) == 0;
}

bool FieldElem::isOne() const {
  if (const auto* fp = std::get_if<Fp>(&rep_))
    return fp->value == 1 % fp->p;
  return std::get<BigRational>(rep_) == 1;
}

namespace {

[[noreturn]] void throwMixed() {
  throw MixedFieldError("operands belong to different fields");
}

} // namespace

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
  if (const auto* a = std::get_if<Fp>(&rep_)) {
    const auto* b = std::get_if<Fp>(&rhs.rep_);
    if (!b || a->p != b->p)
      throwMixed();
    return FieldElem(addMod(a->value, b->value, a->p), a->p);
  }
  if (!std::holds_alternative<BigRational>(rhs.rep_))
    throwMixed();
  return FieldElem(
      BigRational(std::get<BigRational>(rep_) + std::get<BigRational>(rhs.rep_)));
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const {
  if (const auto* a = std::get_if<Fp>(&rep_)) {
    const auto* b = std::get_if<Fp>(&rhs.rep_);
    if (!b || a->p != b->p)
      throwMixed();
    return FieldElem(subMod(a->value, b->value, a->p), a->p);
  }
  if (!std::holds_alternative<BigRational>(rhs.rep_))
    throwMixed();
  return FieldElem(
      BigRational(std::get<BigRational>(rep_) - std::get<BigRational>(rhs.rep_)));
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
  if (const auto* a = std::get_if<Fp>(&rep_)) {
    const auto* b = std::get_if<Fp>(&rhs.rep_);
    if (!b || a->p != b->p)
      throwMixed();
    return FieldElem(mulMod(a->value, b->value, a->p), a->p);
  }
  if (!std::holds_alternative<BigRational>(rhs.rep_))
    throwMixed();
  return FieldElem(
      BigRational(std::get<BigRational>(rep_) * std::get<BigRational>(rhs.rep_)));
}

FieldElem FieldElem::operator-() const {
  if (const auto* a = std::get_if<Fp>(&rep_))
    return FieldElem(a->value == 0 ? 0 : a->p - a->value, a->p);
  return FieldElem(BigRational(-std::get<BigRational>(rep_)));
}

FieldElem FieldElem::recip() const {
  if (isZero())
    throw DivisionByZero("recip of zero");
  if (const auto* a = std::get_if<Fp>(&rep_))
    return FieldElem(invMod(a->value, a->p), a->p);
  return FieldElem(BigRational(1 / std::get<BigRational>(rep_)));
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  return *this = *this + rhs;
}
FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  return *this = *this - rhs;
}
FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  return *this = *this * rhs;
}

bool FieldElem::operator==(const FieldElem& rhs) const {
  if (rep_.index() != rhs.rep_.index())
    throwMixed();
  if (const auto* a = std::get_if<Fp>(&rep_)) {
    const auto& b = std::get<Fp>(rhs.rep_);
    if (a->p != b.p)
      throwMixed();
    return a->value == b.value;
  }
  return std::get<BigRational>(rep_) == std::get<BigRational>(rhs.rep_);
}

const BigRational& FieldElem::rational() const {
  if (!std::holds_alternative<BigRational>(rep_))
    throw MixedFieldError("element is not rational");
  return std::get<BigRational>(rep_);
}

std::uint64_t FieldElem::residue() const {
  if (const auto* a = std::get_if<Fp>(&rep_))
    return a->value;
  throw MixedFieldError("element is not in a prime field");
}

std::string FieldElem::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) {
  if (e.field().isRationals())
    return os << e.rational();
  return os << e.residue();
}

} // namespace cagb
