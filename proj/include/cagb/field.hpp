#ifndef CAGB_FIELD_HPP
#define CAGB_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "cagb/errors.hpp"

namespace cagb {

using BigInt = mpz_class;

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1 and
// den >= 1. GMP maintains this under arithmetic as long as inputs are
// canonical, so every constructor below canonicalizes.
using BigRational = mpq_class;

// Deterministic Miller-Rabin for 64-bit inputs.
bool isPrime(std::uint64_t n);

class FieldElem;

// Descriptor of a coefficient field: the rationals or a prime field F_p.
// Moduli are capped at 2^62 so products fit in 128-bit intermediates.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p); // throws NotPrime

  bool isRationals() const { return p_ == 0; }
  bool isPrimeField() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; } // 0 for the rationals

  bool operator==(const Field& rhs) const = default;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem fromInteger(const BigInt& z) const;
  FieldElem fromInteger(long z) const;
  // num / den; throws DivisionByZero when den vanishes in the field.
  FieldElem fromQuotient(const BigInt& num, const BigInt& den) const;

  // "Q" or "fp:<p>", as accepted by ring headers and --field.
  std::string name() const;

private:
  friend class FieldElem;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

// One exact field element. Carries its field so that mixed-field operations
// are detected at run time (MixedFieldError).
class FieldElem {
public:
  FieldElem() : rep_(BigRational(0)) {} // zero of Q; containers need this

  Field field() const;
  bool isZero() const;
  bool isOne() const;

  FieldElem operator+(const FieldElem& rhs) const;
  FieldElem operator-(const FieldElem& rhs) const;
  FieldElem operator*(const FieldElem& rhs) const;
  FieldElem operator-() const;
  FieldElem recip() const; // throws DivisionByZero on zero
  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);

  bool operator==(const FieldElem& rhs) const;
  bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }

  // Accessors for the concrete representation; misuse throws MixedFieldError.
  const BigRational& rational() const;
  std::uint64_t residue() const;

  std::string str() const;

private:
  friend class Field;
  struct Fp {
    std::uint64_t value;
    std::uint64_t p;
    bool operator==(const Fp&) const = default;
  };
  explicit FieldElem(BigRational q) : rep_(std::move(q)) {}
  FieldElem(std::uint64_t value, std::uint64_t p) : rep_(Fp{value, p}) {}

  std::variant<BigRational, Fp> rep_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

} // namespace cagb

#endif
