#ifndef CAGB_GEN_HPP
#define CAGB_GEN_HPP

#include <cstdint>

#include "cagb/polynomial.hpp"

namespace cagb {

// Bounds and seed for random generation. The same config and seed always
// produce the same sequence (the bounded draw is hand-rolled, so the stream
// does not depend on the standard library's distributions).
struct GenConfig {
  std::size_t arity = 3;
  std::uint32_t maxDegree = 4;
  std::size_t maxTerms = 4;
  std::size_t maxGenerators = 4;
  Field field = Field::prime(32003);
  std::uint64_t seed = 0;
  MonomialOrder order = MonomialOrder::grevlex();

  GenConfig withSeed(std::uint64_t s) const {
    GenConfig out = *this;
    out.seed = s;
    return out;
  }
};

// Stream of random algebra objects drawn from a config.
class Generator {
public:
  explicit Generator(GenConfig cfg);

  const Ring& ring() const { return ring_; }
  std::uint64_t draw(std::uint64_t bound); // uniform in [0, bound)
  long intIn(long lo, long hi);
  FieldElem fieldElement();        // any element, zero included
  FieldElem nonzeroFieldElement();
  Monomial monomial();             // total degree <= maxDegree
  Polynomial polynomial();         // nonzero, within all bounds
  Polynomial homogeneousPolynomial();
  Ideal ideal();                   // 1..maxGenerators generators
  Ideal homogeneousIdeal();

private:
  std::uint64_t next();
  GenConfig cfg_;
  Ring ring_;
  std::uint64_t state_;
};

// Deterministic one-shot forms.
Polynomial genPolynomial(const GenConfig& cfg);
Ideal genIdeal(const GenConfig& cfg);

} // namespace cagb

#endif
