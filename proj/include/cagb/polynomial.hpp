#ifndef CAGB_POLYNOMIAL_HPP
#define CAGB_POLYNOMIAL_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cagb/ring.hpp"

namespace cagb {

// Sparse multivariate polynomial over a field. Terms are kept strictly
// descending under the ring order with no zero coefficients stored.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    FieldElem coeff;
  };

  static Polynomial zero(Ring ring);
  static Polynomial constant(const Ring& ring, const FieldElem& c);
  static Polynomial constant(const Ring& ring, long c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial monomial(const Ring& ring, Monomial m);
  static Polynomial term(const Ring& ring, FieldElem c, Monomial m);
  // Normalizes: merges duplicates, drops zeros, sorts descending. Validates
  // arity of every monomial and the field of every coefficient.
  static Polynomial fromTerms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; } // descending

  const Term& leadTerm() const; // throws ZeroPolynomial
  const Monomial& leadMonomial() const { return leadTerm().mono; }
  const FieldElem& leadCoeff() const { return leadTerm().coeff; }
  Polynomial tail() const; // everything but the lead term
  std::uint64_t totalDegree() const; // throws ZeroPolynomial

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial scaled(const FieldElem& c) const;
  // *this + c * (m * g), single merge pass; the workhorse of division.
  Polynomial plusScaledMultiple(const FieldElem& c, const Monomial& m,
                                const Polynomial& g) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  std::string str() const;

private:
  Polynomial(Ring ring, std::vector<Term> sorted)
      : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

// Finite ordered list of nonzero generators over one ring.
class Ideal {
public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const Polynomial& operator[](std::size_t i) const { return gens_[i]; }

private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

// ---------------------------------------------------------------------------
// The universal property: the unique ring homomorphism extending a variable
// assignment and acting on coefficients through `scale`.

template <class Alg>
struct LiftTarget {
  Alg zero;
  Alg one;
  std::function<Alg(const Alg&, const Alg&)> add;
  std::function<Alg(const Alg&, const Alg&)> mul;
  std::function<Alg(const FieldElem&, const Alg&)> scale;
};

template <class Alg>
Alg liftMap(const Polynomial& f, const std::vector<Alg>& images,
            const LiftTarget<Alg>& target) {
  if (images.size() != f.ring()->arity())
    throw ArityMismatch("liftMap needs one image per variable");
  Alg acc = target.zero;
  for (const auto& t : f.terms()) {
    Alg prod = target.one;
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e)
        prod = target.mul(prod, images[i]);
    acc = target.add(acc, target.scale(t.coeff, prod));
  }
  return acc;
}

// liftMap into the coefficient field itself.
FieldElem evaluate(const Polynomial& f, const std::vector<FieldElem>& point);
// liftMap into another polynomial ring over the same field.
Polynomial liftToRing(const Polynomial& f, const Ring& target,
                      const std::vector<Polynomial>& images);

// ---------------------------------------------------------------------------
// Casting family.

// Same arity, order and field; only representation or names differ.
Polynomial convPoly(const Polynomial& f, const Ring& target);
// Variable i of the source becomes variable i + k of the target.
Polynomial injVarsOffset(std::size_t k, const Polynomial& f,
                         const Ring& target);
Polynomial injVars(const Polynomial& f, const Ring& target);
Polynomial injVarsAtEnd(const Polynomial& f, const Ring& target);
// Map each variable to the identically named variable of the target.
Polynomial remapVariables(const Polynomial& f, const Ring& target);
// Same ring under a different order (terms re-sorted).
Polynomial changeOrder(const Polynomial& f, const MonomialOrder& order);

// ---------------------------------------------------------------------------
// Homogenisation. The homogenising variable is appended last; the order of
// the extended ring is homogInduced(base).

Ring homogenisedRing(const Ring& r);
bool isHomogeneous(const Polynomial& f);
Polynomial homogenise(const Polynomial& f);
Polynomial unhomogenise(const Polynomial& h); // throws NotHomogenisedRing
Ideal homogenise(const Ideal& I);

} // namespace cagb

#endif
