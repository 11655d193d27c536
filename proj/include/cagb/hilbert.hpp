#ifndef CAGB_HILBERT_HPP
#define CAGB_HILBERT_HPP

#include <functional>
#include <string>
#include <vector>

#include "cagb/groebner.hpp"
#include "cagb/polynomial.hpp"

namespace cagb {

// Dense univariate polynomial over arbitrary-precision integers, in the
// indeterminate t. No trailing zero coefficients are stored.
class UniPoly {
public:
  UniPoly() = default; // zero
  explicit UniPoly(std::vector<BigInt> coeffs);
  static UniPoly constant(BigInt c);
  static UniPoly one() { return constant(1); }
  // t^k
  static UniPoly power(std::size_t k);

  bool isZero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt at(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  UniPoly operator+(const UniPoly& rhs) const;
  UniPoly operator-(const UniPoly& rhs) const;
  UniPoly operator*(const UniPoly& rhs) const;
  UniPoly shifted(std::size_t k) const; // * t^k

  bool operator==(const UniPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  std::string str() const; // e.g. "1 - 2*t^2 + t^3"

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// First k coefficients of the Cauchy product of two (zero-extended) integer
// sequences: out[m] = sum_{i+j=m} xs[i]*ys[j]. The parallel path splits the
// output range across threads; results are identical either way.
std::vector<BigInt> conv(const std::vector<BigInt>& xs,
                         const std::vector<BigInt>& ys, std::size_t k,
                         bool parallel = false);

// Hilbert-Poincare series numerator/(1-t)^n, determined by the numerator.
class HPS {
public:
  HPS(std::size_t arity, UniPoly numerator)
      : arity_(arity), numerator_(std::move(numerator)) {}

  std::size_t arity() const { return arity_; }
  const UniPoly& numerator() const { return numerator_; }
  // First k Taylor coefficients: coeff m = sum_d num_d * C(m-d+n-1, n-1).
  std::vector<BigInt> taylor(std::size_t k) const;

  bool operator==(const HPS& rhs) const {
    return arity_ == rhs.arity_ && numerator_ == rhs.numerator_;
  }

private:
  std::size_t arity_;
  UniPoly numerator_;
};

HPS hpsAdd(const HPS& a, const HPS& b); // ArityMismatch
// The Z[t]-module action: numerator multiplies by f; the Taylor view is the
// convolution of f's coefficients (zero-extended) with the series.
HPS hpsModuleAction(const UniPoly& f, const HPS& a);

// Numerator of the HPS of R/<gens> over (1-t)^arity. Independent of the
// order of the generators and of redundant generators.
UniPoly hilbertNumerator(const std::vector<Monomial>& gens, std::size_t arity);
HPS hilbertSeriesOfLeads(const std::vector<Polynomial>& basis,
                         const Ring& ring);

// Buchberger specialised to homogeneous ideals: S-pairs processed in
// nondecreasing lcm degree, so the basis is complete below the current
// degree at every step. Throws NotHomogeneous.
std::vector<Polynomial> degreeByDegreeGB(const Ideal& I);

// Hilbert-driven conversion: a basis under easyOrder prices out the target
// computation; within each degree d, reduction stops once the lead-term
// Hilbert function matches the target through d. Throws NotHomogeneous.
std::vector<Polynomial> hilbertDrivenGB(const Ideal& I,
                                        const MonomialOrder& easyOrder,
                                        const MonomialOrder& targetOrder);

// Lifts any homogeneous-input algorithm to arbitrary ideals: homogenise,
// run, unhomogenise. Homogeneous inputs are passed through directly.
using GBAlgorithm = std::function<std::vector<Polynomial>(const Ideal&)>;
std::vector<Polynomial> calcGBViaHomog(const GBAlgorithm& algo,
                                       const Ideal& I);

} // namespace cagb

#endif
