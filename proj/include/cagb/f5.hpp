#ifndef CAGB_F5_HPP
#define CAGB_F5_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cagb/polynomial.hpp"

namespace cagb {

// Lead module term of an element's representation over the inputs, under
// the position-over-term order: lower index first, ring order on ties.
struct Signature {
  std::size_t index;
  Monomial monomial;

  bool operator==(const Signature& rhs) const {
    return index == rhs.index && monomial == rhs.monomial;
  }
};

Ordering compareSignatures(const MonomialOrder& ord, const Signature& a,
                           const Signature& b);
// Same index and the monomial divides.
bool signatureDivides(const Signature& div, const Signature& into);

// Basis element carrying its signature and its module representation:
// poly = sum vector[i] * inputs[i], exactly.
struct LabeledPolynomial {
  Signature signature;
  std::vector<Polynomial> vector;
  Polynomial poly;
};

// f scaled monic. Throws ZeroPolynomial.
Polynomial monoize(const Polynomial& f);

// Lead signatures of the Koszul syzygies f_m e_n - f_n e_m for m < n.
std::vector<Signature> koszulSyzygies(const std::vector<Polynomial>& inputs);

// True when a known syzygy signature divides sig; the reduction of any
// element with that signature is redundant.
bool standardCriterion(const Signature& sig,
                       const std::vector<Signature>& syzygies);

// Signature-safe normal form: only reduction steps whose basis multiple has
// module lead strictly below g's signature are applied. The result carries
// the same signature and stays label-consistent.
std::pair<std::vector<Polynomial>, Polynomial> reduceSignature(
    const std::vector<Polynomial>& inputs, const LabeledPolynomial& g,
    const std::vector<LabeledPolynomial>& basis);

// The S-pair of two labeled elements lifted to the module, keyed by the
// larger lifted signature; nothing when the pair is singular (both sides
// carry the same signature).
std::optional<LabeledPolynomial> regularSVector(const LabeledPolynomial& a,
                                                const LabeledPolynomial& b);

struct F5Options {
  // 0 = unbounded; otherwise DegreeBoundExceeded is raised as soon as a
  // basis element or signature passes the bound.
  std::uint64_t degreeBound = 0;
};

// Signature-based basis computation. Output polynomials form a basis of
// <inputs>; every element re-expands exactly through its vector.
std::vector<LabeledPolynomial> f5(const std::vector<Polynomial>& inputs,
                                  const F5Options& options = {});

} // namespace cagb

#endif
