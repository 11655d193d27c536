#ifndef CAGB_F4_HPP
#define CAGB_F4_HPP

#include <functional>

#include "cagb/matrix.hpp"
#include "cagb/polynomial.hpp"

namespace cagb {

// Weighting function on critical pairs; each iteration selects every pair
// of minimum weight and reduces them in one matrix.
using SelectionStrategy =
    std::function<std::uint64_t(const Polynomial&, const Polynomial&)>;

// Total degree of the pair lcm.
SelectionStrategy normalStrategy();
// Largest total degree of the two polynomials.
SelectionStrategy degreeStrategy();
SelectionStrategy strategyByName(const std::string& name); // normal|degree

struct F4Pair {
  std::size_t i, j; // indices into the basis, i < j
};

// The macaulay-style matrix of one F4 iteration: columns are the monomials
// in play, descending under the ring order; rows are the pair multiples
// followed by one reducer multiple for every reducible monomial.
struct F4Matrix {
  std::vector<Monomial> columns;
  // (column index, coefficient), ascending column index per row
  std::vector<std::vector<std::pair<std::size_t, FieldElem>>> rows;
};

F4Matrix symbolicPreprocessing(const std::vector<F4Pair>& pairs,
                               const std::vector<Polynomial>& basis);

std::vector<Polynomial> f4(const MatrixBackend& backend,
                           const SelectionStrategy& strategy, const Ideal& I);

} // namespace cagb

#endif
