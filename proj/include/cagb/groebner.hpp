#ifndef CAGB_GROEBNER_HPP
#define CAGB_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cagb/polynomial.hpp"

namespace cagb {

// f = sum(quotients[i] * divisors[i]) + remainder, and no monomial of the
// remainder is divisible by the lead of any divisor.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division. Deterministic: at every step the first divisor
// whose lead divides the current lead is chosen.
DivisionResult normalForm(const Polynomial& f,
                          const std::vector<Polynomial>& divisors);

// (lcm/lt f) * f - (lcm/lt g) * g; lead terms cancel.
Polynomial sPoly(const Polynomial& f, const Polynomial& g);

// Critical pair under the sugar selection strategy.
struct SugarPair {
  std::size_t i, j; // i < j
  Monomial lcm;
  std::uint64_t sugar;
};

// Buchberger with the sugar strategy and the Gebauer-Moller criteria.
// Output is monic and contains the (monic) input generators.
std::vector<Polynomial> buchberger(const Ideal& I);

// Result of a run that tracks each basis element as an explicit combination
// of the input generators: basis[k] = sum_i cofactors[k][i] * gens[i].
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

enum class PairSelection {
  Sugar, // minimal sugar, ties by smaller lcm
  Degree // minimal lcm degree, ties by smaller lcm
};

TrackedBasis buchbergerTracked(const Ideal& I,
                               PairSelection selection = PairSelection::Sugar,
                               bool track = true);

// Interreduces G to the unique reduced basis: monic, no term of any element
// divisible by another's lead, sorted descending by lead monomial. With
// checkBasis set the result is S-tested and NotABasis raised on failure.
std::vector<Polynomial> reduceGB(std::vector<Polynomial> G,
                                 bool checkBasis = true);

// S-test: every pairwise S-polynomial reduces to zero modulo G.
bool isGroebnerBasis(const std::vector<Polynomial>& G);

struct MembershipResult {
  bool member;
  // Present iff member: f = sum cofactors[i] * I.generators()[i], exactly.
  std::optional<std::vector<Polynomial>> cofactors;
};

MembershipResult idealMembership(const Polynomial& f, const Ideal& I);

} // namespace cagb

#endif
