#ifndef CAGB_MONOMIAL_HPP
#define CAGB_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "cagb/errors.hpp"

namespace cagb {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

// Fixed-arity exponent vector. Exponent additions are overflow-checked;
// degrees at any sane scale fit easily, and wraparound would silently
// corrupt every order comparison.
class Monomial {
public:
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t totalDegree() const;
  bool isOne() const;

  Monomial operator*(const Monomial& rhs) const; // throws ArityMismatch
  bool divides(const Monomial& into) const;
  Monomial dividedBy(const Monomial& divisor) const; // throws NotDivisible
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprimeWith(const Monomial& rhs) const;

  bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }

private:
  std::vector<std::uint32_t> exps_;
};

void requireSameArity(const Monomial& a, const Monomial& b);

// Total multiplicative order on monomials of one arity.
//   Lex            leftmost differing exponent decides
//   Grevlex        total degree first; ties: rightmost nonzero entry of a-b
//                  negative means a greater
//   Graded(o)      total degree first, then o; Graded(Graded(o)) normalizes
//                  to Graded(o) at construction
//   HomogInduced(o) order for a ring extended by a homogenising variable in
//                  the last slot: total degree first, then o on the original
//                  variables
class MonomialOrder {
public:
  enum class Kind { Lex, Grevlex, Graded, HomogInduced };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, nullptr); }
  static MonomialOrder grevlex() {
    return MonomialOrder(Kind::Grevlex, nullptr);
  }
  static MonomialOrder graded(MonomialOrder base);
  static MonomialOrder homogInduced(MonomialOrder base);

  Kind kind() const { return kind_; }
  const MonomialOrder& base() const { return *base_; } // Graded/HomogInduced

  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::LT;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::GT;
  }

  bool operator==(const MonomialOrder& rhs) const;
  std::string name() const; // "lex", "grevlex", "graded(lex)", "homog(...)"

private:
  MonomialOrder(Kind kind, std::shared_ptr<const MonomialOrder> base)
      : kind_(kind), base_(std::move(base)) {}

  Ordering compareImpl(const std::uint32_t* a, const std::uint32_t* b,
                       std::size_t n) const;

  Kind kind_;
  std::shared_ptr<const MonomialOrder> base_;
};

} // namespace cagb

#endif
