#include "cagb/monomial.hpp"

#include <algorithm>
#include <limits>

namespace cagb {

void requireSameArity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw ArityMismatch("monomial arities differ: " +
                        std::to_string(a.arity()) + " vs " +
                        std::to_string(b.arity()));
}

std::uint64_t Monomial::totalDegree() const {
  std::uint64_t d = 0;
  for (std::uint32_t e : exps_)
    d += e;
  return d;
}

bool Monomial::isOne() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  requireSameArity(*this, rhs);
  std::vector<std::uint32_t> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t s = std::uint64_t(exps_[i]) + rhs.exps_[i];
    if (s > std::numeric_limits<std::uint32_t>::max())
      throw OverflowError("exponent overflow in monomial product");
    out[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& into) const {
  requireSameArity(*this, into);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > into.exps_[i])
      return false;
  return true;
}

Monomial Monomial::dividedBy(const Monomial& divisor) const {
  requireSameArity(*this, divisor);
  std::vector<std::uint32_t> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i])
      throw NotDivisible("monomial division with remainder");
    out[i] = exps_[i] - divisor.exps_[i];
  }
  return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  requireSameArity(a, b);
  std::vector<std::uint32_t> out(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    out[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  requireSameArity(a, b);
  std::vector<std::uint32_t> out(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    out[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(out));
}

bool Monomial::coprimeWith(const Monomial& rhs) const {
  requireSameArity(*this, rhs);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && rhs.exps_[i] != 0)
      return false;
  return true;
}

MonomialOrder MonomialOrder::graded(MonomialOrder base) {
  if (base.kind_ == Kind::Graded) // graded is idempotent
    return base;
  return MonomialOrder(Kind::Graded,
                       std::make_shared<MonomialOrder>(std::move(base)));
}

MonomialOrder MonomialOrder::homogInduced(MonomialOrder base) {
  return MonomialOrder(Kind::HomogInduced,
                       std::make_shared<MonomialOrder>(std::move(base)));
}

namespace {

std::uint64_t degreeOf(const std::uint32_t* a, std::size_t n) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < n; ++i)
    d += a[i];
  return d;
}

Ordering fromCmp(std::int64_t c) {
  return c < 0 ? Ordering::LT : c > 0 ? Ordering::GT : Ordering::EQ;
}

} // namespace

Ordering MonomialOrder::compareImpl(const std::uint32_t* a,
                                    const std::uint32_t* b,
                                    std::size_t n) const {
  switch (kind_) {
  case Kind::Lex:
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i])
        return fromCmp(std::int64_t(a[i]) - b[i]);
    return Ordering::EQ;
  case Kind::Grevlex: {
    std::uint64_t da = degreeOf(a, n), db = degreeOf(b, n);
    if (da != db)
      return da < db ? Ordering::LT : Ordering::GT;
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i])
        return a[i] > b[i] ? Ordering::LT : Ordering::GT;
    return Ordering::EQ;
  }
  case Kind::Graded: {
    std::uint64_t da = degreeOf(a, n), db = degreeOf(b, n);
    if (da != db)
      return da < db ? Ordering::LT : Ordering::GT;
    return base_->compareImpl(a, b, n);
  }
  case Kind::HomogInduced: {
    // Last slot is the homogenising variable; counted for the degree,
    // excluded from the base comparison. Equal degree and equal originals
    // force equal homogenising exponents, so this is total.
    std::uint64_t da = degreeOf(a, n), db = degreeOf(b, n);
    if (da != db)
      return da < db ? Ordering::LT : Ordering::GT;
    if (n == 0)
      return Ordering::EQ;
    return base_->compareImpl(a, b, n - 1);
  }
  }
  return Ordering::EQ; // unreachable
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  requireSameArity(a, b);
  return compareImpl(a.exponents().data(), b.exponents().data(), a.arity());
}

bool MonomialOrder::operator==(const MonomialOrder& rhs) const {
  if (kind_ != rhs.kind_)
    return false;
  if (!base_)
    return true;
  return *base_ == *rhs.base_;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
  case Kind::Lex:
    return "lex";
  case Kind::Grevlex:
    return "grevlex";
  case Kind::Graded:
    return "graded(" + base_->name() + ")";
  case Kind::HomogInduced:
    return "homog(" + base_->name() + ")";
  }
  return "";
}

} // namespace cagb
