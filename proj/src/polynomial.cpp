#include "cagb/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cagb {

namespace {

void validateTerm(const RingDescriptor& ring, const Polynomial::Term& t) {
  if (t.mono.arity() != ring.arity())
    throw ArityMismatch("monomial arity does not match ring arity");
  if (t.coeff.field() != ring.field())
    throw MixedFieldError("coefficient from a different field");
}

} // namespace

Polynomial Polynomial::zero(Ring ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(const Ring& ring, const FieldElem& c) {
  return fromTerms(ring, {{Monomial(ring->arity()), c}});
}

Polynomial Polynomial::constant(const Ring& ring, long c) {
  return constant(ring, ring->field().fromInteger(c));
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring->arity())
    throw ArityMismatch("variable index out of range");
  std::vector<std::uint32_t> e(ring->arity(), 0);
  e[index] = 1;
  return fromTerms(ring, {{Monomial(std::move(e)), ring->field().one()}});
}

Polynomial Polynomial::monomial(const Ring& ring, Monomial m) {
  return fromTerms(ring, {{std::move(m), ring->field().one()}});
}

Polynomial Polynomial::term(const Ring& ring, FieldElem c, Monomial m) {
  return fromTerms(ring, {{std::move(m), std::move(c)}});
}

Polynomial Polynomial::fromTerms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    validateTerm(*ring, t);
  const MonomialOrder& ord = ring->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff.isZero())
      out.pop_back();
  }
  return Polynomial(std::move(ring), std::move(out));
}

const Polynomial::Term& Polynomial::leadTerm() const {
  if (terms_.empty())
    throw ZeroPolynomial("lead term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  if (terms_.empty())
    throw ZeroPolynomial("tail of the zero polynomial");
  return Polynomial(ring_,
                    std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

std::uint64_t Polynomial::totalDegree() const {
  if (terms_.empty())
    throw ZeroPolynomial("degree of the zero polynomial");
  std::uint64_t d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.mono.totalDegree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  return plusScaledMultiple(ring_->field().one(), Monomial(ring_->arity()),
                            rhs);
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  FieldElem minusOne = -ring_->field().one();
  return plusScaledMultiple(minusOne, Monomial(ring_->arity()), rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  requireArithCompatible(ring_, rhs.ring_);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_)
      prods.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return fromTerms(ring_, std::move(prods));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out)
    t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  if (c.isZero())
    return zero(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out)
    t.coeff = t.coeff * c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::plusScaledMultiple(const FieldElem& c,
                                          const Monomial& m,
                                          const Polynomial& g) const {
  requireArithCompatible(ring_, g.ring_);
  if (c.isZero() || g.isZero())
    return *this;
  const MonomialOrder& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].mono * m;
    if (i == terms_.size()) {
      FieldElem gc = c * g.terms_[j].coeff;
      if (!gc.isZero())
        out.push_back({std::move(gm), std::move(gc)});
      ++j;
      continue;
    }
    switch (ord.compare(terms_[i].mono, gm)) {
    case Ordering::GT:
      out.push_back(terms_[i++]);
      break;
    case Ordering::LT: {
      FieldElem gc = c * g.terms_[j].coeff;
      if (!gc.isZero())
        out.push_back({std::move(gm), std::move(gc)});
      ++j;
      break;
    }
    case Ordering::EQ: {
      FieldElem s = terms_[i].coeff + c * g.terms_[j].coeff;
      if (!s.isZero())
        out.push_back({std::move(gm), std::move(s)});
      ++i;
      ++j;
      break;
    }
    }
  }
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  requireArithCompatible(ring_, rhs.ring_);
  if (terms_.size() != rhs.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == rhs.terms_[i].mono) ||
        terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  return true;
}

namespace {

std::string monomialString(const RingDescriptor& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += ring.displayName(i);
    if (m[i] > 1)
      out += "^" + std::to_string(m[i]);
  }
  return out;
}

} // namespace

std::string Polynomial::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  if (f.isZero())
    return os << "0";
  const RingDescriptor& ring = *f.ring();
  bool first = true;
  for (const auto& t : f.terms()) {
    FieldElem mag = t.coeff;
    bool neg = false;
    if (ring.field().isRationals() && sgn(t.coeff.rational()) < 0) {
      neg = true;
      mag = -t.coeff;
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string ms = monomialString(ring, t.mono);
    if (ms.empty())
      os << mag.str();
    else if (mag.isOne())
      os << ms;
    else
      os << mag.str() << "*" << ms;
  }
  return os;
}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    requireArithCompatible(ring_, g.ring());
    if (g.isZero())
      throw ZeroPolynomial("ideal generators must be nonzero");
    gens_.push_back(convPoly(g, ring_));
  }
}

FieldElem evaluate(const Polynomial& f, const std::vector<FieldElem>& point) {
  const Field& k = f.ring()->field();
  LiftTarget<FieldElem> target{
      k.zero(), k.one(),
      [](const FieldElem& a, const FieldElem& b) { return a + b; },
      [](const FieldElem& a, const FieldElem& b) { return a * b; },
      [](const FieldElem& c, const FieldElem& a) { return c * a; }};
  return liftMap(f, point, target);
}

Polynomial liftToRing(const Polynomial& f, const Ring& target,
                      const std::vector<Polynomial>& images) {
  if (f.ring()->field() != target->field())
    throw IncompatibleRings("liftToRing requires the same coefficient field");
  LiftTarget<Polynomial> t{
      Polynomial::zero(target), Polynomial::constant(target, 1),
      [](const Polynomial& a, const Polynomial& b) { return a + b; },
      [](const Polynomial& a, const Polynomial& b) { return a * b; },
      [](const FieldElem& c, const Polynomial& a) { return a.scaled(c); }};
  return liftMap(f, images, t);
}

Polynomial convPoly(const Polynomial& f, const Ring& target) {
  if (f.ring() == target)
    return f; // identity fast path
  if (f.ring()->arity() != target->arity() ||
      !(f.ring()->order() == target->order()) ||
      f.ring()->field() != target->field())
    throw IncompatibleRings(
        "convPoly requires equal arity, order and field");
  // Same order, so the term sequence transfers verbatim.
  std::vector<Polynomial::Term> terms = f.terms();
  return Polynomial::fromTerms(target, std::move(terms));
}

Polynomial injVarsOffset(std::size_t k, const Polynomial& f,
                         const Ring& target) {
  std::size_t n = f.ring()->arity(), m = target->arity();
  if (k + n > m)
    throw ArityOverflow("offset " + std::to_string(k) + " plus arity " +
                        std::to_string(n) + " exceeds target arity " +
                        std::to_string(m));
  if (f.ring()->field() != target->field())
    throw IncompatibleRings("injVars requires the same coefficient field");
  std::vector<Polynomial::Term> out;
  out.reserve(f.termCount());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(m, 0);
    for (std::size_t i = 0; i < n; ++i)
      e[i + k] = t.mono[i];
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::fromTerms(target, std::move(out));
}

Polynomial injVars(const Polynomial& f, const Ring& target) {
  return injVarsOffset(0, f, target);
}

Polynomial injVarsAtEnd(const Polynomial& f, const Ring& target) {
  std::size_t n = f.ring()->arity(), m = target->arity();
  if (n > m)
    throw ArityOverflow("source arity exceeds target arity");
  return injVarsOffset(m - n, f, target);
}

Polynomial remapVariables(const Polynomial& f, const Ring& target) {
  if (!f.ring()->hasNames() || !target->hasNames())
    throw NoNames("remapVariables requires named rings");
  if (f.ring()->field() != target->field())
    throw IncompatibleRings("remapVariables requires the same field");
  std::size_t n = f.ring()->arity();
  std::vector<std::size_t> where(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = f.ring()->names()[i];
    auto j = target->indexOf(name);
    if (!j)
      throw NameNotFound("variable '" + name + "' not present in target ring");
    where[i] = *j;
  }
  std::vector<Polynomial::Term> out;
  out.reserve(f.termCount());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(target->arity(), 0);
    for (std::size_t i = 0; i < n; ++i)
      e[where[i]] = t.mono[i];
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::fromTerms(target, std::move(out));
}

Polynomial changeOrder(const Polynomial& f, const MonomialOrder& order) {
  if (f.ring()->order() == order)
    return f;
  Ring target = withOrder(f.ring(), order);
  std::vector<Polynomial::Term> terms = f.terms();
  return Polynomial::fromTerms(std::move(target), std::move(terms));
}

Ring homogenisedRing(const Ring& r) {
  std::optional<std::vector<std::string>> names;
  if (r->hasNames()) {
    names = r->names();
    std::string h = "h";
    for (int i = 0; r->indexOf(h) ||
                    std::count(names->begin(), names->end(), h);
         ++i)
      h = "h" + std::to_string(i);
    names->push_back(h);
  }
  return makeRing(r->arity() + 1, MonomialOrder::homogInduced(r->order()),
                  r->field(), std::move(names));
}

bool isHomogeneous(const Polynomial& f) {
  if (f.isZero())
    return true;
  std::uint64_t d = f.terms().front().mono.totalDegree();
  for (const auto& t : f.terms())
    if (t.mono.totalDegree() != d)
      return false;
  return true;
}

Polynomial homogenise(const Polynomial& f) {
  Ring target = homogenisedRing(f.ring());
  if (f.isZero())
    return Polynomial::zero(target);
  std::uint64_t degree = f.totalDegree();
  std::vector<Polynomial::Term> out;
  out.reserve(f.termCount());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e = t.mono.exponents();
    e.push_back(static_cast<std::uint32_t>(degree - t.mono.totalDegree()));
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::fromTerms(std::move(target), std::move(out));
}

Polynomial unhomogenise(const Polynomial& h) {
  const Ring& src = h.ring();
  if (src->order().kind() != MonomialOrder::Kind::HomogInduced ||
      src->arity() == 0)
    throw NotHomogenisedRing("polynomial does not live in a homogenised ring");
  std::optional<std::vector<std::string>> names;
  if (src->hasNames()) {
    names = src->names();
    names->pop_back();
  }
  Ring target = makeRing(src->arity() - 1, src->order().base(), src->field(),
                         std::move(names));
  std::vector<Polynomial::Term> out;
  out.reserve(h.termCount());
  for (const auto& t : h.terms()) {
    std::vector<std::uint32_t> e = t.mono.exponents();
    e.pop_back(); // h := 1
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::fromTerms(std::move(target), std::move(out));
}

Ideal homogenise(const Ideal& I) {
  Ring target = homogenisedRing(I.ring());
  std::vector<Polynomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators())
    gens.push_back(homogenise(g));
  return Ideal(std::move(target), std::move(gens));
}

} // namespace cagb
