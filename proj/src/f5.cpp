#include "cagb/f5.hpp"

#include <set>

namespace cagb {

Ordering compareSignatures(const MonomialOrder& ord, const Signature& a,
                           const Signature& b) {
  if (a.index != b.index)
    return a.index < b.index ? Ordering::LT : Ordering::GT;
  return ord.compare(a.monomial, b.monomial);
}

bool signatureDivides(const Signature& div, const Signature& into) {
  return div.index == into.index && div.monomial.divides(into.monomial);
}

Polynomial monoize(const Polynomial& f) {
  if (f.isZero())
    throw ZeroPolynomial("monoize of the zero polynomial");
  return f.scaled(f.leadCoeff().recip());
}

std::vector<Signature> koszulSyzygies(const std::vector<Polynomial>& inputs) {
  std::vector<Signature> out;
  for (std::size_t m = 0; m < inputs.size(); ++m)
    for (std::size_t n = m + 1; n < inputs.size(); ++n)
      out.push_back({n, inputs[m].leadMonomial()});
  return out;
}

bool standardCriterion(const Signature& sig,
                       const std::vector<Signature>& syzygies) {
  for (const auto& s : syzygies)
    if (signatureDivides(s, sig))
      return true;
  return false;
}

namespace {

void requireConsistent(const std::vector<Polynomial>& inputs,
                       const LabeledPolynomial& g) {
  if (g.vector.size() != inputs.size())
    throw InconsistentLabel("cofactor vector has the wrong length");
  Polynomial dot = Polynomial::zero(g.poly.ring());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    dot = dot + g.vector[i] * inputs[i];
  if (!(dot == g.poly))
    throw InconsistentLabel("label does not re-expand to its polynomial");
}

} // namespace

std::pair<std::vector<Polynomial>, Polynomial> reduceSignature(
    const std::vector<Polynomial>& inputs, const LabeledPolynomial& g,
    const std::vector<LabeledPolynomial>& basis) {
  requireConsistent(inputs, g);
  const MonomialOrder& ord = g.poly.ring()->order();
  std::vector<Polynomial> vec = g.vector;
  Polynomial p = g.poly;
  std::size_t k = 0;
  while (k < p.termCount()) {
    const auto& term = p.terms()[k];
    bool stepped = false;
    for (const auto& b : basis) {
      if (!b.poly.leadMonomial().divides(term.mono))
        continue;
      Monomial u = term.mono.dividedBy(b.poly.leadMonomial());
      Signature lifted{b.signature.index, u * b.signature.monomial};
      if (compareSignatures(ord, lifted, g.signature) != Ordering::LT)
        continue; // unsafe: would reach or exceed the signature
      FieldElem c = term.coeff * b.poly.leadCoeff().recip();
      p = p.plusScaledMultiple(-c, u, b.poly);
      for (std::size_t i = 0; i < vec.size(); ++i)
        vec[i] = vec[i].plusScaledMultiple(-c, u, b.vector[i]);
      stepped = true;
      break;
    }
    if (!stepped)
      ++k;
  }
  return {std::move(vec), std::move(p)};
}

std::optional<LabeledPolynomial> regularSVector(const LabeledPolynomial& a,
                                                const LabeledPolynomial& b) {
  if (a.poly.isZero() || b.poly.isZero())
    return std::nullopt;
  const MonomialOrder& ord = a.poly.ring()->order();
  Monomial lcm = Monomial::lcm(a.poly.leadMonomial(), b.poly.leadMonomial());
  Monomial ua = lcm.dividedBy(a.poly.leadMonomial());
  Monomial ub = lcm.dividedBy(b.poly.leadMonomial());
  Signature sa{a.signature.index, ua * a.signature.monomial};
  Signature sb{b.signature.index, ub * b.signature.monomial};
  if (sa == sb)
    return std::nullopt; // singular pair
  FieldElem ca = a.poly.leadCoeff().recip();
  FieldElem cb = -(b.poly.leadCoeff().recip());
  std::vector<Polynomial> vec;
  vec.reserve(a.vector.size());
  for (std::size_t i = 0; i < a.vector.size(); ++i)
    vec.push_back(Polynomial::zero(a.poly.ring())
                      .plusScaledMultiple(ca, ua, a.vector[i])
                      .plusScaledMultiple(cb, ub, b.vector[i]));
  return LabeledPolynomial{
      compareSignatures(ord, sa, sb) == Ordering::GT ? sa : sb,
      std::move(vec),
      Polynomial::zero(a.poly.ring())
          .plusScaledMultiple(ca, ua, a.poly)
          .plusScaledMultiple(cb, ub, b.poly)};
}

std::vector<LabeledPolynomial> f5(const std::vector<Polynomial>& inputs,
                                  const F5Options& options) {
  if (inputs.empty())
    return {};
  const Ring& ring = inputs.front().ring();
  for (const auto& f : inputs) {
    requireArithCompatible(ring, f.ring());
    if (f.isZero())
      throw ZeroPolynomial("f5 inputs must be nonzero");
  }
  const MonomialOrder& ord = ring->order();

  struct Entry {
    Signature signature;
    std::uint64_t seq;
    LabeledPolynomial elem;
  };
  struct EntryLess {
    const MonomialOrder* ord;
    bool operator()(const Entry& a, const Entry& b) const {
      switch (compareSignatures(*ord, a.signature, b.signature)) {
      case Ordering::LT:
        return true;
      case Ordering::GT:
        return false;
      case Ordering::EQ:
        return a.seq < b.seq;
      }
      return false;
    }
  };

  std::set<Entry, EntryLess> queue{EntryLess{&ord}};
  std::uint64_t seq = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::vector<Polynomial> vec(inputs.size(), Polynomial::zero(ring));
    vec[i] = Polynomial::constant(ring, inputs[i].leadCoeff().recip());
    LabeledPolynomial e{{i, Monomial(ring->arity())}, std::move(vec),
                        monoize(inputs[i])};
    queue.insert({e.signature, seq++, std::move(e)});
  }

  std::vector<Signature> syzygies = koszulSyzygies(inputs);
  std::vector<LabeledPolynomial> basis;
  std::vector<Signature> processed;

  while (!queue.empty()) {
    Entry entry = *queue.begin();
    queue.erase(queue.begin());
    bool duplicate = false;
    for (const auto& s : processed)
      if (s == entry.signature) {
        duplicate = true; // equal-signature duplicates keep the first
        break;
      }
    if (duplicate)
      continue;
    processed.push_back(entry.signature);
    if (standardCriterion(entry.signature, syzygies))
      continue;
    auto [vec, ph] = reduceSignature(inputs, entry.elem, basis);
    if (ph.isZero()) {
      syzygies.push_back(entry.signature);
      continue;
    }
    if (options.degreeBound != 0 &&
        std::max(ph.totalDegree(),
                 entry.signature.monomial.totalDegree()) >
            options.degreeBound)
      throw DegreeBoundExceeded("f5 passed the configured degree bound");
    FieldElem inv = ph.leadCoeff().recip();
    std::vector<Polynomial> scaledVec;
    scaledVec.reserve(vec.size());
    for (auto& v : vec)
      scaledVec.push_back(v.scaled(inv));
    LabeledPolynomial labeled{entry.signature, std::move(scaledVec),
                              ph.scaled(inv)};
    for (const auto& b : basis)
      if (auto add = regularSVector(labeled, b))
        queue.insert({add->signature, seq++, std::move(*add)});
    basis.push_back(std::move(labeled));
  }
  return basis;
}

} // namespace cagb
