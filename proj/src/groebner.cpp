#include "cagb/groebner.hpp"

#include <algorithm>
#include <set>

namespace cagb {

DivisionResult normalForm(const Polynomial& f,
                          const std::vector<Polynomial>& divisors) {
  const Ring& ring = f.ring();
  for (const auto& g : divisors) {
    requireArithCompatible(ring, g.ring());
    if (g.isZero())
      throw ZeroPolynomial("division by the zero polynomial");
  }
  std::vector<std::vector<Polynomial::Term>> quot(divisors.size());
  std::vector<Polynomial::Term> rem;
  Polynomial p = f;
  while (!p.isZero()) {
    const auto& lead = p.leadTerm();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divisors[i].leadMonomial().divides(lead.mono))
        continue;
      Monomial u = lead.mono.dividedBy(divisors[i].leadMonomial());
      FieldElem c = lead.coeff * divisors[i].leadCoeff().recip();
      quot[i].push_back({u, c});
      p = p.plusScaledMultiple(-c, u, divisors[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lead);
      p = p.tail();
    }
  }
  DivisionResult out{{}, Polynomial::fromTerms(ring, std::move(rem))};
  out.quotients.reserve(divisors.size());
  for (auto& q : quot)
    out.quotients.push_back(Polynomial::fromTerms(ring, std::move(q)));
  return out;
}

Polynomial sPoly(const Polynomial& f, const Polynomial& g) {
  requireArithCompatible(f.ring(), g.ring());
  if (f.isZero() || g.isZero())
    throw ZeroPolynomial("S-polynomial of the zero polynomial");
  Monomial lcm = Monomial::lcm(f.leadMonomial(), g.leadMonomial());
  Monomial uf = lcm.dividedBy(f.leadMonomial());
  Monomial ug = lcm.dividedBy(g.leadMonomial());
  Polynomial out = Polynomial::zero(f.ring());
  out = out.plusScaledMultiple(f.leadCoeff().recip(), uf, f);
  out = out.plusScaledMultiple(-g.leadCoeff().recip(), ug, g);
  return out;
}

namespace {

struct BasisElem {
  Polynomial poly; // monic
  std::vector<Polynomial> cofactors;
  std::uint64_t sugar;
};

// The Buchberger engine behind buchberger(), buchbergerTracked() and the
// degree-by-degree algorithm. Pairs are filtered with the Gebauer-Moller
// criteria; selection weight is sugar or lcm degree.
class GBEngine {
public:
  GBEngine(const Ideal& I, PairSelection selection, bool track)
      : ring_(I.ring()), selection_(selection), track_(track),
        inputCount_(I.size()), pairs_(PairLess{&ring_->order()}) {
    for (std::size_t k = 0; k < I.size(); ++k) {
      const Polynomial& g = I[k];
      FieldElem inv = g.leadCoeff().recip();
      std::vector<Polynomial> cof;
      if (track_) {
        cof.assign(inputCount_, Polynomial::zero(ring_));
        cof[k] = Polynomial::constant(ring_, inv);
      }
      addElement({g.scaled(inv), std::move(cof), g.totalDegree()});
    }
  }

  TrackedBasis run() {
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      processPair(pr.i, pr.j, pr.sugar);
    }
    TrackedBasis out;
    for (auto& e : basis_) {
      out.basis.push_back(std::move(e.poly));
      if (track_)
        out.cofactors.push_back(std::move(e.cofactors));
    }
    return out;
  }

private:
  struct Pair {
    std::uint64_t weight;
    Monomial lcm;
    std::size_t i, j;
    std::uint64_t sugar;
  };

  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.weight != b.weight)
        return a.weight < b.weight;
      switch (ord->compare(a.lcm, b.lcm)) {
      case Ordering::LT:
        return true;
      case Ordering::GT:
        return false;
      case Ordering::EQ:
        break;
      }
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
  };

  std::uint64_t pairSugar(std::size_t i, std::size_t j,
                          const Monomial& lcm) const {
    std::uint64_t si =
        basis_[i].sugar + (lcm.totalDegree() -
                           basis_[i].poly.leadMonomial().totalDegree());
    std::uint64_t sj =
        basis_[j].sugar + (lcm.totalDegree() -
                           basis_[j].poly.leadMonomial().totalDegree());
    return std::max(si, sj);
  }

  Pair makePair(std::size_t i, std::size_t j) const {
    Monomial lcm = Monomial::lcm(basis_[i].poly.leadMonomial(),
                                 basis_[j].poly.leadMonomial());
    std::uint64_t sugar = pairSugar(i, j, lcm);
    std::uint64_t weight =
        selection_ == PairSelection::Sugar ? sugar : lcm.totalDegree();
    return Pair{weight, std::move(lcm), i, j, sugar};
  }

  // Gebauer-Moller update: filter the new pairs (t, i) against each other,
  // prune old pairs covered by the new lead, then append.
  void addElement(BasisElem e) {
    std::size_t t = basis_.size();
    basis_.push_back(std::move(e));
    const Monomial& lt = basis_[t].poly.leadMonomial();

    std::vector<Monomial> lcms;
    lcms.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
      lcms.push_back(
          Monomial::lcm(basis_[i].poly.leadMonomial(), lt));

    std::vector<bool> keep(t, false);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < t; ++i) {
      bool coprime = basis_[i].poly.leadMonomial().coprimeWith(lt);
      bool shadowed = false;
      if (!coprime) {
        for (std::size_t j = i + 1; j < t && !shadowed; ++j)
          if (lcms[j].divides(lcms[i]))
            shadowed = true; // later candidate covers this lcm
        for (std::size_t j : kept)
          if (!shadowed && lcms[j].divides(lcms[i]))
            shadowed = true;
      }
      if (coprime || !shadowed) {
        keep[i] = true;
        kept.push_back(i);
      }
    }

    // Old pairs whose lcm the new lead divides strictly are redundant.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      bool drop = lt.divides(p.lcm) &&
                  !(Monomial::lcm(basis_[p.i].poly.leadMonomial(), lt) ==
                    p.lcm) &&
                  !(Monomial::lcm(basis_[p.j].poly.leadMonomial(), lt) ==
                    p.lcm);
      it = drop ? pairs_.erase(it) : std::next(it);
    }

    for (std::size_t i = 0; i < t; ++i) {
      if (!keep[i])
        continue;
      if (basis_[i].poly.leadMonomial().coprimeWith(lt))
        continue; // product criterion
      pairs_.insert(makePair(i, t));
    }
  }

  void processPair(std::size_t i, std::size_t j, std::uint64_t sugar) {
    Polynomial s = sPoly(basis_[i].poly, basis_[j].poly);
    if (s.isZero())
      return;
    std::vector<Polynomial> polys;
    polys.reserve(basis_.size());
    for (const auto& b : basis_)
      polys.push_back(b.poly);
    DivisionResult div = normalForm(s, polys);
    if (div.remainder.isZero())
      return;

    std::uint64_t rSugar = sugar;
    for (std::size_t k = 0; k < div.quotients.size(); ++k) {
      if (div.quotients[k].isZero())
        continue;
      for (const auto& t : div.quotients[k].terms())
        rSugar = std::max(rSugar, basis_[k].sugar + t.mono.totalDegree());
    }

    std::vector<Polynomial> cof;
    if (track_) {
      Monomial lcm = Monomial::lcm(basis_[i].poly.leadMonomial(),
                                   basis_[j].poly.leadMonomial());
      Monomial ui = lcm.dividedBy(basis_[i].poly.leadMonomial());
      Monomial uj = lcm.dividedBy(basis_[j].poly.leadMonomial());
      FieldElem one = ring_->field().one();
      cof.assign(inputCount_, Polynomial::zero(ring_));
      for (std::size_t k = 0; k < inputCount_; ++k) {
        cof[k] = cof[k].plusScaledMultiple(one, ui, basis_[i].cofactors[k]);
        cof[k] = cof[k].plusScaledMultiple(-one, uj, basis_[j].cofactors[k]);
        for (std::size_t b = 0; b < div.quotients.size(); ++b)
          if (!div.quotients[b].isZero())
            cof[k] = cof[k] - div.quotients[b] * basis_[b].cofactors[k];
      }
    }

    FieldElem inv = div.remainder.leadCoeff().recip();
    for (auto& c : cof)
      c = c.scaled(inv);
    addElement({div.remainder.scaled(inv), std::move(cof), rSugar});
  }

  Ring ring_;
  PairSelection selection_;
  bool track_;
  std::size_t inputCount_;
  std::vector<BasisElem> basis_;
  std::set<Pair, PairLess> pairs_;
};

} // namespace

TrackedBasis buchbergerTracked(const Ideal& I, PairSelection selection,
                               bool track) {
  GBEngine engine(I, selection, track);
  return engine.run();
}

std::vector<Polynomial> buchberger(const Ideal& I) {
  return buchbergerTracked(I, PairSelection::Sugar, false).basis;
}

std::vector<Polynomial> reduceGB(std::vector<Polynomial> G, bool checkBasis) {
  if (G.empty())
    return G;
  const Ring ring = G.front().ring();
  for (auto& g : G) {
    requireArithCompatible(ring, g.ring());
    if (g.isZero())
      throw ZeroPolynomial("reduceGB on a zero element");
    g = g.scaled(g.leadCoeff().recip());
  }
  // Interreduce to a fixpoint: each element replaced by its normal form
  // against all others, zero results dropped.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(G.size() - 1);
      for (std::size_t j = 0; j < G.size(); ++j)
        if (j != i)
          others.push_back(G[j]);
      Polynomial r = normalForm(G[i], others).remainder;
      if (r == G[i])
        continue;
      changed = true;
      if (r.isZero()) {
        G.erase(G.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
      } else {
        G[i] = r.scaled(r.leadCoeff().recip());
      }
    }
  }
  std::sort(G.begin(), G.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ring->order().greater(a.leadMonomial(), b.leadMonomial());
            });
  if (checkBasis && !isGroebnerBasis(G))
    throw NotABasis("reduceGB output fails the S-test");
  return G;
}

bool isGroebnerBasis(const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      Polynomial s = sPoly(G[i], G[j]);
      if (!normalForm(s, G).remainder.isZero())
        return false;
    }
  return true;
}

MembershipResult idealMembership(const Polynomial& f, const Ideal& I) {
  requireArithCompatible(f.ring(), I.ring());
  TrackedBasis gb = buchbergerTracked(I, PairSelection::Sugar, true);
  DivisionResult div = normalForm(f, gb.basis);
  if (!div.remainder.isZero())
    return {false, std::nullopt};
  std::vector<Polynomial> cof(I.size(), Polynomial::zero(I.ring()));
  for (std::size_t b = 0; b < gb.basis.size(); ++b) {
    if (div.quotients[b].isZero())
      continue;
    for (std::size_t k = 0; k < I.size(); ++k)
      cof[k] = cof[k] + div.quotients[b] * gb.cofactors[b][k];
  }
  Polynomial check = Polynomial::zero(I.ring());
  for (std::size_t k = 0; k < I.size(); ++k)
    check = check + cof[k] * I[k];
  if (!(check == f))
    throw InconsistentLabel("membership cofactors fail to re-expand");
  return {true, std::move(cof)};
}

} // namespace cagb
