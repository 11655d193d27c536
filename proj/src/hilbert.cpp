#include "cagb/hilbert.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace cagb {

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(BigInt c) {
  return UniPoly(std::vector<BigInt>{std::move(c)});
}

UniPoly UniPoly::power(std::size_t k) {
  std::vector<BigInt> c(k + 1, BigInt(0));
  c[k] = 1;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()),
                          BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = at(i) + rhs.at(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()),
                          BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = at(i) - rhs.at(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
  if (isZero() || rhs.isZero())
    return UniPoly();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(std::size_t k) const {
  if (isZero())
    return UniPoly();
  std::vector<BigInt> out(coeffs_.size() + k, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i + k] = coeffs_[i];
  return UniPoly(std::move(out));
}

std::string UniPoly::str() const {
  if (isZero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    BigInt mag = abs(coeffs_[i]);
    bool neg = coeffs_[i] < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0)
      os << mag;
    else {
      if (mag != 1)
        os << mag << "*";
      os << "t";
      if (i > 1)
        os << "^" << i;
    }
  }
  return os.str();
}

namespace {

BigInt convCoeff(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys,
                 std::size_t m) {
  BigInt acc = 0;
  std::size_t lo = m >= ys.size() ? m - ys.size() + 1 : 0;
  std::size_t hi = std::min(m, xs.size() == 0 ? 0 : xs.size() - 1);
  for (std::size_t i = lo; xs.size() && i <= hi; ++i)
    acc += xs[i] * ys[m - i];
  return acc;
}

} // namespace

std::vector<BigInt> conv(const std::vector<BigInt>& xs,
                         const std::vector<BigInt>& ys, std::size_t k,
                         bool parallel) {
  std::vector<BigInt> out(k, BigInt(0));
  if (xs.empty() || ys.empty())
    return out;
  if (!parallel || k < 8) {
    for (std::size_t m = 0; m < k; ++m)
      out[m] = convCoeff(xs, ys, m);
    return out;
  }
  unsigned workers = std::max(2u, std::thread::hardware_concurrency());
  std::size_t chunk = (k + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(k, lo + chunk);
    if (lo >= hi)
      break;
    jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::size_t m = lo; m < hi; ++m)
        out[m] = convCoeff(xs, ys, m);
    }));
  }
  for (auto& j : jobs)
    j.get();
  return out;
}

std::vector<BigInt> HPS::taylor(std::size_t k) const {
  std::vector<BigInt> out(k, BigInt(0));
  for (std::size_t m = 0; m < k; ++m) {
    BigInt acc = 0;
    for (std::size_t d = 0; d < numerator_.coeffs().size() && d <= m; ++d) {
      if (numerator_.coeffs()[d] == 0)
        continue;
      if (arity_ == 0) {
        if (d == m)
          acc += numerator_.coeffs()[d];
        continue;
      }
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(),
                   static_cast<unsigned long>(m - d + arity_ - 1),
                   static_cast<unsigned long>(arity_ - 1));
      acc += numerator_.coeffs()[d] * binom;
    }
    out[m] = acc;
  }
  return out;
}

HPS hpsAdd(const HPS& a, const HPS& b) {
  if (a.arity() != b.arity())
    throw ArityMismatch("HPS arities differ");
  return HPS(a.arity(), a.numerator() + b.numerator());
}

HPS hpsModuleAction(const UniPoly& f, const HPS& a) {
  return HPS(a.arity(), f * a.numerator());
}

namespace {

// Keep only minimal generators: drop duplicates and anything another
// generator divides.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j) {
      if (i == j)
        continue;
      if (gens[j].divides(gens[i]) &&
          (!(gens[i] == gens[j]) || j < i))
        dominated = true;
    }
    if (!dominated)
      out.push_back(gens[i]);
  }
  return out;
}

UniPoly numeratorRec(std::vector<Monomial> gens, std::size_t arity) {
  gens = minimalize(std::move(gens));
  if (gens.empty())
    return UniPoly::one();
  for (const auto& g : gens)
    if (g.isOne())
      return UniPoly(); // quotient by the unit ideal is the zero ring
  // Pure powers of distinct variables: complete intersection.
  bool purePowers = true;
  for (const auto& g : gens) {
    int nonzero = 0;
    for (std::size_t v = 0; v < arity; ++v)
      if (g[v] != 0)
        ++nonzero;
    if (nonzero != 1) {
      purePowers = false;
      break;
    }
  }
  if (purePowers) {
    UniPoly acc = UniPoly::one();
    for (const auto& g : gens) {
      UniPoly factor =
          UniPoly::one() -
          UniPoly::power(static_cast<std::size_t>(g.totalDegree()));
      acc = acc * factor;
    }
    return acc;
  }
  // Pivot on the most frequent variable p = x_v:
  //   N(I) = N(I + <p>) + t * N(I : p)
  // The pivot must occur in a mixed generator, so that adding <p> strictly
  // shrinks the generator set (a pure pivot can reproduce the input).
  std::vector<std::size_t> freq(arity, 0);
  std::vector<bool> inMixed(arity, false);
  for (const auto& g : gens) {
    int nonzero = 0;
    for (std::size_t v = 0; v < arity; ++v)
      if (g[v] != 0)
        ++nonzero;
    for (std::size_t v = 0; v < arity; ++v)
      if (g[v] != 0) {
        ++freq[v];
        if (nonzero > 1)
          inMixed[v] = true;
      }
  }
  std::size_t pivot = arity;
  for (std::size_t v = 0; v < arity; ++v)
    if (inMixed[v] && (pivot == arity || freq[v] > freq[pivot]))
      pivot = v;

  std::vector<Monomial> plus = gens;
  std::vector<std::uint32_t> pv(arity, 0);
  pv[pivot] = 1;
  plus.push_back(Monomial(pv));

  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<std::uint32_t> e = g.exponents();
    if (e[pivot] > 0)
      --e[pivot];
    colon.push_back(Monomial(std::move(e)));
  }
  return numeratorRec(std::move(plus), arity) +
         numeratorRec(std::move(colon), arity).shifted(1);
}

} // namespace

UniPoly hilbertNumerator(const std::vector<Monomial>& gens,
                         std::size_t arity) {
  for (const auto& g : gens)
    if (g.arity() != arity)
      throw ArityMismatch("generator arity does not match");
  return numeratorRec(gens, arity);
}

HPS hilbertSeriesOfLeads(const std::vector<Polynomial>& basis,
                         const Ring& ring) {
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis)
    leads.push_back(g.leadMonomial());
  return HPS(ring->arity(), hilbertNumerator(leads, ring->arity()));
}

namespace {

void requireHomogeneous(const Ideal& I) {
  for (const auto& g : I.generators())
    if (!isHomogeneous(g))
      throw NotHomogeneous("generator '" + g.str() + "' is not homogeneous");
}

} // namespace

std::vector<Polynomial> degreeByDegreeGB(const Ideal& I) {
  requireHomogeneous(I);
  return buchbergerTracked(I, PairSelection::Degree, false).basis;
}

std::vector<Polynomial> hilbertDrivenGB(const Ideal& I,
                                        const MonomialOrder& easyOrder,
                                        const MonomialOrder& targetOrder) {
  requireHomogeneous(I);
  const std::size_t n = I.ring()->arity();

  // Phase 1: basis under the easy order fixes the Hilbert series of R/I.
  Ring easyRing = withOrder(I.ring(), easyOrder);
  std::vector<Polynomial> easyGens;
  easyGens.reserve(I.size());
  for (const auto& g : I.generators())
    easyGens.push_back(changeOrder(g, easyOrder));
  std::vector<Polynomial> easyGB =
      buchbergerTracked(Ideal(easyRing, easyGens), PairSelection::Degree,
                        false)
          .basis;
  UniPoly targetNum = hilbertSeriesOfLeads(easyGB, easyRing).numerator();
  std::vector<BigInt> targetTaylor;

  // Phase 2: degree-by-degree under the target order with Hilbert pruning.
  Ring ring = withOrder(I.ring(), targetOrder);
  std::vector<Polynomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators())
    gens.push_back(changeOrder(g, targetOrder));

  struct Event {
    std::uint64_t degree;
    bool isPair;
    std::size_t a, b; // input index, or basis pair a < b
    Monomial lcm;
  };
  struct EventLess {
    const MonomialOrder* ord;
    bool operator()(const Event& x, const Event& y) const {
      if (x.degree != y.degree)
        return x.degree < y.degree;
      if (x.isPair != y.isPair)
        return !x.isPair; // inputs first
      if (x.isPair) {
        switch (ord->compare(x.lcm, y.lcm)) {
        case Ordering::LT:
          return true;
        case Ordering::GT:
          return false;
        case Ordering::EQ:
          break;
        }
      }
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    }
  };
  std::set<Event, EventLess> events{EventLess{&ring->order()}};
  for (std::size_t k = 0; k < gens.size(); ++k)
    events.insert(
        {gens[k].totalDegree(), false, k, 0, Monomial(n)});

  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  std::set<std::uint64_t> closedDegrees;

  auto hilbertMatchesAt = [&](std::uint64_t d) {
    if (targetTaylor.size() <= d)
      targetTaylor = HPS(n, targetNum).taylor(static_cast<std::size_t>(d) + 1);
    HPS cur(n, hilbertNumerator(leads, n));
    return cur.taylor(static_cast<std::size_t>(d) + 1)[d] == targetTaylor[d];
  };

  while (!events.empty()) {
    Event e = *events.begin();
    events.erase(events.begin());
    if (closedDegrees.count(e.degree))
      continue;
    if (hilbertMatchesAt(e.degree)) {
      // The lead ideal is complete through this degree: every remaining
      // reduction here would come to zero.
      closedDegrees.insert(e.degree);
      continue;
    }
    Polynomial h = e.isPair ? sPoly(basis[e.a], basis[e.b]) : gens[e.a];
    if (h.isZero())
      continue;
    Polynomial r = normalForm(h, basis).remainder;
    if (r.isZero())
      continue;
    r = r.scaled(r.leadCoeff().recip());
    std::size_t t = basis.size();
    for (std::size_t i = 0; i < t; ++i) {
      if (basis[i].leadMonomial().coprimeWith(r.leadMonomial()))
        continue;
      Monomial lcm = Monomial::lcm(basis[i].leadMonomial(), r.leadMonomial());
      std::uint64_t deg = lcm.totalDegree();
      events.insert({deg, true, i, t, std::move(lcm)});
    }
    leads.push_back(r.leadMonomial());
    basis.push_back(std::move(r));
  }

  // The run is complete exactly when the lead-term series reached the target.
  if (!(hilbertNumerator(leads, n) == targetNum))
    throw NotABasis("hilbert-driven run ended before the series matched");
  return basis;
}

std::vector<Polynomial> calcGBViaHomog(const GBAlgorithm& algo,
                                       const Ideal& I) {
  bool allHomogeneous = true;
  for (const auto& g : I.generators())
    if (!isHomogeneous(g)) {
      allHomogeneous = false;
      break;
    }
  if (allHomogeneous)
    return algo(I);
  Ideal lifted = homogenise(I);
  std::vector<Polynomial> gb = algo(lifted);
  std::vector<Polynomial> out;
  out.reserve(gb.size());
  for (const auto& g : gb)
    out.push_back(unhomogenise(g));
  return out;
}

} // namespace cagb
