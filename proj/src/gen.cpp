#include "cagb/gen.hpp"

namespace cagb {

namespace {

Ring ringFor(const GenConfig& cfg) {
  static const char* kNames[] = {"x", "y", "z", "t", "u", "v", "w"};
  std::vector<std::string> names;
  names.reserve(cfg.arity);
  for (std::size_t i = 0; i < cfg.arity; ++i)
    names.push_back(i < 7 ? kNames[i] : "x" + std::to_string(i));
  return makeRing(cfg.arity, cfg.order, cfg.field, std::move(names));
}

} // namespace

Generator::Generator(GenConfig cfg)
    : cfg_(std::move(cfg)), ring_(ringFor(cfg_)), state_(cfg_.seed) {}

// splitmix64; fixed across platforms and standard libraries
std::uint64_t Generator::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Generator::draw(std::uint64_t bound) {
  return bound == 0 ? 0 : next() % bound;
}

long Generator::intIn(long lo, long hi) {
  return lo + static_cast<long>(draw(static_cast<std::uint64_t>(hi - lo + 1)));
}

FieldElem Generator::fieldElement() {
  if (cfg_.field.isRationals())
    return cfg_.field.fromQuotient(intIn(-9, 9), intIn(1, 9));
  return cfg_.field.fromInteger(
      static_cast<long>(draw(cfg_.field.modulus())));
}

FieldElem Generator::nonzeroFieldElement() {
  for (;;) {
    FieldElem e = fieldElement();
    if (!e.isZero())
      return e;
  }
}

Monomial Generator::monomial() {
  std::vector<std::uint32_t> exps(cfg_.arity, 0);
  std::uint32_t left =
      static_cast<std::uint32_t>(draw(std::uint64_t(cfg_.maxDegree) + 1));
  for (auto& e : exps) {
    e = static_cast<std::uint32_t>(draw(std::uint64_t(left) + 1));
    left -= e;
  }
  return Monomial(std::move(exps));
}

Polynomial Generator::polynomial() {
  for (;;) {
    std::size_t terms = 1 + draw(cfg_.maxTerms);
    std::vector<Polynomial::Term> ts;
    ts.reserve(terms);
    for (std::size_t i = 0; i < terms; ++i)
      ts.push_back({monomial(), nonzeroFieldElement()});
    Polynomial f = Polynomial::fromTerms(ring_, std::move(ts));
    if (!f.isZero())
      return f;
  }
}

Polynomial Generator::homogeneousPolynomial() {
  for (;;) {
    std::uint32_t degree =
        static_cast<std::uint32_t>(draw(std::uint64_t(cfg_.maxDegree) + 1));
    std::size_t terms = 1 + draw(cfg_.maxTerms);
    std::vector<Polynomial::Term> ts;
    ts.reserve(terms);
    for (std::size_t i = 0; i < terms; ++i) {
      // spread exactly `degree` over the variables
      std::vector<std::uint32_t> exps(cfg_.arity, 0);
      std::uint32_t left = degree;
      for (std::size_t v = 0; v + 1 < cfg_.arity; ++v) {
        exps[v] = static_cast<std::uint32_t>(draw(std::uint64_t(left) + 1));
        left -= exps[v];
      }
      if (cfg_.arity > 0)
        exps[cfg_.arity - 1] = left;
      ts.push_back({Monomial(std::move(exps)), nonzeroFieldElement()});
    }
    Polynomial f = Polynomial::fromTerms(ring_, std::move(ts));
    if (!f.isZero())
      return f;
  }
}

Ideal Generator::ideal() {
  std::size_t count = 1 + draw(cfg_.maxGenerators);
  std::vector<Polynomial> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(polynomial());
  return Ideal(ring_, std::move(gens));
}

Ideal Generator::homogeneousIdeal() {
  std::size_t count = 1 + draw(cfg_.maxGenerators);
  std::vector<Polynomial> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(homogeneousPolynomial());
  return Ideal(ring_, std::move(gens));
}

Polynomial genPolynomial(const GenConfig& cfg) {
  Generator g(cfg);
  return g.polynomial();
}

Ideal genIdeal(const GenConfig& cfg) {
  Generator g(cfg);
  return g.ideal();
}

} // namespace cagb
