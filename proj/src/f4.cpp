#include "cagb/f4.hpp"

#include <map>
#include <set>

namespace cagb {

SelectionStrategy normalStrategy() {
  return [](const Polynomial& f, const Polynomial& g) {
    return Monomial::lcm(f.leadMonomial(), g.leadMonomial()).totalDegree();
  };
}

SelectionStrategy degreeStrategy() {
  return [](const Polynomial& f, const Polynomial& g) {
    return std::max(f.totalDegree(), g.totalDegree());
  };
}

SelectionStrategy strategyByName(const std::string& name) {
  if (name == "normal")
    return normalStrategy();
  if (name == "degree")
    return degreeStrategy();
  throw Error("unknown selection strategy '" + name + "'");
}

namespace {

Polynomial monomialMultiple(const Monomial& u, const Polynomial& f) {
  return Polynomial::zero(f.ring()).plusScaledMultiple(
      f.ring()->field().one(), u, f);
}

struct MonoDesc {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ord->greater(a, b);
  }
};

} // namespace

F4Matrix symbolicPreprocessing(const std::vector<F4Pair>& pairs,
                               const std::vector<Polynomial>& basis) {
  F4Matrix out;
  if (pairs.empty())
    return out;
  const Ring& ring = basis.front().ring();
  MonoDesc desc{&ring->order()};

  std::vector<Polynomial> rowPolys;
  for (const auto& pr : pairs) {
    Monomial lcm = Monomial::lcm(basis[pr.i].leadMonomial(),
                                 basis[pr.j].leadMonomial());
    rowPolys.push_back(monomialMultiple(
        lcm.dividedBy(basis[pr.i].leadMonomial()), basis[pr.i]));
    rowPolys.push_back(monomialMultiple(
        lcm.dividedBy(basis[pr.j].leadMonomial()), basis[pr.j]));
  }

  // Close the monomial set: any monomial some basis lead divides gets
  // exactly one reducer row. Worklist is processed in descending order.
  std::set<Monomial, MonoDesc> done(desc);
  std::set<Monomial, MonoDesc> todo(desc);
  for (const auto& r : rowPolys)
    for (const auto& t : r.terms())
      todo.insert(t.mono);
  while (!todo.empty()) {
    Monomial m = *todo.begin();
    todo.erase(todo.begin());
    if (!done.insert(m).second)
      continue;
    for (const auto& g : basis) {
      if (!g.leadMonomial().divides(m))
        continue;
      Polynomial red = monomialMultiple(m.dividedBy(g.leadMonomial()), g);
      for (const auto& t : red.terms())
        if (!done.count(t.mono))
          todo.insert(t.mono);
      rowPolys.push_back(std::move(red));
      break; // first basis element in insertion order
    }
  }

  out.columns.assign(done.begin(), done.end());
  std::map<Monomial, std::size_t, MonoDesc> columnIndex(desc);
  for (std::size_t c = 0; c < out.columns.size(); ++c)
    columnIndex.emplace(out.columns[c], c);

  out.rows.reserve(rowPolys.size());
  for (const auto& r : rowPolys) {
    std::vector<std::pair<std::size_t, FieldElem>> row;
    row.reserve(r.termCount());
    for (const auto& t : r.terms())
      row.push_back({columnIndex.at(t.mono), t.coeff});
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<Polynomial> f4(const MatrixBackend& backend,
                           const SelectionStrategy& strategy, const Ideal& I) {
  const Ring& ring = I.ring();
  std::vector<Polynomial> basis;
  basis.reserve(I.size());
  for (const auto& g : I.generators())
    basis.push_back(g.scaled(g.leadCoeff().recip()));

  struct QueuedPair {
    std::uint64_t weight;
    std::size_t i, j;
    bool operator<(const QueuedPair& rhs) const {
      return std::tie(weight, i, j) < std::tie(rhs.weight, rhs.i, rhs.j);
    }
  };
  std::set<QueuedPair> queue;
  auto enqueueWith = [&](std::size_t i, std::size_t j) {
    queue.insert({strategy(basis[i], basis[j]), i, j});
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      enqueueWith(i, j);

  while (!queue.empty()) {
    // Select every pair of minimum weight.
    std::uint64_t wmin = queue.begin()->weight;
    std::vector<F4Pair> selected;
    while (!queue.empty() && queue.begin()->weight == wmin) {
      selected.push_back({queue.begin()->i, queue.begin()->j});
      queue.erase(queue.begin());
    }

    F4Matrix sym = symbolicPreprocessing(selected, basis);
    if (sym.rows.empty())
      continue;
    std::vector<std::vector<FieldElem>> dense(
        sym.rows.size(),
        std::vector<FieldElem>(sym.columns.size(), ring->field().zero()));
    for (std::size_t r = 0; r < sym.rows.size(); ++r)
      for (const auto& [c, v] : sym.rows[r])
        dense[r][c] = v;
    Matrix reduced =
        backend.gaussReduction(Matrix::fromRows(ring->field(), dense));

    std::size_t oldSize = basis.size();
    for (std::size_t r = 0; r < reduced.rowCount(); ++r) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t c = 0; c < reduced.colCount(); ++c)
        if (!reduced.at(r, c).isZero())
          terms.push_back({sym.columns[c], reduced.at(r, c)});
      if (terms.empty())
        continue;
      Polynomial p = Polynomial::fromTerms(ring, std::move(terms));
      bool newLead = true;
      for (std::size_t k = 0; k < oldSize && newLead; ++k)
        if (basis[k].leadMonomial().divides(p.leadMonomial()))
          newLead = false;
      if (!newLead)
        continue;
      std::size_t t = basis.size();
      basis.push_back(std::move(p));
      for (std::size_t k = 0; k < t; ++k)
        enqueueWith(k, t);
    }
  }
  return basis;
}

} // namespace cagb
