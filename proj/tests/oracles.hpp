// Independent test oracles. Everything here is deliberately written from
// definitions, not by calling the library code it is used to check.
#ifndef CAGB_TESTS_ORACLES_HPP
#define CAGB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "cagb/matrix.hpp"
#include "cagb/monomial.hpp"

namespace cagb::oracles {

// Definitional lex: the leftmost nonzero entry of a - b decides.
inline Ordering lexCompare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    std::int64_t d = std::int64_t(a[i]) - std::int64_t(b[i]);
    if (d > 0)
      return Ordering::GT;
    if (d < 0)
      return Ordering::LT;
  }
  return Ordering::EQ;
}

// Definitional grevlex: higher total degree wins; on ties the rightmost
// nonzero entry of a - b being negative means a is greater.
inline Ordering grevlexCompare(const Monomial& a, const Monomial& b) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db)
    return da > db ? Ordering::GT : Ordering::LT;
  for (std::size_t i = a.arity(); i-- > 0;) {
    std::int64_t d = std::int64_t(a[i]) - std::int64_t(b[i]);
    if (d < 0)
      return Ordering::GT;
    if (d > 0)
      return Ordering::LT;
  }
  return Ordering::EQ;
}

// Determinant of the square submatrix rows x cols by Laplace expansion with
// a column-subset memo. No elimination involved.
inline FieldElem minorDeterminant(const Matrix& m,
                                  const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols) {
  std::size_t k = rows.size();
  const Field f = m.field();
  std::map<std::uint32_t, FieldElem> memo[16];
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t mask) -> FieldElem {
    if (i == k)
      return f.one();
    auto it = memo[i].find(mask);
    if (it != memo[i].end())
      return it->second;
    FieldElem acc = f.zero();
    bool negate = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask & (1u << j)))
        continue;
      const FieldElem& a = m.at(rows[i], cols[j]);
      if (!a.isZero()) {
        FieldElem sub = self(self, i + 1, mask & ~(1u << j));
        FieldElem term = a * sub;
        acc = negate ? acc - term : acc + term;
      }
      negate = !negate;
    }
    memo[i].emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, (1u << k) - 1);
}

// Rank as the size of a maximal nonsingular minor, grown greedily: a
// nonsingular k-minor extends to a nonsingular (k+1)-minor unless the rank
// is exactly k (bordered minor theorem).
inline std::size_t rankOracle(const Matrix& m) {
  std::vector<std::size_t> rows, cols;
  for (;;) {
    bool extended = false;
    for (std::size_t r = 0; r < m.rowCount() && !extended; ++r) {
      if (std::find(rows.begin(), rows.end(), r) != rows.end())
        continue;
      for (std::size_t c = 0; c < m.colCount() && !extended; ++c) {
        if (std::find(cols.begin(), cols.end(), c) != cols.end())
          continue;
        std::vector<std::size_t> r2 = rows, c2 = cols;
        r2.push_back(r);
        c2.push_back(c);
        if (!minorDeterminant(m, r2, c2).isZero()) {
          rows = std::move(r2);
          cols = std::move(c2);
          extended = true;
        }
      }
    }
    if (!extended)
      return rows.size();
  }
}

// All monomials of the given arity with total degree <= maxDegree.
inline std::vector<Monomial> monomialsUpTo(std::size_t arity,
                                           std::uint32_t maxDegree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(arity, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == arity) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, maxDegree);
  return out;
}

} // namespace cagb::oracles

#endif
