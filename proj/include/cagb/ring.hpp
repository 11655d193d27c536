#ifndef CAGB_RING_HPP
#define CAGB_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cagb/field.hpp"
#include "cagb/monomial.hpp"

namespace cagb {

// Everything a polynomial needs to know about where it lives. Shared and
// immutable; pointer equality is the fast path, value equality the truth.
class RingDescriptor {
public:
  RingDescriptor(std::size_t arity, MonomialOrder order, Field field,
                 std::optional<std::vector<std::string>> varNames);

  std::size_t arity() const { return arity_; }
  const MonomialOrder& order() const { return order_; }
  const Field& field() const { return field_; }
  bool hasNames() const { return names_.has_value(); }
  const std::vector<std::string>& names() const; // throws NoNames
  // Name of variable i: declared name, or "x<i>" when the ring is unnamed.
  std::string displayName(std::size_t i) const;
  // Index of a declared name; nullopt when absent or the ring is unnamed.
  std::optional<std::size_t> indexOf(const std::string& name) const;

  bool operator==(const RingDescriptor& rhs) const;

private:
  std::size_t arity_;
  MonomialOrder order_;
  Field field_;
  std::optional<std::vector<std::string>> names_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

Ring makeRing(std::size_t arity, MonomialOrder order, Field field,
              std::optional<std::vector<std::string>> varNames = std::nullopt);

// Same descriptor contents (arity, order, field, names).
bool sameRing(const Ring& a, const Ring& b);

// Arithmetic compatibility: arity, order and field agree; variable names are
// presentation only and do not participate.
bool arithCompatible(const Ring& a, const Ring& b);
void requireArithCompatible(const Ring& a, const Ring& b); // RingMismatch

// The same ring under another order (terms of existing polynomials must be
// re-sorted; see changeOrder in polynomial.hpp).
Ring withOrder(const Ring& r, MonomialOrder order);

} // namespace cagb

#endif
