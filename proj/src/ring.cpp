#include "cagb/ring.hpp"

#include <algorithm>
#include <set>

namespace cagb {

RingDescriptor::RingDescriptor(std::size_t arity, MonomialOrder order,
                               Field field,
                               std::optional<std::vector<std::string>> names)
    : arity_(arity), order_(std::move(order)), field_(field),
      names_(std::move(names)) {
  if (names_) {
    if (names_->size() != arity_)
      throw ArityMismatch("expected " + std::to_string(arity_) +
                          " variable names, got " +
                          std::to_string(names_->size()));
    std::set<std::string> seen;
    for (const auto& n : *names_)
      if (!seen.insert(n).second)
        throw DuplicateVariable("variable '" + n + "' occurs twice");
  }
}

const std::vector<std::string>& RingDescriptor::names() const {
  if (!names_)
    throw NoNames("ring has no variable names");
  return *names_;
}

std::string RingDescriptor::displayName(std::size_t i) const {
  if (names_)
    return (*names_)[i];
  return "x" + std::to_string(i);
}

std::optional<std::size_t> RingDescriptor::indexOf(
    const std::string& name) const {
  if (!names_)
    return std::nullopt;
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

bool RingDescriptor::operator==(const RingDescriptor& rhs) const {
  return arity_ == rhs.arity_ && order_ == rhs.order_ &&
         field_ == rhs.field_ && names_ == rhs.names_;
}

Ring makeRing(std::size_t arity, MonomialOrder order, Field field,
              std::optional<std::vector<std::string>> varNames) {
  return std::make_shared<RingDescriptor>(arity, std::move(order), field,
                                          std::move(varNames));
}

bool sameRing(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

bool arithCompatible(const Ring& a, const Ring& b) {
  if (a == b)
    return true;
  return a && b && a->arity() == b->arity() && a->order() == b->order() &&
         a->field() == b->field();
}

void requireArithCompatible(const Ring& a, const Ring& b) {
  if (!arithCompatible(a, b))
    throw RingMismatch("polynomials live in different rings");
}

Ring withOrder(const Ring& r, MonomialOrder order) {
  if (r->order() == order)
    return r;
  std::optional<std::vector<std::string>> names;
  if (r->hasNames())
    names = r->names();
  return makeRing(r->arity(), std::move(order), r->field(), std::move(names));
}

} // namespace cagb
