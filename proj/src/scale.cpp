#include "symord/scale.hpp"

#include <algorithm>

namespace symord {

SymLevel sign_level(SymLevel a, const Scale& s) {
  if (!s.contains(a)) throw InvalidLevelError("sign_level: level off scale");
  if (a.value() > 0) return s.one();
  if (a.value() < 0) return s.minus_one();
  return s.zero();
}

SymLevel sym_max(SymLevel a, SymLevel b) noexcept {
  if (a.value() == -b.value()) return SymLevel(0);
  // Not opposite, so on a chain equal magnitudes mean equal values.
  return a.index() >= b.index() ? a : b;
}

SymLevel sym_min(SymLevel a, SymLevel b) noexcept {
  int mag = std::min(a.index(), b.index());
  return a.sign() * b.sign() < 0 ? SymLevel(-mag) : SymLevel(mag);
}

SymLevel conjugate(SymLevel a, const Scale& s) {
  if (!s.contains(a)) throw InvalidLevelError("conjugate: level off scale");
  if (a.value() < 0) throw DomainError("conjugate is defined on the nonnegative half only");
  return SymLevel(s.k() - a.value());
}

SymLevel weber_diff(SymLevel a, SymLevel b) {
  if (a.value() < 0 || b.value() < 0)
    throw DomainError("weber_diff is defined on the nonnegative half only");
  return a.value() > b.value() ? a : SymLevel(0);
}

}  // namespace symord
