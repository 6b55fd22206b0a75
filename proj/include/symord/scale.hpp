#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "symord/errors.hpp"

namespace symord {

class Scale;

// One level of a symmetric finite scale, stored as a signed index in
// [-k, k].  The representation is canonical by construction: there is no
// "negative zero", and the total order of the scale is plain integer
// comparison of the signed index.
class SymLevel {
 public:
  constexpr SymLevel() noexcept : v_(0) {}
  // Unchecked; range validation lives in Scale::level and the parsers.
  constexpr explicit SymLevel(int signed_index) noexcept : v_(signed_index) {}

  constexpr int value() const noexcept { return v_; }
  constexpr int index() const noexcept { return v_ < 0 ? -v_ : v_; }
  constexpr int sign() const noexcept { return (v_ > 0) - (v_ < 0); }

  constexpr auto operator<=>(const SymLevel&) const noexcept = default;

 private:
  int v_;
};

// A symmetric bounded chain of 2k+1 levels,
//
//   -1  =  l(-k) < ... < l(-1) < l(0) = 0 < l(1) < ... < l(k)  =  1,
//
// i.e. a positive half glued to its mirror image at the neutral level 0.
// "0" below always means the neutral middle level, "1" the top and "-1"
// the bottom of the chain.
class Scale {
 public:
  explicit Scale(int k) : k_(k) {
    if (k < 1) throw InvalidLevelError("scale size must be at least 1, got " + std::to_string(k));
  }

  int k() const noexcept { return k_; }

  bool contains(SymLevel a) const noexcept { return a.index() <= k_; }

  // Range-checked construction from a signed index.
  SymLevel level(int signed_index) const {
    SymLevel a(signed_index);
    if (!contains(a))
      throw InvalidLevelError("level " + std::to_string(signed_index) + " outside scale of size " +
                              std::to_string(k_));
    return a;
  }

  SymLevel zero() const noexcept { return SymLevel(0); }
  SymLevel one() const noexcept { return SymLevel(k_); }
  SymLevel minus_one() const noexcept { return SymLevel(-k_); }

  friend bool operator==(const Scale&, const Scale&) = default;

 private:
  int k_;
};

// Reflection around the neutral level.  Total: -0 is 0.
constexpr SymLevel negate(SymLevel a) noexcept { return SymLevel(-a.value()); }

constexpr SymLevel abs_level(SymLevel a) noexcept { return SymLevel(a.index()); }

// Sign as a level of the scale: bottom, neutral or top.
SymLevel sign_level(SymLevel a, const Scale& s);

// Symmetric maximum: the argument larger in absolute value wins and keeps
// its sign; exact opposites annihilate to the neutral level.  Coincides
// with max on the positive half and with min on the negative half.
// Associative only away from opposite extremes (see rules.hpp).
SymLevel sym_max(SymLevel a, SymLevel b) noexcept;

// Symmetric minimum: magnitude is the smaller absolute value, and the
// result is negative exactly when the signs strictly disagree.
// Associative.
SymLevel sym_min(SymLevel a, SymLevel b) noexcept;

// Order-reversing involution of the nonnegative half: l(i) -> l(k-i).
SymLevel conjugate(SymLevel a, const Scale& s);

// Difference-like residual on the nonnegative half: a when a > b, else 0.
SymLevel weber_diff(SymLevel a, SymLevel b);

inline std::string to_string(SymLevel a) { return std::to_string(a.value()); }

}  // namespace symord
