#pragma once

#include <vector>

#include "symord/poset.hpp"
#include "symord/rules.hpp"
#include "symord/scale.hpp"

namespace symord {

// ---------------------------------------------------------------------
// Classical incidence algebra over the integers.  This layer is exact and
// standard; it serves as the verification backbone for the ordinal layer
// below (same posets, independent arithmetic).
// ---------------------------------------------------------------------

struct ZBiFunction {
  Poset::Ptr poset;
  std::vector<long long> values;  // size*size, row x, column y

  long long at(int x, int y) const {
    return values.at(static_cast<std::size_t>(x) * poset->size() + y);
  }
};

ZBiFunction classical_zeta(const Poset::Ptr&);   // 1 on x <= y
ZBiFunction classical_delta(const Poset::Ptr&);  // 1 on the diagonal
ZBiFunction classical_mobius(const Poset::Ptr&); // inverse of zeta under *

// Incidence convolution: (f*g)(x,y) = sum over x <= u <= y of f(x,u)g(u,y).
ZBiFunction classical_star(const ZBiFunction&, const ZBiFunction&);  // MismatchError

// Set-function transform on subsets of {1..n} (vectors indexed by mask,
// size 2^n, n up to 12): alternating-sum transform and its inverse.
std::vector<long long> classical_set_mobius(const std::vector<long long>&);
std::vector<long long> classical_set_zeta(const std::vector<long long>&);

// ---------------------------------------------------------------------
// Ordinal layer.  Scale-valued bifunctions that are 1 on the diagonal and
// 0 strictly below it form the working family; convolution replaces sum
// and product with symmetric maximum and symmetric minimum, and a
// computation rule arbitrates the ambiguous folds.
// ---------------------------------------------------------------------

struct LBiFunction {
  Poset::Ptr poset;
  Scale scale;
  std::vector<SymLevel> values;

  SymLevel at(int x, int y) const {
    return values.at(static_cast<std::size_t>(x) * poset->size() + y);
  }
  SymLevel& ref(int x, int y) {
    return values.at(static_cast<std::size_t>(x) * poset->size() + y);
  }
};

// 1 on the diagonal, 0 wherever x > y (entries of incomparable pairs are
// unconstrained by this predicate).
bool is_unitriangular(const LBiFunction&);

LBiFunction ordinal_zeta(const Poset::Ptr&, const Scale&);
LBiFunction ordinal_delta(const Poset::Ptr&, const Scale&);

// The distinguished inverse candidate: 1 on the diagonal, -1 on covers,
// 0 everywhere else.
LBiFunction canonical_zeta_inverse(const Poset::Ptr&, const Scale&);

// Ordinal convolutions under a rule.  The function form implicitly runs
// from the bottom:  (f (*) h)(y) = < max over u <= y of f(u) /\ h(u,y) >.
LFunction ostar(const LFunction&, const LBiFunction&, Rule);
LBiFunction ostar(const LBiFunction&, const LBiFunction&, Rule);

// Left-inverse equations against zeta under the rule: 1 on the diagonal
// and a cancelling fold on every pair x < y.
bool verify_zeta_inverse(const LBiFunction& candidate, Rule);

// Every unitriangular bifunction passing verify_zeta_inverse, with the
// entries of comparable pairs ranging over the full scale and the entries
// of incomparable pairs pinned to 0 (they never enter any fold).
// Bounded to 5 elements and scales of size 2.
std::vector<LBiFunction> enumerate_zeta_inverses(const Poset::Ptr&, const Scale&, Rule);

// Running primitive: g(x) = < max over y <= x of f(y) >.
LFunction eval_primitive(const LFunction&, Rule);

// Necessary condition for g to be a primitive: at every element, either
// |g| dominates all lower covers or g vanishes.
bool check_star_condition(const LFunction&);

// The transform recovering a density candidate from g:
//   m(x) = g(x) (+) - (fold of g over the lower covers of x),
// the inner fold arbitrated by the rule (for nonnegative isotone g it is a
// plain lattice max and the rule is irrelevant).  Total on any input; the
// abs_isotone flag reports whether the |g|-isotonicity premise held.
struct MobiusResult {
  LFunction transform;
  bool abs_isotone;
};
MobiusResult canonical_mobius(const LFunction& g, Rule);

// For nonnegative isotone g, the nonnegative solutions f of
// "eval_primitive(f) == g" form the interval below: lower is the
// canonical transform, upper is g itself.
struct SolutionInterval {
  LFunction lower;
  LFunction upper;
};
SolutionInterval solution_interval(const LFunction& g);  // PrecondError off-domain

// Difference-style derivative of a nonnegative isotone g: 0 where g equals
// its supremum over the strict down-set, g(x) elsewhere.  Coincides with
// canonical_mobius on its domain; implemented independently.
LFunction derivative(const LFunction& g);  // PrecondError off-domain

// Maximal chains on which a nonnegative isotone g is constant (at least
// two elements).  Kept sorted ascending along the order.
struct GChain {
  std::vector<int> elements;
  SymLevel value;

  int min() const { return elements.front(); }
  int max() const { return elements.back(); }
  // The place-reversing bijection of the chain.
  int mirror(int element) const;
};
std::vector<GChain> g_chains(const LFunction& g);  // PrecondError off-domain

// Conjugate of a nonnegative function on a poset with a conjugation:
// gbar(x) = conjugate of g at the conjugate element.
LFunction conjugate_function(const LFunction& g);

// Closed form of the transform of the conjugate function, driven by the
// constancy chains of g: 0 on non-minimal chain positions, mirrored
// conjugate values elsewhere.  Agrees with
// canonical_mobius(conjugate_function(g)) pointwise.
LFunction conjugate_mobius_closed(const LFunction& g, const std::vector<GChain>&);

}  // namespace symord
