#pragma once

#include <utility>
#include <vector>

#include "symord/poset.hpp"
#include "symord/rules.hpp"
#include "symord/scale.hpp"

namespace symord {

// A normalized isotone set function on subsets of {1..n}, valued on the
// nonnegative half of the scale: v({}) = 0, v(N) = 1, A <= B implies
// v(A) <= v(B).  Subsets are bitmasks, criterion i owning bit i-1.
struct Capacity {
  int n;
  Scale scale;
  std::vector<SymLevel> values;  // indexed by mask, size 2^n

  SymLevel at(unsigned mask) const { return values.at(mask); }
  unsigned full() const { return (1u << n) - 1; }
};

// Checked construction; the error message of a failed monotonicity check
// names a witnessing pair of subsets.  n up to 12.
Capacity capacity_from_table(int n, const Scale& s, const std::vector<int>& values);

// conj(A) = conjugate of v(complement of A); an involution.
Capacity conjugate_capacity(const Capacity&);

// Weights of single criteria; normalized so the largest weight is 1.
struct PossibilityWeights {
  Scale scale;
  std::vector<SymLevel> w;  // w[i-1] is the weight of criterion i

  int n() const { return static_cast<int>(w.size()); }
};

PossibilityWeights make_weights(const Scale& s, const std::vector<int>& values);

// The maxitive capacity spanned by the weights: v(A) = max of w over A.
Capacity possibility(const PossibilityWeights&);

// Its conjugate; minitive over intersections of complements.
Capacity necessity(const PossibilityWeights&);

// Closed-form transforms (see mobius.hpp for the general one).  The
// possibility transform lives on singletons; the necessity transform on
// the chain of upper sets of the weight ordering, with tied neighbours
// collapsing to 0.  Both agree with the general transform by construction
// of the test suite.
std::vector<SymLevel> mobius_possibility_closed(const PossibilityWeights&);
std::vector<SymLevel> mobius_necessity_closed(const PossibilityWeights&);

// Alternating form of the transform of an arbitrary capacity:
//   m(A) = (max of v over B <= A with |A\B| even)
//          (+) - (max of v over B <= A with |A\B| odd)
// where (+) is the symmetric maximum.
std::vector<SymLevel> capacity_mobius_evenodd(const Capacity&);

// Bridges to the poset layer: a capacity as a function on the boolean
// lattice, and back.  Used to cross-check the closed forms against the
// general transform.
std::pair<Poset::Ptr, LFunction> capacity_as_function(const Capacity&);
std::vector<SymLevel> function_as_table(const LFunction&, int n);

// Weighted lattice aggregation of a nonnegative profile f (one level per
// criterion):  max over subsets A of  v(A) /\ (min of f over A).
// Throws DomainError on negative profiles.
SymLevel sugeno(const Capacity&, const std::vector<SymLevel>& profile);

// Same value computed along the sorted profile; kept as an independent
// route for cross-checking.
SymLevel sugeno_sorted(const Capacity&, const std::vector<SymLevel>& profile);

// Symmetric extension to signed profiles: aggregates the positive and the
// negative part separately and joins them with the symmetric maximum.
// The rule parameter arbitrates that final join; it never matters here
// because the join is binary, but the signature keeps the caller honest
// about which convention is in force.
SymLevel symmetric_sugeno(const Capacity&, const std::vector<SymLevel>& profile, Rule);

}  // namespace symord
