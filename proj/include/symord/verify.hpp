#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace symord {

// One named invariant, checked against brute force or a frozen example.
// detail carries the case count and, on failure, the first witness.
struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

// Scale algebra laws, exhaustive over all levels up to max_k.
std::vector<Check> verify_algebra(int max_k = 4);

// Computation rule laws, exhaustive over all sequences of length at most
// max_len with magnitudes at most k; includes the realizability check of
// every result against the parenthesization oracle.
std::vector<Check> verify_rules(std::size_t max_len = 5, int k = 3);

// Integer incidence algebra and set transforms: star inverses on the
// boolean lattices up to max_n, alternating-sign form, and random
// round-trips on set functions up to max_set_n bits.
std::vector<Check> verify_classical(int max_n = 5, int round_trips = 200, int max_set_n = 8);

// The transform g (*) zeta^{-1} solves the reconstruction equation under
// the splitting and weak rules, across random |g|-isotone functions on
// small lattices, chains and the diamond; the strong rule's unsolvable
// diamond witness is checked exhaustively.
std::vector<Check> verify_primitive_solutions(int cases = 500, int max_k = 3);

// Exhaustive interval characterization of nonnegative solutions on the
// two-bit lattice and three-element chains.
std::vector<Check> verify_solution_intervals(int max_k = 2);

// Exhaustive enumeration of the zeta inverses on the two-bit lattice and
// the canonical inverse on chains.
std::vector<Check> verify_inverse_enumeration(int max_k = 2);

// Pointwise behaviour of the transform: dominant points are fixed,
// repeated values cancel, constancy chains, conjugates, and the
// non-morphism witness tables.
std::vector<Check> verify_transform_properties(int cases = 300);

// Closed-form transforms of possibility and necessity measures against
// the general transform, with tied and strict weight vectors.
std::vector<Check> verify_weight_transforms(int max_n = 5, int max_k = 4, int min_cases = 1000);

// The alternating subset form of the capacity transform against the
// general one, exhaustive over all capacities within the bounds.
std::vector<Check> verify_evenodd(int max_n = 3, int max_k = 2);

// Weighted lattice aggregation: the two evaluation routes agree,
// indicator profiles reproduce the capacity, and the symmetric extension
// is odd.
std::vector<Check> verify_sugeno(int cases = 1000);

// name is one of: algebra, rules, mobius, capacity, all.
// Throws ParseError on anything else.
std::vector<Check> run_suite(const std::string& name);

}  // namespace symord
