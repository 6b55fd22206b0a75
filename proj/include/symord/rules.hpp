#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symord/scale.hpp"

namespace symord {

// A finite sequence of levels of one scale.  Order matters only for
// indexing; every operation below is invariant under permutation of the
// items (the symmetric maximum is commutative).
struct Sequence {
  Scale scale;
  std::vector<SymLevel> items;

  std::size_t size() const noexcept { return items.size(); }
};

// Checked construction from raw signed indices.
Sequence make_sequence(const Scale& s, const std::vector<int>& values);

// A sequence folds unambiguously under the symmetric maximum unless it has
// at least three terms and its maximum and minimum are exact opposites; in
// that degenerate case different parenthesizations disagree and a
// computation rule must arbitrate (apply_rule below).
bool fulfills_associativity(const Sequence&);

// Common value of all parenthesizations.  Empty sequences fold to 0.
// Throws PrecondError when the sequence does not fulfill associativity.
SymLevel assoc_fold(const Sequence&);

// The five shipped computation rules.  Each maps a sequence to the set of
// indices it deletes; the retained subsequence always folds unambiguously
// and the value of that fold is the rule's result.
//
//  - Splitting deletes nothing or, when the fold is ambiguous, everything.
//  - Weak repeatedly deletes *all* occurrences of the extreme opposite
//    pair of the remaining sequence, while that sequence still has at
//    least three terms and opposite extremes.
//  - Strong repeatedly deletes *one* occurrence of each extreme, stopping
//    as soon as the remainder folds unambiguously.
//  - Optimistic/Pessimistic delete occurrences of the extreme pair so that
//    one copy of the positive (resp. negative) extreme survives; when the
//    surviving extreme could not be produced by any arrangement of
//    parentheses they fall back to deleting everything.
enum class Rule { Splitting, Weak, Strong, Optimistic, Pessimistic };

const char* rule_name(Rule r) noexcept;
Rule parse_rule(const std::string& name);  // ParseError on unknown names

// Deletion sets of the weak and strong rules, ascending indices.  On an
// unambiguous sequence both are empty.  The strong set always sits inside
// the weak set, and the deletion loop of either rule cannot stop earlier:
// dropping only a prefix of its rounds leaves an ambiguous sequence.
std::vector<std::size_t> weak_deletions(const Sequence&);
std::vector<std::size_t> strong_deletions(const Sequence&);

struct RuleOutcome {
  std::vector<std::size_t> deleted;  // ascending
  SymLevel result;
};

RuleOutcome apply_rule(Rule r, const Sequence&);

// Exact set of values reachable by repeatedly replacing two items with
// their symmetric maximum until one remains (the empty sequence yields
// {0}).  Used as the realizability oracle for the rules above: every
// rule's result lies in this set.  Memoization is confined to the oracle
// instance; one instance must not be shared across threads.
class AchievableOracle {
 public:
  explicit AchievableOracle(std::size_t max_len = 8) : max_len_(max_len) {}

  std::set<SymLevel> results(const Sequence&);  // SizeError above max_len

 private:
  const std::set<int>& run(const std::vector<int>& multiset);

  std::size_t max_len_;
  std::map<std::vector<int>, std::set<int>> memo_;
};

std::set<SymLevel> achievable_results(const Sequence&, std::size_t max_len = 8);

// Bounds for the exhaustive comparisons below: every sequence of length
// at most max_len over the scale of size k.
struct RuleEnumBounds {
  std::size_t max_len = 5;
  int k = 3;
};

void for_each_sequence(const RuleEnumBounds&, const std::function<void(const Sequence&)>&);

// r1 refines r2 when r1 deletes at least what r2 deletes on every
// sequence within the bounds.
bool rule_refines(Rule r1, Rule r2, const RuleEnumBounds& = {});

// Whether the rule wipes this particular sequence out to 0.
bool is_cancelling(Rule r, const Sequence&);

// r1 is more discriminating than r2 when every sequence cancelled by r1
// is cancelled by r2 as well (within the bounds).
bool more_discriminating(Rule r1, Rule r2, const RuleEnumBounds& = {});

}  // namespace symord
