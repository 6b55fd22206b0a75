#include <algorithm>
#include <vector>

#include "doctest.h"
#include "symord/rules.hpp"

using namespace symord;

namespace {

Sequence seq(int k, const std::vector<int>& v) { return make_sequence(Scale(k), v); }

// The worked nine-term sequence used across the suite.
const std::vector<int> nine = {3, 3, 3, 2, 1, 0, -2, -3, -3};

std::vector<int> deleted_values(const Sequence& s, const std::vector<std::size_t>& idx) {
  std::vector<int> out;
  for (std::size_t i : idx) out.push_back(s.items[i].value());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("sequence construction") {
  Sequence s = seq(3, nine);
  CHECK(s.size() == 9);
  CHECK(s.items[4] == SymLevel(1));
  CHECK_THROWS_AS(seq(2, {3, 1}), InvalidLevelError);
  CHECK(seq(3, {}).size() == 0);
}

TEST_CASE("associativity predicate") {
  CHECK(fulfills_associativity(seq(3, {3, 2, 1})));
  CHECK(!fulfills_associativity(seq(3, {3, 1, -3})));
  CHECK(fulfills_associativity(seq(3, {3, -3})));  // pairs always fold
  CHECK(fulfills_associativity(seq(3, {})));
  CHECK(fulfills_associativity(seq(3, {-3})));
}

TEST_CASE("associative fold") {
  CHECK(assoc_fold(seq(3, {})) == SymLevel(0));
  CHECK(assoc_fold(seq(3, {3, 2, 1})) == SymLevel(3));
  CHECK(assoc_fold(seq(3, {-3, -1, 2})) == SymLevel(-3));
  CHECK(assoc_fold(seq(3, {3, -3})) == SymLevel(0));
  CHECK_THROWS_AS(assoc_fold(seq(3, {3, 1, -3})), PrecondError);
}

TEST_CASE("weak deletions") {
  Sequence s = seq(3, nine);
  CHECK(weak_deletions(s) == std::vector<std::size_t>{0, 1, 2, 3, 6, 7, 8});
  CHECK(deleted_values(s, weak_deletions(s)) == sorted({3, 3, 3, 2, -2, -3, -3}));

  CHECK(weak_deletions(seq(3, {3, 2, 1})).empty());

  // A remainder of fewer than three terms stops the loop, so stripping the
  // extreme pair of 3,-3,3 takes everything with it.
  CHECK(weak_deletions(seq(3, {3, -3, 3})) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("strong deletions") {
  Sequence s = seq(3, nine);
  CHECK(strong_deletions(s) == std::vector<std::size_t>{0, 1, 7, 8});
  CHECK(deleted_values(s, strong_deletions(s)) == sorted({3, -3, 3, -3}));

  CHECK(strong_deletions(seq(3, {3, 2, 1})).empty());
  CHECK(strong_deletions(seq(3, {3, -3, 1})) == std::vector<std::size_t>{0, 1});

  // strong deletes within the weak set
  std::vector<std::size_t> st = strong_deletions(s), wk = weak_deletions(s);
  CHECK(std::includes(wk.begin(), wk.end(), st.begin(), st.end()));
}

TEST_CASE("rule outcomes on the worked sequence") {
  Sequence s = seq(3, nine);
  CHECK(apply_rule(Rule::Weak, s).result == SymLevel(1));
  CHECK(apply_rule(Rule::Strong, s).result == SymLevel(3));
  CHECK(apply_rule(Rule::Pessimistic, s).result == SymLevel(-3));
  CHECK(apply_rule(Rule::Optimistic, s).result == SymLevel(3));

  RuleOutcome split = apply_rule(Rule::Splitting, s);
  CHECK(split.result == SymLevel(0));
  CHECK(split.deleted.size() == s.size());  // ambiguous: splitting wipes out

  // optimistic keeps one positive extreme, pessimistic one negative
  CHECK(deleted_values(s, apply_rule(Rule::Optimistic, s).deleted) ==
        sorted({3, 3, -3, -3}));
  CHECK(deleted_values(s, apply_rule(Rule::Pessimistic, s).deleted) ==
        sorted({3, 3, 3, -3}));
}

TEST_CASE("optimistic and pessimistic deletion sets on the long witness") {
  Sequence s = seq(3, {3, 3, 3, 2, 1, -2, -3, -3, -3});
  CHECK(deleted_values(s, apply_rule(Rule::Optimistic, s).deleted) ==
        sorted({3, 3, -3, -3, -3}));
  CHECK(deleted_values(s, apply_rule(Rule::Pessimistic, s).deleted) ==
        sorted({3, 3, 3, -3, -3}));
  CHECK(apply_rule(Rule::Optimistic, s).result == SymLevel(3));
  CHECK(apply_rule(Rule::Pessimistic, s).result == SymLevel(-3));
}

TEST_CASE("rules on associative and degenerate input") {
  Sequence ok = seq(3, {3, 2, 1});
  for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                 Rule::Pessimistic}) {
    RuleOutcome out = apply_rule(r, ok);
    CHECK(out.deleted.empty());
    CHECK(out.result == SymLevel(3));
  }

  Sequence empty = seq(3, {});
  CHECK(apply_rule(Rule::Weak, empty).result == SymLevel(0));
  CHECK(apply_rule(Rule::Weak, empty).deleted.empty());

  // lonely extreme pair: optimistic and pessimistic fall back to wiping out
  Sequence lone = seq(3, {3, -3, 1});
  CHECK(apply_rule(Rule::Optimistic, lone).result == SymLevel(0));
  CHECK(apply_rule(Rule::Pessimistic, lone).result == SymLevel(0));
  CHECK(apply_rule(Rule::Optimistic, lone).deleted.size() == 3);
}

TEST_CASE("rule names") {
  CHECK(parse_rule("weak") == Rule::Weak);
  CHECK(parse_rule("splitting") == Rule::Splitting);
  CHECK(parse_rule(rule_name(Rule::Pessimistic)) == Rule::Pessimistic);
  CHECK_THROWS_AS(parse_rule("bogus"), ParseError);
}

TEST_CASE("achievable results oracle") {
  std::set<SymLevel> r = achievable_results(seq(3, {3, 1, -3}));
  CHECK(r == std::set<SymLevel>{SymLevel(0), SymLevel(1)});

  CHECK(achievable_results(seq(3, {2, -3})) ==
        std::set<SymLevel>{SymLevel(-3)});  // pairs have one reading

  std::set<SymLevel> big = achievable_results(seq(3, {3, -3, 3, -3, 2}));
  CHECK(big.count(SymLevel(2)) == 1);
  CHECK(big.count(SymLevel(3)) == 1);
  CHECK(big.count(SymLevel(-3)) == 1);

  CHECK(achievable_results(seq(1, {})) == std::set<SymLevel>{SymLevel(0)});

  Sequence long_seq = seq(1, std::vector<int>(9, 1));
  CHECK_THROWS_AS(achievable_results(long_seq), SizeError);
  CHECK(achievable_results(long_seq, 9).size() == 1);
}

TEST_CASE("every rule result is realizable by some parenthesization") {
  RuleEnumBounds b{4, 2};
  for_each_sequence(b, [](const Sequence& s) {
    std::set<SymLevel> ok = achievable_results(s);
    for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                   Rule::Pessimistic})
      CHECK(ok.count(apply_rule(r, s).result) == 1);
  });
}

TEST_CASE("refinement order of the rules") {
  RuleEnumBounds b{4, 3};
  CHECK(rule_refines(Rule::Splitting, Rule::Weak, b));
  CHECK(rule_refines(Rule::Weak, Rule::Strong, b));
  CHECK(!rule_refines(Rule::Strong, Rule::Weak, b));
  CHECK(!rule_refines(Rule::Optimistic, Rule::Pessimistic, b));
}

TEST_CASE("cancelling sequences and discrimination") {
  CHECK(is_cancelling(Rule::Splitting, seq(3, {3, 1, -3})));
  CHECK(!is_cancelling(Rule::Strong, seq(3, {3, 1, -3})));  // strong leaves 1
  CHECK(is_cancelling(Rule::Weak, seq(3, {3, -3, 3})));

  RuleEnumBounds b{4, 3};
  CHECK(more_discriminating(Rule::Strong, Rule::Splitting, b));
  CHECK(more_discriminating(Rule::Weak, Rule::Splitting, b));
}

TEST_CASE("weak rule is not isotone") {
  CHECK(apply_rule(Rule::Weak, seq(3, {-3, 3, 1})).result == SymLevel(1));
  CHECK(apply_rule(Rule::Weak, seq(3, {-3, 3, 3})).result == SymLevel(0));
}
