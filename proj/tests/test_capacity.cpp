#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "symord/capacity.hpp"
#include "symord/mobius.hpp"

using namespace symord;

namespace {

std::vector<int> table(const std::vector<SymLevel>& v) {
  std::vector<int> out;
  for (SymLevel a : v) out.push_back(a.value());
  return out;
}

std::vector<SymLevel> levels(const Scale& s, const std::vector<int>& v) {
  std::vector<SymLevel> out;
  for (int x : v) out.push_back(s.level(x));
  return out;
}

// mask order {}, {1}, {2}, {1,2}, ...
Capacity cap(int n, int k, const std::vector<int>& values) {
  return capacity_from_table(n, Scale(k), values);
}

}  // namespace

TEST_CASE("capacity construction") {
  Capacity u = cap(2, 1, {0, 0, 0, 1});
  CHECK(u.at(0) == SymLevel(0));
  CHECK(u.at(u.full()) == SymLevel(1));

  CHECK(cap(2, 2, {0, 1, 1, 2}).n == 2);

  CHECK_THROWS_AS(cap(2, 1, {0, 0, 0}), MismatchError);
  CHECK_THROWS_AS(cap(2, 1, {0, 0, 0, -1}), ValidationError);  // negative level
  CHECK_THROWS_AS(cap(2, 1, {1, 1, 1, 1}), ValidationError);   // empty set not 0
  CHECK_THROWS_AS(cap(2, 2, {0, 1, 1, 1}), ValidationError);   // full set not 1
  CHECK_THROWS_AS(cap(0, 1, {}), SizeError);

  // a monotonicity break names the witnessing pair
  try {
    cap(3, 2, {0, 2, 0, 0, 0, 2, 2, 2});
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("v(1) > v(1,2)") != std::string::npos);
  }
}

TEST_CASE("conjugate capacities") {
  Capacity v = cap(2, 2, {0, 1, 0, 2});
  Capacity w = conjugate_capacity(v);
  CHECK(table(w.values) == std::vector<int>{0, 2, 1, 2});
  CHECK(table(conjugate_capacity(w).values) == table(v.values));

  // with a single criterion the capacity is its own conjugate
  Capacity solo = cap(1, 2, {0, 2});
  CHECK(table(conjugate_capacity(solo).values) == table(solo.values));
}

TEST_CASE("possibility and necessity measures") {
  Scale s(3);
  PossibilityWeights w = make_weights(s, {1, 2, 3});
  CHECK(w.n() == 3);
  CHECK_THROWS_AS(make_weights(s, {1, 2, 2}), ValidationError);  // top weight must be 1
  CHECK_THROWS_AS(make_weights(s, {1, -2, 3}), ValidationError);
  CHECK_THROWS_AS(make_weights(s, {}), SizeError);

  Capacity pi = possibility(w);
  CHECK(pi.at(0) == SymLevel(0));
  CHECK(pi.at(0b011) == SymLevel(2));  // {1,2}
  CHECK(pi.at(0b100) == SymLevel(3));
  CHECK(pi.at(pi.full()) == SymLevel(3));

  // possibility preserves joins
  for (unsigned a = 0; a <= pi.full(); ++a)
    for (unsigned b = 0; b <= pi.full(); ++b)
      CHECK(pi.at(a | b) == std::max(pi.at(a), pi.at(b)));

  Capacity nec = necessity(w);
  CHECK(table(nec.values) == table(conjugate_capacity(pi).values));
  CHECK(nec.at(0b110) == SymLevel(2));  // {2,3}: conj of pi({1})

  // necessity preserves meets
  for (unsigned a = 0; a <= nec.full(); ++a)
    for (unsigned b = 0; b <= nec.full(); ++b)
      CHECK(nec.at(a & b) == std::min(nec.at(a), nec.at(b)));
}

TEST_CASE("closed transform of a possibility measure") {
  Scale s(3);
  PossibilityWeights w = make_weights(s, {1, 2, 3});
  std::vector<SymLevel> m = mobius_possibility_closed(w);
  CHECK(m[0b001] == SymLevel(1));
  CHECK(m[0b010] == SymLevel(2));
  CHECK(m[0b100] == SymLevel(3));
  CHECK(m[0b011] == SymLevel(0));  // only singletons carry weight
  CHECK(m[0] == SymLevel(0));

  // ties keep every singleton
  PossibilityWeights flat = make_weights(s, {3, 3});
  std::vector<SymLevel> mf = mobius_possibility_closed(flat);
  CHECK(mf[0b01] == SymLevel(3));
  CHECK(mf[0b10] == SymLevel(3));
  CHECK(mf[0b11] == SymLevel(0));

  // against the general transform
  auto bridge = capacity_as_function(possibility(w));
  CHECK(table(m) ==
        table(function_as_table(
            canonical_mobius(bridge.second, Rule::Splitting).transform, w.n())));
}

TEST_CASE("closed transform of a necessity measure") {
  Scale s(3);
  PossibilityWeights w = make_weights(s, {1, 2, 3});
  std::vector<SymLevel> m = mobius_necessity_closed(w);
  CHECK(m[0b110] == SymLevel(2));  // {2,3} -> conj of weight 1
  CHECK(m[0b100] == SymLevel(1));  // {3}   -> conj of weight 2
  CHECK(m[0b111] == SymLevel(3));  // full set, from the general form
  CHECK(m[0b001] == SymLevel(0));
  CHECK(m[0b011] == SymLevel(0));
  CHECK(m[0] == SymLevel(0));

  // a tie collapses its chain entry
  std::vector<SymLevel> mt = mobius_necessity_closed(make_weights(s, {1, 1, 3}));
  CHECK(mt[0b110] == SymLevel(0));

  // unsorted weights agree with the general transform too
  for (const std::vector<int>& raw :
       {std::vector<int>{2, 1, 3}, {3, 1, 2}, {2, 2, 3}, {3, 3, 3}}) {
    PossibilityWeights ww = make_weights(s, raw);
    auto bridge = capacity_as_function(necessity(ww));
    CHECK(table(mobius_necessity_closed(ww)) ==
          table(function_as_table(
              canonical_mobius(bridge.second, Rule::Splitting).transform, ww.n())));
  }
}

TEST_CASE("alternating transform of a capacity") {
  // the two-criteria example with unit scale
  Capacity g2 = cap(2, 1, {0, 1, 1, 1});
  CHECK(table(capacity_mobius_evenodd(g2)) == std::vector<int>{0, 1, 1, 0});

  // strictly rising capacities are their own transform
  Capacity strict = cap(2, 2, {0, 1, 1, 2});
  CHECK(table(capacity_mobius_evenodd(strict)) == std::vector<int>{0, 1, 1, 2});

  // an arbitrary capacity matches the cover form
  Capacity v = cap(3, 2, {0, 1, 0, 1, 1, 2, 1, 2});
  auto bridge = capacity_as_function(v);
  CHECK(table(capacity_mobius_evenodd(v)) ==
        table(function_as_table(
            canonical_mobius(bridge.second, Rule::Splitting).transform, v.n)));
}

TEST_CASE("capacity to function bridge") {
  Capacity v = cap(2, 2, {0, 1, 1, 2});
  auto [poset, f] = capacity_as_function(v);
  CHECK(poset->size() == 4);
  CHECK(f.at(poset->element("{}")) == SymLevel(0));
  CHECK(f.at(poset->element("1"))  == SymLevel(1));
  CHECK(f.at(poset->element("1,2")) == SymLevel(2));
  CHECK(is_isotone(f));
  CHECK(table(function_as_table(f, 2)) == table(v.values));

  CHECK_THROWS_AS(function_as_table(f, 3), MismatchError);
}

TEST_CASE("sugeno aggregation") {
  Scale s(3);
  Capacity v = cap(2, 3, {0, 1, 2, 3});

  CHECK(sugeno(v, levels(s, {2, 1})) == SymLevel(1));

  // constant profiles pass through
  Capacity any = cap(3, 3, {0, 1, 0, 1, 1, 2, 1, 3});
  for (int c = 0; c <= 3; ++c)
    CHECK(sugeno(any, levels(s, {c, c, c})) == SymLevel(c));

  // indicator profiles read the capacity back
  for (unsigned mask = 0; mask <= any.full(); ++mask) {
    std::vector<SymLevel> ind(3, SymLevel(0));
    for (int i = 0; i < 3; ++i)
      if (mask & (1u << i)) ind[i] = s.one();
    CHECK(sugeno(any, ind) == any.at(mask));
  }

  CHECK_THROWS_AS(sugeno(v, levels(s, {2, -1})), DomainError);
  CHECK_THROWS_AS(sugeno(v, levels(s, {2})), MismatchError);

  // the sorted route computes the same values
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int t = 0; t < 200; ++t) {
    std::vector<SymLevel> f2{SymLevel(pick(rng)), SymLevel(pick(rng))};
    CHECK(sugeno(v, f2) == sugeno_sorted(v, f2));
    std::vector<SymLevel> f3{SymLevel(pick(rng)), SymLevel(pick(rng)), SymLevel(pick(rng))};
    CHECK(sugeno(any, f3) == sugeno_sorted(any, f3));
  }
}

TEST_CASE("symmetric sugeno") {
  Scale s(3);
  Capacity v = cap(2, 3, {0, 2, 2, 3});

  // gains equal to losses cancel out
  CHECK(symmetric_sugeno(v, levels(s, {2, -2}), Rule::Splitting) == SymLevel(0));

  // nonnegative profiles defer to the plain integral
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(symmetric_sugeno(v, levels(s, {a, b}), Rule::Splitting) ==
            sugeno(v, levels(s, {a, b})));

  // mixed signs split into the two one-sided integrals
  std::vector<SymLevel> f = levels(s, {2, -1});
  std::vector<SymLevel> plus = levels(s, {2, 0}), minus = levels(s, {0, 1});
  CHECK(symmetric_sugeno(v, f, Rule::Splitting) ==
        sym_max(sugeno(v, plus), negate(sugeno(v, minus))));

  // reflection symmetry
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int t = 0; t < 300; ++t) {
    std::vector<SymLevel> g{SymLevel(pick(rng)), SymLevel(pick(rng))};
    std::vector<SymLevel> ng{negate(g[0]), negate(g[1])};
    CHECK(symmetric_sugeno(v, ng, Rule::Splitting) ==
          negate(symmetric_sugeno(v, g, Rule::Splitting)));
  }
}
