#include <algorithm>
#include <vector>

#include "doctest.h"
#include "symord/mobius.hpp"

using namespace symord;

namespace {

LFunction fn(Poset::Ptr p, int k, const std::vector<std::pair<std::string, int>>& by_id) {
  std::vector<int> values(p->size(), 0);
  for (const auto& [id, v] : by_id) values[p->element(id)] = v;
  return make_function(p, Scale(k), values);
}

int val(const LFunction& f, const std::string& id) { return f.at(f.poset->element(id)).value(); }

// The running pair of examples on the two-criteria lattice, k = 1.
LFunction g1() {
  return fn(Poset::boolean_lattice(2), 1, {{"{}", 0}, {"1", 0}, {"2", 0}, {"1,2", 1}});
}
LFunction g2() {
  return fn(Poset::boolean_lattice(2), 1, {{"{}", 0}, {"1", 1}, {"2", 1}, {"1,2", 1}});
}

}  // namespace

TEST_CASE("classical mobius on chains and lattices") {
  Poset::Ptr c = Poset::chain(3);
  ZBiFunction mu = classical_mobius(c);
  int c0 = c->element("c0"), c1 = c->element("c1"), c2 = c->element("c2");
  CHECK(mu.at(c0, c1) == -1);
  CHECK(mu.at(c0, c2) == 0);
  CHECK(mu.at(c1, c2) == -1);
  for (int x = 0; x < c->size(); ++x) CHECK(mu.at(x, x) == 1);

  // alternating signs by interval size on the subset lattice
  Poset::Ptr b = Poset::boolean_lattice(3);
  ZBiFunction bmu = classical_mobius(b);
  CHECK(bmu.at(b->element("{}"), b->element("1,2")) == 1);
  CHECK(bmu.at(b->element("{}"), b->element("1,2,3")) == -1);
  CHECK(bmu.at(b->element("1"), b->element("1,3")) == -1);
  CHECK(bmu.at(b->element("1"), b->element("2")) == 0);  // incomparable
}

TEST_CASE("classical convolution") {
  Poset::Ptr b = Poset::boolean_lattice(3);
  ZBiFunction zeta = classical_zeta(b);
  ZBiFunction mu = classical_mobius(b);
  ZBiFunction delta = classical_delta(b);

  CHECK(classical_star(zeta, mu).values == delta.values);
  CHECK(classical_star(mu, zeta).values == delta.values);
  CHECK(classical_star(delta, zeta).values == zeta.values);
  CHECK(classical_star(zeta, delta).values == zeta.values);

  Poset::Ptr c = Poset::chain(3);
  ZBiFunction zz = classical_star(classical_zeta(c), classical_zeta(c));
  CHECK(zz.at(c->element("c0"), c->element("c2")) == 3);  // counts the segment

  CHECK_THROWS_AS(classical_star(zeta, classical_zeta(Poset::boolean_lattice(3))),
                  MismatchError);
}

TEST_CASE("classical set transforms") {
  // v(A) = |A| on two criteria
  std::vector<long long> m = classical_set_mobius({0, 1, 1, 2});
  CHECK(m == std::vector<long long>{0, 1, 1, 0});
  CHECK(classical_set_zeta(m) == std::vector<long long>{0, 1, 1, 2});

  // unanimity game on T = {1,3}: the transform is the indicator of T
  std::vector<long long> u(8, 0);
  for (unsigned a = 0; a < 8; ++a)
    if ((a & 5u) == 5u) u[a] = 1;
  std::vector<long long> mu = classical_set_mobius(u);
  for (unsigned a = 0; a < 8; ++a) CHECK(mu[a] == (a == 5u ? 1 : 0));

  CHECK(classical_set_mobius({0, 0, 0, 0}) == std::vector<long long>(4, 0));
  CHECK_THROWS_AS(classical_set_mobius({1, 2, 3}), SizeError);
}

TEST_CASE("ordinal zeta and delta") {
  Poset::Ptr b = Poset::boolean_lattice(2);
  Scale s(2);
  LBiFunction zeta = ordinal_zeta(b, s);
  LBiFunction delta = ordinal_delta(b, s);
  int e = b->element("{}"), one = b->element("1"), two = b->element("2"),
      full = b->element("1,2");

  CHECK(zeta.at(one, one) == s.one());
  CHECK(zeta.at(e, full) == s.one());
  CHECK(zeta.at(one, two) == SymLevel(0));
  CHECK(zeta.at(full, e) == SymLevel(0));
  CHECK(delta.at(one, one) == s.one());
  CHECK(delta.at(e, one) == SymLevel(0));
  CHECK(is_unitriangular(zeta));
  CHECK(is_unitriangular(delta));

  LBiFunction bad = delta;
  bad.ref(full, e) = s.one();
  CHECK(!is_unitriangular(bad));
}

TEST_CASE("canonical zeta inverse") {
  Poset::Ptr c = Poset::chain(3);
  Scale s(2);
  LBiFunction inv = canonical_zeta_inverse(c, s);
  int c0 = c->element("c0"), c1 = c->element("c1"), c2 = c->element("c2");
  CHECK(inv.at(c0, c0) == SymLevel(2));
  CHECK(inv.at(c0, c1) == SymLevel(-2));
  CHECK(inv.at(c1, c2) == SymLevel(-2));
  CHECK(inv.at(c0, c2) == SymLevel(0));  // non-cover stays clear
  CHECK(is_unitriangular(inv));

  Poset::Ptr b = Poset::boolean_lattice(2);
  LBiFunction binv = canonical_zeta_inverse(b, s);
  CHECK(binv.at(b->element("1"), b->element("2")) == SymLevel(0));  // incomparable
}

TEST_CASE("verifying zeta inverses") {
  Scale s(2);
  Poset::Ptr b = Poset::boolean_lattice(3);
  LBiFunction inv = canonical_zeta_inverse(b, s);
  CHECK(verify_zeta_inverse(inv, Rule::Splitting));
  CHECK(verify_zeta_inverse(inv, Rule::Weak));

  // a positive entry at the non-cover pair still verifies under weak
  Poset::Ptr q = Poset::boolean_lattice(2);
  LBiFunction tweaked = canonical_zeta_inverse(q, s);
  tweaked.ref(q->element("{}"), q->element("1,2")) = s.one();
  CHECK(verify_zeta_inverse(tweaked, Rule::Weak));

  // zeta itself is no inverse
  CHECK(!verify_zeta_inverse(ordinal_zeta(q, s), Rule::Splitting));
}

TEST_CASE("enumerating zeta inverses on the two-criteria lattice") {
  Poset::Ptr b = Poset::boolean_lattice(2);
  Scale s(2);
  int lo = b->element("{}"), hi = b->element("1,2");

  auto free_values = [&](Rule r) {
    std::vector<int> out;
    for (const LBiFunction& inv : enumerate_zeta_inverses(b, s, r)) {
      CHECK(verify_zeta_inverse(inv, r));
      CHECK(inv.at(lo, b->element("1")) == SymLevel(-2));  // covers are forced
      out.push_back(inv.at(lo, hi).value());
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  CHECK(free_values(Rule::Weak) == std::vector<int>{-2, 0, 2});
  CHECK(free_values(Rule::Splitting) == std::vector<int>{-2, -1, 0, 1, 2});
  CHECK(free_values(Rule::Strong) == std::vector<int>{2});

  // the canonical inverse shows up under every rule on a chain
  Poset::Ptr c = Poset::chain(4);
  for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                 Rule::Pessimistic})
    CHECK(verify_zeta_inverse(canonical_zeta_inverse(c, s), r));

  CHECK_THROWS_AS(enumerate_zeta_inverses(Poset::boolean_lattice(3), s, Rule::Weak),
                  SizeError);
  CHECK_THROWS_AS(enumerate_zeta_inverses(b, Scale(3), Rule::Weak), SizeError);
}

TEST_CASE("ordinal convolution") {
  Scale s(1);
  LFunction g = g2();
  Poset::Ptr b = g.poset;
  LBiFunction delta = ordinal_delta(b, s);
  LBiFunction zeta = ordinal_zeta(b, s);
  LBiFunction inv = canonical_zeta_inverse(b, s);

  for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong})
    CHECK(ostar(g, delta, r).values == g.values);

  LFunction m = ostar(g, inv, Rule::Splitting);
  CHECK(val(m, "{}") == 0);
  CHECK(val(m, "1") == 1);
  CHECK(val(m, "2") == 1);
  CHECK(val(m, "1,2") == 0);

  // convolving an isotone nonnegative function with zeta reproduces it
  Poset::Ptr c = Poset::chain(4);
  LFunction iso = fn(c, 2, {{"c0", 0}, {"c1", 1}, {"c2", 1}, {"c3", 2}});
  CHECK(ostar(iso, ordinal_zeta(c, Scale(2)), Rule::Splitting).values == iso.values);

  // bifunction form: delta is neutral on both sides, and the canonical
  // inverse composes with zeta back to delta
  CHECK(ostar(delta, zeta, Rule::Weak).values == zeta.values);
  CHECK(ostar(zeta, delta, Rule::Weak).values == zeta.values);
  CHECK(ostar(inv, zeta, Rule::Weak).values == delta.values);

  CHECK_THROWS_AS(ostar(g, ordinal_zeta(b, Scale(2)), Rule::Weak), MismatchError);
}

TEST_CASE("running primitive") {
  LFunction m = fn(Poset::boolean_lattice(2), 1, {{"{}", 0}, {"1", 1}, {"2", 1}, {"1,2", 0}});
  for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                 Rule::Pessimistic})
    CHECK(eval_primitive(m, r).values == g2().values);

  // one value at the bottom floods the whole poset
  LFunction spike = fn(Poset::diamond(), 2, {{"0", 2}, {"a", 0}, {"b", 0}, {"c", 0}});
  LFunction flood = eval_primitive(spike, Rule::Splitting);
  for (SymLevel v : flood.values) CHECK(v == SymLevel(2));

  // opposite values along a chain annihilate
  LFunction f = fn(Poset::chain(2), 1, {{"c0", 1}, {"c1", -1}});
  CHECK(val(eval_primitive(f, Rule::Splitting), "c1") == 0);
  CHECK(val(eval_primitive(f, Rule::Splitting), "c0") == 1);
}

TEST_CASE("star condition") {
  CHECK(check_star_condition(fn(Poset::chain(2), 1, {{"c0", 1}, {"c1", -1}})));
  CHECK(check_star_condition(g2()));
  CHECK(check_star_condition(fn(Poset::chain(3), 1, {})));  // all zero
  CHECK(!check_star_condition(fn(Poset::chain(2), 2, {{"c0", 2}, {"c1", 1}})));
}

TEST_CASE("canonical mobius tables") {
  MobiusResult r1 = canonical_mobius(g1(), Rule::Splitting);
  CHECK(r1.abs_isotone);
  CHECK(r1.transform.values == g1().values);

  MobiusResult r2 = canonical_mobius(g2(), Rule::Splitting);
  CHECK(r2.abs_isotone);
  CHECK(val(r2.transform, "{}") == 0);
  CHECK(val(r2.transform, "1") == 1);
  CHECK(val(r2.transform, "2") == 1);
  CHECK(val(r2.transform, "1,2") == 0);

  // a positive constant moves to the bottom
  LFunction c = fn(Poset::diamond(), 2, {{"0", 1}, {"a", 1}, {"b", 1}, {"c", 1}});
  LFunction mc = canonical_mobius(c, Rule::Splitting).transform;
  CHECK(val(mc, "0") == 1);
  CHECK(val(mc, "a") == 0);
  CHECK(val(mc, "b") == 0);
  CHECK(val(mc, "c") == 0);

  // the transform is total; the flag reports a broken premise
  MobiusResult off = canonical_mobius(fn(Poset::chain(2), 2, {{"c0", 2}, {"c1", 1}}),
                                      Rule::Splitting);
  CHECK(!off.abs_isotone);
  CHECK(off.transform.values.size() == 2);
}

TEST_CASE("the transform is not a morphism of the symmetric maximum") {
  LFunction a = g1(), b = g2();
  LFunction m1 = canonical_mobius(a, Rule::Splitting).transform;
  LFunction m2 = canonical_mobius(b, Rule::Splitting).transform;

  // g1 join g2 is g2, but the transforms do not join accordingly
  for (std::size_t x = 0; x < a.values.size(); ++x)
    CHECK(sym_max(a.values[x], b.values[x]) == b.values[x]);
  bool joins = true;
  for (std::size_t x = 0; x < a.values.size(); ++x)
    if (sym_max(m1.values[x], m2.values[x]) != m2.values[x]) joins = false;
  CHECK(!joins);
}

TEST_CASE("some sign patterns admit no density at all") {
  Poset::Ptr d = Poset::diamond();
  LFunction g = fn(d, 1, {{"0", 0}, {"a", -1}, {"b", -1}, {"c", 1}});
  CHECK(is_abs_isotone(g));
  for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                 Rule::Pessimistic}) {
    MobiusResult res = canonical_mobius(g, r);
    CHECK(res.abs_isotone);
    CHECK(eval_primitive(res.transform, r).values != g.values);
  }

  // flipping the top sign restores solvability everywhere
  LFunction good = fn(d, 1, {{"0", 0}, {"a", -1}, {"b", -1}, {"c", -1}});
  for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                 Rule::Pessimistic})
    CHECK(eval_primitive(canonical_mobius(good, r).transform, r).values == good.values);
}

TEST_CASE("solution intervals") {
  SolutionInterval iv = solution_interval(g2());
  CHECK(iv.upper.values == g2().values);
  CHECK(val(iv.lower, "1,2") == 0);
  CHECK(val(iv.lower, "1") == 1);

  // strictly rising functions pin the interval to a point
  LFunction strict = fn(Poset::chain(3), 2, {{"c0", 0}, {"c1", 1}, {"c2", 2}});
  SolutionInterval tight = solution_interval(strict);
  CHECK(tight.lower.values == strict.values);
  CHECK(tight.upper.values == strict.values);

  CHECK_THROWS_AS(solution_interval(fn(Poset::chain(2), 1, {{"c0", 0}, {"c1", -1}})),
                  PrecondError);
  CHECK_THROWS_AS(solution_interval(fn(Poset::chain(2), 1, {{"c0", 1}, {"c1", 0}})),
                  PrecondError);
}

TEST_CASE("derivative coincides with the transform on its domain") {
  CHECK(derivative(g2()).values == canonical_mobius(g2(), Rule::Splitting).transform.values);
  CHECK(val(derivative(g2()), "1,2") == 0);

  LFunction strict = fn(Poset::chain(3), 2, {{"c0", 0}, {"c1", 1}, {"c2", 2}});
  CHECK(derivative(strict).values == strict.values);

  LFunction flat = fn(Poset::boolean_lattice(2), 2,
                      {{"{}", 0}, {"1", 2}, {"2", 1}, {"1,2", 2}});
  CHECK(derivative(flat).values ==
        canonical_mobius(flat, Rule::Splitting).transform.values);

  CHECK_THROWS_AS(derivative(fn(Poset::chain(2), 1, {{"c0", 0}, {"c1", -1}})), PrecondError);
}

TEST_CASE("constancy chains") {
  CHECK(g_chains(fn(Poset::chain(3), 2, {{"c0", 0}, {"c1", 1}, {"c2", 2}})).empty());

  std::vector<GChain> chains = g_chains(g2());
  REQUIRE(chains.size() == 2);
  Poset::Ptr b = g2().poset;
  int one = b->element("1"), two = b->element("2"), full = b->element("1,2");
  for (const GChain& c : chains) {
    CHECK(c.value == SymLevel(1));
    CHECK(c.elements.size() == 2);
    CHECK(c.max() == full);
    CHECK((c.min() == one || c.min() == two));
    CHECK(c.mirror(c.min()) == full);
    CHECK(c.mirror(full) == c.min());
    CHECK_THROWS_AS(c.mirror(b->element("{}")), LookupError);
  }

  // a flat function's chains are the maximal chains of the poset
  LFunction flat = fn(Poset::diamond(), 1, {});
  CHECK(g_chains(flat).size() == 2);

  CHECK_THROWS_AS(g_chains(fn(Poset::chain(2), 1, {{"c0", 0}, {"c1", -1}})), PrecondError);
}

TEST_CASE("conjugate functions and the closed transform") {
  Poset::Ptr c = Poset::chain(3);
  LFunction g = fn(c, 2, {{"c0", 0}, {"c1", 1}, {"c2", 2}});
  LFunction gb = conjugate_function(g);
  CHECK(val(gb, "c0") == 0);  // conj(g(c2)) = conj(2) = 0
  CHECK(val(gb, "c1") == 1);
  CHECK(val(gb, "c2") == 2);
  CHECK(conjugate_function(gb).values == g.values);

  LFunction constant = fn(Poset::boolean_lattice(2), 3,
                          {{"{}", 1}, {"1", 1}, {"2", 1}, {"1,2", 1}});
  for (SymLevel v : conjugate_function(constant).values) CHECK(v == SymLevel(2));

  Poset::Ptr bare = Poset::from_covers({"0", "a"}, {{"0", "a"}});
  CHECK_THROWS_AS(conjugate_function(fn(bare, 1, {})), CapabilityError);

  for (const LFunction& g0 : {g2(), g1(), fn(Poset::boolean_lattice(2), 2,
                                             {{"{}", 0}, {"1", 1}, {"2", 2}, {"1,2", 2}})}) {
    LFunction direct = canonical_mobius(conjugate_function(g0), Rule::Splitting).transform;
    LFunction closed = conjugate_mobius_closed(g0, g_chains(g0));
    CHECK(closed.values == direct.values);
  }
}
