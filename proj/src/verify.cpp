#include "symord/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "symord/capacity.hpp"
#include "symord/errors.hpp"
#include "symord/io.hpp"
#include "symord/mobius.hpp"
#include "symord/poset.hpp"
#include "symord/rules.hpp"
#include "symord/scale.hpp"

namespace symord {

namespace {

struct Tally {
  long long cases = 0;
  long long bad = 0;
  std::string first;

  template <typename Witness>
  void count(bool ok, Witness&& witness) {
    ++cases;
    if (!ok) {
      if (bad == 0) first = witness();
      ++bad;
    }
  }

  void count(bool ok) {
    count(ok, [] { return std::string("(no witness recorded)"); });
  }
};

Check to_check(std::string name, const Tally& t) {
  if (t.bad == 0) return {std::move(name), true, std::to_string(t.cases) + " cases"};
  return {std::move(name), false,
          std::to_string(t.bad) + " violations in " + std::to_string(t.cases) +
              " cases; first: " + t.first};
}

std::string seq_str(const Sequence& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.items[i].value());
  }
  return out + "]";
}

std::string fn_str(const LFunction& f) {
  std::string out;
  for (int x = 0; x < f.poset->size(); ++x) {
    if (!out.empty()) out += ' ';
    out += f.poset->id(x) + "=" + std::to_string(f.at(x).value());
  }
  return out;
}

Sequence seq_of(const Scale& s, std::vector<int> values) {
  Sequence out{s, {}};
  out.items.reserve(values.size());
  for (int v : values) out.items.push_back(SymLevel(v));
  return out;
}

// Magnitudes grow along a linear extension; signs are free.  The result
// has |g| isotone, and is isotone nonnegative when with_signs is false.
LFunction random_function(const Poset::Ptr& p, const Scale& s, std::mt19937& rng,
                          bool with_signs) {
  std::vector<SymLevel> vals(p->size(), SymLevel(0));
  for (int x : linear_extension(*p)) {
    int lo = 0;
    for (int y : p->lower_covers(x)) lo = std::max(lo, vals[y].index());
    int m = std::uniform_int_distribution<int>(lo, s.k())(rng);
    if (with_signs && m != 0 && std::uniform_int_distribution<int>(0, 1)(rng) != 0) m = -m;
    vals[x] = SymLevel(m);
  }
  return {p, s, std::move(vals)};
}

// |g| isotone and free of comparable opposite values: the sign is a
// function of the magnitude, so equal magnitudes never clash.  Two
// comparable points with opposite nonzero values would make the
// reconstruction equation unsolvable (annihilation in the fold), so this
// is the honest domain for the reconstruction checks.
LFunction random_conflict_free(const Poset::Ptr& p, const Scale& s, std::mt19937& rng) {
  std::vector<int> sign_of(static_cast<std::size_t>(s.k()) + 1, 1);
  for (int m = 1; m <= s.k(); ++m)
    if (std::uniform_int_distribution<int>(0, 1)(rng) != 0)
      sign_of[static_cast<std::size_t>(m)] = -1;
  LFunction g = random_function(p, s, rng, false);
  for (SymLevel& v : g.values)
    v = SymLevel(sign_of[static_cast<std::size_t>(v.index())] * v.index());
  return g;
}

}  // namespace

// ---------------------------------------------------------------------
// Scale algebra.
// ---------------------------------------------------------------------

std::vector<Check> verify_algebra(int max_k) {
  Tally commut_max, neutral_max, absorb_min, annihilate, neg_distr, assoc_off;
  Tally commut_min, neutral_min, absorb_max, assoc_min, distr_cone, distr_mixed;
  Tally isotone_max, annihilation_blocks;

  for (int k = 1; k <= max_k; ++k) {
    Scale s(k);
    auto wit2 = [k](int a, int b) {
      return [a, b, k] {
        return "k=" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
      };
    };
    auto wit3 = [k](int a, int b, int c) {
      return [a, b, c, k] {
        return "k=" + std::to_string(k) + " (" + std::to_string(a) + "," + std::to_string(b) +
               "," + std::to_string(c) + ")";
      };
    };

    for (int a = -k; a <= k; ++a) {
      SymLevel A(a);
      annihilate.count(sym_max(A, negate(A)) == SymLevel(0), wit2(a, -a));
      for (int b = -k; b <= k; ++b) {
        SymLevel B(b);
        commut_max.count(sym_max(A, B) == sym_max(B, A), wit2(a, b));
        commut_min.count(sym_min(A, B) == sym_min(B, A), wit2(a, b));
        neg_distr.count(negate(sym_max(A, B)) == sym_max(negate(A), negate(B)), wit2(a, b));
      }
    }

    // Uniqueness of the special elements.
    for (int e = -k; e <= k; ++e) {
      SymLevel E(e);
      bool max_neutral = true, min_absorbing = true, min_neutral = true, max_absorbing = true;
      for (int a = -k; a <= k; ++a) {
        SymLevel A(a);
        if (sym_max(A, E) != A) max_neutral = false;
        if (sym_min(A, E) != E) min_absorbing = false;
        if (sym_min(A, E) != A) min_neutral = false;
        if (a != -e && sym_max(A, E) != E) max_absorbing = false;
      }
      neutral_max.count(max_neutral == (e == 0), wit2(e, e));
      absorb_min.count(min_absorbing == (e == 0), wit2(e, e));
      neutral_min.count(min_neutral == (e == k), wit2(e, e));
      // Absorption can only hold up to annihilation by the opposite
      // extreme, and then both extremes qualify.
      absorb_max.count(max_absorbing == (e == k || e == -k), wit2(e, e));
    }

    for (int a = -k; a <= k; ++a)
      for (int b = -k; b <= k; ++b)
        for (int c = -k; c <= k; ++c) {
          SymLevel A(a), B(b), C(c);
          int mx = std::max({a, b, c}), mn = std::min({a, b, c});
          if (mx != -mn) {
            SymLevel p1 = sym_max(sym_max(A, B), C);
            SymLevel p2 = sym_max(A, sym_max(B, C));
            SymLevel p3 = sym_max(sym_max(A, C), B);
            assoc_off.count(p1 == p2 && p2 == p3, wit3(a, b, c));
          }
          assoc_min.count(sym_min(sym_min(A, B), C) == sym_min(A, sym_min(B, C)), wit3(a, b, c));
          if ((a >= 0 && b >= 0 && c >= 0) || (a <= 0 && b <= 0 && c <= 0))
            distr_cone.count(sym_min(A, sym_max(B, C)) ==
                                 sym_max(sym_min(A, B), sym_min(A, C)),
                             wit3(a, b, c));
        }

    if (k >= 3) {
      // 0 < a < b and b < -c: the two sides differ.
      SymLevel A(1), B(2), C(-k);
      distr_mixed.count(sym_min(A, sym_max(B, C)) != sym_max(sym_min(A, B), sym_min(A, C)),
                        wit3(1, 2, -k));
    }

    for (int a = -k; a <= k; ++a)
      for (int a2 = a; a2 <= k; ++a2)
        for (int b = -k; b <= k; ++b)
          for (int b2 = b; b2 <= k; ++b2)
            isotone_max.count(sym_max(SymLevel(a), SymLevel(b)) <=
                                  sym_max(SymLevel(a2), SymLevel(b2)),
                              wit2(a, b));

    for (int b = 1; b <= k; ++b)
      for (int a = 1; a < b; ++a) {
        SymLevel A(a), B(b);
        SymLevel left = sym_max(sym_max(negate(B), B), A);
        SymLevel right = sym_max(negate(B), sym_max(B, A));
        annihilation_blocks.count(left == A && right == SymLevel(0) && A != SymLevel(0),
                                  wit2(a, b));
      }
  }

  return {
      to_check("sym-max is commutative", commut_max),
      to_check("zero is the unique neutral element of sym-max", neutral_max),
      to_check("zero is the unique absorbing element of sym-min", absorb_min),
      to_check("opposite levels annihilate", annihilate),
      to_check("negation distributes over sym-max", neg_distr),
      to_check("triples fold associatively off the ambiguous locus", assoc_off),
      to_check("sym-min is commutative", commut_min),
      to_check("one is the unique neutral element of sym-min", neutral_min),
      to_check("only the extremes absorb sym-max, up to annihilation", absorb_max),
      to_check("sym-min is associative", assoc_min),
      to_check("sym-min distributes over sym-max within a sign cone", distr_cone),
      to_check("sym-min fails to distribute across signs (witness)", distr_mixed),
      to_check("sym-max is isotone", isotone_max),
      to_check("no bracketing survives annihilation of the extremes", annihilation_blocks),
  };
}

// ---------------------------------------------------------------------
// Computation rules.
// ---------------------------------------------------------------------

namespace {

// Reference reimplementation of the weak deletion loop.
std::vector<std::size_t> naive_weak(const Sequence& s) {
  std::vector<std::size_t> alive(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) alive[i] = i;
  std::vector<std::size_t> deleted;
  for (;;) {
    if (alive.size() < 3) break;
    int mx = s.items[alive[0]].value(), mn = mx;
    for (std::size_t i : alive) {
      mx = std::max(mx, s.items[i].value());
      mn = std::min(mn, s.items[i].value());
    }
    if (mx != -mn) break;
    std::vector<std::size_t> keep;
    for (std::size_t i : alive)
      (s.items[i].index() == mx ? deleted : keep).push_back(i);
    alive.swap(keep);
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

// Reference reimplementation of the strong deletion loop.  Deletions are
// reported in round order, one opposite pair at a time.
std::vector<std::size_t> naive_strong_rounds(const Sequence& s) {
  std::vector<std::size_t> alive(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) alive[i] = i;
  std::vector<std::size_t> deleted;
  for (;;) {
    if (alive.size() < 3) break;
    int mx = s.items[alive[0]].value(), mn = mx;
    for (std::size_t i : alive) {
      mx = std::max(mx, s.items[i].value());
      mn = std::min(mn, s.items[i].value());
    }
    if (mx != -mn) break;
    std::size_t pos = alive.size(), neg = alive.size();
    for (std::size_t j = 0; j < alive.size(); ++j) {
      if (pos == alive.size() && s.items[alive[j]].value() == mx) pos = j;
      else if (neg == alive.size() && s.items[alive[j]].value() == mn) neg = j;
    }
    deleted.push_back(alive[pos]);
    deleted.push_back(alive[neg]);
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(std::max(pos, neg)));
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(std::min(pos, neg)));
  }
  return deleted;
}

Sequence erase_deleted(const Sequence& s, const std::vector<std::size_t>& deleted) {
  Sequence out{s.scale, {}};
  std::size_t d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (d < deleted.size() && deleted[d] == i) {
      ++d;
      continue;
    }
    out.items.push_back(s.items[i]);
  }
  return out;
}

}  // namespace

std::vector<Check> verify_rules(std::size_t max_len, int k) {
  const RuleEnumBounds bounds{max_len, k};
  const Rule rules[] = {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                        Rule::Pessimistic};
  AchievableOracle oracle(max_len);

  Tally restore, untouched, split_all_or_nothing, weak_spec, strong_spec, strong_prefix;
  Tally strong_in_weak, realizable, bounded, corner, magnitude_chain, lowest_magnitude;
  Tally cancel_chain, isotone_split, isotone_strong, append_split;
  Tally refine_magnitude, refine_cancelling;
  bool refines_mat[5][5];
  for (auto& row : refines_mat) std::fill(std::begin(row), std::end(row), true);
  long long weak_drops = 0;

  for_each_sequence(bounds, [&](const Sequence& s) {
    const bool fa = fulfills_associativity(s);
    RuleOutcome out[5];
    for (int r = 0; r < 5; ++r) out[r] = apply_rule(rules[r], s);
    auto wit = [&](const char* label) {
      std::string text = seq_str(s) + " " + label;
      return [text] { return text; };
    };

    for (int r = 0; r < 5; ++r) {
      Sequence rest = erase_deleted(s, out[r].deleted);
      restore.count(fulfills_associativity(rest) && assoc_fold(rest) == out[r].result,
                    wit(rule_name(rules[r])));
      if (fa)
        untouched.count(out[r].deleted.empty() && out[r].result == assoc_fold(s),
                        wit(rule_name(rules[r])));
    }

    split_all_or_nothing.count(
        out[0].deleted.empty() || out[0].deleted.size() == s.size(), wit("splitting"));
    weak_spec.count(out[1].deleted == naive_weak(s), wit("weak"));
    std::vector<std::size_t> rounds = naive_strong_rounds(s);
    {
      std::vector<std::size_t> sorted = rounds;
      std::sort(sorted.begin(), sorted.end());
      strong_spec.count(out[2].deleted == sorted, wit("strong"));
    }

    // Stopping the pair removal early must leave an ambiguous sequence.
    for (std::size_t r = 0; r < rounds.size(); r += 2) {
      std::vector<std::size_t> prefix(rounds.begin(),
                                      rounds.begin() + static_cast<std::ptrdiff_t>(r));
      std::sort(prefix.begin(), prefix.end());
      strong_prefix.count(!fulfills_associativity(erase_deleted(s, prefix)), wit("strong"));
    }

    strong_in_weak.count(
        std::includes(out[1].deleted.begin(), out[1].deleted.end(), out[2].deleted.begin(),
                      out[2].deleted.end()),
        wit("strong-vs-weak"));

    std::set<SymLevel> reach = oracle.results(s);
    for (int r = 0; r < 5; ++r)
      realizable.count(reach.count(out[r].result) != 0, wit(rule_name(rules[r])));

    if (s.size() > 0) {
      int mx = s.items[0].value(), mn = mx;
      for (SymLevel v : s.items) {
        mx = std::max(mx, v.value());
        mn = std::min(mn, v.value());
      }
      for (int r = 0; r < 5; ++r)
        bounded.count(mn <= out[r].result.value() && out[r].result.value() <= mx,
                      wit(rule_name(rules[r])));

      if (!fa) {
        if (mx == 0) {
          for (int r = 0; r < 5; ++r) corner.count(out[r].result == SymLevel(0), wit("zeros"));
        } else {
          int kp = 0, km = 0;
          for (SymLevel v : s.items) {
            if (v.value() == mx) ++kp;
            if (v.value() == -mx) ++km;
          }
          bool lonely = (kp == 1 && km <= 2) || (km == 1 && kp <= 2);
          if (lonely || kp == 1)
            corner.count(out[3].result == SymLevel(0) && out[3].deleted.size() == s.size(),
                         wit("optimistic"));
          if (lonely || km == 1)
            corner.count(out[4].result == SymLevel(0) && out[4].deleted.size() == s.size(),
                         wit("pessimistic"));
        }
      }
    }

    magnitude_chain.count(out[2].result.index() >= out[1].result.index() &&
                              out[1].result.index() >= out[0].result.index(),
                          wit("magnitude-chain"));
    for (int r = 0; r < 5; ++r)
      lowest_magnitude.count(out[0].result.index() <= out[r].result.index(),
                             wit(rule_name(rules[r])));
    cancel_chain.count((out[2].result != SymLevel(0) || out[1].result == SymLevel(0)) &&
                           (out[1].result != SymLevel(0) || out[0].result == SymLevel(0)),
                       wit("cancelling-chain"));

    for (int r1 = 0; r1 < 5; ++r1)
      for (int r2 = 0; r2 < 5; ++r2)
        if (refines_mat[r1][r2] &&
            !std::includes(out[r1].deleted.begin(), out[r1].deleted.end(),
                           out[r2].deleted.begin(), out[r2].deleted.end()))
          refines_mat[r1][r2] = false;

    // Raise one item by one step and watch the result.
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.items[i].value() == k) continue;
      Sequence raised = s;
      raised.items[i] = SymLevel(s.items[i].value() + 1);
      isotone_split.count(apply_rule(Rule::Splitting, raised).result >= out[0].result,
                          wit("splitting-raise"));
      isotone_strong.count(apply_rule(Rule::Strong, raised).result >= out[2].result,
                           wit("strong-raise"));
      if (apply_rule(Rule::Weak, raised).result < out[1].result) ++weak_drops;
    }

    if (s.size() < max_len)
      for (int b = -k; b <= k; ++b) {
        Sequence longer = s;
        longer.items.push_back(SymLevel(b));
        SymLevel v = apply_rule(Rule::Splitting, longer).result;
        append_split.count(v.index() >= out[0].result.index() || v == SymLevel(0),
                           wit("append"));
      }
  });

  // Conditional laws, evaluated over the pairs that do refine.
  for_each_sequence(bounds, [&](const Sequence& s) {
    RuleOutcome out[5];
    for (int r = 0; r < 5; ++r) out[r] = apply_rule(rules[r], s);
    for (int r1 = 0; r1 < 5; ++r1)
      for (int r2 = 0; r2 < 5; ++r2) {
        if (!refines_mat[r1][r2] || r1 == r2) continue;
        auto wit = [&] {
          return seq_str(s) + " " + rule_name(rules[r1]) + " vs " + rule_name(rules[r2]);
        };
        refine_magnitude.count(out[r1].result.index() <= out[r2].result.index(), wit);
        refine_cancelling.count(out[r2].result != SymLevel(0) || out[r1].result == SymLevel(0),
                                wit);
      }
  });

  Tally refines_expected;
  for (int r = 0; r < 5; ++r)
    refines_expected.count(refines_mat[0][r], [&] {
      return std::string("splitting does not refine ") + rule_name(rules[r]);
    });
  refines_expected.count(refines_mat[1][2], [] { return std::string("weak vs strong"); });
  refines_expected.count(!refines_mat[2][1], [] { return std::string("strong vs weak"); });
  refines_expected.count(!refines_mat[3][4] && !refines_mat[4][3],
                         [] { return std::string("optimistic vs pessimistic"); });
  for (int r = 1; r < 5; ++r) {
    bool below_all = true;
    for (int r2 = 0; r2 < 5; ++r2) below_all = below_all && refines_mat[r][r2];
    refines_expected.count(!below_all, [&] {
      return std::string(rule_name(rules[r])) + " also refines every rule";
    });
  }

  std::vector<Check> out = {
      to_check("deletions restore a common fold", restore),
      to_check("unambiguous sequences pass through untouched", untouched),
      to_check("splitting deletes everything or nothing", split_all_or_nothing),
      to_check("weak deletions match the extreme-stripping loop", weak_spec),
      to_check("strong deletions take one opposite pair per round", strong_spec),
      to_check("strong deletion rounds cannot stop early", strong_prefix),
      to_check("strong deletions sit inside weak deletions", strong_in_weak),
      to_check("every result is reachable by some bracketing", realizable),
      to_check("results stay between the minimum and the maximum", bounded),
      to_check("lonely extremes cancel the optimistic/pessimistic rules", corner),
      to_check("magnitudes grow from splitting to weak to strong", magnitude_chain),
      to_check("splitting gives the smallest magnitude of all rules", lowest_magnitude),
      to_check("cancelling flows from strong to weak to splitting", cancel_chain),
      to_check("expected refinement relations hold", refines_expected),
      to_check("refining rules give smaller magnitudes", refine_magnitude),
      to_check("refining rules cancel more sequences", refine_cancelling),
      to_check("splitting and strong are isotone", [&] {
        Tally t = isotone_split;
        t.cases += isotone_strong.cases;
        t.bad += isotone_strong.bad;
        if (t.first.empty()) t.first = isotone_strong.first;
        return t;
      }()),
      to_check("appending terms cannot shrink the splitting magnitude", append_split),
  };

  out.push_back({"the weak rule is not isotone somewhere",
                 k < 2 || weak_drops > 0,
                 std::to_string(weak_drops) + " drops observed"});

  if (k >= 3) {
    Scale s(k);
    RuleOutcome lo = apply_rule(Rule::Weak, seq_of(s, {-3, 3, 1}));
    RuleOutcome hi = apply_rule(Rule::Weak, seq_of(s, {-3, 3, 3}));
    out.push_back({"weak rule drops when raising [-3,3,1] to [-3,3,3]",
                   lo.result == SymLevel(1) && hi.result == SymLevel(0),
                   "got " + std::to_string(lo.result.value()) + " and " +
                       std::to_string(hi.result.value())});

    Sequence nine = seq_of(s, {3, 3, 3, 2, 1, -2, -3, -3, -3});
    auto values_of = [&](const std::vector<std::size_t>& idx) {
      std::multiset<int> vals;
      for (std::size_t i : idx) vals.insert(nine.items[i].value());
      return vals;
    };
    std::multiset<int> jopt = values_of(apply_rule(Rule::Optimistic, nine).deleted);
    std::multiset<int> jpes = values_of(apply_rule(Rule::Pessimistic, nine).deleted);
    bool ok = jopt == std::multiset<int>{3, 3, -3, -3, -3} &&
              jpes == std::multiset<int>{3, 3, 3, -3, -3};
    out.push_back({"optimistic and pessimistic deletions are incomparable", ok,
                   ok ? "nine-term witness reproduced" : "witness multisets differ"});
  }

  return out;
}

// ---------------------------------------------------------------------
// Integer incidence algebra.
// ---------------------------------------------------------------------

std::vector<Check> verify_classical(int max_n, int round_trips, int max_set_n) {
  Tally star_inverse, alternating, round_trip, agrees;

  for (int n = 1; n <= max_n; ++n) {
    Poset::Ptr p = Poset::boolean_lattice(n);
    ZBiFunction zeta = classical_zeta(p), mu = classical_mobius(p), delta = classical_delta(p);
    star_inverse.count(classical_star(zeta, mu).values == delta.values &&
                           classical_star(mu, zeta).values == delta.values,
                       [n] { return "n=" + std::to_string(n); });

    std::vector<unsigned> mask_of(p->size());
    for (int x = 0; x < p->size(); ++x) mask_of[x] = parse_subset(p->id(x), n);
    for (int x = 0; x < p->size(); ++x)
      for (int y = 0; y < p->size(); ++y) {
        if (!p->leq(x, y)) continue;
        int dropped = __builtin_popcount(mask_of[y] & ~mask_of[x]);
        long long want = dropped % 2 == 0 ? 1 : -1;
        alternating.count(mu.at(x, y) == want, [&] {
          return "n=" + std::to_string(n) + " " + p->id(x) + " vs " + p->id(y);
        });
      }
  }

  std::mt19937 rng(561909);
  for (int t = 0; t < round_trips; ++t) {
    int n = std::uniform_int_distribution<int>(1, max_set_n)(rng);
    std::vector<long long> v(1u << n);
    for (auto& x : v) x = std::uniform_int_distribution<int>(-100, 100)(rng);
    round_trip.count(classical_set_zeta(classical_set_mobius(v)) == v &&
                         classical_set_mobius(classical_set_zeta(v)) == v,
                     [&] { return "n=" + std::to_string(n); });

    if (n <= 3) {
      // The mask-indexed transform is the incidence-algebra convolution.
      Poset::Ptr p = Poset::boolean_lattice(n);
      ZBiFunction mu = classical_mobius(p);
      std::vector<unsigned> mask_of(p->size());
      for (int x = 0; x < p->size(); ++x) mask_of[x] = parse_subset(p->id(x), n);
      std::vector<long long> m = classical_set_mobius(v);
      for (int a = 0; a < p->size(); ++a) {
        long long acc = 0;
        for (int b = 0; b < p->size(); ++b)
          if (p->leq(b, a)) acc += v[mask_of[b]] * mu.at(b, a);
        agrees.count(acc == m[mask_of[a]], [&] { return "n=" + std::to_string(n); });
      }
    }
  }

  return {
      to_check("zeta and the alternating transform are star inverses", star_inverse),
      to_check("the alternating transform follows dropped-set parity", alternating),
      to_check("set transforms round-trip", round_trip),
      to_check("set transform agrees with the incidence algebra", agrees),
  };
}

// ---------------------------------------------------------------------
// Reconstruction (the transform as a solution).
// ---------------------------------------------------------------------

std::vector<Check> verify_primitive_solutions(int cases, int max_k) {
  std::vector<Poset::Ptr> posets = {Poset::boolean_lattice(1), Poset::boolean_lattice(2),
                                    Poset::boolean_lattice(3), Poset::diamond()};
  for (int n = 2; n <= 7; ++n) posets.push_back(Poset::chain(n));

  const Rule all_rules[] = {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                            Rule::Pessimistic};

  Tally splitting_solves, weak_solves;
  std::mt19937 rng(810344);
  for (int t = 0; t < cases; ++t) {
    Poset::Ptr p = posets[static_cast<std::size_t>(t) % posets.size()];
    Scale s(std::uniform_int_distribution<int>(1, max_k)(rng));
    LFunction g = random_conflict_free(p, s, rng);
    LBiFunction inv = canonical_zeta_inverse(p, s);
    for (Rule r : {Rule::Splitting, Rule::Weak}) {
      LFunction m = ostar(g, inv, r);
      bool ok = eval_primitive(m, r).values == g.values;
      (r == Rule::Splitting ? splitting_solves : weak_solves).count(ok, [&] {
        return "g: " + fn_str(g);
      });
    }
  }

  // Opposite values on comparable points put g outside that domain, and
  // then nothing solves the equation: the forced lower values annihilate
  // in every fold.  Minimal witness on the two-chain.
  Tally chain_unsolvable;
  for (int k = 1; k <= max_k; ++k) {
    Scale s(k);
    Poset::Ptr two = Poset::chain(2);
    LFunction g = make_function(two, s, {k, -k});
    for (Rule r : all_rules)
      for (int a = -k; a <= k; ++a)
        for (int b = -k; b <= k; ++b) {
          LFunction f{two, s, {SymLevel(a), SymLevel(b)}};
          chain_unsolvable.count(eval_primitive(f, r).values != g.values, [&] {
            return std::string(rule_name(r)) + " f: " + fn_str(f);
          });
        }
  }

  // On the diamond even |g| isotone without comparable conflicts at covers
  // can be unsolvable; the witness is blocked under every rule.
  Poset::Ptr dia = Poset::diamond();
  Scale one(1);
  LFunction g = make_function(dia, one, {0, -1, -1, 1});
  Tally diamond_blocked;
  for (Rule r : all_rules)
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          for (int d = -1; d <= 1; ++d) {
            LFunction f{dia, one, {SymLevel(a), SymLevel(b), SymLevel(c), SymLevel(d)}};
            diamond_blocked.count(eval_primitive(f, r).values != g.values, [&] {
              return std::string(rule_name(r)) + " f: " + fn_str(f);
            });
          }

  // Positive contrast on the same poset: a conflict-free g is recovered by
  // its transform under every rule.
  LFunction good = make_function(dia, one, {0, -1, -1, -1});
  LBiFunction inv = canonical_zeta_inverse(dia, one);
  Tally diamond_good;
  for (Rule r : all_rules)
    diamond_good.count(eval_primitive(ostar(good, inv, r), r).values == good.values,
                       [&] { return std::string(rule_name(r)) + " g: " + fn_str(good); });

  return {
      to_check("the transform solves the reconstruction equation (splitting)", splitting_solves),
      to_check("the transform solves the reconstruction equation (weak)", weak_solves),
      to_check("opposite values on a chain leave the equation unsolvable", chain_unsolvable),
      to_check("no rule reconstructs the diamond witness", diamond_blocked),
      to_check("a conflict-free diamond function is recovered under every rule", diamond_good),
  };
}

// ---------------------------------------------------------------------
// Interval of nonnegative solutions.
// ---------------------------------------------------------------------

std::vector<Check> verify_solution_intervals(int max_k) {
  Tally interval_eq, ends_solve, rule_indep;

  for (int k = 1; k <= max_k; ++k) {
    Scale s(k);
    for (Poset::Ptr p : {Poset::boolean_lattice(2), Poset::chain(3)}) {
      const int n = p->size();
      // Odometer over all nonnegative functions; own state per call so the
      // enumeration nests.
      auto each_fn = [&](auto&& body) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        for (;;) {
          std::vector<SymLevel> lv(v.begin(), v.end());
          body(LFunction{p, s, std::move(lv)});
          int i = 0;
          while (i < n && v[i] == k) v[i++] = 0;
          if (i == n) break;
          ++v[i];
        }
      };

      each_fn([&](const LFunction& g) {
        if (!is_isotone(g)) return;
        LFunction lo = derivative(g);
        each_fn([&](const LFunction& f) {
          bool solves = eval_primitive(f, Rule::Splitting).values == g.values;
          bool inside = true;
          for (int x = 0; x < n; ++x)
            inside = inside && lo.at(x) <= f.at(x) && f.at(x) <= g.at(x);
          interval_eq.count(solves == inside,
                            [&] { return "g: " + fn_str(g) + " f: " + fn_str(f); });
          for (Rule r : {Rule::Weak, Rule::Strong, Rule::Optimistic, Rule::Pessimistic})
            rule_indep.count(eval_primitive(f, r).values ==
                                 eval_primitive(f, Rule::Splitting).values,
                             [&] { return "f: " + fn_str(f); });
        });
        ends_solve.count(eval_primitive(lo, Rule::Splitting).values == g.values &&
                             eval_primitive(g, Rule::Splitting).values == g.values,
                         [&] { return "g: " + fn_str(g); });
      });
    }
  }

  return {
      to_check("nonnegative solutions form exactly the predicted interval", interval_eq),
      to_check("both interval ends solve the equation", ends_solve),
      to_check("nonnegative folds are rule-independent", rule_indep),
  };
}

// ---------------------------------------------------------------------
// Inverse enumeration.
// ---------------------------------------------------------------------

std::vector<Check> verify_inverse_enumeration(int max_k) {
  Tally weak_set, splitting_set, strong_set, all_verify, canonical_ok, chain_all_rules;

  for (int k = 1; k <= max_k; ++k) {
    Scale s(k);
    Poset::Ptr p = Poset::boolean_lattice(2);
    const int bot = p->element("{}"), top = p->element("1,2");
    LBiFunction base = canonical_zeta_inverse(p, s);

    auto family = [&](std::vector<int> entries) {
      std::vector<std::vector<SymLevel>> out;
      for (int e : entries) {
        LBiFunction cand = base;
        cand.ref(bot, top) = SymLevel(e);
        out.push_back(cand.values);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    auto values_of = [](std::vector<LBiFunction> list) {
      std::vector<std::vector<SymLevel>> out;
      for (auto& f : list) out.push_back(f.values);
      std::sort(out.begin(), out.end());
      return out;
    };

    auto found_weak = enumerate_zeta_inverses(p, s, Rule::Weak);
    weak_set.count(values_of(found_weak) == family({-k, 0, k}),
                   [k] { return "k=" + std::to_string(k); });

    std::vector<int> all_levels;
    for (int e = -k; e <= k; ++e) all_levels.push_back(e);
    auto found_split = enumerate_zeta_inverses(p, s, Rule::Splitting);
    splitting_set.count(values_of(found_split) == family(all_levels),
                        [k] { return "k=" + std::to_string(k); });

    auto found_strong = enumerate_zeta_inverses(p, s, Rule::Strong);
    strong_set.count(values_of(found_strong) == family({k}),
                     [k] { return "k=" + std::to_string(k); });

    for (const auto& cand : found_weak)
      all_verify.count(verify_zeta_inverse(cand, Rule::Weak),
                       [k] { return "weak k=" + std::to_string(k); });
    for (const auto& cand : found_split)
      all_verify.count(verify_zeta_inverse(cand, Rule::Splitting),
                       [k] { return "splitting k=" + std::to_string(k); });
    for (const auto& cand : found_strong)
      all_verify.count(verify_zeta_inverse(cand, Rule::Strong),
                       [k] { return "strong k=" + std::to_string(k); });

    canonical_ok.count(verify_zeta_inverse(base, Rule::Splitting) &&
                           verify_zeta_inverse(base, Rule::Weak),
                       [k] { return "k=" + std::to_string(k); });

    for (int n = 2; n <= 5; ++n) {
      LBiFunction chain_inv = canonical_zeta_inverse(Poset::chain(n), s);
      for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                     Rule::Pessimistic})
        chain_all_rules.count(verify_zeta_inverse(chain_inv, r), [&] {
          return "n=" + std::to_string(n) + " " + rule_name(r);
        });
    }
  }

  return {
      to_check("weak-rule inverses have free entries exactly at the extremes or zero",
               weak_set),
      to_check("splitting-rule inverses allow every level in the free entry", splitting_set),
      to_check("the strong rule leaves exactly one inverse on the two-bit lattice",
               strong_set),
      to_check("every enumerated inverse verifies", all_verify),
      to_check("the canonical inverse verifies under splitting and weak", canonical_ok),
      to_check("on chains the canonical inverse verifies under every rule", chain_all_rules),
  };
}

// ---------------------------------------------------------------------
// Pointwise transform behaviour.
// ---------------------------------------------------------------------

std::vector<Check> verify_transform_properties(int cases) {
  std::vector<Poset::Ptr> posets = {Poset::boolean_lattice(2), Poset::boolean_lattice(3),
                                    Poset::chain(4), Poset::chain(5), Poset::diamond()};
  const Rule all_rules[] = {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic,
                            Rule::Pessimistic};

  Tally fix_dominant, cancel_repeat, shrink_repeat, no_lift;
  Tally moved_iff, chains_short, vanish_on_chain, foot_keeps, offchain_keeps;
  Tally deriv_agrees, rule_indep, interval_ends, conj_closed, conj_chains;

  std::mt19937 rng(274177);
  for (int t = 0; t < cases; ++t) {
    std::size_t pick = static_cast<std::size_t>(t) % posets.size();
    Poset::Ptr p = posets[pick];
    int lattice_n = pick == 0 ? 2 : pick == 1 ? 3 : 0;
    Scale s(std::uniform_int_distribution<int>(1, 3)(rng));

    {  // |g| isotone, signed.
      LFunction g = random_function(p, s, rng, true);
      LBiFunction inv = canonical_zeta_inverse(p, s);
      LFunction f[5] = {ostar(g, inv, all_rules[0]), ostar(g, inv, all_rules[1]),
                        ostar(g, inv, all_rules[2]), ostar(g, inv, all_rules[3]),
                        ostar(g, inv, all_rules[4])};
      for (int x = 0; x < p->size(); ++x) {
        bool dominant = true, repeated = false;
        for (int y : p->lower_covers(x)) {
          if (!(g.at(x).index() > g.at(y).index() || g.at(x) == negate(g.at(y))))
            dominant = false;
          if (g.at(y) == g.at(x)) repeated = true;
        }
        auto wit = [&] { return "g: " + fn_str(g) + " at " + p->id(x); };
        if (dominant)
          for (int r = 0; r < 5; ++r) fix_dominant.count(f[r].at(x) == g.at(x), wit);
        if (repeated && g.at(x) != SymLevel(0)) {
          cancel_repeat.count(f[0].at(x) == SymLevel(0), wit);
          for (int r = 0; r < 2; ++r)
            shrink_repeat.count(f[r].at(x).index() < g.at(x).index(), wit);
        }
        for (int y = 0; y < p->size(); ++y)
          if (p->leq(y, x) && g.at(y).index() < g.at(x).index())
            for (int r = 0; r < 5; ++r)
              no_lift.count(f[r].at(y).index() < g.at(x).index(), wit);
      }
    }

    {  // isotone nonnegative.
      LFunction g = random_function(p, s, rng, false);
      LFunction m = derivative(g);
      std::vector<GChain> chains = g_chains(g);

      // The transform moves g exactly on non-minimal members of chains
      // carrying a nonzero value.  (A chain of zeros changes nothing, so
      // "no chains iff transform fixes g" only holds one way.)
      std::vector<char> moved_expected(static_cast<std::size_t>(p->size()), 0);
      for (const GChain& c : chains)
        if (c.value != SymLevel(0))
          for (int e : c.elements)
            if (e != c.min()) moved_expected[static_cast<std::size_t>(e)] = 1;
      for (int x = 0; x < p->size(); ++x)
        moved_iff.count((m.at(x) != g.at(x)) ==
                            (moved_expected[static_cast<std::size_t>(x)] != 0),
                        [&] { return "g: " + fn_str(g) + " at " + p->id(x); });
      if (chains.empty())
        moved_iff.count(m.values == g.values, [&] { return "g: " + fn_str(g); });

      std::vector<char> on_chain(static_cast<std::size_t>(p->size()), 0);
      for (const GChain& c : chains) {
        for (std::size_t i = 0; i < c.elements.size(); ++i) {
          on_chain[static_cast<std::size_t>(c.elements[i])] = 1;
          auto wit = [&] { return "g: " + fn_str(g) + " chain at " + p->id(c.elements[i]); };
          if (c.elements[i] == c.min())
            foot_keeps.count(m.at(c.elements[i]) == g.at(c.elements[i]), wit);
          else
            vanish_on_chain.count(m.at(c.elements[i]) == SymLevel(0), wit);
        }
      }
      for (int x = 0; x < p->size(); ++x)
        if (!on_chain[static_cast<std::size_t>(x)])
          offchain_keeps.count(m.at(x) == g.at(x), [&] { return "g: " + fn_str(g); });

      if (lattice_n > 0 && g.at(p->bottom()) < g.at(p->top().value()))
        for (const GChain& c : chains)
          chains_short.count(static_cast<int>(c.elements.size()) <= lattice_n,
                             [&] { return "g: " + fn_str(g); });

      MobiusResult canon = canonical_mobius(g, Rule::Splitting);
      deriv_agrees.count(canon.transform.values == m.values && canon.abs_isotone,
                         [&] { return "g: " + fn_str(g); });
      for (Rule r : all_rules)
        rule_indep.count(canonical_mobius(g, r).transform.values == m.values,
                         [&] { return "g: " + fn_str(g); });

      SolutionInterval iv = solution_interval(g);
      interval_ends.count(iv.lower.values == m.values && iv.upper.values == g.values,
                          [&] { return "g: " + fn_str(g); });

      LFunction gc = conjugate_function(g);
      LFunction direct = canonical_mobius(gc, Rule::Splitting).transform;
      LFunction closed = conjugate_mobius_closed(g, chains);
      conj_closed.count(direct.values == closed.values, [&] { return "g: " + fn_str(g); });

      std::multiset<std::pair<std::vector<int>, int>> got, want;
      for (const GChain& c : g_chains(gc)) {
        std::vector<int> members = c.elements;
        std::sort(members.begin(), members.end());
        got.insert({std::move(members), c.value.value()});
      }
      for (const GChain& c : chains) {
        std::vector<int> mirrored;
        for (int e : c.elements) mirrored.push_back(p->conjugate(e));
        std::sort(mirrored.begin(), mirrored.end());
        want.insert({mirrored, conjugate(c.value, s).value()});
      }
      conj_chains.count(got == want, [&] { return "g: " + fn_str(g); });
    }
  }

  // Frozen tables on the two-bit lattice.
  Poset::Ptr p2 = Poset::boolean_lattice(2);
  Scale one(1);
  auto by_id = [&](int e, int a, int b, int ab) {
    std::vector<int> v(4, 0);
    v[static_cast<std::size_t>(p2->element("{}"))] = e;
    v[static_cast<std::size_t>(p2->element("1"))] = a;
    v[static_cast<std::size_t>(p2->element("2"))] = b;
    v[static_cast<std::size_t>(p2->element("1,2"))] = ab;
    return v;
  };
  LFunction g1 = make_function(p2, one, by_id(0, 0, 0, 1));
  LFunction g2 = make_function(p2, one, by_id(0, 1, 1, 1));
  LFunction m1 = canonical_mobius(g1, Rule::Splitting).transform;
  LFunction m2 = canonical_mobius(g2, Rule::Splitting).transform;
  bool tables = m1.values == make_function(p2, one, by_id(0, 0, 0, 1)).values &&
                m2.values == make_function(p2, one, by_id(0, 1, 1, 0)).values;
  Check frozen{"two-bit lattice example tables reproduce", tables,
               "m1: " + fn_str(m1) + " m2: " + fn_str(m2)};

  std::vector<SymLevel> join(4), mjoin(4);
  for (int x = 0; x < 4; ++x) {
    join[static_cast<std::size_t>(x)] = sym_max(g1.at(x), g2.at(x));
    mjoin[static_cast<std::size_t>(x)] = sym_max(m1.at(x), m2.at(x));
  }
  bool witness = join == g2.values && mjoin != m2.values;
  Check morphism{"the transform is not a join morphism (witness)", witness,
                 "join of transforms: " + fn_str({p2, one, mjoin})};

  return {
      to_check("dominant points are fixed under every rule", fix_dominant),
      to_check("splitting cancels values repeated at a cover", cancel_repeat),
      to_check("splitting and weak shrink repeated values", shrink_repeat),
      to_check("strictly dominated points never reach the dominating magnitude", no_lift),
      to_check("the transform moves exactly the nonzero repeats", moved_iff),
      to_check("constancy chains are never maximal when the ends differ", chains_short),
      to_check("the transform vanishes along a chain except at its foot", vanish_on_chain),
      to_check("chain feet keep their value", foot_keeps),
      to_check("off-chain points keep their value", offchain_keeps),
      to_check("the derivative and the cover form agree", deriv_agrees),
      to_check("the cover form is rule-independent on nonnegative isotone input", rule_indep),
      to_check("the solution interval spans derivative to function", interval_ends),
      to_check("the conjugate transform closed form agrees", conj_closed),
      to_check("conjugate chains are the mirrored chains", conj_chains),
      frozen,
      morphism,
  };
}

// ---------------------------------------------------------------------
// Possibility and necessity.
// ---------------------------------------------------------------------

std::vector<Check> verify_weight_transforms(int max_n, int max_k, int min_cases) {
  Tally pi_closed, n_closed, pi_singletons, n_chain, conj_pair, maxitive, minitive;
  long long tied = 0, strict = 0;

  std::mt19937 rng(930528);
  for (int t = 0; t < min_cases; ++t) {
    int n = 1 + t % max_n;
    int k = 1 + (t / max_n) % max_k;
    Scale s(k);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int& x : w) x = std::uniform_int_distribution<int>(0, k)(rng);
    w[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng))] = k;
    if (n > 1 && std::uniform_int_distribution<int>(0, 1)(rng) != 0) {
      int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
      int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
      w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(j)];
      if (std::count(w.begin(), w.end(), k) == 0)
        w[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng))] = k;
    }
    bool has_tie = false;
    for (int i = 0; i < n && !has_tie; ++i)
      for (int j = i + 1; j < n; ++j)
        if (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(j)]) {
          has_tie = true;
          break;
        }
    (has_tie ? tied : strict) += 1;

    PossibilityWeights pw = make_weights(s, w);
    Capacity pi = possibility(pw), nec = necessity(pw);
    auto wit = [&] {
      std::string out = "w=";
      for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? "," : "") + std::to_string(w[i]);
      return out + " k=" + std::to_string(k);
    };

    auto general = [&](const Capacity& v) {
      auto bridge = capacity_as_function(v);
      return function_as_table(canonical_mobius(bridge.second, Rule::Splitting).transform,
                               v.n);
    };
    std::vector<SymLevel> mpi = mobius_possibility_closed(pw);
    std::vector<SymLevel> mn = mobius_necessity_closed(pw);
    pi_closed.count(mpi == general(pi), wit);
    n_closed.count(mn == general(nec), wit);

    bool singles = true;
    for (unsigned mask = 0; mask <= pi.full(); ++mask)
      if (mpi[mask] != SymLevel(0) && __builtin_popcount(mask) != 1) singles = false;
    pi_singletons.count(singles, wit);

    if (!has_tie) {
      std::vector<unsigned> support;
      for (unsigned mask = 0; mask <= nec.full(); ++mask)
        if (mn[mask] != SymLevel(0)) support.push_back(mask);
      bool nested = true;
      for (std::size_t i = 0; i + 1 < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j) {
          unsigned meet = support[i] & support[j];
          if (meet != support[i] && meet != support[j]) nested = false;
        }
      n_chain.count(nested, wit);
    }

    conj_pair.count(conjugate_capacity(pi).values == nec.values, wit);

    for (unsigned a = 0; a <= pi.full(); ++a)
      for (unsigned b = 0; b <= pi.full(); ++b) {
        maxitive.count(pi.at(a | b) == std::max(pi.at(a), pi.at(b)), wit);
        minitive.count(nec.at(a & b) == std::min(nec.at(a), nec.at(b)), wit);
      }
  }

  std::vector<Check> out = {
      to_check("the possibility transform closed form agrees with the general one",
               pi_closed),
      to_check("the necessity transform closed form agrees with the general one", n_closed),
      to_check("the possibility transform lives on singletons", pi_singletons),
      to_check("the necessity transform lives on a nested family under strict weights",
               n_chain),
      to_check("necessity is the conjugate of possibility", conj_pair),
      to_check("possibility measures are maxitive", maxitive),
      to_check("necessity measures are minitive", minitive),
  };
  out.push_back({"both tied and strict weight vectors were exercised", tied > 0 && strict > 0,
                 std::to_string(tied) + " tied, " + std::to_string(strict) + " strict"});
  return out;
}

// ---------------------------------------------------------------------
// Alternating capacity transform.
// ---------------------------------------------------------------------

std::vector<Check> verify_evenodd(int max_n, int max_k) {
  Tally agrees;

  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= max_k; ++k) {
      Scale s(k);
      const unsigned full = (1u << n) - 1;
      std::vector<int> val(full + 1, 0);
      val[full] = k;
      // Odometer over the free masks 1 .. full-1.
      for (;;) {
        bool isotone = true;
        for (unsigned a = 0; a <= full && isotone; ++a)
          for (int b = 0; b < n; ++b)
            if ((a & (1u << b)) == 0 && val[a] > val[a | (1u << b)]) {
              isotone = false;
              break;
            }
        if (isotone) {
          Capacity v = capacity_from_table(n, s, val);
          auto bridge = capacity_as_function(v);
          std::vector<SymLevel> general = function_as_table(
              canonical_mobius(bridge.second, Rule::Splitting).transform, n);
          agrees.count(capacity_mobius_evenodd(v) == general, [&] {
            std::string out = "v=";
            for (unsigned a = 0; a <= full; ++a) out += (a ? "," : "") + std::to_string(val[a]);
            return out + " k=" + std::to_string(k);
          });
        }
        unsigned i = 1;
        while (i < full && val[i] == k) val[i++] = 0;
        if (i == full) break;
        ++val[i];
      }
    }

  return {to_check("the alternating form equals the canonical transform", agrees)};
}

// ---------------------------------------------------------------------
// Weighted lattice aggregation.
// ---------------------------------------------------------------------

namespace {

Capacity random_capacity(int n, const Scale& s, std::mt19937& rng) {
  const unsigned full = (1u << n) - 1;
  std::vector<int> val(full + 1, 0);
  for (unsigned a = 1; a <= full; ++a) {
    int lo = 0;
    for (int b = 0; b < n; ++b)
      if (a & (1u << b)) lo = std::max(lo, val[a & ~(1u << b)]);
    val[a] = std::uniform_int_distribution<int>(lo, s.k())(rng);
  }
  val[full] = s.k();
  return capacity_from_table(n, s, val);
}

}  // namespace

std::vector<Check> verify_sugeno(int cases) {
  Tally routes, indicator, odd, extends, rule_moot;

  std::mt19937 rng(346065);
  for (int t = 0; t < cases; ++t) {
    int n = 1 + t % 5;
    int k = 1 + t % 4;
    Scale s(k);
    Capacity v = random_capacity(n, s, rng);
    auto wit = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };

    std::vector<SymLevel> f(static_cast<std::size_t>(n));
    for (auto& x : f) x = SymLevel(std::uniform_int_distribution<int>(0, k)(rng));
    routes.count(sugeno(v, f) == sugeno_sorted(v, f), wit);
    extends.count(symmetric_sugeno(v, f, Rule::Splitting) == sugeno(v, f), wit);

    std::vector<SymLevel> fs(static_cast<std::size_t>(n));
    for (auto& x : fs) x = SymLevel(std::uniform_int_distribution<int>(-k, k)(rng));
    std::vector<SymLevel> neg(fs);
    for (auto& x : neg) x = negate(x);
    SymLevel plus = symmetric_sugeno(v, fs, Rule::Splitting);
    odd.count(symmetric_sugeno(v, neg, Rule::Splitting) == negate(plus), wit);
    for (Rule r : {Rule::Weak, Rule::Strong, Rule::Optimistic, Rule::Pessimistic})
      rule_moot.count(symmetric_sugeno(v, fs, r) == plus, wit);
  }

  std::mt19937 rng2(4761);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 4;
    int k = 1 + t % 4;
    Scale s(k);
    Capacity v = random_capacity(n, s, rng2);
    for (unsigned mask = 0; mask <= v.full(); ++mask) {
      std::vector<SymLevel> ind(static_cast<std::size_t>(n), SymLevel(0));
      for (int b = 0; b < n; ++b)
        if (mask & (1u << b)) ind[static_cast<std::size_t>(b)] = SymLevel(k);
      indicator.count(sugeno(v, ind) == v.at(mask), [&] {
        return "n=" + std::to_string(n) + " A=" + subset_name(mask, n);
      });
    }
  }

  return {
      to_check("subset and sorted evaluations agree", routes),
      to_check("indicator profiles reproduce the capacity", indicator),
      to_check("the symmetric integral is odd", odd),
      to_check("the symmetric integral extends the plain one on nonnegative profiles",
               extends),
      to_check("the arbitration rule never matters for the binary join", rule_moot),
  };
}

// ---------------------------------------------------------------------

std::vector<Check> run_suite(const std::string& name) {
  auto append = [](std::vector<Check>& out, std::vector<Check> part) {
    for (auto& c : part) out.push_back(std::move(c));
  };

  std::vector<Check> out;
  bool all = name == "all";
  if (all || name == "algebra") append(out, verify_algebra());
  if (all || name == "rules") append(out, verify_rules());
  if (all || name == "mobius") {
    append(out, verify_classical());
    append(out, verify_primitive_solutions());
    append(out, verify_solution_intervals());
    append(out, verify_inverse_enumeration());
    append(out, verify_transform_properties());
  }
  if (all || name == "capacity") {
    append(out, verify_weight_transforms());
    append(out, verify_evenodd());
    append(out, verify_sugeno());
  }
  if (out.empty())
    throw ParseError("unknown suite: " + name + " (want algebra, rules, mobius, capacity or all)");
  return out;
}

}  // namespace symord
