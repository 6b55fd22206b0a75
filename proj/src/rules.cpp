#include "symord/rules.hpp"

#include <algorithm>
#include <utility>

namespace symord {

Sequence make_sequence(const Scale& s, const std::vector<int>& values) {
  Sequence seq{s, {}};
  seq.items.reserve(values.size());
  for (int v : values) seq.items.push_back(s.level(v));
  return seq;
}

namespace {

int max_value(const std::vector<SymLevel>& items) {
  int m = items.front().value();
  for (SymLevel a : items) m = std::max(m, a.value());
  return m;
}

int min_value(const std::vector<SymLevel>& items) {
  int m = items.front().value();
  for (SymLevel a : items) m = std::min(m, a.value());
  return m;
}

bool ambiguous(const std::vector<SymLevel>& items) {
  return items.size() >= 3 && max_value(items) == -min_value(items);
}

SymLevel fold_unchecked(const std::vector<SymLevel>& items) {
  SymLevel acc(0);
  bool first = true;
  for (SymLevel a : items) {
    acc = first ? a : sym_max(acc, a);
    first = false;
  }
  return acc;
}

std::vector<SymLevel> erase_indices(const Sequence& seq, const std::vector<std::size_t>& gone) {
  std::vector<char> dead(seq.size(), 0);
  for (std::size_t i : gone) dead[i] = 1;
  std::vector<SymLevel> kept;
  kept.reserve(seq.size() - gone.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!dead[i]) kept.push_back(seq.items[i]);
  return kept;
}

}  // namespace

bool fulfills_associativity(const Sequence& seq) { return !ambiguous(seq.items); }

SymLevel assoc_fold(const Sequence& seq) {
  if (ambiguous(seq.items))
    throw PrecondError("assoc_fold: sequence does not fold unambiguously");
  return fold_unchecked(seq.items);
}

std::vector<std::size_t> weak_deletions(const Sequence& seq) {
  std::vector<std::size_t> deleted;
  std::vector<char> dead(seq.size(), 0);
  for (;;) {
    std::vector<SymLevel> alive;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (!dead[i]) alive.push_back(seq.items[i]);
    if (!ambiguous(alive)) break;
    int extreme = max_value(alive);
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (!dead[i] && seq.items[i].index() == extreme) {
        dead[i] = 1;
        deleted.push_back(i);
      }
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

std::vector<std::size_t> strong_deletions(const Sequence& seq) {
  std::vector<std::size_t> deleted;
  std::vector<char> dead(seq.size(), 0);
  for (;;) {
    std::vector<SymLevel> alive;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (!dead[i]) alive.push_back(seq.items[i]);
    if (!ambiguous(alive)) break;
    int extreme = max_value(alive);
    // One occurrence of each side of the extreme pair; a pair of zeros in
    // the all-zero case.
    int want_first = extreme, want_second = -extreme;
    bool got_first = false, got_second = false;
    for (std::size_t i = 0; i < seq.size() && !(got_first && got_second); ++i) {
      if (dead[i]) continue;
      int v = seq.items[i].value();
      if (!got_first && v == want_first) {
        got_first = true;
        dead[i] = 1;
        deleted.push_back(i);
      } else if (!got_second && v == want_second) {
        got_second = true;
        dead[i] = 1;
        deleted.push_back(i);
      }
    }
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

const char* rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::Splitting: return "splitting";
    case Rule::Weak: return "weak";
    case Rule::Strong: return "strong";
    case Rule::Optimistic: return "optimistic";
    case Rule::Pessimistic: return "pessimistic";
  }
  return "?";
}

Rule parse_rule(const std::string& name) {
  for (Rule r : {Rule::Splitting, Rule::Weak, Rule::Strong, Rule::Optimistic, Rule::Pessimistic})
    if (name == rule_name(r)) return r;
  throw ParseError("unknown rule: " + name);
}

RuleOutcome apply_rule(Rule r, const Sequence& seq) {
  if (!ambiguous(seq.items)) return {{}, fold_unchecked(seq.items)};

  std::vector<std::size_t> all(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) all[i] = i;

  auto finish = [&](std::vector<std::size_t> gone) -> RuleOutcome {
    std::vector<SymLevel> kept = erase_indices(seq, gone);
    return {std::move(gone), fold_unchecked(kept)};
  };

  switch (r) {
    case Rule::Splitting:
      return {std::move(all), SymLevel(0)};
    case Rule::Weak:
      return finish(weak_deletions(seq));
    case Rule::Strong:
      return finish(strong_deletions(seq));
    case Rule::Optimistic:
    case Rule::Pessimistic: {
      int extreme = max_value(seq.items);
      if (extreme == 0) return {std::move(all), SymLevel(0)};
      std::size_t kp = 0, km = 0;
      for (SymLevel a : seq.items) {
        if (a.value() == extreme) ++kp;
        if (a.value() == -extreme) ++km;
      }
      bool corner = (kp == 1 && km <= 2) || (km == 1 && kp <= 2);
      // A lone copy of the surviving extreme cannot outlive the opposite
      // copies under any arrangement of parentheses, so those sequences
      // cancel out entirely as well.
      if (r == Rule::Optimistic ? (corner || kp == 1) : (corner || km == 1))
        return {std::move(all), SymLevel(0)};
      int survivor = r == Rule::Optimistic ? extreme : -extreme;
      std::vector<std::size_t> gone;
      bool survivor_kept = false;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        int v = seq.items[i].value();
        if (v != extreme && v != -extreme) continue;
        if (v == survivor && !survivor_kept) {
          survivor_kept = true;
          continue;
        }
        gone.push_back(i);
      }
      return finish(std::move(gone));
    }
  }
  throw PrecondError("apply_rule: bad rule");
}

std::set<SymLevel> AchievableOracle::results(const Sequence& seq) {
  if (seq.size() > max_len_)
    throw SizeError("achievable_results: sequence longer than the oracle bound " +
                    std::to_string(max_len_));
  std::vector<int> multiset;
  multiset.reserve(seq.size());
  for (SymLevel a : seq.items) multiset.push_back(a.value());
  std::sort(multiset.begin(), multiset.end());
  std::set<SymLevel> out;
  for (int v : run(multiset)) out.insert(SymLevel(v));
  return out;
}

const std::set<int>& AchievableOracle::run(const std::vector<int>& multiset) {
  auto hit = memo_.find(multiset);
  if (hit != memo_.end()) return hit->second;

  std::set<int> out;
  if (multiset.empty()) {
    out.insert(0);
  } else if (multiset.size() == 1) {
    out.insert(multiset.front());
  } else {
    std::set<std::pair<int, int>> tried;
    for (std::size_t i = 0; i < multiset.size(); ++i)
      for (std::size_t j = i + 1; j < multiset.size(); ++j) {
        if (!tried.insert({multiset[i], multiset[j]}).second) continue;
        std::vector<int> child;
        child.reserve(multiset.size() - 1);
        for (std::size_t t = 0; t < multiset.size(); ++t)
          if (t != i && t != j) child.push_back(multiset[t]);
        int merged = sym_max(SymLevel(multiset[i]), SymLevel(multiset[j])).value();
        child.insert(std::upper_bound(child.begin(), child.end(), merged), merged);
        const std::set<int>& sub = run(child);
        out.insert(sub.begin(), sub.end());
      }
  }
  return memo_.emplace(multiset, std::move(out)).first->second;
}

std::set<SymLevel> achievable_results(const Sequence& seq, std::size_t max_len) {
  AchievableOracle oracle(max_len);
  return oracle.results(seq);
}

void for_each_sequence(const RuleEnumBounds& b, const std::function<void(const Sequence&)>& fn) {
  Scale s(b.k);
  for (std::size_t len = 0; len <= b.max_len; ++len) {
    std::vector<int> v(len, -b.k);
    for (;;) {
      Sequence seq{s, {}};
      seq.items.reserve(len);
      for (int x : v) seq.items.push_back(SymLevel(x));
      fn(seq);
      std::size_t pos = 0;
      while (pos < len && v[pos] == b.k) v[pos++] = -b.k;
      if (pos == len) break;
      ++v[pos];
    }
  }
}

bool rule_refines(Rule r1, Rule r2, const RuleEnumBounds& b) {
  bool ok = true;
  for_each_sequence(b, [&](const Sequence& seq) {
    if (!ok) return;
    std::vector<std::size_t> j1 = apply_rule(r1, seq).deleted;
    std::vector<std::size_t> j2 = apply_rule(r2, seq).deleted;
    if (!std::includes(j1.begin(), j1.end(), j2.begin(), j2.end())) ok = false;
  });
  return ok;
}

bool is_cancelling(Rule r, const Sequence& seq) {
  return apply_rule(r, seq).result == SymLevel(0);
}

bool more_discriminating(Rule r1, Rule r2, const RuleEnumBounds& b) {
  bool ok = true;
  for_each_sequence(b, [&](const Sequence& seq) {
    if (!ok) return;
    if (is_cancelling(r1, seq) && !is_cancelling(r2, seq)) ok = false;
  });
  return ok;
}

}  // namespace symord
