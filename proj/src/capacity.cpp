#include "symord/capacity.hpp"

#include <algorithm>
#include <numeric>

#include "symord/io.hpp"

namespace symord {

Capacity capacity_from_table(int n, const Scale& s, const std::vector<int>& values) {
  if (n < 1) throw SizeError("capacity: need at least one criterion");
  if (n > 12) throw SizeError("capacity: bounded to 12 criteria");
  const unsigned count = 1u << n;
  if (values.size() != count)
    throw MismatchError("capacity: expected " + std::to_string(count) + " subset values, got " +
                        std::to_string(values.size()));

  Capacity cap{n, s, {}};
  cap.values.reserve(count);
  for (int v : values) {
    if (v < 0) throw ValidationError("capacity: values must be nonnegative levels");
    cap.values.push_back(s.level(v));
  }
  if (cap.values[0] != SymLevel(0))
    throw ValidationError("capacity: value of {} must be 0");
  if (cap.values[count - 1] != s.one())
    throw ValidationError("capacity: value of the full set must be 1");
  for (unsigned mask = 0; mask < count; ++mask)
    for (int bit = 0; bit < n; ++bit) {
      if (mask & (1u << bit)) continue;
      unsigned bigger = mask | (1u << bit);
      if (cap.values[mask] > cap.values[bigger])
        throw ValidationError("capacity: not isotone, v(" + subset_name(mask, n) + ") > v(" +
                              subset_name(bigger, n) + ")");
    }
  return cap;
}

Capacity conjugate_capacity(const Capacity& v) {
  Capacity out{v.n, v.scale, std::vector<SymLevel>(v.values.size())};
  for (unsigned mask = 0; mask <= v.full(); ++mask)
    out.values[mask] = conjugate(v.at(v.full() & ~mask), v.scale);
  return out;
}

PossibilityWeights make_weights(const Scale& s, const std::vector<int>& values) {
  if (values.empty()) throw SizeError("weights: need at least one criterion");
  if (values.size() > 12) throw SizeError("weights: bounded to 12 criteria");
  PossibilityWeights p{s, {}};
  int best = 0;
  for (int v : values) {
    if (v < 0) throw ValidationError("weights: must be nonnegative levels");
    p.w.push_back(s.level(v));
    best = std::max(best, v);
  }
  if (best != s.k())
    throw ValidationError("weights: not normalized, largest weight must be 1");
  return p;
}

Capacity possibility(const PossibilityWeights& p) {
  const int n = p.n();
  Capacity cap{n, p.scale, std::vector<SymLevel>(1u << n)};
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    SymLevel best(0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) best = std::max(best, p.w[i]);
    cap.values[mask] = best;
  }
  return cap;
}

Capacity necessity(const PossibilityWeights& p) { return conjugate_capacity(possibility(p)); }

std::vector<SymLevel> mobius_possibility_closed(const PossibilityWeights& p) {
  std::vector<SymLevel> m(1u << p.n(), SymLevel(0));
  for (int i = 0; i < p.n(); ++i) m[1u << i] = p.w[i];
  return m;
}

std::vector<SymLevel> mobius_necessity_closed(const PossibilityWeights& p) {
  const int n = p.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.w[a] < p.w[b]; });

  // Nonzero entries sit on the chain of upper sets of the weight ordering:
  // the set of the n-i largest criteria carries the conjugate of the i-th
  // smallest weight (the full set carries 1), except where the weight ties
  // its successor, which collapses the entry to 0.
  std::vector<SymLevel> m(1u << n, SymLevel(0));
  unsigned upper = (1u << n) - 1;
  SymLevel prev(0);  // one below the smallest weight slot
  for (int i = 0; i < n; ++i) {
    SymLevel wi = p.w[order[i]];
    if (prev != wi) m[upper] = conjugate(prev, p.scale);
    prev = wi;
    upper &= ~(1u << order[i]);
  }
  return m;
}

std::vector<SymLevel> capacity_mobius_evenodd(const Capacity& v) {
  const unsigned full = v.full();
  std::vector<SymLevel> m(full + 1);
  for (unsigned a = 0; a <= full; ++a) {
    SymLevel even(0), odd(0);
    for (unsigned b = a;; b = (b - 1) & a) {
      int dropped = __builtin_popcount(a & ~b);
      if (dropped % 2 == 0)
        even = std::max(even, v.at(b));
      else
        odd = std::max(odd, v.at(b));
      if (b == 0) break;
    }
    m[a] = sym_max(even, negate(odd));
  }
  return m;
}

std::pair<Poset::Ptr, LFunction> capacity_as_function(const Capacity& v) {
  Poset::Ptr p = Poset::boolean_lattice(v.n);
  LFunction f{p, v.scale, std::vector<SymLevel>(p->size())};
  for (unsigned mask = 0; mask <= v.full(); ++mask)
    f.values[p->element(subset_name(mask, v.n))] = v.at(mask);
  return {p, f};
}

std::vector<SymLevel> function_as_table(const LFunction& f, int n) {
  if (f.poset->size() != (1 << n))
    throw MismatchError("function_as_table: poset is not a boolean lattice of that size");
  std::vector<SymLevel> out(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    out[mask] = f.at(f.poset->element(subset_name(mask, n)));
  return out;
}

namespace {

void check_profile(const Capacity& v, const std::vector<SymLevel>& f, bool allow_negative) {
  if (static_cast<int>(f.size()) != v.n)
    throw MismatchError("profile: expected " + std::to_string(v.n) + " entries");
  for (SymLevel a : f) {
    if (!v.scale.contains(a)) throw InvalidLevelError("profile: level off scale");
    if (!allow_negative && a.value() < 0)
      throw DomainError("profile: negative level in a nonnegative aggregation");
  }
}

}  // namespace

SymLevel sugeno(const Capacity& v, const std::vector<SymLevel>& f) {
  check_profile(v, f, false);
  SymLevel out(0);
  for (unsigned mask = 0; mask <= v.full(); ++mask) {
    SymLevel lo = v.scale.one();
    for (int i = 0; i < v.n; ++i)
      if (mask & (1u << i)) lo = std::min(lo, f[i]);
    out = std::max(out, std::min(v.at(mask), lo));
  }
  return out;
}

SymLevel sugeno_sorted(const Capacity& v, const std::vector<SymLevel>& f) {
  check_profile(v, f, false);
  std::vector<int> order(v.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return f[a] > f[b]; });
  SymLevel out(0);
  unsigned mask = 0;
  for (int i : order) {
    mask |= 1u << i;
    out = std::max(out, std::min(f[i], v.at(mask)));
  }
  return out;
}

SymLevel symmetric_sugeno(const Capacity& v, const std::vector<SymLevel>& f, Rule) {
  check_profile(v, f, true);
  std::vector<SymLevel> pos(f.size()), neg(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    pos[i] = std::max(f[i], SymLevel(0));
    neg[i] = std::max(negate(f[i]), SymLevel(0));
  }
  return sym_max(sugeno(v, pos), negate(sugeno(v, neg)));
}

}  // namespace symord
