#include "symord/mobius.hpp"

#include <algorithm>

namespace symord {

namespace {

void require_same(const Poset::Ptr& a, const Poset::Ptr& b) {
  if (a != b) throw MismatchError("operands live on different posets");
}

}  // namespace

ZBiFunction classical_zeta(const Poset::Ptr& p) {
  ZBiFunction f{p, std::vector<long long>(static_cast<std::size_t>(p->size()) * p->size(), 0)};
  for (int x = 0; x < p->size(); ++x)
    for (int y = 0; y < p->size(); ++y)
      if (p->leq(x, y)) f.values[static_cast<std::size_t>(x) * p->size() + y] = 1;
  return f;
}

ZBiFunction classical_delta(const Poset::Ptr& p) {
  ZBiFunction f{p, std::vector<long long>(static_cast<std::size_t>(p->size()) * p->size(), 0)};
  for (int x = 0; x < p->size(); ++x) f.values[static_cast<std::size_t>(x) * p->size() + x] = 1;
  return f;
}

ZBiFunction classical_mobius(const Poset::Ptr& p) {
  const int n = p->size();
  ZBiFunction f{p, std::vector<long long>(static_cast<std::size_t>(n) * n, 0)};
  std::vector<int> order = linear_extension(*p);
  for (int x = 0; x < n; ++x)
    for (int y : order) {
      if (!p->leq(x, y)) continue;
      long long v;
      if (x == y) {
        v = 1;
      } else {
        v = 0;
        for (int t : p->segment(x, y))
          if (t != y) v -= f.at(x, t);
      }
      f.values[static_cast<std::size_t>(x) * n + y] = v;
    }
  return f;
}

ZBiFunction classical_star(const ZBiFunction& f, const ZBiFunction& g) {
  require_same(f.poset, g.poset);
  const Poset& p = *f.poset;
  ZBiFunction out{f.poset, std::vector<long long>(f.values.size(), 0)};
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      long long acc = 0;
      for (int u : p.segment(x, y)) acc += f.at(x, u) * g.at(u, y);
      out.values[static_cast<std::size_t>(x) * p.size() + y] = acc;
    }
  return out;
}

namespace {

int set_function_width(std::size_t size) {
  for (int n = 0; n <= 12; ++n)
    if (size == (1u << n)) return n;
  throw SizeError("set function: size must be a power of two, 2^0 .. 2^12");
}

}  // namespace

std::vector<long long> classical_set_mobius(const std::vector<long long>& v) {
  set_function_width(v.size());
  std::vector<long long> m(v.size(), 0);
  for (unsigned a = 0; a < v.size(); ++a)
    for (unsigned b = a;; b = (b - 1) & a) {
      int dropped = __builtin_popcount(a & ~b);
      m[a] += (dropped % 2 == 0 ? 1 : -1) * v[b];
      if (b == 0) break;
    }
  return m;
}

std::vector<long long> classical_set_zeta(const std::vector<long long>& m) {
  set_function_width(m.size());
  std::vector<long long> v(m.size(), 0);
  for (unsigned a = 0; a < m.size(); ++a)
    for (unsigned b = a;; b = (b - 1) & a) {
      v[a] += m[b];
      if (b == 0) break;
    }
  return v;
}

// ---------------------------------------------------------------------
// Ordinal layer.
// ---------------------------------------------------------------------

bool is_unitriangular(const LBiFunction& h) {
  const Poset& p = *h.poset;
  for (int x = 0; x < p.size(); ++x) {
    if (h.at(x, x) != h.scale.one()) return false;
    for (int y = 0; y < p.size(); ++y)
      if (p.lt(y, x) && h.at(x, y) != SymLevel(0)) return false;
  }
  return true;
}

LBiFunction ordinal_zeta(const Poset::Ptr& p, const Scale& s) {
  LBiFunction h{p, s, std::vector<SymLevel>(static_cast<std::size_t>(p->size()) * p->size())};
  for (int x = 0; x < p->size(); ++x)
    for (int y = 0; y < p->size(); ++y)
      if (p->leq(x, y)) h.ref(x, y) = s.one();
  return h;
}

LBiFunction ordinal_delta(const Poset::Ptr& p, const Scale& s) {
  LBiFunction h{p, s, std::vector<SymLevel>(static_cast<std::size_t>(p->size()) * p->size())};
  for (int x = 0; x < p->size(); ++x) h.ref(x, x) = s.one();
  return h;
}

LBiFunction canonical_zeta_inverse(const Poset::Ptr& p, const Scale& s) {
  LBiFunction h{p, s, std::vector<SymLevel>(static_cast<std::size_t>(p->size()) * p->size())};
  for (int x = 0; x < p->size(); ++x) {
    h.ref(x, x) = s.one();
    for (int y : p->upper_covers(x)) h.ref(x, y) = s.minus_one();
  }
  return h;
}

LFunction ostar(const LFunction& f, const LBiFunction& h, Rule r) {
  require_same(f.poset, h.poset);
  if (f.scale != h.scale) throw MismatchError("operands live on different scales");
  const Poset& p = *f.poset;
  LFunction out{f.poset, f.scale, std::vector<SymLevel>(p.size())};
  for (int y = 0; y < p.size(); ++y) {
    Sequence terms{f.scale, {}};
    for (int u : p.down_set(y)) terms.items.push_back(sym_min(f.at(u), h.at(u, y)));
    out.values[y] = apply_rule(r, terms).result;
  }
  return out;
}

LBiFunction ostar(const LBiFunction& f, const LBiFunction& g, Rule r) {
  require_same(f.poset, g.poset);
  if (f.scale != g.scale) throw MismatchError("operands live on different scales");
  const Poset& p = *f.poset;
  LBiFunction out{f.poset, f.scale, std::vector<SymLevel>(f.values.size())};
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      Sequence terms{f.scale, {}};
      for (int u : p.segment(x, y)) terms.items.push_back(sym_min(f.at(x, u), g.at(u, y)));
      out.ref(x, y) = apply_rule(r, terms).result;
    }
  return out;
}

bool verify_zeta_inverse(const LBiFunction& candidate, Rule r) {
  if (!is_unitriangular(candidate)) return false;
  LBiFunction product = ostar(candidate, ordinal_zeta(candidate.poset, candidate.scale), r);
  LBiFunction wanted = ordinal_delta(candidate.poset, candidate.scale);
  return product.values == wanted.values;
}

std::vector<LBiFunction> enumerate_zeta_inverses(const Poset::Ptr& p, const Scale& s, Rule r) {
  if (p->size() > 5) throw SizeError("enumerate_zeta_inverses: bounded to 5 elements");
  if (s.k() > 2) throw SizeError("enumerate_zeta_inverses: bounded to scales of size 2");

  // Free entries are the comparable pairs x < y, grouped by row and
  // ordered along a linear extension so that the cancelling fold of a
  // pair can be checked the moment its entry is assigned.
  std::vector<int> rank(p->size());
  {
    std::vector<int> order = linear_extension(*p);
    for (int i = 0; i < p->size(); ++i) rank[order[i]] = i;
  }
  std::vector<std::pair<int, int>> free_pairs;
  for (int x = 0; x < p->size(); ++x)
    for (int y = 0; y < p->size(); ++y)
      if (p->lt(x, y)) free_pairs.emplace_back(x, y);
  std::sort(free_pairs.begin(), free_pairs.end(), [&](auto a, auto b) {
    return std::pair(a.first, rank[a.second]) < std::pair(b.first, rank[b.second]);
  });

  LBiFunction work = ordinal_delta(p, s);
  std::vector<LBiFunction> found;

  auto cancels = [&](int x, int y) {
    Sequence terms{s, {}};
    for (int u : p->segment(x, y)) terms.items.push_back(work.at(x, u));
    return apply_rule(r, terms).result == SymLevel(0);
  };

  auto dfs = [&](auto&& self, std::size_t next) -> void {
    if (next == free_pairs.size()) {
      found.push_back(work);
      return;
    }
    auto [x, y] = free_pairs[next];
    for (int v = -s.k(); v <= s.k(); ++v) {
      work.ref(x, y) = SymLevel(v);
      if (cancels(x, y)) self(self, next + 1);
    }
    work.ref(x, y) = SymLevel(0);
  };
  dfs(dfs, 0);
  return found;
}

LFunction eval_primitive(const LFunction& f, Rule r) {
  const Poset& p = *f.poset;
  LFunction out{f.poset, f.scale, std::vector<SymLevel>(p.size())};
  for (int x = 0; x < p.size(); ++x) {
    Sequence terms{f.scale, {}};
    for (int y : p.down_set(x)) terms.items.push_back(f.at(y));
    out.values[x] = apply_rule(r, terms).result;
  }
  return out;
}

bool check_star_condition(const LFunction& g) {
  const Poset& p = *g.poset;
  for (int x = 0; x < p.size(); ++x) {
    if (g.at(x) == SymLevel(0)) continue;
    for (int y : p.lower_covers(x))
      if (g.at(x).index() < g.at(y).index()) return false;
  }
  return true;
}

MobiusResult canonical_mobius(const LFunction& g, Rule r) {
  const Poset& p = *g.poset;
  LFunction m{g.poset, g.scale, std::vector<SymLevel>(p.size())};
  for (int x = 0; x < p.size(); ++x) {
    Sequence below{g.scale, {}};
    for (int y : p.lower_covers(x)) below.items.push_back(g.at(y));
    SymLevel inner = apply_rule(r, below).result;
    m.values[x] = sym_max(g.at(x), negate(inner));
  }
  return {std::move(m), is_abs_isotone(g)};
}

namespace {

void require_isotone_nonneg(const LFunction& g, const char* who) {
  if (!is_nonneg(g) || !is_isotone(g))
    throw PrecondError(std::string(who) + ": wants a nonnegative isotone function");
}

}  // namespace

SolutionInterval solution_interval(const LFunction& g) {
  require_isotone_nonneg(g, "solution_interval");
  return {canonical_mobius(g, Rule::Splitting).transform, g};
}

LFunction derivative(const LFunction& g) {
  require_isotone_nonneg(g, "derivative");
  const Poset& p = *g.poset;
  LFunction out{g.poset, g.scale, std::vector<SymLevel>(p.size())};
  for (int x = 0; x < p.size(); ++x) {
    SymLevel below(0);
    for (int y : p.strict_down_set(x)) below = std::max(below, g.at(y));
    out.values[x] = g.at(x) == below ? SymLevel(0) : g.at(x);
  }
  return out;
}

int GChain::mirror(int element) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == element) return elements[elements.size() - 1 - i];
  throw LookupError("mirror: element not on this chain");
}

std::vector<GChain> g_chains(const LFunction& g) {
  require_isotone_nonneg(g, "g_chains");
  const Poset& p = *g.poset;

  std::vector<GChain> out;
  std::vector<int> members;  // elements sharing the current value
  for (int rep = 0; rep < p.size(); ++rep) {
    // Visit each value once, via its first representative.
    bool first = true;
    for (int x = 0; x < rep && first; ++x)
      if (g.at(x) == g.at(rep)) first = false;
    if (!first) continue;

    members.clear();
    for (int x = 0; x < p.size(); ++x)
      if (g.at(x) == g.at(rep)) members.push_back(x);

    auto covers_within = [&](int lo) {
      std::vector<int> nxt;
      for (int hi : members)
        if (p.lt(lo, hi)) {
          bool direct = true;
          for (int mid : members)
            if (p.lt(lo, mid) && p.lt(mid, hi)) {
              direct = false;
              break;
            }
          if (direct) nxt.push_back(hi);
        }
      return nxt;
    };

    std::vector<int> path;
    auto grow = [&](auto&& self, int x) -> void {
      path.push_back(x);
      std::vector<int> nxt = covers_within(x);
      if (nxt.empty()) {
        if (path.size() >= 2) out.push_back({path, g.at(rep)});
      } else {
        for (int hi : nxt) self(self, hi);
      }
      path.pop_back();
    };
    for (int x : members) {
      bool minimal = true;
      for (int y : members)
        if (p.lt(y, x)) {
          minimal = false;
          break;
        }
      if (minimal) grow(grow, x);
    }
  }
  return out;
}

LFunction conjugate_function(const LFunction& g) {
  const Poset& p = *g.poset;
  LFunction out{g.poset, g.scale, std::vector<SymLevel>(p.size())};
  for (int x = 0; x < p.size(); ++x) out.values[x] = conjugate(g.at(p.conjugate(x)), g.scale);
  return out;
}

LFunction conjugate_mobius_closed(const LFunction& g, const std::vector<GChain>& chains) {
  require_isotone_nonneg(g, "conjugate_mobius_closed");
  const Poset& p = *g.poset;
  LFunction m = canonical_mobius(g, Rule::Splitting).transform;
  LFunction out{g.poset, g.scale, std::vector<SymLevel>(p.size())};
  for (int x = 0; x < p.size(); ++x) {
    int xb = p.conjugate(x);
    const GChain* home = nullptr;
    for (const GChain& c : chains)
      if (std::find(c.elements.begin(), c.elements.end(), xb) != c.elements.end()) {
        home = &c;
        break;
      }
    if (!home) {
      out.values[x] = conjugate(m.at(xb), g.scale);
    } else if (xb == home->max()) {
      // x is the minimal point of the conjugate chain; it inherits the
      // mirrored value.
      out.values[x] = conjugate(m.at(home->mirror(xb)), g.scale);
    } else {
      out.values[x] = SymLevel(0);
    }
  }
  return out;
}

}  // namespace symord
