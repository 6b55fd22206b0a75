#include "symord/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "symord/io.hpp"

namespace symord {

namespace {

std::vector<int> sorted_unique_check(std::vector<std::string>& ids) {
  std::vector<int> dummy;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw ValidationError("poset: duplicate element id");
  if (ids.empty()) throw ValidationError("poset: no elements");
  return dummy;
}

}  // namespace

int Poset::element(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw LookupError("poset: unknown element '" + id + "'");
  return static_cast<int>(it - ids_.begin());
}

bool Poset::is_cover(int lo, int hi) const {
  const std::vector<int>& below = preds_.at(hi);
  return std::binary_search(below.begin(), below.end(), lo);
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int hi = 0; hi < size(); ++hi)
    for (int lo : preds_[hi]) out.emplace_back(lo, hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Poset::down_set(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (leq(y, x)) out.push_back(y);
  return out;
}

std::vector<int> Poset::strict_down_set(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (lt(y, x)) out.push_back(y);
  return out;
}

std::vector<int> Poset::segment(int lo, int hi) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    if (leq(lo, u) && leq(u, hi)) out.push_back(u);
  return out;
}

std::optional<int> Poset::top() const {
  std::optional<int> found;
  for (int x = 0; x < size(); ++x) {
    bool maximal = true;
    for (int y = 0; y < size() && maximal; ++y)
      if (lt(x, y)) maximal = false;
    if (maximal) {
      if (found) return std::nullopt;
      found = x;
    }
  }
  return found;
}

int Poset::conjugate(int x) const {
  if (conj_.empty()) throw CapabilityError("poset has no conjugation attached");
  return conj_.at(x);
}

void Poset::finish(const std::vector<std::vector<int>>& up_arcs) {
  const int n = size();

  // Cycle check: depth-first coloring over the arcs.
  std::vector<int> color(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next == up_arcs[x].size()) {
        color[x] = 2;
        stack.pop_back();
        continue;
      }
      int y = up_arcs[x][next++];
      if (color[y] == 1) throw OrderError("poset: cover arcs contain a cycle");
      if (color[y] == 0) {
        color[y] = 1;
        stack.emplace_back(y, 0);
      }
    }
  }

  // Reflexive-transitive closure.
  leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    std::vector<int> todo{x};
    leq_[static_cast<std::size_t>(x) * n + x] = 1;
    while (!todo.empty()) {
      int u = todo.back();
      todo.pop_back();
      for (int y : up_arcs[u])
        if (!leq_[static_cast<std::size_t>(x) * n + y]) {
          leq_[static_cast<std::size_t>(x) * n + y] = 1;
          todo.push_back(y);
        }
    }
  }

  // Unique bottom.
  bottom_ = -1;
  for (int x = 0; x < n; ++x) {
    bool minimal = true;
    for (int y = 0; y < n && minimal; ++y)
      if (lt(y, x)) minimal = false;
    if (minimal) {
      if (bottom_ >= 0) throw BottomError("poset: more than one minimal element");
      bottom_ = x;
    }
  }
  if (bottom_ < 0) throw BottomError("poset: no minimal element");  // unreachable when acyclic

  // True covers, recomputed from the closure.
  preds_.assign(n, {});
  succs_.assign(n, {});
  for (int hi = 0; hi < n; ++hi)
    for (int lo = 0; lo < n; ++lo) {
      if (!lt(lo, hi)) continue;
      bool direct = true;
      for (int mid = 0; mid < n && direct; ++mid)
        if (lt(lo, mid) && lt(mid, hi)) direct = false;
      if (direct) {
        preds_[hi].push_back(lo);
        succs_[lo].push_back(hi);
      }
    }
}

void Poset::attach_conjugation(std::vector<int> map) {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0 || map[x] >= n) throw ValidationError("conjugation: element out of range");
    if (map[map[x]] != x) throw ValidationError("conjugation: not an involution");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(x, y) != leq(map[y], map[x]))
        throw ValidationError("conjugation: does not reverse the order");
  conj_ = std::move(map);
}

Poset::Ptr Poset::from_covers(const std::vector<std::string>& raw_ids,
                              const std::vector<std::pair<std::string, std::string>>& covers,
                              const std::vector<std::pair<std::string, std::string>>& conjugation) {
  auto p = std::shared_ptr<Poset>(new Poset());
  p->ids_ = raw_ids;
  sorted_unique_check(p->ids_);

  std::vector<std::vector<int>> up(p->size());
  for (const auto& [lo, hi] : covers) {
    int a = p->element(lo), b = p->element(hi);
    if (a == b) throw OrderError("poset: cover arc from '" + lo + "' to itself");
    up[a].push_back(b);
  }
  p->finish(up);

  if (!conjugation.empty()) {
    std::vector<int> map(p->size(), -1);
    for (const auto& [a, b] : conjugation) {
      int x = p->element(a), y = p->element(b);
      if ((map[x] >= 0 && map[x] != y) || (map[y] >= 0 && map[y] != x))
        throw ValidationError("conjugation: conflicting pairs");
      map[x] = y;
      map[y] = x;
    }
    for (int x = 0; x < p->size(); ++x)
      if (map[x] < 0) throw ValidationError("conjugation: element '" + p->id(x) + "' unmapped");
    p->attach_conjugation(std::move(map));
  }
  return p;
}

Poset::Ptr Poset::boolean_lattice(int n) {
  if (n < 1) throw SizeError("boolean_lattice: need at least one criterion");
  if (n > 12) throw SizeError("boolean_lattice: bounded to 12 criteria");
  const unsigned count = 1u << n;

  auto p = std::shared_ptr<Poset>(new Poset());
  std::vector<std::pair<std::string, unsigned>> named;
  named.reserve(count);
  for (unsigned mask = 0; mask < count; ++mask) named.emplace_back(subset_name(mask, n), mask);
  std::sort(named.begin(), named.end());

  p->ids_.reserve(count);
  std::vector<unsigned> mask_of(count);
  std::vector<int> handle_of(count);
  for (unsigned h = 0; h < count; ++h) {
    p->ids_.push_back(named[h].first);
    mask_of[h] = named[h].second;
    handle_of[named[h].second] = static_cast<int>(h);
  }

  p->leq_.assign(static_cast<std::size_t>(count) * count, 0);
  for (unsigned x = 0; x < count; ++x)
    for (unsigned y = 0; y < count; ++y)
      if ((mask_of[x] & ~mask_of[y]) == 0) p->leq_[static_cast<std::size_t>(x) * count + y] = 1;

  p->preds_.assign(count, {});
  p->succs_.assign(count, {});
  for (unsigned h = 0; h < count; ++h)
    for (int bit = 0; bit < n; ++bit)
      if (mask_of[h] & (1u << bit)) {
        int below = handle_of[mask_of[h] & ~(1u << bit)];
        p->preds_[h].push_back(below);
        p->succs_[below].push_back(static_cast<int>(h));
      }
  for (auto& v : p->preds_) std::sort(v.begin(), v.end());
  for (auto& v : p->succs_) std::sort(v.begin(), v.end());

  p->bottom_ = handle_of[0];
  std::vector<int> conj(count);
  for (unsigned h = 0; h < count; ++h) conj[h] = handle_of[~mask_of[h] & (count - 1)];
  p->conj_ = std::move(conj);
  return p;
}

Poset::Ptr Poset::chain(int n_elements) {
  if (n_elements < 1) throw SizeError("chain: need at least one element");
  int width = static_cast<int>(std::to_string(n_elements - 1).size());
  auto name = [&](int i) {
    std::string digits = std::to_string(i);
    return "c" + std::string(width - static_cast<int>(digits.size()), '0') + digits;
  };
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers, conj;
  for (int i = 0; i < n_elements; ++i) {
    ids.push_back(name(i));
    if (i + 1 < n_elements) covers.emplace_back(name(i), name(i + 1));
    if (i <= n_elements - 1 - i) conj.emplace_back(name(i), name(n_elements - 1 - i));
  }
  return from_covers(ids, covers, conj);
}

Poset::Ptr Poset::diamond() {
  return from_covers({"0", "a", "b", "c"}, {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}},
                     {{"0", "c"}, {"a", "b"}});
}

LFunction make_function(Poset::Ptr poset, const Scale& s, const std::vector<int>& values) {
  if (!poset) throw ValidationError("make_function: null poset");
  if (static_cast<int>(values.size()) != poset->size())
    throw MismatchError("make_function: expected " + std::to_string(poset->size()) +
                        " values, got " + std::to_string(values.size()));
  LFunction f{std::move(poset), s, {}};
  f.values.reserve(values.size());
  for (int v : values) f.values.push_back(s.level(v));
  return f;
}

bool is_isotone(const LFunction& g) {
  const Poset& p = *g.poset;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.lt(x, y) && g.values[x] > g.values[y]) return false;
  return true;
}

bool is_abs_isotone(const LFunction& g) {
  const Poset& p = *g.poset;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.lt(x, y) && g.values[x].index() > g.values[y].index()) return false;
  return true;
}

bool is_nonneg(const LFunction& g) {
  for (SymLevel v : g.values)
    if (v.value() < 0) return false;
  return true;
}

bool same_space(const LFunction& f, const LFunction& g) {
  return f.poset == g.poset && f.scale == g.scale;
}

std::vector<int> linear_extension(const Poset& p) {
  std::vector<int> size_of(p.size());
  for (int x = 0; x < p.size(); ++x) size_of[x] = static_cast<int>(p.down_set(x).size());
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return size_of[a] < size_of[b]; });
  return order;
}

}  // namespace symord
