#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symord/errors.hpp"
#include "symord/scale.hpp"

namespace symord {

// Finite poset with a unique bottom element.  Elements carry stable string
// ids; internally they are dense int handles into the id-sorted order, and
// every iteration follows that order, so results are deterministic.
// Instances are immutable after construction and safe to share.
class Poset {
 public:
  using Ptr = std::shared_ptr<const Poset>;

  // Builds the reflexive-transitive closure of the given cover arcs
  // (redundant arcs are fine; true covers are recomputed).  Throws
  // OrderError on a cycle, BottomError unless exactly one minimal element
  // exists, LookupError on unknown ids in arcs, ValidationError on
  // duplicate ids or on a bad conjugation map.  The optional conjugation
  // is an order-reversing involution given as id pairs (fixed points as
  // x,x); it must cover every element.
  static Ptr from_covers(const std::vector<std::string>& ids,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         const std::vector<std::pair<std::string, std::string>>& conjugation = {});

  // Subsets of {1..n} ordered by inclusion, ids "{}", "1", "1,2", ...;
  // ships with the complement conjugation.  n up to 12.
  static Ptr boolean_lattice(int n);

  // c0 < c1 < ... with the reversal conjugation.
  static Ptr chain(int n_elements);

  // The four-element poset 0 < a,b < c (a,b incomparable).
  static Ptr diamond();

  int size() const noexcept { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(int x) const { return ids_.at(x); }
  int element(const std::string& id) const;  // LookupError

  bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x) * ids_.size() + y] != 0; }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  bool is_cover(int lo, int hi) const;

  const std::vector<int>& lower_covers(int x) const { return preds_.at(x); }
  const std::vector<int>& upper_covers(int x) const { return succs_.at(x); }
  std::vector<std::pair<int, int>> cover_pairs() const;  // (lo, hi), lexicographic

  std::vector<int> down_set(int x) const;         // { y : y <= x }, ascending handles
  std::vector<int> strict_down_set(int x) const;  // { y : y < x }
  std::vector<int> segment(int lo, int hi) const; // { u : lo <= u <= hi }

  int bottom() const noexcept { return bottom_; }
  std::optional<int> top() const;  // the unique maximal element, if unique

  bool has_conjugation() const noexcept { return !conj_.empty(); }
  int conjugate(int x) const;  // CapabilityError when no conjugation is attached

 private:
  Poset() = default;
  void finish(const std::vector<std::vector<int>>& up_arcs);
  void attach_conjugation(std::vector<int> map);

  std::vector<std::string> ids_;        // sorted
  std::vector<unsigned char> leq_;      // size * size, row-major
  std::vector<std::vector<int>> preds_; // lower covers
  std::vector<std::vector<int>> succs_; // upper covers
  std::vector<int> conj_;               // empty when absent
  int bottom_ = -1;
};

// A scale-valued function on the elements of a poset.
struct LFunction {
  Poset::Ptr poset;
  Scale scale;
  std::vector<SymLevel> values;  // indexed by element handle

  SymLevel at(int x) const { return values.at(x); }
};

// Checked construction: one value per element, all on the scale.
LFunction make_function(Poset::Ptr poset, const Scale& s, const std::vector<int>& values);

bool is_isotone(const LFunction&);      // x <= y implies g(x) <= g(y)
bool is_abs_isotone(const LFunction&);  // x <= y implies |g(x)| <= |g(y)|
bool is_nonneg(const LFunction&);

// True when both functions live on the same poset object and scale.
bool same_space(const LFunction&, const LFunction&);

// Handles ordered so that every element appears after everything below it.
std::vector<int> linear_extension(const Poset&);

}  // namespace symord
