#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symord/capacity.hpp"
#include "symord/poset.hpp"
#include "symord/rules.hpp"

namespace symord {

// Levels on the wire are signed decimal indices; sequences and profiles
// are comma-separated.  All parsers throw ParseError on malformed text.
std::vector<int> parse_int_csv(const std::string&);

// Scale defaults to the largest magnitude present (at least 1) when the
// caller does not pin one down.
Sequence parse_sequence(const std::string& csv, std::optional<int> k);

// Subsets of {1..n} print as "{}" or as sorted comma-joined ids: "1,3".
std::string subset_name(unsigned mask, int n);
unsigned parse_subset(const std::string& token, int n);

// Poset file:
//   bottom: <id>
//   elements: <id> <id> ...
//   cover: <lo> <hi>        (one line per arc)
// The declared bottom must match the unique minimal element.
Poset::Ptr parse_poset(std::istream&);
std::string format_poset(const Poset&);

// Function file: one "<element-id> <signed-index>" line per element, every
// element exactly once, any order.
LFunction parse_function(std::istream&, Poset::Ptr, std::optional<int> k);
std::string format_function(const LFunction&);  // sorted-id order

// Capacity file:
//   n: <criteria count>
//   scale: <k>
//   <subset> <index>        (one line per subset, e.g. "1,3 2", "{} 0")
// Every subset must be present; the error for missing ones lists them.
Capacity parse_capacity(std::istream&);
std::string format_capacity(const Capacity&);  // mask order

}  // namespace symord
