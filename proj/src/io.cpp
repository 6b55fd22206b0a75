#include "symord/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace symord {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError("expected an integer, got '" + token + "'");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Reads the next nonblank line; false at end of stream.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) return true;
  }
  return false;
}

std::string expect_directive(const std::string& line, const std::string& key) {
  if (line.rfind(key, 0) != 0)
    throw ParseError("expected '" + key + " ...', got '" + line + "'");
  return trim(line.substr(key.size()));
}

}  // namespace

std::vector<int> parse_int_csv(const std::string& csv) {
  std::vector<int> out;
  if (trim(csv).empty()) return out;
  for (const std::string& tok : split(csv, ',')) out.push_back(parse_int(trim(tok)));
  return out;
}

Sequence parse_sequence(const std::string& csv, std::optional<int> k) {
  std::vector<int> values = parse_int_csv(csv);
  int mag = 1;
  for (int v : values) mag = std::max(mag, v < 0 ? -v : v);
  return make_sequence(Scale(k.value_or(mag)), values);
}

std::string subset_name(unsigned mask, int n) {
  if (mask == 0) return "{}";
  std::string out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) {
      if (!out.empty()) out += ',';
      out += std::to_string(i + 1);
    }
  return out;
}

unsigned parse_subset(const std::string& token, int n) {
  if (token == "{}") return 0;
  unsigned mask = 0;
  for (const std::string& part : split(token, ',')) {
    int i = parse_int(trim(part));
    if (i < 1 || i > n)
      throw ParseError("criterion " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (mask & (1u << (i - 1))) throw ParseError("criterion " + std::to_string(i) + " repeated");
    mask |= 1u << (i - 1);
  }
  return mask;
}

Poset::Ptr parse_poset(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("poset file: empty");
  std::string declared_bottom = expect_directive(line, "bottom:");
  if (declared_bottom.empty() || words(declared_bottom).size() != 1)
    throw ParseError("poset file: 'bottom:' wants exactly one id");

  if (!next_line(in, line)) throw ParseError("poset file: missing 'elements:' line");
  std::vector<std::string> ids = words(expect_directive(line, "elements:"));
  if (ids.empty()) throw ParseError("poset file: no elements");

  std::vector<std::pair<std::string, std::string>> covers;
  while (next_line(in, line)) {
    std::vector<std::string> arc = words(expect_directive(line, "cover:"));
    if (arc.size() != 2) throw ParseError("poset file: 'cover:' wants two ids");
    covers.emplace_back(arc[0], arc[1]);
  }

  Poset::Ptr p = Poset::from_covers(ids, covers);
  if (p->id(p->bottom()) != declared_bottom)
    throw ValidationError("poset file: declared bottom '" + declared_bottom +
                          "' but the unique minimal element is '" + p->id(p->bottom()) + "'");
  return p;
}

std::string format_poset(const Poset& p) {
  std::ostringstream out;
  out << "bottom: " << p.id(p.bottom()) << "\n";
  out << "elements:";
  for (const std::string& id : p.ids()) out << ' ' << id;
  out << "\n";
  for (auto [lo, hi] : p.cover_pairs()) out << "cover: " << p.id(lo) << ' ' << p.id(hi) << "\n";
  return out.str();
}

LFunction parse_function(std::istream& in, Poset::Ptr poset, std::optional<int> k) {
  std::vector<std::optional<int>> raw(poset->size());
  std::string line;
  int mag = 1;
  while (next_line(in, line)) {
    std::vector<std::string> parts = words(line);
    if (parts.size() != 2)
      throw ParseError("function file: expected '<id> <value>', got '" + line + "'");
    int x = poset->element(parts[0]);
    if (raw[x]) throw ParseError("function file: element '" + parts[0] + "' repeated");
    int v = parse_int(parts[1]);
    raw[x] = v;
    mag = std::max(mag, v < 0 ? -v : v);
  }
  std::string missing;
  for (int x = 0; x < poset->size(); ++x)
    if (!raw[x]) missing += (missing.empty() ? "" : " ") + poset->id(x);
  if (!missing.empty()) throw ParseError("function file: missing elements: " + missing);

  std::vector<int> values(poset->size());
  for (int x = 0; x < poset->size(); ++x) values[x] = *raw[x];
  return make_function(std::move(poset), Scale(k.value_or(mag)), values);
}

std::string format_function(const LFunction& f) {
  std::ostringstream out;
  for (int x = 0; x < f.poset->size(); ++x)
    out << f.poset->id(x) << ' ' << f.values[x].value() << "\n";
  return out.str();
}

Capacity parse_capacity(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("capacity file: empty");
  int n = parse_int(expect_directive(line, "n:"));
  if (n < 1 || n > 12) throw ParseError("capacity file: n must be in 1..12");
  if (!next_line(in, line)) throw ParseError("capacity file: missing 'scale:' line");
  int k = parse_int(expect_directive(line, "scale:"));

  const unsigned count = 1u << n;
  std::vector<std::optional<int>> raw(count);
  while (next_line(in, line)) {
    std::vector<std::string> parts = words(line);
    if (parts.size() != 2)
      throw ParseError("capacity file: expected '<subset> <value>', got '" + line + "'");
    unsigned mask = parse_subset(parts[0], n);
    if (raw[mask]) throw ParseError("capacity file: subset " + parts[0] + " repeated");
    raw[mask] = parse_int(parts[1]);
  }
  std::string missing;
  for (unsigned mask = 0; mask < count; ++mask)
    if (!raw[mask]) missing += (missing.empty() ? "" : " ") + subset_name(mask, n);
  if (!missing.empty()) throw ParseError("capacity file: missing subsets: " + missing);

  std::vector<int> values(count);
  for (unsigned mask = 0; mask < count; ++mask) values[mask] = *raw[mask];
  return capacity_from_table(n, Scale(k), values);
}

std::string format_capacity(const Capacity& cap) {
  std::ostringstream out;
  out << "n: " << cap.n << "\n";
  out << "scale: " << cap.scale.k() << "\n";
  for (unsigned mask = 0; mask <= cap.full(); ++mask)
    out << subset_name(mask, cap.n) << ' ' << cap.values[mask].value() << "\n";
  return out.str();
}

}  // namespace symord
