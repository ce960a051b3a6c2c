#include "strata/springer_data.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "embedded_tables.hpp"
#include "json.hpp"
#include "strata/error.hpp"

namespace strata {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return out;
}

// Splits at commas outside brackets and parentheses.
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> table_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

struct RawEntry {
  std::string levi;  // empty for an (empty, E') entry
  std::string character;
  int d = 0;
  int mult = 1;
  std::optional<char> disamb;
};

RawEntry parse_entry(const std::string& text) {
  RawEntry e;
  if (text.empty() || text.front() != '(') {
    e.character = text;
    return e;
  }
  const auto close = text.rfind(')');
  if (close == std::string::npos) throw ParseError("unbalanced entry '" + text + "'");
  const std::string inner = text.substr(1, close - 1);
  const auto first = inner.find(',');
  const auto last = inner.rfind(',');
  if (first == std::string::npos || first == last) throw ParseError("entry needs (J,E',d): '" + text + "'");
  e.levi = trim(inner.substr(0, first));
  e.character = trim(inner.substr(first + 1, last - first - 1));
  e.d = std::stoi(inner.substr(last + 1));
  std::string tail = text.substr(close + 1);
  if (auto at = tail.find('@'); at != std::string::npos) {
    if (at + 2 != tail.size()) throw ParseError("malformed occurrence tag in '" + text + "'");
    e.disamb = tail[at + 1];
    tail.erase(at);
  }
  if (!tail.empty()) {
    if (tail.front() != '#') throw ParseError("malformed multiplicity in '" + text + "'");
    e.mult = std::stoi(tail.substr(1));
  }
  return e;
}

struct Annotation {
  std::map<int, GroupTag> groups;
  Boxed boxed;
  Membership membership;
};

Annotation parse_annotation(const std::string& text) {
  struct Slot {
    std::optional<GroupTag> value;
    bool boxed = false;
  };
  std::vector<Slot> slots;
  std::optional<std::optional<GroupTag>> a0;
  for (const auto& item : split_top_level(text)) {
    if (item.empty()) throw ParseError("empty group annotation in '" + text + "'");
    if (item.front() == '[') {
      if (item.back() != ']') throw ParseError("unbalanced '[' in '" + text + "'");
      for (const auto& v : split_top_level(std::string_view(item).substr(1, item.size() - 2)))
        slots.push_back({parse_group(v), true});
    } else if (item.front() == '(') {
      const std::string v = item.substr(1, item.size() - 2);
      a0 = v == "-" ? std::optional<GroupTag>{} : std::optional<GroupTag>{parse_group(v)};
    } else if (item == "-") {
      slots.push_back({std::nullopt, false});
    } else {
      slots.push_back({parse_group(item), false});
    }
  }
  Annotation out;
  if (!a0 && slots.size() == 1 && slots[0].boxed) {
    const GroupTag g = *slots[0].value;
    out.groups = {{0, g}, {2, g}, {3, g}};
    out.boxed.single = true;
    return out;
  }
  static constexpr int kPositions[] = {2, 3, 5};
  if (slots.size() > 3) throw ParseError("too many group annotations in '" + text + "'");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].value) out.groups[kPositions[i]] = *slots[i].value;
    if (slots[i].boxed) out.boxed.primes.push_back(kPositions[i]);
  }
  if (a0 && *a0) {
    out.groups[0] = **a0;
  } else {
    if (out.groups.size() != 1) throw ParseError("a row without A_0 needs exactly one defined group: '" + text + "'");
    out.membership = {false, out.groups.begin()->first};
  }
  return out;
}

// Replaces the characters of 'a'-tagged entries by the relative characters of
// their Levi that no other entry claims, in registry order.
void resolve_occurrences(StrataTable& tab) {
  std::map<std::string, std::set<std::string>> claimed;
  for (const auto& row : tab.rows)
    for (const auto& e : row.fiber)
      if (!e.triple.levi.is_empty() && e.disamb != 'a')
        claimed[e.triple.levi.name() + "/" + format_delta(e.triple.d)].insert(e.triple.character.str());
  for (auto& row : tab.rows) {
    for (auto& e : row.fiber) {
      if (e.disamb != 'a') continue;
      auto& taken = claimed[e.triple.levi.name() + "/" + format_delta(e.triple.d)];
      bool done = false;
      for (const auto& c : relative_irr(e.triple.levi)) {
        if (taken.count(c.str())) continue;
        e.triple.character = c;
        taken.insert(c.str());
        done = true;
        break;
      }
      if (!done) throw ParseError("no unclaimed relative character for " + e.triple.str());
    }
  }
}

StrataTable parse_embedded(const CartanType& t) {
  StrataTable tab{t, {}};
  for (const auto& line : table_lines(detail::embedded_table_text(t))) {
    const auto bar = line.find(" | ");
    if (bar == std::string::npos) throw ParseError("row without annotation: '" + line + "'");
    StrataRow row;
    const auto empty = find_levi(t, "empty");
    for (const auto& text : split(std::string_view(line).substr(0, bar), " ; ")) {
      RawEntry raw = parse_entry(text);
      FiberEntry entry;
      if (raw.levi.empty()) {
        entry.triple = {empty, CharacterLabel::named(raw.character), 0, 0};
      } else {
        const auto levi = find_levi(t, raw.levi);
        entry.triple = {levi, parse_relative_label(levi, raw.character), raw.d, 0};
      }
      entry.mult = raw.mult;
      entry.disamb = raw.disamb;
      row.fiber.push_back(std::move(entry));
    }
    row.stratum = row.fiber.front().triple.character;
    Annotation ann = parse_annotation(line.substr(bar + 3));
    row.groups = std::move(ann.groups);
    row.boxed = std::move(ann.boxed);
    row.membership = ann.membership;
    tab.rows.push_back(std::move(row));
  }
  resolve_occurrences(tab);
  return tab;
}

bool levi_is_classical(const CuspidalLevi& levi) { return levi.levi && levi.levi->is_classical(); }

}  // namespace

// ---------------------------------------------------------------------------

std::string Boxed::str() const {
  if (single) return "single";
  std::string s;
  for (int p : primes) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

std::string Membership::str() const { return full ? "full" : "singleton:" + std::to_string(r0); }

Membership Membership::parse(std::string_view text) {
  if (text == "full") return {true, 0};
  constexpr std::string_view prefix = "singleton:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string r(text.substr(prefix.size()));
    if (r == "0" || r == "2" || r == "3" || r == "5") return {false, std::stoi(r)};
  }
  throw SchemaError("membership must be 'full' or 'singleton:R', got '" + std::string(text) + "'");
}

int StrataRow::fiber_size() const {
  int n = 0;
  for (const auto& e : fiber) n += e.mult;
  return n;
}

const StrataRow* StrataTable::find_row(const CharacterLabel& head) const {
  for (const auto& r : rows)
    if (r.stratum == head) return &r;
  return nullptr;
}

const StrataRow& StrataTable::row(const CharacterLabel& head) const {
  if (const auto* r = find_row(head)) return *r;
  throw NotAStratum("'" + head.str() + "' is not a stratum of " + type.name());
}

int StrataTable::total_entries() const {
  int n = 0;
  for (const auto& r : rows) n += r.fiber_size();
  return n;
}

bool has_embedded_table(const CartanType& t) { return t.is_exceptional(); }

const StrataTable& table(const CartanType& t) {
  if (!has_embedded_table(t)) throw NoTableAvailable("no table available for " + t.name());
  static std::mutex mutex;
  static std::map<CartanType, std::unique_ptr<const StrataTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const StrataTable>(parse_embedded(t));
  std::lock_guard lock(mutex);
  return *cache.emplace(t, std::move(built)).first->second;
}

std::optional<GroupTag> component_group(const StrataRow& row, int r) {
  // A prime above 5 is good for every type and behaves like characteristic 0.
  if (r > 5) {
    for (int q = 2; q * q <= r; ++q)
      if (r % q == 0) throw Error("characteristic must be 0 or a prime, got " + std::to_string(r));
    r = 0;
  }
  if (r != 0 && r != 2 && r != 3 && r != 5)
    throw Error("characteristic must be 0 or a prime, got " + std::to_string(r));
  if (auto it = row.groups.find(r); it != row.groups.end()) return it->second;
  if (r == 5 && row.membership.full) return component_group(row, 0);
  return std::nullopt;
}

std::optional<GroupTag> component_group(const CartanType& t, const CharacterLabel& E, int r) {
  return component_group(table(t).row(E), r);
}

std::string placement_key(const SheafTriple& triple) {
  return triple.levi.name() + "|" + triple.character.str() + "|" +
         (levi_is_classical(triple.levi) ? std::string("*") : format_delta(triple.d)) + "|" +
         std::to_string(triple.index);
}

std::optional<std::string> placement_mismatch(const StrataTable& tab) {
  std::multiset<std::string> placed;
  for (const auto& row : tab.rows) {
    for (const auto& e : row.fiber) {
      SheafTriple t = e.triple;
      for (int i = 0; i < e.mult; ++i) {
        t.index = i;
        placed.insert(placement_key(t));
      }
    }
  }
  for (const auto& t : enumerate_cs_prime(tab.type)) {
    auto it = placed.find(placement_key(t));
    if (it == placed.end()) return "triple " + t.str() + " is not placed in any row";
    placed.erase(it);
  }
  if (!placed.empty()) {
    // Report the first leftover in row order.
    for (const auto& row : tab.rows)
      for (const auto& e : row.fiber) {
        SheafTriple t = e.triple;
        for (int i = 0; i < e.mult; ++i) {
          t.index = i;
          if (placed.count(placement_key(t)))
            return "triple " + t.str() + " in row " + row.stratum.str() + " is not an element of CS'(" +
                   tab.type.name() + ") or is placed twice";
        }
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Centralizer profiles

std::string CentralizerEntry::name() const { return type ? type->name() : std::string("full"); }

std::string CentralizerProfile::characteristic_class() const {
  if (primes.empty()) return "generic";
  std::string s;
  for (int p : primes) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

int CentralizerProfile::total() const {
  int n = 0;
  for (const auto& e : entries) n += e.count;
  return n;
}

namespace {

CentralizerEntry sub(std::string_view name, int count) { return {SubsystemType::parse(name), count}; }
CentralizerEntry full(int count) { return {std::nullopt, count}; }

constexpr std::string_view kE8ZeroNote =
    "contradicts an earlier published claim: for r = 2 no semisimple element has centralizer "
    "of type A5xA2xA1";

}  // namespace

std::vector<CentralizerProfile> centralizer_profiles(const CartanType& t) {
  std::vector<CentralizerProfile> out;
  auto add = [&](Delta d, std::vector<int> primes, std::vector<CentralizerEntry> entries) {
    out.push_back({t, d, std::move(primes), std::move(entries), ""});
  };
  const int n = t.rank();
  switch (t.series()) {
    case Series::A:
    case Series::Torus:
      break;
    case Series::B:
    case Series::C:
    case Series::D: {
      if (n_table(t).total() == 0) break;
      SubsystemType generic;
      if (t.series() == Series::C) {
        generic = SubsystemType::from_factors({{Series::C, n / 2}, {Series::C, n / 2}});
      } else if (t.series() == Series::D) {
        generic = SubsystemType::from_factors({{Series::D, n / 2}, {Series::D, n / 2}});
      } else {
        int k = 1;
        while (k * (k + 1) < n) ++k;
        const int a = k % 2 == 0 ? ((k + 1) * (k + 1) - 1) / 2 : (k * k - 1) / 2;
        const int b = k % 2 == 0 ? k * k / 2 : (k + 1) * (k + 1) / 2;
        generic = SubsystemType::from_factors({{Series::B, a}, {Series::D, b}});
      }
      add(std::nullopt, {}, {{generic, 1}});
      add(std::nullopt, {2}, {full(1)});
      break;
    }
    case Series::G:
      add(1, {}, {full(1)});
      add(0, {}, {sub("A2", 2), sub("A1xA1", 1)});
      add(0, {2}, {sub("A2", 2), full(1)});
      add(0, {3}, {full(2), sub("A1xA1", 1)});
      break;
    case Series::F:
      add(4, {}, {full(1)});
      add(2, {}, {sub("B4", 1)});
      add(2, {2}, {full(1)});
      add(1, {}, {sub("C3xA1", 1)});
      add(1, {2}, {full(1)});
      add(0, {}, {sub("A2xA2", 2), sub("A3xA1", 2)});
      add(0, {2}, {sub("A2xA2", 2), full(2)});
      add(0, {3}, {sub("A3xA1", 2), full(2)});
      break;
    case Series::E:
      if (n == 6) {
        add(0, {}, {sub("A2xA2xA2", 2)});
        add(0, {3}, {full(2)});
      } else if (n == 7) {
        add(0, {}, {sub("A3xA3xA1", 2)});
        add(0, {2}, {full(2)});
      } else {
        add(16, {}, {full(1)});
        add(7, {}, {sub("E7xA1", 1)});
        add(7, {2}, {full(1)});
        add(6, {}, {sub("D8", 1)});
        add(6, {2}, {full(1)});
        add(3, {}, {sub("E6xA2", 2)});
        add(3, {3}, {full(2)});
        add(1, {}, {sub("D5xA3", 2)});
        add(1, {2}, {full(2)});
        add(0, {}, {sub("A4xA4", 4), sub("A5xA2xA1", 2)});
        add(0, {5}, {full(4), sub("A5xA2xA1", 2)});
        add(0, {3}, {sub("A4xA4", 4), sub("E7xA1", 2)});
        add(0, {2}, {sub("A4xA4", 4), sub("E6xA2", 2)});
        for (auto& p : out)
          if (p.d == 0) p.note = std::string(kE8ZeroNote);
      }
      break;
  }
  return out;
}

CentralizerProfile centralizer_profile(const CartanType& t, const Delta& d, int r) {
  std::optional<CentralizerProfile> generic;
  for (auto& p : centralizer_profiles(t)) {
    if (p.d != d) continue;
    if (std::find(p.primes.begin(), p.primes.end(), r) != p.primes.end()) return p;
    if (p.generic()) generic = std::move(p);
  }
  if (generic) return *generic;
  throw NoData("no centralizer data for " + t.name() + " with d = " + format_delta(d));
}

// ---------------------------------------------------------------------------
// Errata

std::vector<Erratum> errata(const CartanType& t) {
  std::vector<Erratum> out;
  if (t.series() == Series::G) {
    out.push_back({"g2-d0-support",
                   "for d = 0 no characteristic makes all three cuspidal objects unipotently supported; "
                   "tagged anomalous, their row is the unit stratum"});
  }
  if (t.series() == Series::F) {
    out.push_back({"f4-unit-name",
                   "chi_{1,1} heads the row receiving the d = 0 cuspidal objects; only row identity is used"});
  }
  if (t.series() == Series::E && t.rank() == 7) {
    out.push_back({"e7-duplicate-e6",
                   "(E6,1,0)#2 is printed in rows 21_3 and 1_0; the 21_3 occurrence is read as the sign "
                   "character (1,1) of the relative A1"});
  }
  if (t.series() == Series::E && t.rank() == 8) {
    out.push_back({"e8-missing-84_64",
                   "no printed row contains 84_64; restored as a row of its own with trivial groups"});
    out.push_back({"e8-label-3200_32", "label 3200_32 sits among rows with b near 22; stored as printed"});
    out.push_back({"e8-label-160_3", "label 160_3 is paired with 210_4; stored as printed"});
    out.push_back({"e8-label-79_32", "label 79_32 in the S5 row; stored as printed"});
    out.push_back({"e8-duplicate-e7",
                   "(E7,1,0)#2 is printed in rows 84_4 and 1_0; the 84_4 occurrence is read as the sign "
                   "character (1,1) of the relative A1"});
    out.push_back({"e8-full-levi-name", "the full cuspidal Levi is printed as E_*; read as E8"});
    out.push_back({"e8-d0-centralizers", std::string(kE8ZeroNote)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using Json = nlohmann::ordered_json;

Json fiber_to_json(const FiberEntry& e) {
  Json j;
  j["levi"] = e.triple.levi.name();
  j["character"] = e.triple.character.str();
  if (e.triple.d)
    j["d"] = *e.triple.d;
  else
    j["d"] = nullptr;
  j["mult"] = e.mult;
  if (e.disamb) j["disamb"] = std::string(1, *e.disamb);
  return j;
}

Json row_to_json(const StrataRow& row) {
  Json j;
  j["stratum"] = row.stratum.str();
  j["fiber"] = Json::array();
  for (const auto& e : row.fiber) j["fiber"].push_back(fiber_to_json(e));
  j["groups"] = Json::object();
  for (const auto& [r, g] : row.groups) j["groups"]["r" + std::to_string(r)] = group_name(g);
  j["boxed"] = Json::array();
  if (row.boxed.single) j["boxed"].push_back("single");
  for (int p : row.boxed.primes) j["boxed"].push_back(std::to_string(p));
  j["membership"] = row.membership.str();
  return j;
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string require_string(const Json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string()) throw SchemaError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

void reject_unknown(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw SchemaError(where + ": unknown field '" + key + "'");
}

FiberEntry fiber_from_json(const CartanType& t, const Json& j, const std::string& where) {
  reject_unknown(j, {"levi", "character", "d", "mult", "disamb"}, where);
  FiberEntry e;
  try {
    e.triple.levi = find_levi(t, require_string(j, "levi", where));
    e.triple.character = parse_relative_label(e.triple.levi, require_string(j, "character", where));
  } catch (const ParseError& err) {
    throw SchemaError(where + ": " + err.what());
  }
  const auto& d = require(j, "d", where);
  if (d.is_null()) {
    e.triple.d = std::nullopt;
  } else if (d.is_number_integer() && d.get<int>() >= 0) {
    e.triple.d = d.get<int>();
  } else {
    throw SchemaError(where + ": 'd' must be a nonnegative integer or null");
  }
  const auto& mult = require(j, "mult", where);
  if (!mult.is_number_integer() || mult.get<int>() < 1) throw SchemaError(where + ": 'mult' must be a positive integer");
  e.mult = mult.get<int>();
  if (j.contains("disamb")) {
    const auto& tag = j.at("disamb");
    if (!tag.is_string() || tag.get<std::string>().size() != 1)
      throw SchemaError(where + ": 'disamb' must be a one-letter string");
    e.disamb = tag.get<std::string>()[0];
  }
  return e;
}

StrataRow row_from_json(const CartanType& t, const Json& j, const std::string& where) {
  reject_unknown(j, {"stratum", "fiber", "groups", "boxed", "membership"}, where);
  StrataRow row;
  try {
    row.stratum = parse_label(t, require_string(j, "stratum", where));
  } catch (const ParseError& err) {
    throw SchemaError(where + ": " + err.what());
  }
  const auto& fiber = require(j, "fiber", where);
  if (!fiber.is_array() || fiber.empty()) throw SchemaError(where + ": 'fiber' must be a nonempty array");
  for (std::size_t i = 0; i < fiber.size(); ++i)
    row.fiber.push_back(fiber_from_json(t, fiber[i], where + ".fiber[" + std::to_string(i) + "]"));
  const auto& groups = require(j, "groups", where);
  if (!groups.is_object()) throw SchemaError(where + ": 'groups' must be an object");
  for (const auto& [key, value] : groups.items()) {
    if (key != "r0" && key != "r2" && key != "r3" && key != "r5")
      throw SchemaError(where + ": unknown group key '" + key + "'");
    if (!value.is_string()) throw SchemaError(where + ": group values must be strings");
    try {
      row.groups[std::stoi(key.substr(1))] = parse_group(value.get<std::string>());
    } catch (const ParseError& err) {
      throw SchemaError(where + ": " + err.what());
    }
  }
  const auto& boxed = require(j, "boxed", where);
  if (!boxed.is_array()) throw SchemaError(where + ": 'boxed' must be an array");
  for (const auto& b : boxed) {
    if (!b.is_string()) throw SchemaError(where + ": 'boxed' entries must be strings");
    const auto s = b.get<std::string>();
    if (s == "single") {
      row.boxed.single = true;
    } else if (s == "2" || s == "3" || s == "5") {
      row.boxed.primes.push_back(std::stoi(s));
    } else {
      throw SchemaError(where + ": invalid boxed flag '" + s + "'");
    }
  }
  if (row.boxed.single && !row.boxed.primes.empty())
    throw SchemaError(where + ": 'single' cannot be combined with primes");
  if (!std::is_sorted(row.boxed.primes.begin(), row.boxed.primes.end()))
    throw SchemaError(where + ": boxed primes must be ascending");
  row.membership = Membership::parse(require_string(j, "membership", where));
  return row;
}

}  // namespace

std::string table_to_json(const StrataTable& tab) {
  Json doc;
  doc["schema"] = "strata-table/1";
  doc["type"] = tab.type.name();
  doc["rows"] = Json::array();
  for (const auto& row : tab.rows) doc["rows"].push_back(row_to_json(row));
  return doc.dump(2) + "\n";
}

StrataTable table_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw SchemaError(std::string("malformed JSON: ") + err.what());
  }
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  reject_unknown(doc, {"schema", "type", "rows"}, "document");
  if (require_string(doc, "schema", "document") != "strata-table/1")
    throw SchemaError("unsupported schema '" + doc.at("schema").get<std::string>() + "'");
  StrataTable tab{CartanType::torus(0), {}};
  try {
    tab.type = CartanType::parse(require_string(doc, "type", "document"));
  } catch (const InvalidType& err) {
    throw SchemaError(std::string("document: ") + err.what());
  }
  const auto& rows = require(doc, "rows", "document");
  if (!rows.is_array()) throw SchemaError("document: 'rows' must be an array");
  for (std::size_t i = 0; i < rows.size(); ++i)
    tab.rows.push_back(row_from_json(tab.type, rows[i], "rows[" + std::to_string(i) + "]"));
  return tab;
}

// ---------------------------------------------------------------------------
// TableStore

const TableStore& TableStore::embedded() {
  static const TableStore store;
  return store;
}

namespace {

// First triple whose row differs between two placement-consistent tables.
std::optional<std::string> first_moved_triple(const StrataTable& expected, const StrataTable& got) {
  auto heads = [](const StrataTable& tab) {
    std::map<std::string, std::string> out;
    for (const auto& row : tab.rows)
      for (const auto& e : row.fiber) {
        SheafTriple t = e.triple;
        for (int i = 0; i < e.mult; ++i) {
          t.index = i;
          out[placement_key(t)] = row.stratum.str();
        }
      }
    return out;
  };
  const auto want = heads(expected);
  const auto have = heads(got);
  for (const auto& t : enumerate_cs_prime(expected.type)) {
    const auto key = placement_key(t);
    auto w = want.find(key);
    auto h = have.find(key);
    if (w == want.end() || h == have.end()) return "triple " + t.str() + " is not placed";
    if (w->second != h->second)
      return "triple " + t.str() + " is placed in row " + h->second + " but belongs to row " + w->second;
  }
  return std::nullopt;
}

}  // namespace

void TableStore::register_table(const StrataTable& tab) {
  if (tab.type.is_torus()) throw SchemaError("tables for tori are fixed and cannot be registered");
  for (const auto& row : tab.rows) {
    const auto& head = row.fiber.front().triple;
    if (!head.levi.is_empty() || head.character != row.stratum || row.fiber.front().mult != 1)
      throw SchemaError("row " + row.stratum.str() + " must start with its own (empty, E) entry");
  }
  if (auto bad = placement_mismatch(tab)) throw PlacementMismatch(tab.type.name() + ": " + *bad);
  if (has_embedded_table(tab.type)) {
    const auto& ref = table(tab.type);
    if (auto moved = first_moved_triple(ref, tab)) throw PlacementMismatch(tab.type.name() + ": " + *moved);
    if (!(ref == tab)) {
      for (std::size_t i = 0; i < std::max(ref.rows.size(), tab.rows.size()); ++i) {
        if (i >= ref.rows.size() || i >= tab.rows.size() || !(ref.rows[i] == tab.rows[i])) {
          const std::string head = i < tab.rows.size() ? tab.rows[i].stratum.str() : ref.rows[i].stratum.str();
          throw PlacementMismatch(tab.type.name() + ": row " + std::to_string(i) + " (" + head +
                                  ") differs from the embedded table");
        }
      }
    }
    return;  // checked, not installed
  }
  external_[tab.type] = std::make_shared<const StrataTable>(tab);
}

void TableStore::register_json(std::string_view text) { register_table(table_from_json(text)); }

void TableStore::register_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("table directory '" + dir + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      register_json(buf.str());
    } catch (const PlacementMismatch& err) {
      throw PlacementMismatch(path.string() + ": " + err.what());
    } catch (const SchemaError& err) {
      throw SchemaError(path.string() + ": " + err.what());
    }
  }
}

const StrataTable* TableStore::find(const CartanType& t) const {
  if (auto it = external_.find(t); it != external_.end()) return it->second.get();
  if (has_embedded_table(t)) return &table(t);
  return nullptr;
}

const StrataTable& TableStore::get(const CartanType& t) const {
  if (const auto* tab = find(t)) return *tab;
  throw NoTableAvailable("no table available for " + t.name() + "; register one with --tables or register");
}

std::vector<CartanType> TableStore::registered_types() const {
  std::vector<CartanType> out;
  for (const auto& [t, _] : external_) out.push_back(t);
  return out;
}

namespace detail {

std::vector<std::string> embedded_empty_entries(const CartanType& t) {
  std::vector<std::string> out;
  for (const auto& line : table_lines(embedded_table_text(t))) {
    const auto bar = line.find(" | ");
    for (const auto& text : split(std::string_view(line).substr(0, bar), " ; "))
      if (!text.empty() && text.front() != '(') out.push_back(text);
  }
  return out;
}

}  // namespace detail

}  // namespace strata
