#include "strata/weyl_char.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>

#include "strata/error.hpp"
#include "strata/springer_data.hpp"

namespace strata {

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

long long partition_count(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

// Accepts "2,1,1", "211", "21^2", "1^3", "0" and "" (the last two empty).
Partition parse_partition(std::string_view text) {
  std::string s = strip(text);
  Partition out;
  if (s.empty() || s == "0" || s == "-") return out;
  if (s.find(',') != std::string::npos) {
    std::size_t pos = 0;
    for (;;) {
      std::size_t next = s.find(',', pos);
      out.push_back(to_int(std::string_view(s).substr(pos, next == std::string::npos ? next : next - pos)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("malformed partition '" + s + "'");
      int part = s[i] - '0';
      int times = 1;
      if (i + 1 < s.size() && s[i + 1] == '^') {
        std::size_t j = i + 2;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        times = to_int(std::string_view(s).substr(i + 2, j - i - 2));
        i = j - 1;
      }
      out.insert(out.end(), times, part);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] <= 0 || (i > 0 && out[i] > out[i - 1]))
      throw ParseError("partition parts must be positive and weakly decreasing: '" + s + "'");
  }
  return out;
}

CharacterLabel CharacterLabel::dpair(Partition a, Partition b, SplitTag tag) {
  if (a < b) std::swap(a, b);
  int sa = 0;
  int sb = 0;
  for (int x : a) sa += x;
  for (int x : b) sb += x;
  if (sa < sb || (sa == sb && a < b)) std::swap(a, b);
  if ((a == b) != (tag != SplitTag::None))
    throw ParseError("split tag is required exactly for symmetric pairs");
  return {DPairLabel{std::move(a), std::move(b), tag}};
}

CharacterLabel CharacterLabel::named(std::string name) {
  NamedLabel n{std::move(name), std::nullopt, std::nullopt};
  auto us = n.name.find('_');
  if (us != std::string::npos && us > 0 &&
      std::all_of(n.name.begin(), n.name.begin() + us, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      us + 1 < n.name.size() &&
      std::all_of(n.name.begin() + us + 1, n.name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    n.dim = to_int(std::string_view(n.name).substr(0, us));
    n.b = to_int(std::string_view(n.name).substr(us + 1));
  }
  return {std::move(n)};
}

namespace {

struct Formatter {
  std::string operator()(const TrivialLabel&) const { return "1"; }
  std::string operator()(const PartitionLabel& p) const { return "(" + format_partition(p.parts) + ")"; }
  std::string operator()(const BipartitionLabel& p) const {
    return "(" + format_partition(p.alpha) + "|" + format_partition(p.beta) + ")";
  }
  std::string operator()(const DPairLabel& p) const {
    std::string s = "{" + format_partition(p.alpha) + "|" + format_partition(p.beta) + "}";
    if (p.split == SplitTag::I) s += ":I";
    if (p.split == SplitTag::II) s += ":II";
    return s;
  }
  std::string operator()(const NamedLabel& n) const { return n.name; }
};

int weight(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

IrrRegistry build_registry(const CartanType& t) {
  IrrRegistry reg{t, {}};
  const int n = t.rank();
  switch (t.series()) {
    case Series::Torus:
      reg.labels.push_back(CharacterLabel::trivial());
      break;
    case Series::A:
      for (auto& p : partitions(n + 1)) reg.labels.push_back(CharacterLabel::partition(p));
      break;
    case Series::B:
    case Series::C:
      for (int a = n; a >= 0; --a)
        for (auto& alpha : partitions(a))
          for (auto& beta : partitions(n - a)) reg.labels.push_back(CharacterLabel::bipartition(alpha, beta));
      break;
    case Series::D:
      for (int a = n; 2 * a >= n; --a) {
        for (auto& alpha : partitions(a)) {
          for (auto& beta : partitions(n - a)) {
            if (2 * a == n && alpha < beta) continue;
            if (alpha == beta) {
              reg.labels.push_back(CharacterLabel::dpair(alpha, beta, SplitTag::I));
              reg.labels.push_back(CharacterLabel::dpair(alpha, beta, SplitTag::II));
            } else {
              reg.labels.push_back(CharacterLabel::dpair(alpha, beta));
            }
          }
        }
      }
      break;
    case Series::E:
    case Series::F:
    case Series::G:
      for (const auto& name : detail::embedded_empty_entries(t)) reg.labels.push_back(CharacterLabel::named(name));
      break;
  }
  return reg;
}

}  // namespace

std::string CharacterLabel::str() const { return std::visit(Formatter{}, value_); }

bool IrrRegistry::contains(const CharacterLabel& label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

const IrrRegistry& enumerate_irr(const CartanType& t) {
  static std::mutex mutex;
  static std::map<CartanType, IrrRegistry> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  IrrRegistry reg = build_registry(t);
  std::lock_guard lock(mutex);
  return cache.emplace(t, std::move(reg)).first->second;
}

std::size_t irr_count(const CartanType& t) { return enumerate_irr(t).size(); }

std::optional<CharacterLabel> relative_alias(const CartanType& t, std::string_view text) {
  const std::string s = strip(text);
  if (t.series() == Series::A && t.rank() == 1) {
    if (s == "1") return CharacterLabel::partition({2});
    if (s == "eps") return CharacterLabel::partition({1, 1});
  }
  if (t.series() == Series::A && t.rank() == 2) {
    if (s == "1") return CharacterLabel::partition({3});
    if (s == "phi") return CharacterLabel::partition({2, 1});
    if (s == "eps") return CharacterLabel::partition({1, 1, 1});
  }
  if ((t.series() == Series::B || t.series() == Series::C) && t.rank() == 2) {
    if (s == "1") return CharacterLabel::bipartition({2}, {});
    if (s == "eps") return CharacterLabel::bipartition({}, {1, 1});
    if (s == "theta") return CharacterLabel::bipartition({1}, {1});
    if (s == "eps_l") return CharacterLabel::bipartition({1, 1}, {});
    if (s == "eps_c") return CharacterLabel::bipartition({}, {2});
  }
  return std::nullopt;
}

CharacterLabel parse_label(const CartanType& t, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty character label");
  switch (t.series()) {
    case Series::Torus:
      if (s == "1" || s == "triv") return CharacterLabel::trivial();
      throw ParseError("a torus has only the trivial label '1'");
    case Series::A: {
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected '(parts)' for type A, got '" + s + "'");
      Partition p = parse_partition(std::string_view(s).substr(1, s.size() - 2));
      if (weight(p) != t.rank() + 1) throw ParseError("partition '" + s + "' has the wrong size for " + t.name());
      return CharacterLabel::partition(p);
    }
    case Series::B:
    case Series::C: {
      auto bar = s.find('|');
      if (s.size() < 3 || s.front() != '(' || s.back() != ')' || bar == std::string::npos)
        throw ParseError("expected '(alpha|beta)' for type " + t.name() + ", got '" + s + "'");
      Partition a = parse_partition(std::string_view(s).substr(1, bar - 1));
      Partition b = parse_partition(std::string_view(s).substr(bar + 1, s.size() - bar - 2));
      if (weight(a) + weight(b) != t.rank()) throw ParseError("bipartition '" + s + "' has the wrong size");
      return CharacterLabel::bipartition(a, b);
    }
    case Series::D: {
      auto close = s.find('}');
      auto bar = s.find('|');
      if (s.front() != '{' || close == std::string::npos || bar == std::string::npos || bar > close)
        throw ParseError("expected '{alpha|beta}[:I|:II]' for type " + t.name() + ", got '" + s + "'");
      Partition a = parse_partition(std::string_view(s).substr(1, bar - 1));
      Partition b = parse_partition(std::string_view(s).substr(bar + 1, close - bar - 1));
      if (weight(a) + weight(b) != t.rank()) throw ParseError("pair '" + s + "' has the wrong size");
      std::string tail = s.substr(close + 1);
      SplitTag tag = SplitTag::None;
      if (tail == ":I") tag = SplitTag::I;
      else if (tail == ":II") tag = SplitTag::II;
      else if (!tail.empty()) throw ParseError("unknown split tag '" + tail + "'");
      if (a == b && tag == SplitTag::None) throw ParseError("symmetric pair '" + s + "' needs a split tag :I or :II");
      return CharacterLabel::dpair(a, b, tag);
    }
    case Series::E:
    case Series::F:
    case Series::G: {
      const auto& reg = enumerate_irr(t);
      std::string name = s;
      // chi_4 is accepted for chi_{4}
      if (t.series() == Series::F && name.rfind("chi_", 0) == 0 && name.size() > 4 && name[4] != '{')
        name = "chi_{" + name.substr(4) + "}";
      if (t.series() == Series::E) {
        // 4480_{16} is accepted for 4480_16
        auto lb = name.find("_{");
        if (lb != std::string::npos && name.back() == '}')
          name = name.substr(0, lb + 1) + name.substr(lb + 2, name.size() - lb - 3);
      }
      CharacterLabel label = CharacterLabel::named(name);
      if (!reg.contains(label)) throw ParseError("unknown character '" + s + "' for " + t.name());
      return label;
    }
  }
  throw ParseError("unsupported type");
}

}  // namespace strata
