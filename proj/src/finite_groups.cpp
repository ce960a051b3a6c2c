#include "strata/finite_groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "strata/error.hpp"

namespace strata {

namespace {

std::vector<std::string> cyclic_irreps(int m) {
  std::vector<std::string> out{"1"};
  for (int k = 1; k < m; ++k) out.push_back(k == 1 ? "z" : "z^" + std::to_string(k));
  return out;
}

std::vector<GroupInfo> build_infos() {
  std::vector<GroupInfo> v;
  v.push_back({GroupTag::Triv, "Triv", 1, {"1"}});
  v.push_back({GroupTag::C2, "C2", 2, cyclic_irreps(2)});
  v.push_back({GroupTag::C3, "C3", 3, cyclic_irreps(3)});
  v.push_back({GroupTag::C4, "C4", 4, cyclic_irreps(4)});
  v.push_back({GroupTag::C5, "C5", 5, cyclic_irreps(5)});
  v.push_back({GroupTag::C6, "C6", 6, cyclic_irreps(6)});
  v.push_back({GroupTag::C2xC2, "C2xC2", 4, {"(1,1)", "(1,z)", "(z,1)", "(z,z)"}});
  v.push_back({GroupTag::C2xC3, "C2xC3", 6, {"(1,1)", "(1,z)", "(1,z^2)", "(z,1)", "(z,z)", "(z,z^2)"}});
  v.push_back({GroupTag::S3, "S3", 6, {"[3]", "[21]", "[111]"}});
  v.push_back({GroupTag::S4, "S4", 24, {"[4]", "[31]", "[22]", "[211]", "[1111]"}});
  v.push_back({GroupTag::S5, "S5", 120, {"[5]", "[41]", "[32]", "[311]", "[221]", "[2111]", "[11111]"}});
  v.push_back({GroupTag::D8, "D8", 8, {"1", "eps_a", "eps_b", "eps_c", "rho"}});
  v.push_back({GroupTag::S3xC2, "S3xC2", 12, {"([3],1)", "([21],1)", "([111],1)", "([3],z)", "([21],z)", "([111],z)"}});
  return v;
}

const std::vector<GroupInfo>& infos() {
  static const std::vector<GroupInfo> v = build_infos();
  return v;
}

Permutation cycle(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles) {
    std::vector<int> pts(c);
    for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  }
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a*b)(x) = a(b(x))
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

Permutation inverse(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<int>(x);
  return out;
}

std::vector<Permutation> generators(GroupTag tag) {
  switch (tag) {
    case GroupTag::Triv: return {cycle(1, {})};
    case GroupTag::C2: return {cycle(2, {{0, 1}})};
    case GroupTag::C3: return {cycle(3, {{0, 1, 2}})};
    case GroupTag::C4: return {cycle(4, {{0, 1, 2, 3}})};
    case GroupTag::C5: return {cycle(5, {{0, 1, 2, 3, 4}})};
    case GroupTag::C6: return {cycle(6, {{0, 1, 2, 3, 4, 5}})};
    case GroupTag::C2xC2: return {cycle(4, {{0, 1}}), cycle(4, {{2, 3}})};
    case GroupTag::C2xC3: return {cycle(5, {{0, 1}}), cycle(5, {{2, 3, 4}})};
    case GroupTag::S3: return {cycle(3, {{0, 1}}), cycle(3, {{0, 1, 2}})};
    case GroupTag::S4: return {cycle(4, {{0, 1}}), cycle(4, {{0, 1, 2, 3}})};
    case GroupTag::S5: return {cycle(5, {{0, 1}}), cycle(5, {{0, 1, 2, 3, 4}})};
    case GroupTag::D8: return {cycle(4, {{0, 1, 2, 3}}), cycle(4, {{0, 2}})};
    case GroupTag::S3xC2: return {cycle(5, {{0, 1}}), cycle(5, {{0, 1, 2}}), cycle(5, {{3, 4}})};
  }
  return {};
}

}  // namespace

const GroupInfo& group_info(GroupTag tag) { return infos().at(static_cast<std::size_t>(tag)); }

std::string group_name(GroupTag tag) { return group_info(tag).name; }

GroupTag parse_group(std::string_view text) {
  if (text == "1") return GroupTag::Triv;
  if (text == "S2") return GroupTag::C2;
  for (const auto& g : infos())
    if (g.name == text) return g.tag;
  throw ParseError("unknown finite group '" + std::string(text) + "'");
}

std::vector<std::string> pullback_irreps(GroupTag group, GroupTag quotient) {
  const auto& irr = group_info(group).irreps;
  if (quotient == GroupTag::Triv) return {irr.front()};
  if (quotient == group) return irr;
  using P = std::pair<GroupTag, GroupTag>;
  static const std::map<P, std::vector<std::string>> table = {
      {{GroupTag::C2xC3, GroupTag::C2}, {"(1,1)", "(z,1)"}},
      {{GroupTag::C2xC3, GroupTag::C3}, {"(1,1)", "(1,z)", "(1,z^2)"}},
      {{GroupTag::C4, GroupTag::C2}, {"1", "z^2"}},
      {{GroupTag::C6, GroupTag::C2}, {"1", "z^3"}},
      {{GroupTag::C6, GroupTag::C3}, {"1", "z^2", "z^4"}},
      {{GroupTag::S3, GroupTag::C2}, {"[3]", "[111]"}},
      {{GroupTag::S4, GroupTag::C2}, {"[4]", "[1111]"}},
      {{GroupTag::S4, GroupTag::S3}, {"[4]", "[22]", "[1111]"}},
      {{GroupTag::S5, GroupTag::C2}, {"[5]", "[11111]"}},
      {{GroupTag::S3xC2, GroupTag::S3}, {"([3],1)", "([21],1)", "([111],1)"}},
  };
  auto it = table.find({group, quotient});
  if (it == table.end())
    throw Error("no unique surjection " + group_name(group) + " -> " + group_name(quotient) + " is tabulated");
  return it->second;
}

std::vector<std::string> faithful_cyclic_irreps(int m) {
  if (m == 1) return {"1"};
  std::vector<std::string> out;
  for (int k = 1; k < m; ++k)
    if (std::gcd(k, m) == 1) out.push_back(k == 1 ? "z" : "z^" + std::to_string(k));
  return out;
}

std::vector<Permutation> group_elements(GroupTag tag) {
  auto gens = generators(tag);
  Permutation id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> work{id};
  while (!work.empty()) {
    Permutation g = work.back();
    work.pop_back();
    for (const auto& s : gens) {
      Permutation h = compose(s, g);
      if (seen.insert(h).second) work.push_back(h);
    }
  }
  return {seen.begin(), seen.end()};
}

int conjugacy_class_count(const std::vector<Permutation>& elements) {
  std::set<Permutation> assigned;
  int classes = 0;
  for (const auto& x : elements) {
    if (assigned.count(x)) continue;
    ++classes;
    for (const auto& g : elements) assigned.insert(compose(compose(g, x), inverse(g)));
  }
  return classes;
}

}  // namespace strata
