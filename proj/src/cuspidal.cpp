#include "strata/cuspidal.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "strata/error.hpp"
#include "strata/springer_data.hpp"

namespace strata {

namespace {

CuspidalLevi levi_of(const CartanType& ambient, std::optional<CartanType> levi,
                     std::optional<CartanType> relative) {
  return CuspidalLevi{ambient, std::move(levi), std::move(relative)};
}

// Relative Weyl group B_m of a classical cuspidal Levi; B_1 is written A_1.
std::optional<CartanType> relative_b(int m) {
  if (m == 0) return std::nullopt;
  if (m == 1) return CartanType::make(Series::A, 1);
  return CartanType::make(Series::B, m);
}

std::string lower_no_space(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_')
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

std::string format_delta(const Delta& d) { return d ? std::to_string(*d) : std::string("opaque"); }

bool CuspidalLevi::is_full() const { return levi.has_value() && *levi == ambient; }

std::string CuspidalLevi::name() const { return levi ? levi->name() : std::string("empty"); }

const std::vector<CharacterLabel>& relative_irr(const CuspidalLevi& levi) {
  if (levi.is_empty()) return enumerate_irr(levi.ambient).labels;
  if (!levi.relative) return enumerate_irr(CartanType::torus(0)).labels;
  return enumerate_irr(*levi.relative).labels;
}

int CuspidalCountTable::total() const {
  int s = 0;
  for (const auto& [d, n] : counts) s += n;
  return s;
}

int CuspidalCountTable::count(const Delta& d) const {
  auto it = counts.find(d);
  return it == counts.end() ? 0 : it->second;
}

std::string SheafTriple::str() const {
  std::string s = "(" + levi.name() + "," + character.str() + "," + format_delta(d);
  if (index != 0) s += ",#" + std::to_string(index);
  return s + ")";
}

std::vector<CuspidalLevi> cuspidal_levis(const CartanType& t) {
  std::vector<CuspidalLevi> out;
  if (t.is_torus()) {
    out.push_back(levi_of(t, std::nullopt, std::nullopt));
    return out;
  }
  out.push_back(levi_of(t, std::nullopt, t));
  const int n = t.rank();
  auto make = [](Series s, int r) { return CartanType::make(s, r); };
  switch (t.series()) {
    case Series::A:
    case Series::Torus:
      break;
    case Series::B:
    case Series::C:
      for (int k = 1; k * (k + 1) <= n; ++k)
        out.push_back(levi_of(t, make(t.series(), k * (k + 1)), relative_b(n - k * (k + 1))));
      break;
    case Series::D:
      for (int k = 1; 4 * k * k <= n; ++k)
        out.push_back(levi_of(t, make(Series::D, 4 * k * k), relative_b(n - 4 * k * k)));
      break;
    case Series::G:
      out.push_back(levi_of(t, t, std::nullopt));
      break;
    case Series::F:
      out.push_back(levi_of(t, make(Series::B, 2), make(Series::B, 2)));
      out.push_back(levi_of(t, t, std::nullopt));
      break;
    case Series::E:
      if (n == 6) {
        out.push_back(levi_of(t, make(Series::D, 4), make(Series::A, 2)));
      } else if (n == 7) {
        out.push_back(levi_of(t, make(Series::D, 4), make(Series::B, 3)));
        out.push_back(levi_of(t, make(Series::E, 6), make(Series::A, 1)));
      } else {
        out.push_back(levi_of(t, make(Series::D, 4), make(Series::F, 4)));
        out.push_back(levi_of(t, make(Series::E, 6), make(Series::G, 2)));
        out.push_back(levi_of(t, make(Series::E, 7), make(Series::A, 1)));
      }
      out.push_back(levi_of(t, t, std::nullopt));
      break;
  }
  return out;
}

CuspidalCountTable n_table(const CartanType& t) {
  CuspidalCountTable tab{t, {}};
  const int n = t.rank();
  auto is_pronic = [](int m) {
    for (int k = 1; k * (k + 1) <= m; ++k)
      if (k * (k + 1) == m) return true;
    return false;
  };
  auto is_four_square = [](int m) {
    for (int k = 1; 4 * k * k <= m; ++k)
      if (4 * k * k == m) return true;
    return false;
  };
  switch (t.series()) {
    case Series::Torus: tab.counts = {{0, 1}}; break;
    case Series::A: break;
    case Series::B:
    case Series::C:
      if (is_pronic(n)) tab.counts = {{std::nullopt, 1}};
      break;
    case Series::D:
      if (is_four_square(n)) tab.counts = {{std::nullopt, 1}};
      break;
    case Series::G: tab.counts = {{1, 1}, {0, 3}}; break;
    case Series::F: tab.counts = {{4, 1}, {2, 1}, {1, 1}, {0, 4}}; break;
    case Series::E:
      if (n == 8)
        tab.counts = {{16, 1}, {7, 1}, {6, 1}, {3, 2}, {1, 2}, {0, 6}};
      else
        tab.counts = {{0, 2}};
      break;
  }
  return tab;
}

std::vector<SheafTriple> enumerate_cs_prime(const CartanType& t) {
  std::vector<SheafTriple> out;
  for (const auto& levi : cuspidal_levis(t)) {
    if (levi.is_empty() && !t.is_torus()) {
      for (const auto& e : enumerate_irr(t).labels) out.push_back({levi, e, 0, 0});
      continue;
    }
    const CartanType own = levi.levi ? *levi.levi : t;
    const auto counts = n_table(own);
    for (const auto& e : relative_irr(levi))
      for (const auto& [d, n] : counts.counts)
        for (int i = 0; i < n; ++i) out.push_back({levi, e, d, i});
  }
  return out;
}

CuspidalLevi find_levi(const CartanType& t, std::string_view name) {
  const std::string key = lower_no_space(name);
  for (const auto& levi : cuspidal_levis(t)) {
    if (levi.is_empty()) {
      if (key == "empty" || key == "0" || key == "1" || key == "emp" || key == "none") return levi;
      continue;
    }
    if (key == lower_no_space(levi.levi->name())) return levi;
    // "E*" names the full group in the E8 table
    if (levi.is_full() && t.series() == Series::E && key == "e*") return levi;
  }
  throw ParseError("'" + std::string(name) + "' is not a cuspidal Levi type of " + t.name());
}

CharacterLabel parse_relative_label(const CuspidalLevi& levi, std::string_view text) {
  if (levi.is_empty()) return parse_label(levi.ambient, text);
  if (!levi.relative) {
    std::string s = lower_no_space(text);
    if (s == "1" || s == "triv") return CharacterLabel::trivial();
    throw ParseError("the relative Weyl group of " + levi.name() + " is trivial; expected '1'");
  }
  if (auto alias = relative_alias(*levi.relative, text)) return *alias;
  return parse_label(*levi.relative, text);
}

std::string SupportCase::str() const {
  switch (kind) {
    case Kind::UniquePrime: return "unique-prime:" + std::to_string(r0);
    case Kind::AllCharacteristics: return "all-characteristics";
    case Kind::Torus: return "torus";
    case Kind::NoCharacteristic: return "no-characteristic";
    case Kind::Anomalous: return "anomalous";
  }
  return "?";
}

SupportCase support_case(const CartanType& t, const Delta& d) {
  if (n_table(t).count(d) == 0) throw NoData("no cuspidal objects with d = " + format_delta(d) + " for " + t.name());
  if (t.is_torus()) return {SupportCase::Kind::Torus, 0};

  auto all_full = [](const CentralizerProfile& p) {
    return std::all_of(p.entries.begin(), p.entries.end(), [](const auto& e) { return !e.type; });
  };
  std::vector<CentralizerProfile> profiles;
  for (auto& p : centralizer_profiles(t))
    if (p.d == d) profiles.push_back(std::move(p));

  bool every = !profiles.empty();
  std::vector<int> full_primes;
  for (const auto& p : profiles) {
    if (!all_full(p)) {
      every = false;
      continue;
    }
    if (!p.generic()) full_primes.insert(full_primes.end(), p.primes.begin(), p.primes.end());
  }
  if (every) return {SupportCase::Kind::AllCharacteristics, 0};
  if (full_primes.size() == 1) return {SupportCase::Kind::UniquePrime, full_primes.front()};
  // G2 with d = 0 has no such characteristic either, but is not among the
  // types for which that outcome is asserted.
  if (t.series() == Series::G) return {SupportCase::Kind::Anomalous, 0};
  return {SupportCase::Kind::NoCharacteristic, 0};
}

}  // namespace strata
