#include "strata/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <queue>

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

std::optional<Series> series_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
    case 'T': return Series::Torus;
    default: return std::nullopt;
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::E: return 'E';
    case Series::F: return 'F';
    case Series::G: return 'G';
    case Series::Torus: return 'T';
  }
  return '?';
}

bool CartanType::is_canonical(Series series, int rank) {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
    case Series::Torus: return rank >= 0;
  }
  return false;
}

CartanType CartanType::make(Series series, int rank) {
  if (!is_canonical(series, rank)) {
    throw InvalidType("not a canonical Cartan type: " + std::string(1, series_letter(series)) +
                      std::to_string(rank));
  }
  return CartanType(series, rank);
}

CartanType CartanType::parse(std::string_view text) {
  std::string s = trim(text);
  std::string lower;
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "torus" || lower == "t") return torus(0);
  if (s.empty()) throw InvalidType("empty Cartan type");
  auto series = series_from_letter(s[0]);
  if (!series) throw InvalidType("unknown series in '" + s + "'");
  std::string_view digits(s);
  digits.remove_prefix(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  if (!digits.empty() && digits.front() == '{' && digits.back() == '}') {
    digits.remove_prefix(1);
    digits.remove_suffix(1);
  }
  int rank = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidType("malformed Cartan type '" + s + "'");
  }
  return make(*series, rank);
}

bool CartanType::is_exceptional() const {
  return series_ == Series::E || series_ == Series::F || series_ == Series::G;
}

bool CartanType::is_classical() const {
  return series_ == Series::B || series_ == Series::C || series_ == Series::D;
}

std::string CartanType::name() const {
  return std::string(1, series_letter(series_)) + std::to_string(rank_);
}

// ---------------------------------------------------------------------------
// Diagrams

int Diagram::multiplicity(int a, int b) const {
  for (const auto& e : edges)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.multiplicity;
  return 0;
}

std::vector<std::vector<int>> Diagram::adjacency() const {
  std::vector<std::vector<int>> adj(lengths.size());
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

namespace {

Diagram chain(std::vector<int> lengths) {
  Diagram d;
  d.lengths = std::move(lengths);
  return d;
}

void link(Diagram& d, int a, int b, int m = 1) { d.edges.push_back({a, b, m}); }

}  // namespace

Diagram extended_diagram(const CartanType& t) {
  const int n = t.rank();
  switch (t.series()) {
    case Series::A: {
      Diagram d = chain(std::vector<int>(n + 1, 1));
      if (n == 1) {
        link(d, 0, 1, 4);
        return d;
      }
      for (int i = 1; i < n; ++i) link(d, i, i + 1);
      link(d, 0, 1);
      link(d, 0, n);
      return d;
    }
    case Series::B: {
      Diagram d = chain(std::vector<int>(n + 1, 2));
      d.lengths[n] = 1;
      if (n == 2) {
        // same shape as affine C_2: 0 = 2 = 1
        link(d, 0, 2, 2);
        link(d, 1, 2, 2);
        return d;
      }
      for (int i = 1; i < n - 1; ++i) link(d, i, i + 1);
      link(d, n - 1, n, 2);
      link(d, 0, 2);
      return d;
    }
    case Series::C: {
      Diagram d = chain(std::vector<int>(n + 1, 1));
      d.lengths[0] = 2;
      d.lengths[n] = 2;
      link(d, 0, 1, 2);
      for (int i = 1; i < n - 1; ++i) link(d, i, i + 1);
      link(d, n - 1, n, 2);
      return d;
    }
    case Series::D: {
      Diagram d = chain(std::vector<int>(n + 1, 1));
      for (int i = 1; i < n - 1; ++i) link(d, i, i + 1);
      link(d, n - 2, n);
      link(d, 0, 2);
      return d;
    }
    case Series::E: {
      Diagram d = chain(std::vector<int>(n + 1, 1));
      link(d, 1, 3);
      link(d, 2, 4);
      for (int i = 3; i < n; ++i) link(d, i, i + 1);
      if (n == 6) link(d, 0, 2);
      if (n == 7) link(d, 0, 1);
      if (n == 8) link(d, 0, 8);
      return d;
    }
    case Series::F: {
      Diagram d = chain({2, 2, 2, 1, 1});
      link(d, 0, 1);
      link(d, 1, 2);
      link(d, 2, 3, 2);
      link(d, 3, 4);
      return d;
    }
    case Series::G: {
      Diagram d = chain({3, 1, 3});
      link(d, 1, 2, 3);
      link(d, 0, 2);
      return d;
    }
    case Series::Torus:
      return {};
  }
  return {};
}

Diagram dynkin_diagram(const CartanType& t) {
  Diagram ext = extended_diagram(t);
  if (ext.size() == 0) return ext;
  Diagram d;
  d.lengths.assign(ext.lengths.begin() + 1, ext.lengths.end());
  for (const auto& e : ext.edges)
    if (e.a != 0 && e.b != 0) d.edges.push_back({e.a - 1, e.b - 1, e.multiplicity});
  return d;
}

std::vector<std::vector<int>> cartan_matrix(const Diagram& d) {
  const int n = d.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& e : d.edges) {
    if (e.multiplicity > 3) throw InvalidType("affine bond has no finite Cartan matrix");
    auto entry = [&](int i, int j) { return d.lengths[i] >= d.lengths[j] ? -1 : -e.multiplicity; };
    c[e.a][e.b] = entry(e.a, e.b);
    c[e.b][e.a] = entry(e.b, e.a);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Static data

int CartanDatum::coxeter_number() const {
  return degrees.empty() ? 1 : *std::max_element(degrees.begin(), degrees.end());
}

CartanDatum datum(const CartanType& t) {
  CartanDatum out{t, 1, {}, {}, {}, 1, extended_diagram(t)};
  const int n = t.rank();
  switch (t.series()) {
    case Series::A:
      for (int i = 2; i <= n + 1; ++i) out.degrees.push_back(i);
      out.highest_root_coeffs.assign(n, 1);
      break;
    case Series::B:
      for (int i = 1; i <= n; ++i) out.degrees.push_back(2 * i);
      out.highest_root_coeffs.assign(n, 2);
      out.highest_root_coeffs[0] = 1;
      break;
    case Series::C:
      for (int i = 1; i <= n; ++i) out.degrees.push_back(2 * i);
      out.highest_root_coeffs.assign(n, 2);
      out.highest_root_coeffs[n - 1] = 1;
      break;
    case Series::D:
      for (int i = 1; i < n; ++i) out.degrees.push_back(2 * i);
      out.degrees.push_back(n);
      out.highest_root_coeffs.assign(n, 2);
      out.highest_root_coeffs[0] = 1;
      out.highest_root_coeffs[n - 2] = 1;
      out.highest_root_coeffs[n - 1] = 1;
      break;
    case Series::E:
      if (n == 6) {
        out.degrees = {2, 5, 6, 8, 9, 12};
        out.highest_root_coeffs = {1, 2, 2, 3, 2, 1};
      } else if (n == 7) {
        out.degrees = {2, 6, 8, 10, 12, 14, 18};
        out.highest_root_coeffs = {2, 2, 3, 4, 3, 2, 1};
      } else {
        out.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
        out.highest_root_coeffs = {2, 3, 4, 6, 5, 4, 3, 2};
      }
      break;
    case Series::F:
      out.degrees = {2, 6, 8, 12};
      out.highest_root_coeffs = {2, 3, 4, 2};
      break;
    case Series::G:
      out.degrees = {2, 6};
      out.highest_root_coeffs = {3, 2};
      break;
    case Series::Torus:
      break;
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  for (int deg : out.degrees) out.weyl_order *= deg;
  std::set<int> bad;
  for (int c : out.highest_root_coeffs) {
    out.z_value = std::max(out.z_value, c);
    for (int p = 2; p <= c; ++p)
      if (c % p == 0 && is_prime(p)) bad.insert(p);
  }
  out.bad_primes.assign(bad.begin(), bad.end());
  return out;
}

// ---------------------------------------------------------------------------
// Subsystem types

SubsystemType::SubsystemType(std::vector<CartanType> f) : factors_(std::move(f)) {
  std::sort(factors_.begin(), factors_.end(), [](const CartanType& a, const CartanType& b) {
    if (a.rank() != b.rank()) return a.rank() > b.rank();
    return a.series() > b.series();
  });
}

SubsystemType SubsystemType::from_factors(const std::vector<std::pair<Series, int>>& raw) {
  std::vector<CartanType> out;
  for (auto [s, r] : raw) {
    if (r <= 0 || s == Series::Torus) continue;
    if ((s == Series::B || s == Series::C) && r == 1) {
      out.push_back(CartanType::make(Series::A, 1));
    } else if (s == Series::C && r == 2) {
      out.push_back(CartanType::make(Series::B, 2));
    } else if (s == Series::D && r == 1) {
      continue;
    } else if (s == Series::D && r == 2) {
      out.push_back(CartanType::make(Series::A, 1));
      out.push_back(CartanType::make(Series::A, 1));
    } else if (s == Series::D && r == 3) {
      out.push_back(CartanType::make(Series::A, 3));
    } else {
      out.push_back(CartanType::make(s, r));
    }
  }
  return SubsystemType(std::move(out));
}

SubsystemType SubsystemType::of(const CartanType& t) {
  return from_factors({{t.series(), t.rank()}});
}

SubsystemType SubsystemType::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "1" || s == "empty") return {};
  std::vector<std::pair<Series, int>> raw;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find_first_of("x*", pos);
    std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.empty()) throw ParseError("malformed subsystem type '" + std::string(text) + "'");
    auto series = series_from_letter(part[0]);
    std::string digits = part.substr(1);
    if (!digits.empty() && digits[0] == '_') digits.erase(0, 1);
    int rank = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (!series || *series == Series::Torus || digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw ParseError("malformed subsystem factor '" + part + "'");
    }
    raw.emplace_back(*series, rank);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return from_factors(raw);
}

int SubsystemType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

std::string SubsystemType::name() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "x";
    out += f.name();
  }
  return out;
}

SubsystemType SubsystemType::combined(const SubsystemType& other) const {
  std::vector<CartanType> f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return SubsystemType(std::move(f));
}

SubsystemType SubsystemType::replaced(std::size_t index, const SubsystemType& replacement) const {
  std::vector<CartanType> f;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (i != index) f.push_back(factors_[i]);
  f.insert(f.end(), replacement.factors_.begin(), replacement.factors_.end());
  return SubsystemType(std::move(f));
}

// ---------------------------------------------------------------------------
// Component classification

namespace {

std::pair<Series, int> classify_component(const Diagram& d, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {Series::A, 1};
  std::vector<int> degree(n, 0);
  int max_mult = 0;
  int edge_count = 0;
  int du = -1;
  int dv = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int m = d.multiplicity(nodes[i], nodes[j]);
      if (m == 0) continue;
      ++edge_count;
      ++degree[i];
      ++degree[j];
      if (m >= 2) {
        du = i;
        dv = j;
      }
      max_mult = std::max(max_mult, m);
    }
  }
  if (max_mult >= 4 || edge_count != n - 1) {
    throw InvalidType("subdiagram component is not of finite type");
  }
  if (max_mult == 3) return {Series::G, 2};
  if (max_mult == 2) {
    if (n == 2) return {Series::B, 2};
    if (degree[du] == 2 && degree[dv] == 2) return {Series::F, 4};
    int end = degree[du] == 1 ? du : dv;
    int inner = end == du ? dv : du;
    bool short_end = d.lengths[nodes[end]] < d.lengths[nodes[inner]];
    return {short_end ? Series::B : Series::C, n};
  }
  int branch = -1;
  for (int i = 0; i < n; ++i)
    if (degree[i] >= 3) branch = i;
  if (branch < 0) return {Series::A, n};
  // arm lengths from the branch node
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    if (start == branch || d.multiplicity(nodes[branch], nodes[start]) == 0) continue;
    int len = 1;
    int prev = branch;
    int cur = start;
    for (;;) {
      int nxt = -1;
      for (int k = 0; k < n; ++k)
        if (k != prev && k != cur && d.multiplicity(nodes[cur], nodes[k]) != 0) nxt = k;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw InvalidType("subdiagram component is not of finite type");
  if (arms[0] == 1 && arms[1] == 1) return {Series::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {Series::E, n};
  throw InvalidType("subdiagram component is not of finite type");
}

}  // namespace

SubsystemType classify_subdiagram(const Diagram& d, const std::vector<bool>& keep) {
  auto adj = d.adjacency();
  std::vector<bool> seen(d.size(), false);
  std::vector<std::pair<Series, int>> raw;
  for (int s = 0; s < d.size(); ++s) {
    if (!keep[s] || seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : adj[v])
        if (keep[w] && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    raw.push_back(classify_component(d, comp));
  }
  return SubsystemType::from_factors(raw);
}

}  // namespace strata
