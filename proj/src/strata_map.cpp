#include "strata/strata_map.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "strata/error.hpp"

namespace strata {

namespace {

StrataTable identity_table(const CartanType& t) {
  StrataTable tab{t, {}};
  const auto empty = cuspidal_levis(t).front();
  for (const auto& e : enumerate_irr(t).labels) {
    StrataRow row;
    row.stratum = e;
    row.fiber.push_back({SheafTriple{empty, e, 0, 0}, 1, std::nullopt});
    row.groups = {{0, GroupTag::Triv}, {2, GroupTag::Triv}, {3, GroupTag::Triv}};
    row.boxed.single = true;
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

}  // namespace

bool has_identity_table(const CartanType& t) { return t.is_torus() || t.series() == Series::A; }

const StrataTable& resolve_table(const TableStore& store, const CartanType& t) {
  if (const auto* tab = store.find(t)) return *tab;
  if (!has_identity_table(t)) return store.get(t);
  static std::mutex mutex;
  static std::map<CartanType, std::unique_ptr<const StrataTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, std::make_unique<const StrataTable>(identity_table(t))).first;
  return *it->second;
}

CharacterLabel unit_stratum(const CartanType& t) {
  const int n = t.rank();
  switch (t.series()) {
    case Series::Torus: return CharacterLabel::trivial();
    case Series::A: return CharacterLabel::partition({n + 1});
    case Series::B:
    case Series::C: return CharacterLabel::bipartition({n}, {});
    case Series::D: return CharacterLabel::dpair({n}, {});
    case Series::G: return CharacterLabel::named("1");
    case Series::F: return CharacterLabel::named("chi_{1,1}");
    case Series::E: return CharacterLabel::named("1_0");
  }
  return CharacterLabel::trivial();
}

CharacterLabel tau(const TableStore& store, const CartanType& t, const SheafTriple& triple) {
  const auto& tab = resolve_table(store, t);
  const std::string key = placement_key(triple);
  for (const auto& row : tab.rows) {
    for (const auto& e : row.fiber) {
      SheafTriple probe = e.triple;
      for (int i = 0; i < e.mult; ++i) {
        probe.index = i;
        if (placement_key(probe) == key) return row.stratum;
      }
    }
  }
  throw TripleNotFound("triple " + triple.str() + " does not occur in the table of " + t.name());
}

CharacterLabel tau(const CartanType& t, const SheafTriple& triple) { return tau(TableStore::embedded(), t, triple); }

std::vector<std::pair<SheafTriple, int>> fiber(const TableStore& store, const CartanType& t,
                                               const CharacterLabel& E, bool expand) {
  const auto& row = resolve_table(store, t).row(E);
  std::vector<std::pair<SheafTriple, int>> out;
  for (const auto& e : row.fiber) {
    if (!expand) {
      out.emplace_back(e.triple, e.mult);
      continue;
    }
    SheafTriple s = e.triple;
    for (int i = 0; i < e.mult; ++i) {
      s.index = i;
      out.emplace_back(s, 1);
    }
  }
  return out;
}

std::string CCollection::str() const {
  std::string s = kind == Kind::Single ? "Single(" : kind == Kind::Pair ? "Pair(" : "Triple(";
  for (std::size_t i = 0; i < groups.size(); ++i) s += (i ? "," : "") + group_name(groups[i]);
  return s + ")";
}

std::string CStarElement::str() const { return group_name(group) + ":" + irrep + " [" + origin + "]"; }

std::string RootOfUnityLabel::str() const {
  return "mu_" + std::to_string(m) + (k == 1 ? std::string() : "^" + std::to_string(k));
}

CCollection c_collection(const StrataRow& row) {
  if (!row.membership.full) {
    auto g = component_group(row, row.membership.r0);
    if (!g) throw Error("row " + row.stratum.str() + " has no group at its only characteristic");
    return {CCollection::Kind::Single, {*g}};
  }
  const GroupTag a0 = *component_group(row, 0);
  std::vector<GroupTag> deviating;
  for (int r : {2, 3, 5}) {
    auto g = component_group(row, r);
    if (g && *g != a0) deviating.push_back(*g);
  }
  switch (deviating.size()) {
    case 0: return {CCollection::Kind::Single, {a0}};
    case 1: return {CCollection::Kind::Single, deviating};
    case 2: return {CCollection::Kind::Pair, deviating};
    default: return {CCollection::Kind::Triple, deviating};
  }
}

CCollection c_collection(const TableStore& store, const CartanType& t, const CharacterLabel& E) {
  return c_collection(resolve_table(store, t).row(E));
}

std::vector<CStarElement> c_star(const StrataRow& row) {
  const CCollection c = c_collection(row);
  std::vector<CStarElement> out;
  switch (c.kind) {
    case CCollection::Kind::Single:
      for (const auto& irr : group_info(c.groups[0]).irreps) out.push_back({c.groups[0], irr, "gamma"});
      break;
    case CCollection::Kind::Pair: {
      const GroupTag g = c.groups[0];
      const GroupTag g1 = c.groups[1];
      for (const auto& irr : group_info(g).irreps) out.push_back({g, irr, "gamma"});
      const auto pulled = pullback_irreps(g1, *component_group(row, 0));
      for (const auto& irr : group_info(g1).irreps)
        if (std::find(pulled.begin(), pulled.end(), irr) == pulled.end()) out.push_back({g1, irr, "gamma'"});
      break;
    }
    case CCollection::Kind::Triple: {
      static constexpr GroupTag kCyclic[] = {GroupTag::Triv, GroupTag::C2, GroupTag::C3,
                                             GroupTag::C4,   GroupTag::C5, GroupTag::C6};
      for (int m = 1; m <= 6; ++m)
        for (const auto& irr : faithful_cyclic_irreps(m))
          out.push_back({kCyclic[m - 1], irr, "mu_" + std::to_string(m)});
      break;
    }
  }
  return out;
}

std::vector<CStarElement> c_star(const TableStore& store, const CartanType& t, const CharacterLabel& E) {
  return c_star(resolve_table(store, t).row(E));
}

std::vector<WitnessRow> fiber_cstar_witness(const TableStore& store, const CartanType& t) {
  std::vector<WitnessRow> out;
  for (const auto& row : resolve_table(store, t).rows) {
    WitnessRow w;
    w.stratum = row.stratum;
    const auto triples = fiber(store, t, row.stratum, true);
    const auto elements = c_star(row);
    w.fiber_size = static_cast<int>(triples.size());
    w.cstar_size = static_cast<int>(elements.size());
    if (w.fiber_size == w.cstar_size)
      for (std::size_t i = 0; i < triples.size(); ++i) w.pairing.push_back({triples[i].first, elements[i]});
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<RootOfUnityLabel> regular_fiber_labels(const CartanType& t) {
  const int z = t.is_torus() ? 1 : datum(t).z_value;
  std::vector<RootOfUnityLabel> out;
  for (int m = 1; m <= z; ++m)
    for (int k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) out.push_back({m, k});
  return out;
}

}  // namespace strata
