#include "strata/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "strata/error.hpp"
#include "strata/strata_map.hpp"

namespace strata {

namespace {

using Json = nlohmann::ordered_json;

CheckResult pass(std::string id, std::string detail) { return {std::move(id), CheckStatus::Pass, std::move(detail)}; }
CheckResult fail(std::string id, std::string detail) { return {std::move(id), CheckStatus::Fail, std::move(detail)}; }
CheckResult skipped(std::string id, const CartanType& t) {
  return {std::move(id), CheckStatus::Skipped, "no table available for " + t.name()};
}

CheckResult check_placement(const StrataTable& tab) {
  const std::string id = "triple-placement";
  if (auto bad = placement_mismatch(tab)) return fail(id, *bad);
  const auto expected = enumerate_cs_prime(tab.type).size();
  return pass(id, "totals " + std::to_string(tab.total_entries()) + " = " + std::to_string(expected));
}

CheckResult check_retraction(const StrataTable& tab) {
  const std::string id = "retraction";
  std::map<std::string, std::size_t> head_row;
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    const auto& row = tab.rows[i];
    if (!head_row.emplace(row.stratum.str(), i).second) return fail(id, "row head " + row.stratum.str() + " repeats");
    const auto& first = row.fiber.front();
    if (!first.triple.levi.is_empty() || first.triple.character != row.stratum || first.mult != 1)
      return fail(id, "row " + row.stratum.str() + " does not start with its own empty-Levi entry");
  }
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    for (const auto& e : tab.rows[i].fiber) {
      if (!e.triple.levi.is_empty()) continue;
      auto it = head_row.find(e.triple.character.str());
      if (it != head_row.end() && it->second != i)
        return fail(id, "head " + e.triple.character.str() + " also sits in row " + tab.rows[i].stratum.str());
    }
  }
  return pass(id, std::to_string(tab.rows.size()) + " distinct heads, each first in its own row");
}

CheckResult check_completeness(const StrataTable& tab) {
  const std::string id = "empty-entry-completeness";
  std::vector<CharacterLabel> seen;
  for (const auto& row : tab.rows)
    for (const auto& e : row.fiber)
      if (e.triple.levi.is_empty()) {
        if (std::find(seen.begin(), seen.end(), e.triple.character) != seen.end())
          return fail(id, "empty-Levi entry " + e.triple.character.str() + " occurs twice");
        seen.push_back(e.triple.character);
      }
  const auto& irr = enumerate_irr(tab.type);
  for (const auto& e : seen)
    if (!irr.contains(e)) return fail(id, e.str() + " is not in Irr(W)");
  for (const auto& e : irr.labels)
    if (std::find(seen.begin(), seen.end(), e) == seen.end()) return fail(id, e.str() + " has no empty-Levi entry");
  return pass(id, std::to_string(seen.size()) + " empty-Levi entries = |Irr(W)| = " + std::to_string(irr.size()));
}

CheckResult check_boxed(const StrataTable& tab) {
  const std::string id = "boxed-recomputation";
  const auto bad = tab.type.is_torus() ? std::vector<int>{} : datum(tab.type).bad_primes;
  int full_rows = 0;
  for (const auto& row : tab.rows) {
    if (!row.membership.full) {
      if (row.groups.size() != 1 || !row.groups.count(row.membership.r0))
        return fail(id, "row " + row.stratum.str() + " has groups outside its only characteristic");
      if (row.boxed.single || row.boxed.primes != std::vector<int>{row.membership.r0})
        return fail(id, "row " + row.stratum.str() + " must box exactly its only characteristic");
      continue;
    }
    ++full_rows;
    const auto a0 = component_group(row, 0);
    if (!a0) return fail(id, "full row " + row.stratum.str() + " lacks A_0");
    std::vector<int> deviation;
    for (int r : {2, 3, 5}) {
      auto g = component_group(row, r);
      if (!g) return fail(id, "full row " + row.stratum.str() + " lacks A_" + std::to_string(r));
      if (*g != *a0) deviation.push_back(r);
    }
    const Boxed expected = deviation.empty() ? Boxed{true, {}} : Boxed{false, deviation};
    if (!(expected == row.boxed))
      return fail(id, "row " + row.stratum.str() + ": deviation set {" + expected.str() + "} but boxed {" +
                          row.boxed.str() + "}");
    for (int r : deviation)
      if (std::find(bad.begin(), bad.end(), r) == bad.end())
        return fail(id, "row " + row.stratum.str() + " deviates at " + std::to_string(r) + ", not a bad prime");
  }
  return pass(id, std::to_string(full_rows) + " full rows match; deviations within bad primes");
}

CheckResult check_cstar(const TableStore& store, const CartanType& t) {
  const std::string id = "fiber-cstar-rows";
  int fibers = 0;
  int cstars = 0;
  const auto witness = fiber_cstar_witness(store, t);
  for (const auto& w : witness) {
    if (w.fiber_size != w.cstar_size)
      return fail(id, "row " + w.stratum.str() + ": fiber " + std::to_string(w.fiber_size) + " vs c* " +
                          std::to_string(w.cstar_size));
    fibers += w.fiber_size;
    cstars += w.cstar_size;
  }
  return pass(id, std::to_string(witness.size()) + " rows equal; totals " + std::to_string(fibers) + " = " +
                      std::to_string(cstars));
}

CheckResult check_regular(const TableStore& store, const CartanType& t) {
  const std::string id = "regular-fiber-count";
  const auto unit = unit_stratum(t);
  const auto& tab = resolve_table(store, t);
  if (!tab.find_row(unit)) return fail(id, "no row headed by " + unit.str());
  const auto size = tab.row(unit).fiber_size();
  const auto expected = regular_fiber_labels(t).size();
  const std::string detail = unit.str() + " fiber " + std::to_string(size) + ", roots of unity " + std::to_string(expected);
  return static_cast<std::size_t>(size) == expected ? pass(id, detail) : fail(id, detail);
}

CheckResult check_centralizers(const CartanType& t) {
  const std::string id = "centralizer-profiles";
  if (t.is_torus()) return pass(id, "torus: no profiles");
  const auto counts = n_table(t);
  const auto profiles = centralizer_profiles(t);
  for (const auto& p : profiles) {
    for (const auto& e : p.entries)
      if (e.type && !is_pseudo_levi(t, *e.type))
        return fail(id, e.type->name() + " is not a pseudo-Levi type of " + t.name());
    if (p.total() != counts.count(p.d))
      return fail(id, "d = " + format_delta(p.d) + ", class " + p.characteristic_class() + ": counts sum to " +
                          std::to_string(p.total()) + ", N_d = " + std::to_string(counts.count(p.d)));
  }
  for (const auto& [d, n] : counts.counts) {
    bool generic = std::any_of(profiles.begin(), profiles.end(), [&](const auto& p) { return p.d == d && p.generic(); });
    if (!generic) return fail(id, "no generic profile for d = " + format_delta(d));
  }
  if (profiles.empty()) return pass(id, "no cuspidal objects");
  return pass(id, std::to_string(profiles.size()) + " profiles, all types pseudo-Levi, sums match N_d");
}

CheckResult check_groups() {
  const std::string id = "group-inventories";
  for (GroupTag tag : kAllGroupTags) {
    const auto& info = group_info(tag);
    const auto elements = group_elements(tag);
    if (static_cast<int>(elements.size()) != info.order)
      return fail(id, info.name + ": " + std::to_string(elements.size()) + " elements, order " + std::to_string(info.order));
    const int classes = conjugacy_class_count(elements);
    if (classes != static_cast<int>(info.irreps.size()))
      return fail(id, info.name + ": " + std::to_string(classes) + " classes, " + std::to_string(info.irreps.size()) +
                          " irreps");
  }
  return pass(id, std::to_string(kAllGroupTags.size()) + " groups: irreps = conjugacy classes");
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "triple-placement",  "retraction",           "empty-entry-completeness", "boxed-recomputation",
      "fiber-cstar-rows",  "regular-fiber-count",  "centralizer-profiles",     "group-inventories"};
  return ids;
}

bool VerificationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult& VerificationReport::check(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw Error("no check '" + std::string(id) + "' in report");
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  out << "type " << type.name() << "\n";
  for (const auto& c : checks) out << c.id << ": " << status_name(c.status) << "  (" << c.detail << ")\n";
  for (const auto& e : errata) out << "erratum " << e.id << ": " << e.detail << "\n";
  return out.str();
}

std::string VerificationReport::json() const {
  Json doc;
  doc["schema"] = "verification-report/1";
  doc["type"] = type.name();
  doc["ok"] = ok();
  doc["checks"] = Json::array();
  for (const auto& c : checks)
    doc["checks"].push_back(Json{{"id", c.id}, {"status", status_name(c.status)}, {"detail", c.detail}});
  doc["errata"] = Json::array();
  for (const auto& e : errata) doc["errata"].push_back(Json{{"id", e.id}, {"detail", e.detail}});
  return doc.dump(2) + "\n";
}

VerificationReport run_all(const TableStore& store, const CartanType& t) {
  VerificationReport report;
  report.type = t;
  report.errata = errata(t);
  const StrataTable* tab = store.find(t);
  if (!tab && has_identity_table(t)) tab = &resolve_table(store, t);

  auto guarded = [&](const std::string& id, auto&& fn) {
    try {
      report.checks.push_back(fn());
    } catch (const Error& err) {
      report.checks.push_back(fail(id, err.what()));
    }
  };
  const auto& ids = check_ids();
  if (tab) {
    guarded(ids[0], [&] { return check_placement(*tab); });
    guarded(ids[1], [&] { return check_retraction(*tab); });
    guarded(ids[2], [&] { return check_completeness(*tab); });
    guarded(ids[3], [&] { return check_boxed(*tab); });
    guarded(ids[4], [&] { return check_cstar(store, t); });
    guarded(ids[5], [&] { return check_regular(store, t); });
  } else {
    for (int i = 0; i < 6; ++i) report.checks.push_back(skipped(ids[i], t));
  }
  guarded(ids[6], [&] { return check_centralizers(t); });
  guarded(ids[7], [&] { return check_groups(); });
  return report;
}

std::vector<CartanType> verification_targets(const TableStore& store) {
  std::vector<CartanType> out = {CartanType::make(Series::G, 2), CartanType::make(Series::F, 4),
                                 CartanType::make(Series::E, 6), CartanType::make(Series::E, 7),
                                 CartanType::make(Series::E, 8)};
  for (const auto& t : store.registered_types())
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  return out;
}

std::string export_document(const TableStore& store, const CartanType& t, std::string_view what) {
  if (what == "table") {
    if (const auto* tab = store.find(t)) return table_to_json(*tab);
    throw NoTableAvailable("no table available for " + t.name());
  }
  if (what == "triples") {
    Json doc;
    doc["schema"] = "cs-triples/1";
    doc["type"] = t.name();
    const auto triples = enumerate_cs_prime(t);
    doc["count"] = triples.size();
    doc["triples"] = Json::array();
    for (const auto& s : triples) {
      Json j;
      j["levi"] = s.levi.name();
      j["character"] = s.character.str();
      if (s.d)
        j["d"] = *s.d;
      else
        j["d"] = nullptr;
      j["index"] = s.index;
      doc["triples"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
  }
  if (what == "strata") {
    const auto& tab = resolve_table(store, t);
    Json doc;
    doc["schema"] = "strata-list/1";
    doc["type"] = t.name();
    doc["count"] = tab.rows.size();
    doc["strata"] = Json::array();
    for (const auto& row : tab.rows) doc["strata"].push_back(row.stratum.str());
    return doc.dump(2) + "\n";
  }
  if (what == "report") return run_all(store, t).json();
  throw Error("unknown export kind '" + std::string(what) + "'; expected table, triples, strata or report");
}

}  // namespace strata
