// strata: command-line front end for the strata library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or data error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "strata/cartan.hpp"
#include "strata/cuspidal.hpp"
#include "strata/error.hpp"
#include "strata/springer_data.hpp"
#include "strata/strata_map.hpp"
#include "strata/verify.hpp"
#include "strata/weyl_char.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace strata;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  std::string tables_dir;
  std::string type;
  std::string stratum;
  std::string levi;
  std::string character;
  std::string d;
  int index = 0;
  bool expand = false;
  std::optional<int> char_class;
  std::string what;
  std::string out;
  std::string in;
  std::string subsystem;
};

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Json delta_json(const Delta& d) { return d ? Json(*d) : Json(nullptr); }

Delta parse_delta(const std::string& text) {
  if (text == "opaque" || text == "null") return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("invalid d '" + text + "'; expected a non-negative integer or 'opaque'");
}

std::string join_groups(const StrataRow& row) {
  std::vector<std::string> parts;
  for (int r : {0, 2, 3, 5}) {
    auto g = component_group(row, r);
    parts.push_back(fmt::format("r{}={}", r, g ? group_name(*g) : "-"));
  }
  return fmt::format("{}", fmt::join(parts, " "));
}

Json triple_json(const SheafTriple& s) {
  return Json{{"levi", s.levi.name()},
              {"character", s.character.str()},
              {"d", delta_json(s.d)},
              {"index", s.index}};
}

// ---------------------------------------------------------------------------

int cmd_info(const Options& o, const TableStore& store) {
  const auto t = CartanType::parse(o.type);
  const auto dat = datum(t);
  const auto n = n_table(t);
  const auto levis = cuspidal_levis(t);
  if (o.json) {
    Json doc{{"type", t.name()},
             {"rank", t.rank()},
             {"weyl_order", dat.weyl_order.str()},
             {"degrees", dat.degrees},
             {"bad_primes", dat.bad_primes},
             {"highest_root", dat.highest_root_coeffs},
             {"coxeter_number", dat.coxeter_number()},
             {"z", dat.z_value},
             {"irr_count", irr_count(t)},
             {"cs_prime_count", enumerate_cs_prime(t).size()}};
    Json counts = Json::array();
    for (const auto& [d, c] : n.counts) counts.push_back(Json{{"d", delta_json(d)}, {"count", c}});
    doc["cuspidal_counts"] = counts;
    Json lv = Json::array();
    for (const auto& l : levis)
      lv.push_back(Json{{"levi", l.name()}, {"relative", l.relative ? l.relative->name() : "1"}});
    doc["cuspidal_levis"] = lv;
    doc["table"] = store.has(t) ? "available" : has_identity_table(t) ? "identity" : "none";
    emit(doc);
    return kExitOk;
  }
  fmt::print("type            {}\n", t.name());
  fmt::print("rank            {}\n", t.rank());
  fmt::print("|W|             {}\n", dat.weyl_order.str());
  fmt::print("degrees         {}\n", fmt::join(dat.degrees, " "));
  fmt::print("bad primes      {}\n", dat.bad_primes.empty() ? "none" : fmt::format("{}", fmt::join(dat.bad_primes, " ")));
  fmt::print("highest root    {}\n", fmt::join(dat.highest_root_coeffs, " "));
  fmt::print("coxeter number  {}\n", dat.coxeter_number());
  fmt::print("z               {}\n", dat.z_value);
  fmt::print("|Irr(W)|        {}\n", irr_count(t));
  fmt::print("|CS'|           {}\n", enumerate_cs_prime(t).size());
  std::vector<std::string> counts;
  for (const auto& [d, c] : n.counts) counts.push_back(fmt::format("N_{}={}", format_delta(d), c));
  fmt::print("cuspidal        {}\n", counts.empty() ? "none" : fmt::format("{}", fmt::join(counts, " ")));
  std::vector<std::string> names;
  for (const auto& l : levis) names.push_back(l.name());
  fmt::print("cuspidal levis  {}\n", fmt::join(names, " "));
  fmt::print("table           {}\n", store.has(t) ? "available" : has_identity_table(t) ? "identity" : "none");
  return kExitOk;
}

int cmd_strata(const Options& o, const TableStore& store) {
  const auto t = CartanType::parse(o.type);
  const auto& tab = resolve_table(store, t);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& row : tab.rows) {
      Json groups = Json::object();
      for (int r : {0, 2, 3, 5}) {
        auto g = component_group(row, r);
        groups["r" + std::to_string(r)] = g ? Json(group_name(*g)) : Json(nullptr);
      }
      rows.push_back(Json{{"stratum", row.stratum.str()},
                          {"fiber_size", row.fiber_size()},
                          {"groups", groups},
                          {"boxed", row.boxed.str()},
                          {"membership", row.membership.str()},
                          {"c", c_collection(row).str()}});
    }
    emit(Json{{"type", t.name()}, {"count", tab.rows.size()}, {"strata", rows}});
    return kExitOk;
  }
  fmt::print("{:<12} {:>5}  {:<32} {:<8} {:<12} {}\n", "stratum", "fiber", "groups", "boxed", "membership", "c(E)");
  for (const auto& row : tab.rows)
    fmt::print("{:<12} {:>5}  {:<32} {:<8} {:<12} {}\n", row.stratum.str(), row.fiber_size(), join_groups(row),
               row.boxed.str(), row.membership.str(), c_collection(row).str());
  fmt::print("{} strata\n", tab.rows.size());
  return kExitOk;
}

int cmd_fiber(const Options& o, const TableStore& store) {
  const auto t = CartanType::parse(o.type);
  const auto E = parse_label(t, o.stratum);
  const auto entries = fiber(store, t, E, o.expand);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& [s, mult] : entries) {
      Json j = triple_json(s);
      if (!o.expand) j.erase("index");
      if (!o.expand) j["mult"] = mult;
      arr.push_back(std::move(j));
    }
    emit(Json{{"type", t.name()}, {"stratum", E.str()}, {"fiber", arr}});
    return kExitOk;
  }
  int size = 0;
  for (const auto& [s, mult] : entries) {
    if (o.expand)
      fmt::print("{}\n", s.str());
    else
      fmt::print("{}{}\n", SheafTriple{s.levi, s.character, s.d, 0}.str(), mult > 1 ? fmt::format(" x{}", mult) : "");
    size += mult;
  }
  fmt::print("|fiber| = {}\n", size);
  return kExitOk;
}

int cmd_tau(const Options& o, const TableStore& store) {
  const auto t = CartanType::parse(o.type);
  const auto levi = find_levi(t, o.levi);
  const auto ch = parse_relative_label(levi, o.character);
  Delta d;
  if (!o.d.empty()) {
    d = parse_delta(o.d);
  } else {
    // Default to the only d carried by this Levi, if there is just one.
    std::vector<Delta> seen;
    for (const auto& s : enumerate_cs_prime(t))
      if (s.levi == levi && std::find(seen.begin(), seen.end(), s.d) == seen.end()) seen.push_back(s.d);
    if (seen.size() != 1) throw ParseError("levi " + levi.name() + " carries several values of d; pass --d");
    d = seen.front();
  }
  const SheafTriple triple{levi, ch, d, o.index};
  const auto E = tau(store, t, triple);
  if (o.json)
    emit(Json{{"type", t.name()}, {"triple", triple_json(triple)}, {"stratum", E.str()}});
  else
    fmt::print("{} -> {}\n", triple.str(), E.str());
  return kExitOk;
}

int cmd_cstar(const Options& o, const TableStore& store) {
  const auto t = CartanType::parse(o.type);
  const auto E = parse_label(t, o.stratum);
  const auto& row = resolve_table(store, t).row(E);
  const auto c = c_collection(row);
  const auto elements = c_star(row);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& e : elements)
      arr.push_back(Json{{"group", group_name(e.group)}, {"irrep", e.irrep}, {"origin", e.origin}});
    emit(Json{{"type", t.name()},
              {"stratum", E.str()},
              {"c", c.str()},
              {"size", elements.size()},
              {"fiber_size", row.fiber_size()},
              {"elements", arr}});
    return kExitOk;
  }
  fmt::print("c(E) = {}\n", c.str());
  for (const auto& e : elements) fmt::print("  {}\n", e.str());
  fmt::print("|c(E)*| = {}, |fiber| = {}\n", elements.size(), row.fiber_size());
  return kExitOk;
}

int cmd_triples(const Options& o, const TableStore& store) {
  const auto t = CartanType::parse(o.type);
  const auto triples = enumerate_cs_prime(t);
  const bool placed = store.has(t) || has_identity_table(t);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& s : triples) {
      Json j = triple_json(s);
      if (placed) j["stratum"] = tau(store, t, s).str();
      arr.push_back(std::move(j));
    }
    emit(Json{{"type", t.name()}, {"count", triples.size()}, {"triples", arr}});
    return kExitOk;
  }
  for (const auto& s : triples) {
    if (placed)
      fmt::print("{:<32} -> {}\n", s.str(), tau(store, t, s).str());
    else
      fmt::print("{}\n", s.str());
  }
  fmt::print("{} triples\n", triples.size());
  return kExitOk;
}

int cmd_centralizers(const Options& o, const TableStore&) {
  const auto t = CartanType::parse(o.type);
  std::vector<CentralizerProfile> profiles;
  if (o.char_class) {
    auto all = centralizer_profiles(t);
    std::vector<Delta> ds;
    for (const auto& p : all)
      if (std::find(ds.begin(), ds.end(), p.d) == ds.end()) ds.push_back(p.d);
    for (const auto& d : ds)
      if (o.d.empty() || parse_delta(o.d) == d) profiles.push_back(centralizer_profile(t, d, *o.char_class));
    if (profiles.empty()) throw NoData("no centralizer data for " + t.name() + " with d = " + o.d);
  } else {
    for (auto& p : centralizer_profiles(t))
      if (o.d.empty() || parse_delta(o.d) == p.d) profiles.push_back(std::move(p));
  }
  if (o.json) {
    Json arr = Json::array();
    for (const auto& p : profiles) {
      Json entries = Json::array();
      for (const auto& e : p.entries) entries.push_back(Json{{"type", e.name()}, {"count", e.count}});
      Json j{{"d", delta_json(p.d)}, {"characteristic", p.characteristic_class()}, {"entries", entries},
             {"total", p.total()}};
      if (!p.note.empty()) j["note"] = p.note;
      arr.push_back(std::move(j));
    }
    emit(Json{{"type", t.name()}, {"profiles", arr}});
    return kExitOk;
  }
  if (profiles.empty()) fmt::print("no cuspidal objects for {}\n", t.name());
  for (const auto& p : profiles) {
    std::vector<std::string> parts;
    for (const auto& e : p.entries) parts.push_back(e.count > 1 ? fmt::format("{} x{}", e.name(), e.count) : e.name());
    fmt::print("d={:<7} r={:<8} {}  (total {})\n", format_delta(p.d), p.characteristic_class(), fmt::join(parts, ", "),
               p.total());
    if (!p.note.empty()) fmt::print("  note: {}\n", p.note);
  }
  return kExitOk;
}

int cmd_pseudo_levi(const Options& o, const TableStore&) {
  const auto t = CartanType::parse(o.type);
  if (!o.subsystem.empty()) {
    const auto s = SubsystemType::parse(o.subsystem);
    const bool yes = is_pseudo_levi(t, s);
    if (o.json)
      emit(Json{{"type", t.name()}, {"subsystem", s.name()}, {"pseudo_levi", yes}});
    else
      fmt::print("{} in {}: {}\n", s.name(), t.name(), yes ? "pseudo-Levi" : "not pseudo-Levi");
    return kExitOk;
  }
  const auto& types = pseudo_levi_types(t);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& s : types) arr.push_back(s.name());
    emit(Json{{"type", t.name()}, {"count", types.size()}, {"pseudo_levi", arr}});
    return kExitOk;
  }
  for (const auto& s : types) fmt::print("{}\n", s.name());
  fmt::print("{} pseudo-Levi types\n", types.size());
  return kExitOk;
}

int cmd_verify(const Options& o, const TableStore& store) {
  std::vector<CartanType> targets;
  if (o.type == "all")
    targets = verification_targets(store);
  else
    targets.push_back(CartanType::parse(o.type));

  // Each run reads only immutable data, so the types can be checked in parallel.
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& t : targets)
    jobs.push_back(std::async(std::launch::async, [&store, t] { return run_all(store, t); }));
  std::vector<VerificationReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (o.json) {
    if (reports.size() == 1) {
      std::cout << reports.front().json();
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(Json::parse(r.json()));
      emit(Json{{"schema", "verification-batch/1"}, {"ok", ok}, {"reports", arr}});
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << reports[i].text();
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const Options& o, const TableStore& store) {
  const auto t = CartanType::parse(o.type);
  const std::string doc = export_document(store, t, o.what);
  if (o.out.empty()) {
    std::cout << doc;
    return kExitOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write " + o.out);
  f << doc;
  if (!f) throw Error("write to " + o.out + " failed");
  return kExitOk;
}

int cmd_register(const Options& o, TableStore& store) {
  std::vector<std::string> accepted;
  if (std::filesystem::is_directory(o.in)) {
    store.register_directory(o.in);
    for (const auto& t : store.registered_types()) accepted.push_back(t.name());
  } else {
    std::ifstream f(o.in, std::ios::binary);
    if (!f) throw Error("cannot read " + o.in);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    const auto tab = table_from_json(text);
    store.register_table(tab);
    accepted.push_back(tab.type.name());
  }
  if (o.json)
    emit(Json{{"status", "accepted"}, {"types", accepted}});
  else
    fmt::print("accepted: {}\n", accepted.empty() ? "no tables" : fmt::format("{}", fmt::join(accepted, " ")));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strata of reductive groups: tables, the map tau and its verification."};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit canonical JSON instead of text");
  app.add_option("--tables", o.tables_dir, "Directory of strata-table/1 documents to register at startup")
      ->envname("STRATA_TABLES_DIR");

  auto* info = app.add_subcommand("info", "Root datum, counts and cuspidal data of a type");
  info->add_option("TYPE", o.type)->required();

  auto* strata = app.add_subcommand("strata", "List the strata with their group data");
  strata->add_option("TYPE", o.type)->required();

  auto* fib = app.add_subcommand("fiber", "Triples mapped to a stratum");
  fib->add_option("TYPE", o.type)->required();
  fib->add_option("--stratum", o.stratum, "Stratum label")->required();
  fib->add_flag("--expand", o.expand, "One line per index instead of multiplicities");

  auto* ta = app.add_subcommand("tau", "Stratum of a triple (J, E', d, index)");
  ta->add_option("TYPE", o.type)->required();
  ta->add_option("--levi", o.levi, "Cuspidal Levi, e.g. empty, D4, E6")->required();
  ta->add_option("--char", o.character, "Character of the relative Weyl group")->required();
  ta->add_option("--d", o.d, "Invariant d, or 'opaque'");
  ta->add_option("--index", o.index, "Index among the N_d cuspidal objects")->check(CLI::NonNegativeNumber);

  auto* cs = app.add_subcommand("cstar", "c(E) and c(E)* of a stratum");
  cs->add_option("TYPE", o.type)->required();
  cs->add_option("--stratum", o.stratum, "Stratum label")->required();

  auto* tr = app.add_subcommand("triples", "Enumerate CS' and place every triple");
  tr->add_option("TYPE", o.type)->required();

  auto* cz = app.add_subcommand("centralizers", "Centralizer profiles of the cuspidal objects");
  cz->add_option("TYPE", o.type)->required();
  cz->add_option("--d", o.d, "Restrict to one value of d");
  cz->add_option("--char-class", o.char_class, "Characteristic (0 or a prime) to resolve");

  auto* pl = app.add_subcommand("pseudo-levi", "Pseudo-Levi subsystem types");
  pl->add_option("TYPE", o.type)->required();
  pl->add_option("--check", o.subsystem, "Test one subsystem, e.g. A5xA2xA1");

  auto* ve = app.add_subcommand("verify", "Run the verification suite");
  ve->add_option("TYPE", o.type, "A type or 'all'")->required();

  auto* ex = app.add_subcommand("export", "Export a canonical JSON document");
  ex->add_option("TYPE", o.type)->required();
  ex->add_option("--what", o.what, "table, triples, strata or report")
      ->required()
      ->check(CLI::IsMember({"table", "triples", "strata", "report"}));
  ex->add_option("--out", o.out, "Output path; stdout by default");

  auto* reg = app.add_subcommand("register", "Validate and register an external table file or directory");
  reg->add_option("--in", o.in, "strata-table/1 file or directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    TableStore store;
    if (!o.tables_dir.empty()) store.register_directory(o.tables_dir);

    if (*info) return cmd_info(o, store);
    if (*strata) return cmd_strata(o, store);
    if (*fib) return cmd_fiber(o, store);
    if (*ta) return cmd_tau(o, store);
    if (*cs) return cmd_cstar(o, store);
    if (*tr) return cmd_triples(o, store);
    if (*cz) return cmd_centralizers(o, store);
    if (*pl) return cmd_pseudo_levi(o, store);
    if (*ve) return cmd_verify(o, store);
    if (*ex) return cmd_export(o, store);
    if (*reg) return cmd_register(o, store);
  } catch (const strata::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
