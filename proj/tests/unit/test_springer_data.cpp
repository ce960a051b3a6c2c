#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "strata/error.hpp"
#include "strata/springer_data.hpp"

using namespace strata;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data_path(const char* name) { return std::string(STRATA_TEST_DATA_DIR) + "/" + name; }

const char* const kExceptional[] = {"G2", "F4", "E6", "E7", "E8"};

CharacterLabel label(const char* type, const char* text) { return parse_label(CartanType::parse(type), text); }

std::map<std::string, int> profile_map(const CentralizerProfile& p) {
  std::map<std::string, int> out;
  for (const auto& e : p.entries) out[e.name()] += e.count;
  return out;
}

}  // namespace

TEST_SUITE("springer-data") {
  TEST_CASE("row counts") {
    CHECK(table(CartanType::parse("G2")).rows.size() == 6);
    CHECK(table(CartanType::parse("F4")).rows.size() == 20);
    CHECK(table(CartanType::parse("E6")).rows.size() == 21);
    CHECK(table(CartanType::parse("E7")).rows.size() == 46);
    CHECK(table(CartanType::parse("E8")).rows.size() == 75);
    CHECK_THROWS_AS(table(CartanType::parse("B3")), NoTableAvailable);
    CHECK_THROWS_AS(table(CartanType::parse("A3")), NoTableAvailable);
  }

  TEST_CASE("sample rows") {
    const auto& e6 = table(CartanType::parse("E6"));
    const auto& unit = e6.row(label("E6", "1_0"));
    REQUIRE(unit.fiber.size() == 3);
    CHECK(unit.fiber[0].triple.levi.is_empty());
    CHECK(unit.fiber[1].triple.str() == "(D4,(3),0)");
    CHECK(unit.fiber[2].triple.str() == "(E6,1,0)");
    CHECK(unit.fiber[2].mult == 2);
    CHECK(table(CartanType::parse("F4")).row(label("F4", "chi_{9,1}")).fiber_size() == 5);
    CHECK(table(CartanType::parse("E8")).row(label("E8", "4480_16")).fiber_size() == 7);
    CHECK(table(CartanType::parse("E8")).row(label("E8", "1_120")).fiber_size() == 1);
    CHECK_THROWS_AS(e6.row(label("E6", "15_17")), NotAStratum);
  }

  TEST_CASE("component groups") {
    const auto f4 = CartanType::parse("F4");
    CHECK(component_group(f4, label("F4", "chi_{12}"), 3) == GroupTag::S4);
    CHECK(component_group(f4, label("F4", "chi_{12}"), 2) == GroupTag::S3);
    CHECK(component_group(f4, label("F4", "chi_{12}"), 0) == GroupTag::S4);
    const auto e8 = CartanType::parse("E8");
    CHECK(component_group(e8, label("E8", "1_0"), 5) == GroupTag::C5);
    CHECK(component_group(e8, label("E8", "1_0"), 0) == GroupTag::Triv);
    CHECK(component_group(e8, label("E8", "4480_16"), 5) == GroupTag::S5);
    const auto g2 = CartanType::parse("G2");
    CHECK_FALSE(component_group(g2, label("G2", "eps_l"), 2).has_value());
    CHECK(component_group(g2, label("G2", "eps_l"), 3) == GroupTag::Triv);
    CHECK(component_group(g2, label("G2", "1"), 7) == GroupTag::Triv);
    CHECK_FALSE(component_group(g2, label("G2", "eps_l"), 7).has_value());
    CHECK_THROWS_AS(component_group(g2, label("G2", "1"), 4), Error);
  }

  TEST_CASE("row invariants") {
    for (const char* name : kExceptional) {
      const auto t = CartanType::parse(name);
      CAPTURE(name);
      for (const auto& row : table(t).rows) {
        CAPTURE(row.stratum.str());
        REQUIRE_FALSE(row.fiber.empty());
        CHECK(row.fiber[0].triple.levi.is_empty());
        CHECK(row.fiber[0].triple.character == row.stratum);
        CHECK(row.fiber[0].mult == 1);
        for (const auto& e : row.fiber) {
          if (e.triple.levi.is_empty()) {
            CHECK(e.mult == 1);
            continue;
          }
          // Classical Levis have one cuspidal object; their printed d is not an invariant.
          const auto& levi = *e.triple.levi.levi;
          CHECK(e.mult == n_table(levi).count(levi.is_classical() ? Delta{} : e.triple.d));
        }
        const bool is_unit_e8 = t.rank() == 8 && row.stratum.str() == "1_0";
        CHECK(row.groups.count(5) == (is_unit_e8 ? 1u : 0u));
        if (!row.membership.full) {
          CHECK(row.groups.size() == 1);
          CHECK(row.groups.count(row.membership.r0) == 1);
        } else {
          CHECK(row.groups.count(0) == 1);
        }
      }
      CHECK_FALSE(placement_mismatch(table(t)).has_value());
    }
  }

  TEST_CASE("duplicated labels carry disambiguators") {
    const auto& e7 = table(CartanType::parse("E7"));
    const auto& a = e7.row(label("E7", "21_3")).fiber.back();
    const auto& b = e7.row(label("E7", "1_0")).fiber[2];
    CHECK(a.disamb == 'a');
    CHECK(b.disamb == 'b');
    CHECK(a.triple.character != b.triple.character);
  }

  TEST_CASE("centralizer profiles") {
    const auto e8 = CartanType::parse("E8");
    CHECK(profile_map(centralizer_profile(e8, 0, 7)) == std::map<std::string, int>{{"A4xA4", 4}, {"A5xA2xA1", 2}});
    CHECK(profile_map(centralizer_profile(e8, 0, 2)) == std::map<std::string, int>{{"A4xA4", 4}, {"E6xA2", 2}});
    CHECK_FALSE(centralizer_profile(e8, 0, 2).note.empty());
    const auto f4 = CartanType::parse("F4");
    const auto p = centralizer_profile(f4, 1, 2);
    REQUIRE(p.entries.size() == 1);
    CHECK_FALSE(p.entries[0].type.has_value());
    CHECK(p.entries[0].count == 1);
    CHECK(centralizer_profile(CartanType::parse("E6"), 0, 3).entries[0].name() == "full");
    CHECK_THROWS_AS(centralizer_profile(e8, 2, 0), NoData);
  }

  TEST_CASE("centralizer profiles are pseudo-Levi and sum to N_d") {
    std::vector<CartanType> types;
    for (const char* name : kExceptional) types.push_back(CartanType::parse(name));
    for (const char* name : {"B2", "B6", "B12", "B20", "C2", "C6", "C12", "D4", "D16", "D36"})
      types.push_back(CartanType::parse(name));
    for (const auto& t : types) {
      CAPTURE(t.name());
      const auto profiles = centralizer_profiles(t);
      CHECK_FALSE(profiles.empty());
      const auto n = n_table(t);
      std::set<Delta> ds;
      for (const auto& p : profiles) {
        ds.insert(p.d);
        CHECK(p.total() == n.count(p.d));
        for (const auto& e : p.entries)
          if (e.type) CHECK(is_pseudo_levi(t, *e.type));
      }
      CHECK(ds.size() == n.counts.size());
    }
    CHECK(centralizer_profiles(CartanType::parse("B5")).empty());
  }

  TEST_CASE("errata") {
    auto ids = [](const char* type) {
      std::set<std::string> out;
      for (const auto& e : errata(CartanType::parse(type))) out.insert(e.id);
      return out;
    };
    CHECK(ids("E8").count("e8-missing-84_64") == 1);
    CHECK(ids("E8").count("e8-label-3200_32") == 1);
    CHECK(ids("E8").count("e8-label-160_3") == 1);
    CHECK(ids("E8").count("e8-label-79_32") == 1);
    CHECK(ids("E7").count("e7-duplicate-e6") == 1);
    CHECK(ids("G2").count("g2-d0-support") == 1);
    CHECK(ids("E6").empty());
  }

  TEST_CASE("JSON round trip is exact") {
    for (const char* name : kExceptional) {
      CAPTURE(name);
      const auto& tab = table(CartanType::parse(name));
      const auto text = table_to_json(tab);
      const auto back = table_from_json(text);
      CHECK(back == tab);
      CHECK(table_to_json(back) == text);
      CHECK(text.back() == '\n');
      CHECK(text.find('\r') == std::string::npos);
    }
  }

  TEST_CASE("schema violations") {
    const auto good = read_file(data_path("b3_table.json"));
    CHECK_NOTHROW(table_from_json(good));
    CHECK_THROWS_AS(table_from_json("{"), SchemaError);
    CHECK_THROWS_AS(table_from_json("[]"), SchemaError);
    auto replaced = [&](const std::string& from, const std::string& to) {
      std::string s = good;
      s.replace(s.find(from), from.size(), to);
      return s;
    };
    CHECK_THROWS_AS(table_from_json(replaced("strata-table/1", "strata-table/2")), SchemaError);
    CHECK_THROWS_AS(table_from_json(replaced("\"membership\": \"full\"", "\"membership\": \"most\"")), SchemaError);
    CHECK_THROWS_AS(table_from_json(replaced("\"mult\": 1", "\"mult\": 0")), SchemaError);
    CHECK_THROWS_AS(table_from_json(replaced("\"mult\": 1", "\"mult\": 1, \"extra\": 2")), SchemaError);
    CHECK_THROWS_AS(table_from_json(replaced("\"r2\"", "\"r7\"")), SchemaError);
    CHECK_THROWS_AS(table_from_json(replaced("\"Triv\"", "\"A5\"")), SchemaError);
    CHECK_THROWS_AS(table_from_json(replaced("\"(3|)\"", "\"(4|)\"")), SchemaError);
    CHECK_THROWS_AS(table_from_json(replaced("\"B3\"", "\"B1\"")), SchemaError);
  }
}

TEST_SUITE("table-store") {
  TEST_CASE("external B3 table is accepted") {
    TableStore store;
    CHECK_FALSE(store.has(CartanType::parse("B3")));
    store.register_json(read_file(data_path("b3_table.json")));
    REQUIRE(store.has(CartanType::parse("B3")));
    CHECK(store.get(CartanType::parse("B3")).total_entries() == 12);
    CHECK(store.registered_types() == std::vector<CartanType>{CartanType::parse("B3")});
    CHECK(table_to_json(store.get(CartanType::parse("B3"))) == read_file(data_path("b3_table.json")));
  }

  TEST_CASE("B3 table without the B2 triples is rejected") {
    TableStore store;
    try {
      store.register_json(read_file(data_path("b3_missing_b2.json")));
      FAIL("accepted an incomplete table");
    } catch (const PlacementMismatch& e) {
      CHECK(std::string(e.what()).find("(B2,") != std::string::npos);
    }
    CHECK_FALSE(store.has(CartanType::parse("B3")));
  }

  TEST_CASE("embedded tables re-register as identical") {
    TableStore store;
    for (const char* name : kExceptional) {
      const auto t = CartanType::parse(name);
      const auto text = table_to_json(table(t));
      CHECK_NOTHROW(store.register_json(text));
      CHECK(table_to_json(store.get(t)) == text);
    }
    CHECK(store.registered_types().empty());
  }

  TEST_CASE("a moved triple is named") {
    auto tab = table(CartanType::parse("E8"));
    StrataRow* from = nullptr;
    StrataRow* to = nullptr;
    for (auto& row : tab.rows) {
      if (row.stratum.str() == "35_2") from = &row;
      if (row.stratum.str() == "1_0") to = &row;
    }
    REQUIRE(from != nullptr);
    REQUIRE(to != nullptr);
    to->fiber.push_back(from->fiber.back());
    from->fiber.pop_back();
    TableStore store;
    try {
      store.register_table(tab);
      FAIL("accepted a table with a moved triple");
    } catch (const PlacementMismatch& e) {
      const std::string msg = e.what();
      CHECK(msg.find("(D4,chi_{4,1},") != std::string::npos);
      CHECK(msg.find("35_2") != std::string::npos);
    }
  }

  TEST_CASE("edited embedded table is rejected") {
    auto tab = table(CartanType::parse("G2"));
    tab.rows[0].groups[2] = GroupTag::C2;
    TableStore store;
    CHECK_THROWS_AS(store.register_table(tab), PlacementMismatch);
  }

  TEST_CASE("row must open with its own head") {
    auto tab = table_from_json(read_file(data_path("b3_table.json")));
    std::swap(tab.rows[0].fiber[0], tab.rows[0].fiber[1]);
    TableStore store;
    CHECK_THROWS_AS(store.register_table(tab), SchemaError);
  }

  TEST_CASE("tori cannot be registered") {
    StrataTable tab{CartanType::torus(1), {}};
    TableStore store;
    CHECK_THROWS_AS(store.register_table(tab), SchemaError);
  }

  TEST_CASE("directory loading") {
    TableStore store;
    CHECK_THROWS_AS(store.register_directory(data_path("no-such-dir")), Error);
    CHECK_NOTHROW(store.register_directory(std::string(STRATA_TEST_DATA_DIR) + "/tables"));
    CHECK(store.has(CartanType::parse("B3")));
  }
}
