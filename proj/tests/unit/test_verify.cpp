#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "strata/error.hpp"
#include "strata/verify.hpp"

using namespace strata;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("exceptional types pass every check") {
    for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
      CAPTURE(name);
      const auto report = run_all(TableStore::embedded(), CartanType::parse(name));
      for (const auto& c : report.checks) {
        CAPTURE(c.id);
        CAPTURE(c.detail);
        CHECK(c.status == CheckStatus::Pass);
      }
      CHECK(report.ok());
    }
  }

  TEST_CASE("every check appears once, in order") {
    const auto report = run_all(TableStore::embedded(), CartanType::parse("F4"));
    REQUIRE(report.checks.size() == check_ids().size());
    for (std::size_t i = 0; i < report.checks.size(); ++i) CHECK(report.checks[i].id == check_ids()[i]);
    CHECK(check_ids().size() == 8);
  }

  TEST_CASE("E8 totals") {
    const auto report = run_all(TableStore::embedded(), CartanType::parse("E8"));
    CHECK(report.check("triple-placement").detail.find("166 = 166") != std::string::npos);
    CHECK(report.check("regular-fiber-count").detail.find("12") != std::string::npos);
  }

  TEST_CASE("types without a table skip, never pass, the table checks") {
    for (const char* name : {"B5", "C4", "D6"}) {
      CAPTURE(name);
      const auto report = run_all(TableStore::embedded(), CartanType::parse(name));
      for (const char* id : {"triple-placement", "retraction", "empty-entry-completeness", "boxed-recomputation",
                             "fiber-cstar-rows", "regular-fiber-count"})
        CHECK(report.check(id).status == CheckStatus::Skipped);
      CHECK(report.check("centralizer-profiles").status == CheckStatus::Pass);
      CHECK(report.check("group-inventories").status == CheckStatus::Pass);
      CHECK(report.ok());
    }
  }

  TEST_CASE("type A and tori use the identity table") {
    for (const auto& t : {CartanType::parse("A4"), CartanType::torus(0)}) {
      const auto report = run_all(TableStore::embedded(), t);
      for (const auto& c : report.checks) CHECK(c.status == CheckStatus::Pass);
    }
  }

  TEST_CASE("registered table is verified") {
    TableStore store;
    store.register_json(read_file(std::string(STRATA_TEST_DATA_DIR) + "/b3_table.json"));
    const auto report = run_all(store, CartanType::parse("B3"));
    for (const auto& c : report.checks) {
      CAPTURE(c.id);
      CHECK(c.status == CheckStatus::Pass);
    }
    const auto targets = verification_targets(store);
    CHECK(targets.size() == 6);
    CHECK(targets.back() == CartanType::parse("B3"));
  }

  TEST_CASE("failing data is reported, not thrown") {
    // A registered table whose group data breaks the row equality.
    auto text = read_file(std::string(STRATA_TEST_DATA_DIR) + "/b3_table.json");
    const std::string from = "\"r2\": \"C2\"";
    text.replace(text.find(from), from.size(), "\"r2\": \"S3\"");
    TableStore store;
    store.register_json(text);
    const auto report = run_all(store, CartanType::parse("B3"));
    CHECK_FALSE(report.ok());
    CHECK(report.check("fiber-cstar-rows").status == CheckStatus::Fail);
    CHECK(report.check("fiber-cstar-rows").detail.find("(3|)") != std::string::npos);
    CHECK(report.text().find("fiber-cstar-rows: fail") != std::string::npos);
  }

  TEST_CASE("G2 report carries the support erratum") {
    const auto report = run_all(TableStore::embedded(), CartanType::parse("G2"));
    REQUIRE_FALSE(report.errata.empty());
    CHECK(report.errata.front().id == "g2-d0-support");
    CHECK(report.text().find("erratum g2-d0-support") != std::string::npos);
  }

  TEST_CASE("report formats") {
    const auto report = run_all(TableStore::embedded(), CartanType::parse("E6"));
    std::istringstream lines(report.text());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "type E6");
    for (const auto& id : check_ids()) {
      std::getline(lines, line);
      CHECK(line.rfind(id + ": pass", 0) == 0);
    }
    const auto doc = nlohmann::json::parse(report.json());
    CHECK(doc["schema"] == "verification-report/1");
    CHECK(doc["checks"].size() == 8);
    CHECK(report.json() == run_all(TableStore::embedded(), CartanType::parse("E6")).json());
  }

  TEST_CASE("exports") {
    const auto& store = TableStore::embedded();
    const auto g2 = nlohmann::json::parse(export_document(store, CartanType::parse("G2"), "table"));
    CHECK(g2["rows"].size() == 6);
    const auto e8 = nlohmann::json::parse(export_document(store, CartanType::parse("E8"), "triples"));
    CHECK(e8["count"] == 166);
    CHECK(e8["triples"].size() == 166);
    const auto a2 = nlohmann::json::parse(export_document(store, CartanType::parse("A2"), "strata"));
    CHECK(a2["count"] == 3);
    CHECK_THROWS_AS(export_document(store, CartanType::parse("B4"), "table"), NoTableAvailable);
    CHECK_THROWS_AS(export_document(store, CartanType::parse("A2"), "table"), NoTableAvailable);
    CHECK_THROWS_AS(export_document(store, CartanType::parse("G2"), "pictures"), Error);
  }

  TEST_CASE("export, register, export is stable") {
    for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
      const auto t = CartanType::parse(name);
      const auto first = export_document(TableStore::embedded(), t, "table");
      TableStore store;
      store.register_json(first);
      CHECK(export_document(store, t, "table") == first);
      CHECK(export_document(store, t, "report") == export_document(TableStore::embedded(), t, "report"));
    }
  }
}
