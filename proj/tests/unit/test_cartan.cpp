#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles/combinatorics.hpp"
#include "strata/cartan.hpp"
#include "strata/error.hpp"

using namespace strata;

namespace {

std::vector<CartanType> sample_types() {
  std::vector<CartanType> out;
  for (int n = 1; n <= 8; ++n) out.push_back(CartanType::make(Series::A, n));
  for (int n = 2; n <= 8; ++n) out.push_back(CartanType::make(Series::B, n));
  for (int n = 2; n <= 8; ++n) out.push_back(CartanType::make(Series::C, n));
  for (int n = 4; n <= 8; ++n) out.push_back(CartanType::make(Series::D, n));
  for (int n : {6, 7, 8}) out.push_back(CartanType::make(Series::E, n));
  out.push_back(CartanType::make(Series::F, 4));
  out.push_back(CartanType::make(Series::G, 2));
  return out;
}

std::set<std::string> names(const std::set<SubsystemType>& s) {
  std::set<std::string> out;
  for (const auto& x : s) out.insert(x.name());
  return out;
}

}  // namespace

TEST_SUITE("cartan") {
  TEST_CASE("canonical forms only") {
    CHECK_THROWS_AS(CartanType::make(Series::B, 1), InvalidType);
    CHECK_THROWS_AS(CartanType::make(Series::C, 1), InvalidType);
    CHECK_THROWS_AS(CartanType::make(Series::D, 3), InvalidType);
    CHECK_THROWS_AS(CartanType::make(Series::E, 9), InvalidType);
    CHECK_THROWS_AS(CartanType::make(Series::A, 0), InvalidType);
    CHECK_THROWS_AS(CartanType::parse("Q3"), InvalidType);
    CHECK(CartanType::parse("E_8") == CartanType::make(Series::E, 8));
    CHECK(CartanType::parse("e8") == CartanType::make(Series::E, 8));
    CHECK(CartanType::parse("T").is_torus());
    CHECK(CartanType::parse("T3") == CartanType::torus(3));
  }

  TEST_CASE("name round trip") {
    for (const auto& t : sample_types()) CHECK(CartanType::parse(t.name()) == t);
  }

  TEST_CASE("z values") {
    CHECK(datum(CartanType::parse("E8")).z_value == 6);
    CHECK(datum(CartanType::parse("E7")).z_value == 4);
    CHECK(datum(CartanType::parse("E6")).z_value == 3);
    CHECK(datum(CartanType::parse("F4")).z_value == 4);
    CHECK(datum(CartanType::parse("G2")).z_value == 3);
    CHECK(datum(CartanType::parse("A5")).z_value == 1);
    CHECK(datum(CartanType::parse("B7")).z_value == 2);
    CHECK(datum(CartanType::parse("C3")).z_value == 2);
    CHECK(datum(CartanType::parse("D5")).z_value == 2);
    const auto torus = datum(CartanType::torus());
    CHECK(torus.weyl_order == 1);
    CHECK(torus.z_value == 1);
    CHECK(torus.extended.size() == 0);
  }

  TEST_CASE("datum invariants") {
    for (const auto& t : sample_types()) {
      CAPTURE(t.name());
      const auto d = datum(t);
      const int z = std::max(1, *std::max_element(d.highest_root_coeffs.begin(), d.highest_root_coeffs.end()));
      CHECK(d.z_value == z);
      CHECK((z == 1 || z == 2 || z == 3 || z == 4 || z == 6));
      CHECK(static_cast<int>(d.highest_root_coeffs.size()) == t.rank());
      const int sum = std::accumulate(d.highest_root_coeffs.begin(), d.highest_root_coeffs.end(), 0);
      CHECK(1 + sum == d.coxeter_number());
      CHECK(d.coxeter_number() == *std::max_element(d.degrees.begin(), d.degrees.end()));
      boost::multiprecision::cpp_int product = 1;
      for (int deg : d.degrees) product *= deg;
      CHECK(product == d.weyl_order);
      for (int p : d.bad_primes) CHECK((p == 2 || p == 3 || p == 5));
      // Bad primes are the primes dividing some highest-root coefficient.
      std::vector<int> expected;
      for (int p : {2, 3, 5})
        if (std::any_of(d.highest_root_coeffs.begin(), d.highest_root_coeffs.end(), [p](int c) { return c % p == 0; }))
          expected.push_back(p);
      CHECK(d.bad_primes == expected);
      CHECK(d.extended.size() == t.rank() + 1);
    }
  }

  TEST_CASE("subsystem aliases") {
    CHECK(SubsystemType::from_factors({{Series::B, 1}}).name() == "A1");
    CHECK(SubsystemType::from_factors({{Series::C, 1}}).name() == "A1");
    CHECK(SubsystemType::from_factors({{Series::D, 2}}).name() == "A1xA1");
    CHECK(SubsystemType::from_factors({{Series::D, 3}}).name() == "A3");
    CHECK(SubsystemType::parse("A_5 x A_2 x A_1") == SubsystemType::parse("A1xA5xA2"));
    CHECK(SubsystemType::parse("1").empty());
  }

  TEST_CASE("pseudo-Levi examples") {
    const auto g2 = CartanType::parse("G2");
    CHECK(is_pseudo_levi(g2, SubsystemType::parse("A2")));
    CHECK(is_pseudo_levi(g2, SubsystemType::parse("A1xA1")));
    CHECK(is_pseudo_levi(g2, SubsystemType::parse("G2")));
    CHECK_FALSE(is_pseudo_levi(g2, SubsystemType::parse("A3")));
    const auto e8 = CartanType::parse("E8");
    for (const char* s : {"A4xA4", "A5xA2xA1", "D8", "E7xA1", "E6xA2", "D5xA3"}) {
      CAPTURE(s);
      CHECK(pseudo_levi_types(e8).count(SubsystemType::parse(s)) == 1);
      CHECK(is_pseudo_levi(e8, SubsystemType::parse(s)));
    }
    CHECK_FALSE(is_pseudo_levi(e8, SubsystemType::parse("A9")));
  }

  TEST_CASE("type A closure matches the partition formula") {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(names(pseudo_levi_types(CartanType::make(Series::A, n))) == oracle::type_a_closure(n));
    }
  }

  TEST_CASE("deletion outcomes agree with brute force") {
    for (const auto& t : sample_types()) {
      CAPTURE(t.name());
      CHECK(deletion_outcomes(t) == deletion_outcomes_bruteforce(t));
    }
  }

  TEST_CASE("closure is closed under one more deletion step") {
    for (const char* name : {"G2", "F4", "E6", "E7", "E8", "B5", "C4", "D6", "A5"}) {
      const auto t = CartanType::parse(name);
      CAPTURE(name);
      const auto& closure = pseudo_levi_types(t);
      CHECK(closure.count(SubsystemType::of(t)) == 1);
      CHECK(closure.count(SubsystemType{}) == 1);
      for (const auto& s : closure) {
        CHECK(s.rank() <= t.rank());
        for (std::size_t i = 0; i < s.factors().size(); ++i)
          for (const auto& out : deletion_outcomes_bruteforce(s.factors()[i])) {
            const auto next = s.replaced(i, out);
            if (closure.count(next) == 0) FAIL_CHECK(next.name() << " escapes the closure of " << name);
          }
      }
    }
  }

  TEST_CASE("Levi subsystems are pseudo-Levi") {
    for (const char* name : {"G2", "F4", "E6", "E7", "E8", "B4", "C4", "D5", "A4"}) {
      const auto t = CartanType::parse(name);
      CAPTURE(name);
      const auto dyn = dynkin_diagram(t);
      const auto& closure = pseudo_levi_types(t);
      for (unsigned mask = 0; mask < (1u << dyn.size()); ++mask) {
        std::vector<bool> keep(dyn.size());
        for (int i = 0; i < dyn.size(); ++i) keep[i] = (mask >> i) & 1u;
        const auto s = classify_subdiagram(dyn, keep);
        if (closure.count(s) == 0) FAIL_CHECK(s.name() << " is a Levi of " << name << " but not pseudo-Levi");
      }
    }
  }

  TEST_CASE("large classical membership stays cheap") {
    const auto b30 = CartanType::parse("B30");
    CHECK(is_pseudo_levi(b30, SubsystemType::parse("B20xD10")));
    CHECK(is_pseudo_levi(b30, SubsystemType::parse("D16xB14")));
    CHECK_FALSE(is_pseudo_levi(b30, SubsystemType::parse("E8")));
    const auto d24 = CartanType::parse("D24");
    CHECK(is_pseudo_levi(d24, SubsystemType::parse("D12xD12")));
  }
}
