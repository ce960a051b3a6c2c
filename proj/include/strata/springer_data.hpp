#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strata/cartan.hpp"
#include "strata/cuspidal.hpp"
#include "strata/finite_groups.hpp"
#include "strata/weyl_char.hpp"

namespace strata {

/// One symbol (J, E', d) with multiplicity n in a table row.
struct FiberEntry {
  SheafTriple triple;  ///< index is always 0; the entry stands for indices 0..mult-1
  int mult = 1;
  /// Occurrence tag ('a', 'b') for labels printed identically in two rows.
  std::optional<char> disamb;

  friend bool operator==(const FiberEntry&, const FiberEntry&) = default;
};

/// Which annotations are boxed: either the lone value or a set of primes.
struct Boxed {
  bool single = false;
  std::vector<int> primes;  ///< ascending; empty when single

  std::string str() const;
  friend bool operator==(const Boxed&, const Boxed&) = default;
};

/// M(E): the characteristics in which the stratum carries a unipotent class.
struct Membership {
  bool full = true;
  int r0 = 0;  ///< the only characteristic, when !full

  std::string str() const;  // "full" or "singleton:3"
  static Membership parse(std::string_view text);
  friend bool operator==(const Membership&, const Membership&) = default;
};

struct StrataRow {
  CharacterLabel stratum;
  std::vector<FiberEntry> fiber;
  std::map<int, GroupTag> groups;  ///< r in {0,2,3,5}; absent is a dash
  Boxed boxed;
  Membership membership;

  int fiber_size() const;
  friend bool operator==(const StrataRow&, const StrataRow&) = default;
};

struct StrataTable {
  CartanType type;
  std::vector<StrataRow> rows;

  /// nullptr when `head` is no row head.
  const StrataRow* find_row(const CharacterLabel& head) const;
  /// Throws NotAStratum.
  const StrataRow& row(const CharacterLabel& head) const;
  int total_entries() const;

  friend bool operator==(const StrataTable&, const StrataTable&) = default;
};

bool has_embedded_table(const CartanType& t);
/// Embedded table for G2, F4, E6, E7, E8. Throws NoTableAvailable otherwise.
const StrataTable& table(const CartanType& t);

/// A_{r,E} of a row. For Full rows without an explicit r = 5 entry the value
/// at 5 is A_{0,E}. nullopt marks a dash.
std::optional<GroupTag> component_group(const StrataRow& row, int r);
/// Throws NotAStratum when E is no row head of the embedded table.
std::optional<GroupTag> component_group(const CartanType& t, const CharacterLabel& E, int r);

/// Comparison key of a triple for placement checks. The d of a classical
/// Levi is opaque and left out of the key.
std::string placement_key(const SheafTriple& triple);

/// Checks that the expanded fiber entries of `tab` are exactly
/// enumerate_cs_prime(t). Returns nullopt on success, else a description
/// naming the first offending triple.
std::optional<std::string> placement_mismatch(const StrataTable& tab);

// ---------------------------------------------------------------------------
// Centralizer profiles

struct CentralizerEntry {
  std::optional<SubsystemType> type;  ///< nullopt is the full group H_r
  int count = 1;

  std::string name() const;
  friend bool operator==(const CentralizerEntry&, const CentralizerEntry&) = default;
};

/// Types of Z^0(s) for the semisimple parts s attached to the cuspidal
/// objects of invariant d, in one class of characteristics.
struct CentralizerProfile {
  CartanType ambient;
  Delta d;
  std::vector<int> primes;  ///< empty is "generic": every r not listed elsewhere
  std::vector<CentralizerEntry> entries;
  std::string note;

  bool generic() const { return primes.empty(); }
  std::string characteristic_class() const;  // "generic" or "2" or "2,3"
  int total() const;
};

/// All profiles of t, generic first within each d. Empty for types without
/// cuspidal objects.
std::vector<CentralizerProfile> centralizer_profiles(const CartanType& t);
/// The profile that applies in characteristic r (0 or a prime). Throws NoData.
CentralizerProfile centralizer_profile(const CartanType& t, const Delta& d, int r);

// ---------------------------------------------------------------------------
// Errata

struct Erratum {
  std::string id;
  std::string detail;
};

/// Known anomalies in the published data for t.
std::vector<Erratum> errata(const CartanType& t);

// ---------------------------------------------------------------------------
// JSON

/// Byte-stable strata-table/1 document, terminated by a newline.
std::string table_to_json(const StrataTable& tab);
/// Parses and validates a strata-table/1 document. Throws SchemaError.
StrataTable table_from_json(std::string_view text);

// ---------------------------------------------------------------------------
// Session store

/// Embedded tables plus external tables registered for classical types.
class TableStore {
 public:
  TableStore() = default;

  /// The store holding only the embedded tables.
  static const TableStore& embedded();

  /// Validates `tab` and installs it for its type. For types with an
  /// embedded table the document is compared against it and not installed.
  /// Throws PlacementMismatch naming the first offending triple.
  void register_table(const StrataTable& tab);
  void register_json(std::string_view text);
  /// Loads every *.json file in `dir`, in name order.
  void register_directory(const std::string& dir);

  /// Registered or embedded table, or nullptr.
  const StrataTable* find(const CartanType& t) const;
  /// Throws NoTableAvailable.
  const StrataTable& get(const CartanType& t) const;
  bool has(const CartanType& t) const { return find(t) != nullptr; }
  std::vector<CartanType> registered_types() const;

 private:
  std::map<CartanType, std::shared_ptr<const StrataTable>> external_;
};

namespace detail {
/// Names of the (empty, E') entries of the embedded table, in row order.
std::vector<std::string> embedded_empty_entries(const CartanType& t);
}  // namespace detail

}  // namespace strata
