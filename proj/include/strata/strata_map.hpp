#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strata/cuspidal.hpp"
#include "strata/finite_groups.hpp"
#include "strata/springer_data.hpp"

namespace strata {

/// c(E): the component groups that deviate across bad characteristics.
struct CCollection {
  enum class Kind { Single, Pair, Triple };
  Kind kind = Kind::Single;
  std::vector<GroupTag> groups;  ///< ordered by characteristic

  std::string str() const;  // "Single(C2)", "Pair(C4,C3)", ...
  friend bool operator==(const CCollection&, const CCollection&) = default;
};

struct CStarElement {
  GroupTag group;
  std::string irrep;
  /// "gamma" for irreps of the first group, "gamma'" for irreps of the
  /// second group outside the pullback, "mu_m" for faithful irreps of C_m.
  std::string origin;

  std::string str() const;
};

/// A primitive m-th root of unity exp(2 pi i k / m).
struct RootOfUnityLabel {
  int m;
  int k;
  std::string str() const;  // "mu_4^3"
  friend bool operator==(const RootOfUnityLabel&, const RootOfUnityLabel&) = default;
};

struct FiberPair {
  SheafTriple triple;
  CStarElement element;
};

struct WitnessRow {
  CharacterLabel stratum;
  int fiber_size = 0;
  int cstar_size = 0;
  /// Row order against inventory order; present only when the sizes agree.
  std::vector<FiberPair> pairing;
};

/// The table used by the map for t: the registered or embedded one, or the
/// identity table for type A and tori. Throws NoTableAvailable otherwise.
const StrataTable& resolve_table(const TableStore& store, const CartanType& t);
/// Whether resolve_table succeeds without a registered table.
bool has_identity_table(const CartanType& t);

/// The stratum of regular elements, i.e. the head attached to E = 1.
CharacterLabel unit_stratum(const CartanType& t);

/// Head of the row whose fiber contains the triple. Throws TripleNotFound.
CharacterLabel tau(const TableStore& store, const CartanType& t, const SheafTriple& triple);
CharacterLabel tau(const CartanType& t, const SheafTriple& triple);

/// The fiber over E, either grouped as (triple, multiplicity) or expanded to
/// one entry per index with multiplicity 1. Throws NotAStratum.
std::vector<std::pair<SheafTriple, int>> fiber(const TableStore& store, const CartanType& t,
                                               const CharacterLabel& E, bool expand = false);

CCollection c_collection(const StrataRow& row);
CCollection c_collection(const TableStore& store, const CartanType& t, const CharacterLabel& E);

std::vector<CStarElement> c_star(const StrataRow& row);
std::vector<CStarElement> c_star(const TableStore& store, const CartanType& t, const CharacterLabel& E);

/// Per-row fiber and c(E)* sizes with a deterministic pairing.
std::vector<WitnessRow> fiber_cstar_witness(const TableStore& store, const CartanType& t);

/// (m, k) with 1 <= m <= z_H and gcd(k, m) = 1. A torus gives [(1,1)].
std::vector<RootOfUnityLabel> regular_fiber_labels(const CartanType& t);

}  // namespace strata
