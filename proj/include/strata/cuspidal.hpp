#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/cartan.hpp"
#include "strata/weyl_char.hpp"

namespace strata {

/// Borel-variety dimension invariant of a cuspidal object. Empty means
/// "opaque": the value is never stated for classical cuspidal Levis.
using Delta = std::optional<int>;

std::string format_delta(const Delta& d);

/// A cuspidal Levi type J of an ambient type.
struct CuspidalLevi {
  CartanType ambient = CartanType::torus(0);
  std::optional<CartanType> levi;      ///< Weyl type of W_J; nullopt is J = empty
  std::optional<CartanType> relative;  ///< type of N_W(W_J)/W_J; nullopt is trivial

  bool is_empty() const { return !levi.has_value(); }
  /// J = I, i.e. the Levi is the ambient group itself.
  bool is_full() const;
  std::string name() const;  // "empty", "D4", ...

  friend bool operator==(const CuspidalLevi&, const CuspidalLevi&) = default;
};

/// Characters of the relative Weyl group of `levi`.
const std::vector<CharacterLabel>& relative_irr(const CuspidalLevi& levi);

struct CuspidalCountTable {
  CartanType ambient = CartanType::torus(0);
  /// d -> N_d, ordered by decreasing d (opaque last).
  std::map<Delta, int, std::greater<>> counts;

  int total() const;
  int count(const Delta& d) const;
};

/// One element (J, E', A') of the parametrising set; A' is the index into
/// the N_d cuspidal objects of the Levi with invariant d.
struct SheafTriple {
  CuspidalLevi levi;
  CharacterLabel character;
  Delta d;
  int index = 0;

  std::string str() const;
  friend bool operator==(const SheafTriple&, const SheafTriple&) = default;
};

std::vector<CuspidalLevi> cuspidal_levis(const CartanType& t);
CuspidalCountTable n_table(const CartanType& t);
std::vector<SheafTriple> enumerate_cs_prime(const CartanType& t);

/// Resolves a Levi name ("empty", "D4", "E_6") against the cuspidal Levis of t.
CuspidalLevi find_levi(const CartanType& t, std::string_view name);
/// Parses a character of the relative Weyl group of `levi`, accepting the
/// table aliases of relative_alias.
CharacterLabel parse_relative_label(const CuspidalLevi& levi, std::string_view text);

struct SupportCase {
  enum class Kind { UniquePrime, AllCharacteristics, Torus, NoCharacteristic, Anomalous };
  Kind kind;
  int r0 = 0;  ///< only for UniquePrime

  std::string str() const;
  friend bool operator==(const SupportCase&, const SupportCase&) = default;
};

/// Classifies (t, d) by which characteristics make every cuspidal object of
/// invariant d unipotently supported. Throws NoData when N_d(t) = 0.
SupportCase support_case(const CartanType& t, const Delta& d);

}  // namespace strata
