#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace strata {

enum class Series : std::uint8_t { A, B, C, D, E, F, G, Torus };

char series_letter(Series s);

/// A quasi-simple Cartan type or a torus, always in canonical form.
///
/// Canonical means A_{n>=1}, B_{n>=2}, C_{n>=2}, D_{n>=4}, E_{6,7,8}, F_4,
/// G_2, or a torus of any rank >= 0. Low-rank aliases such as B_1 or D_3 are
/// rejected here; they only survive as factors of a SubsystemType, where
/// they are rewritten to their canonical equivalent.
class CartanType {
 public:
  static CartanType make(Series series, int rank);
  static CartanType torus(int rank = 0) { return make(Series::Torus, rank); }

  /// Accepts "E8", "E_8", "e8", "Torus", "T", "T3".
  static CartanType parse(std::string_view text);

  static bool is_canonical(Series series, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }

  bool is_torus() const { return series_ == Series::Torus; }
  bool is_exceptional() const;
  /// B, C or D.
  bool is_classical() const;

  std::string name() const;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;

 private:
  CartanType(Series s, int r) : series_(s), rank_(r) {}

  Series series_;
  int rank_;
};

struct DiagramEdge {
  int a;
  int b;
  int multiplicity;  // 1, 2, 3; 4 marks the doubled bond of the affine A_1
  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

/// A (possibly extended) Dynkin diagram. Node lengths are squared root
/// lengths normalised so the shortest root has length 1.
struct Diagram {
  std::vector<int> lengths;
  std::vector<DiagramEdge> edges;

  int size() const { return static_cast<int>(lengths.size()); }
  int multiplicity(int a, int b) const;
  std::vector<std::vector<int>> adjacency() const;
};

/// The affine diagram of a simple type; node 0 is the extra node.
Diagram extended_diagram(const CartanType& t);
/// Ordinary Dynkin diagram, i.e. the extended diagram with node 0 removed.
Diagram dynkin_diagram(const CartanType& t);

/// Cartan integers c_ij with s_i(alpha_j) = alpha_j - c_ij alpha_i.
std::vector<std::vector<int>> cartan_matrix(const Diagram& d);

struct CartanDatum {
  CartanType type;
  boost::multiprecision::cpp_int weyl_order;
  std::vector<int> degrees;
  std::vector<int> bad_primes;
  /// Coefficients of the highest root on the simple roots, in node order.
  std::vector<int> highest_root_coeffs;
  int z_value = 1;
  Diagram extended;

  int coxeter_number() const;
};

CartanDatum datum(const CartanType& t);

/// A semisimple root-system type: multiset of simple factors, normalised.
class SubsystemType {
 public:
  SubsystemType() = default;

  /// Builds from raw (series, rank) factors. Rewrites B_1, C_1 -> A_1,
  /// D_2 -> A_1 x A_1, D_3 -> A_3, C_2 -> B_2 and drops rank-0 factors.
  static SubsystemType from_factors(const std::vector<std::pair<Series, int>>& raw);
  static SubsystemType of(const CartanType& t);
  /// "A4xA4", "E7xA1", "A_5 x A_2 x A_1"; "1" or "" for the empty subsystem.
  static SubsystemType parse(std::string_view text);

  const std::vector<CartanType>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int rank() const;
  std::string name() const;

  /// Multiset union.
  SubsystemType combined(const SubsystemType& other) const;
  /// Replaces factor at `index` by the factors of `replacement`.
  SubsystemType replaced(std::size_t index, const SubsystemType& replacement) const;

  friend auto operator<=>(const SubsystemType&, const SubsystemType&) = default;

 private:
  explicit SubsystemType(std::vector<CartanType> f);
  std::vector<CartanType> factors_;  // sorted, descending
};

/// Type of each connected component of `keep` inside `d`.
SubsystemType classify_subdiagram(const Diagram& d, const std::vector<bool>& keep);

/// Every subsystem type reachable by deleting one nonempty node subset from
/// the extended diagram of the simple type `t`, by brute force over subsets.
std::set<SubsystemType> deletion_outcomes_bruteforce(const CartanType& t);

/// Same set as deletion_outcomes_bruteforce, generated from the run
/// structure of the diagram. Outcomes with more than `max_components`
/// factors are skipped.
std::set<SubsystemType> deletion_outcomes(const CartanType& t, int max_components = -1);

/// Closure of {t} under extended-diagram node deletion applied to any simple
/// factor. Memoised; includes t and the empty subsystem.
const std::set<SubsystemType>& pseudo_levi_types(const CartanType& t);

/// Membership in pseudo_levi_types(t), decided by a targeted search that
/// stays cheap for large classical ranks.
bool is_pseudo_levi(const CartanType& t, const SubsystemType& s);

}  // namespace strata
