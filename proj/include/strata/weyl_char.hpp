#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strata/cartan.hpp"

namespace strata {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

std::vector<Partition> partitions(int n);
/// Number of partitions of n.
long long partition_count(int n);

struct PartitionLabel {
  Partition parts;
  friend auto operator<=>(const PartitionLabel&, const PartitionLabel&) = default;
};

struct BipartitionLabel {
  Partition alpha;
  Partition beta;
  friend auto operator<=>(const BipartitionLabel&, const BipartitionLabel&) = default;
};

enum class SplitTag { None, I, II };

/// Unordered pair {alpha, beta}; stored with alpha >= beta. A symmetric pair
/// splits into two characters told apart only by the I/II tag.
struct DPairLabel {
  Partition alpha;
  Partition beta;
  SplitTag split = SplitTag::None;
  friend auto operator<=>(const DPairLabel&, const DPairLabel&) = default;
};

/// Registry name of an exceptional character ("4480_16", "chi_{9,1}", "eps_l").
/// Identity is the name alone; dim and b are metadata parsed from E-series names.
struct NamedLabel {
  std::string name;
  std::optional<int> dim;
  std::optional<int> b;
  friend bool operator==(const NamedLabel& x, const NamedLabel& y) { return x.name == y.name; }
  friend auto operator<=>(const NamedLabel& x, const NamedLabel& y) { return x.name <=> y.name; }
};

struct TrivialLabel {
  friend auto operator<=>(const TrivialLabel&, const TrivialLabel&) = default;
};

class CharacterLabel {
 public:
  using Value = std::variant<TrivialLabel, PartitionLabel, BipartitionLabel, DPairLabel, NamedLabel>;

  CharacterLabel() = default;
  CharacterLabel(Value v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static CharacterLabel trivial() { return {TrivialLabel{}}; }
  static CharacterLabel partition(Partition p) { return {PartitionLabel{std::move(p)}}; }
  static CharacterLabel bipartition(Partition a, Partition b) {
    return {BipartitionLabel{std::move(a), std::move(b)}};
  }
  /// Orders the pair and validates the split tag.
  static CharacterLabel dpair(Partition a, Partition b, SplitTag tag = SplitTag::None);
  static CharacterLabel named(std::string name);

  const Value& value() const { return value_; }
  template <class T>
  const T* get() const {
    return std::get_if<T>(&value_);
  }

  /// Canonical ASCII spelling; the inverse of parse_label.
  std::string str() const;

  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
  friend auto operator<=>(const CharacterLabel& a, const CharacterLabel& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Value value_;
};

struct IrrRegistry {
  CartanType type;
  std::vector<CharacterLabel> labels;

  bool contains(const CharacterLabel& label) const;
  std::size_t size() const { return labels.size(); }
};

/// Irr(W) labels in a fixed order: partitions of n for A_{n-1}; bipartitions
/// by decreasing |alpha| for B/C; unordered pairs with split symmetric pairs
/// for D; the embedded table registry for exceptional types; a single
/// trivial label for tori.
const IrrRegistry& enumerate_irr(const CartanType& t);

std::size_t irr_count(const CartanType& t);

/// Parses a label for Irr(W(t)). Throws ParseError.
CharacterLabel parse_label(const CartanType& t, std::string_view text);

/// Table-notation aliases for characters of small relative Weyl groups
/// ("eps", "phi", "theta", ...). Returns nullopt when `text` is no alias.
std::optional<CharacterLabel> relative_alias(const CartanType& t, std::string_view text);

std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);

}  // namespace strata
