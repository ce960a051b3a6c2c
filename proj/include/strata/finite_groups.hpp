#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

/// The finite groups that occur as component groups in the strata tables.
enum class GroupTag { Triv, C2, C3, C4, C5, C6, C2xC2, C2xC3, S3, S4, S5, D8, S3xC2 };

inline constexpr std::array<GroupTag, 13> kAllGroupTags = {
    GroupTag::Triv, GroupTag::C2,    GroupTag::C3,    GroupTag::C4, GroupTag::C5,
    GroupTag::C6,   GroupTag::C2xC2, GroupTag::C2xC3, GroupTag::S3, GroupTag::S4,
    GroupTag::S5,   GroupTag::D8,    GroupTag::S3xC2};

struct GroupInfo {
  GroupTag tag;
  std::string name;  ///< "Triv", "C2", "C2xC3", ...
  int order;
  /// Names of the irreducible representations, trivial first.
  std::vector<std::string> irreps;
};

const GroupInfo& group_info(GroupTag tag);
std::string group_name(GroupTag tag);
/// Accepts the JSON names plus the table spellings "1" and "S2".
GroupTag parse_group(std::string_view text);

/// Irreps of `group` pulled back along the unique surjection onto `quotient`.
/// Throws Error when no such unique surjection is tabulated.
std::vector<std::string> pullback_irreps(GroupTag group, GroupTag quotient);

/// Names of the faithful irreps of the cyclic group of order m: the
/// characters z^k with gcd(k, m) = 1, k in [1, m]. For m = 1 this is the
/// trivial representation.
std::vector<std::string> faithful_cyclic_irreps(int m);

/// Explicit permutation group used by the conjugacy-class oracle.
using Permutation = std::vector<int>;

/// All elements of the group, generated from fixed permutation generators.
std::vector<Permutation> group_elements(GroupTag tag);
/// Number of conjugacy classes, by brute force over the element list.
int conjugacy_class_count(const std::vector<Permutation>& elements);

}  // namespace strata
