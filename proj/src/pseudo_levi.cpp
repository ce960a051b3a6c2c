#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "strata/cartan.hpp"
#include "strata/error.hpp"

namespace strata {

std::set<SubsystemType> deletion_outcomes_bruteforce(const CartanType& t) {
  Diagram ext = extended_diagram(t);
  const int n = ext.size();
  if (n > 24) throw InvalidType("brute-force deletion is limited to rank 23");
  std::set<SubsystemType> out;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t kept = 0; kept < full; ++kept) {
    std::vector<bool> keep(n);
    for (int i = 0; i < n; ++i) keep[i] = (kept >> i) & 1U;
    out.insert(classify_subdiagram(ext, keep));
  }
  return out;
}

namespace {

using Raw = std::vector<std::pair<Series, int>>;

// Ends of the linear affine diagrams of types B, C, D. The spine is the
// chain of nodes between the two ends; a fork end hangs two extra nodes off
// the first (or last) spine node.
enum class End { LongDouble, ShortDouble, Fork };

struct Linear {
  End left;
  End right;
  int spine;
};

Linear linear_shape(const CartanType& t) {
  const int n = t.rank();
  switch (t.series()) {
    case Series::B:
      if (n == 2) return {End::LongDouble, End::LongDouble, 3};
      return {End::Fork, End::ShortDouble, n - 1};
    case Series::C: return {End::LongDouble, End::LongDouble, n + 1};
    case Series::D: return {End::Fork, End::Fork, n - 3};
    default: throw InvalidType("no linear affine shape for " + t.name());
  }
}

// Component formed by a run of `len` >= 1 spine nodes touching an end.
void end_run(Raw& raw, End end, int len, int forks) {
  switch (end) {
    case End::LongDouble: raw.emplace_back(Series::C, len); break;
    case End::ShortDouble: raw.emplace_back(Series::B, len); break;
    case End::Fork:
      if (forks == 2) raw.emplace_back(Series::D, len + 2);
      else raw.emplace_back(Series::A, len + forks);
      break;
  }
}

// Multisets of parts >= 1 (non-increasing), with sum(part) + count <= budget.
void middle_runs(int budget, int max_part, int max_count, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& emit) {
  emit(cur);
  if (max_count == 0) return;
  for (int p = std::min(max_part, budget - 1); p >= 1; --p) {
    cur.push_back(p);
    middle_runs(budget - p - 1, p, max_count - 1, cur, emit);
    cur.pop_back();
  }
}

void linear_outcomes(const CartanType& t, int cap, std::set<SubsystemType>& out) {
  const Linear shape = linear_shape(t);
  const int S = shape.spine;
  const int left_forks = shape.left == End::Fork ? 2 : 0;
  const int right_forks = shape.right == End::Fork ? 2 : 0;
  auto accept = [&](const Raw& raw) {
    SubsystemType s = SubsystemType::from_factors(raw);
    if (cap < 0 || static_cast<int>(s.factors().size()) <= cap) out.insert(std::move(s));
  };

  // Whole spine kept; only possible when some fork node is deleted.
  for (int fl = 0; fl <= left_forks; ++fl) {
    for (int fr = 0; fr <= right_forks; ++fr) {
      if (fl == left_forks && fr == right_forks) continue;
      Raw raw;
      if (shape.left == End::Fork && shape.right == End::Fork) {
        int nodes = S + fl + fr;
        if (fl == 2 || fr == 2) raw.emplace_back(Series::D, nodes);
        else raw.emplace_back(Series::A, nodes);
      } else if (shape.left == End::Fork) {
        raw.emplace_back(Series::B, S + fl);
      }
      accept(raw);
    }
  }

  // At least one spine node deleted: left run a, right run b, middle runs
  // separated from each other and from the end runs by deleted nodes.
  std::vector<int> cur;
  for (int a = 0; a <= S - 1; ++a) {
    for (int b = 0; a + b <= S - 1; ++b) {
      const int rest = S - a - b;
      for (int fl = 0; fl <= left_forks; ++fl) {
        for (int fr = 0; fr <= right_forks; ++fr) {
          Raw ends;
          if (a > 0) end_run(ends, shape.left, a, fl);
          else
            for (int i = 0; i < fl; ++i) ends.emplace_back(Series::A, 1);
          if (b > 0) end_run(ends, shape.right, b, fr);
          else
            for (int i = 0; i < fr; ++i) ends.emplace_back(Series::A, 1);
          const int room = cap < 0 ? S : cap - static_cast<int>(ends.size());
          if (room < 0) continue;
          middle_runs(rest - 1, rest, room, cur, [&](const std::vector<int>& mids) {
            Raw raw = ends;
            for (int m : mids) raw.emplace_back(Series::A, m);
            accept(raw);
          });
        }
      }
    }
  }
}

void cyclic_outcomes(int nodes, int cap, std::set<SubsystemType>& out) {
  // Deleting k >= 1 nodes of a cycle leaves k runs; a multiset of A-runs is
  // reachable iff sum(len + 1) <= nodes.
  std::vector<int> cur;
  middle_runs(nodes, nodes - 1, cap < 0 ? nodes : cap, cur, [&](const std::vector<int>& runs) {
    Raw raw;
    for (int r : runs) raw.emplace_back(Series::A, r);
    out.insert(SubsystemType::from_factors(raw));
  });
}

struct Caches {
  std::mutex mutex;
  std::map<std::pair<CartanType, int>, std::set<SubsystemType>> outcomes;
  std::map<CartanType, std::set<SubsystemType>> closures;
  std::map<std::pair<CartanType, SubsystemType>, bool> reachable;
};

Caches& caches() {
  static Caches c;
  return c;
}

}  // namespace

std::set<SubsystemType> deletion_outcomes(const CartanType& t, int max_components) {
  {
    std::lock_guard lock(caches().mutex);
    auto it = caches().outcomes.find({t, max_components});
    if (it != caches().outcomes.end()) return it->second;
  }
  std::set<SubsystemType> out;
  switch (t.series()) {
    case Series::A: cyclic_outcomes(t.rank() + 1, max_components, out); break;
    case Series::B:
    case Series::C:
    case Series::D: linear_outcomes(t, max_components, out); break;
    case Series::E:
    case Series::F:
    case Series::G:
      for (auto& s : deletion_outcomes_bruteforce(t))
        if (max_components < 0 || static_cast<int>(s.factors().size()) <= max_components)
          out.insert(s);
      break;
    case Series::Torus: out.insert(SubsystemType{}); break;
  }
  std::lock_guard lock(caches().mutex);
  caches().outcomes.emplace(std::make_pair(t, max_components), out);
  return out;
}

const std::set<SubsystemType>& pseudo_levi_types(const CartanType& t) {
  {
    std::lock_guard lock(caches().mutex);
    auto it = caches().closures.find(t);
    if (it != caches().closures.end()) return it->second;
  }
  std::set<SubsystemType> seen;
  std::vector<SubsystemType> work;
  auto push = [&](SubsystemType s) {
    if (seen.insert(s).second) work.push_back(std::move(s));
  };
  push(SubsystemType::of(t));
  push(SubsystemType{});
  while (!work.empty()) {
    SubsystemType cur = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 0; i < cur.factors().size(); ++i) {
      if (i > 0 && cur.factors()[i] == cur.factors()[i - 1]) continue;
      for (const auto& o : deletion_outcomes(cur.factors()[i])) push(cur.replaced(i, o));
    }
  }
  std::lock_guard lock(caches().mutex);
  return caches().closures.emplace(t, std::move(seen)).first->second;
}

namespace {

bool reachable(const CartanType& t, const SubsystemType& s);

// Distributes the factors of `s` over the components of `outcome`, each
// component receiving a nonempty part reachable from it.
bool distribute(const std::vector<CartanType>& comps, const std::vector<CartanType>& factors,
                std::size_t next, std::vector<std::vector<CartanType>>& parts,
                std::vector<int>& budget) {
  if (next == factors.size()) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (parts[c].empty()) return false;
      std::vector<std::pair<Series, int>> raw;
      for (const auto& f : parts[c]) raw.emplace_back(f.series(), f.rank());
      if (!reachable(comps[c], SubsystemType::from_factors(raw))) return false;
    }
    return true;
  }
  const auto& f = factors[next];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (budget[c] < f.rank()) continue;
    parts[c].push_back(f);
    budget[c] -= f.rank();
    bool ok = distribute(comps, factors, next + 1, parts, budget);
    budget[c] += f.rank();
    parts[c].pop_back();
    if (ok) return true;
  }
  return false;
}

bool reachable(const CartanType& t, const SubsystemType& s) {
  if (s.empty()) return true;
  const SubsystemType self = SubsystemType::of(t);
  if (s == self) return true;
  if (s.rank() > t.rank() || t.is_torus()) return false;
  {
    std::lock_guard lock(caches().mutex);
    auto it = caches().reachable.find({t, s});
    if (it != caches().reachable.end()) return it->second;
  }
  bool found = false;
  const int nfactors = static_cast<int>(s.factors().size());
  for (const auto& outcome : deletion_outcomes(t, nfactors)) {
    if (outcome == self || outcome.empty() || outcome.rank() < s.rank()) continue;
    const auto& comps = outcome.factors();
    std::vector<std::vector<CartanType>> parts(comps.size());
    std::vector<int> budget;
    for (const auto& c : comps) budget.push_back(c.rank());
    if (distribute(comps, s.factors(), 0, parts, budget)) {
      found = true;
      break;
    }
  }
  std::lock_guard lock(caches().mutex);
  caches().reachable[{t, s}] = found;
  return found;
}

}  // namespace

bool is_pseudo_levi(const CartanType& t, const SubsystemType& s) {
  if (t.is_torus()) return s.empty();
  return reachable(t, s);
}

}  // namespace strata
