#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "qhstruct/quiver.hpp"
#include "qhstruct/util.hpp"

namespace qhstruct {

/// Strict partial order on 0..n-1, transitively closed.
/// below[i] = {j : j ⊲ i} (strict down-set of i).
struct PartialOrder {
  int n = 0;
  std::vector<Vset> below;

  PartialOrder() = default;
  explicit PartialOrder(int n) : n(n), below(n, 0) {}

  bool less(int a, int b) const { return has(below[b], a); }  // a ⊲ b
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  Vset above(int a) const {
    Vset up = 0;
    for (int j = 0; j < n; ++j)
      if (has(below[j], a)) up |= bit(j);
    return up;
  }

  std::vector<Vset> above_sets() const {
    std::vector<Vset> up(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i : bits(below[j])) up[i] |= bit(j);
    return up;
  }

  /// Strict pairs (i, j) with i ⊲ j, sorted.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < n; ++j)
      for (int i : bits(below[j])) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (Vset b : below) c += popcount(b);
    return c;
  }

  bool operator==(const PartialOrder& o) const {
    return n == o.n && below == o.below;
  }
};

namespace detail {
// One cycle in the digraph of the given strict pairs, as a closed walk.
inline std::vector<int> find_cycle(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : pairs) adj[i].push_back(j);
  std::vector<int> state(n, 0), stack;
  std::vector<int> found;
  std::function<bool(int)> dfs = [&](int u) {
    state[u] = 1;
    stack.push_back(u);
    for (int v : adj[u]) {
      if (state[v] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        found.assign(it, stack.end());
        found.push_back(v);
        return true;
      }
      if (state[v] == 0 && dfs(v)) return true;
    }
    state[u] = 2;
    stack.pop_back();
    return false;
  };
  for (int u = 0; u < n; ++u)
    if (state[u] == 0 && dfs(u)) return found;
  return {};
}
}  // namespace detail

/// Smallest transitive relation containing `pairs`; throws CycleError (with a
/// witnessing cycle) if the closure would violate antisymmetry.
inline PartialOrder transitive_closure(int n,
                                       const std::vector<std::pair<int, int>>& pairs) {
  PartialOrder o(n);
  for (auto [i, j] : pairs) {
    assert(i >= 0 && i < n && j >= 0 && j < n);
    if (i != j) o.below[j] |= bit(i);
  }
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      if (has(o.below[j], k)) o.below[j] |= o.below[k];
  for (int j = 0; j < n; ++j)
    if (has(o.below[j], j)) throw CycleError(detail::find_cycle(n, pairs));
  return o;
}

inline PartialOrder intersect(const PartialOrder& o1, const PartialOrder& o2) {
  assert(o1.n == o2.n);
  PartialOrder r(o1.n);
  for (int j = 0; j < o1.n; ++j) r.below[j] = o1.below[j] & o2.below[j];
  return r;
}

/// Keeps the pairs inside `mask`, preserving vertex labels.
inline PartialOrder restrict(const PartialOrder& o, Vset mask) {
  PartialOrder r(o.n);
  for (int j : bits(mask)) r.below[j] = o.below[j] & mask;
  return r;
}

/// coarse ⊆ fine as pair sets.
inline bool is_refinement(const PartialOrder& fine, const PartialOrder& coarse) {
  assert(fine.n == coarse.n);
  for (int j = 0; j < fine.n; ++j)
    if (coarse.below[j] & ~fine.below[j]) return false;
  return true;
}

/// Total order verts[0] ⊲ verts[1] ⊲ ... on the listed vertices (other
/// vertices of 0..n-1 stay isolated).
inline PartialOrder chain_order(int n, const std::vector<int>& verts) {
  PartialOrder o(n);
  Vset seen = 0;
  for (int v : verts) {
    o.below[v] = seen;
    seen |= bit(v);
  }
  return o;
}

inline bool is_total(const PartialOrder& o, Vset mask = 0) {
  Vset m = mask ? mask : all_of(o.n);
  for (int j : bits(m))
    for (int i : bits(m & ~bit(j) & ~o.below[j]))
      if (!has(o.below[i], j)) return false;
  return true;
}

inline int default_enumeration_cap() {
  if (const char* env = std::getenv("QHSTRUCT_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10;
}

/// Calls fn(perm) for permutations of `verts` in lexicographic order,
/// visiting indices shard, shard+stride, shard+2*stride, ... of the stream.
template <typename Fn>
void for_each_permutation(std::vector<int> verts, Fn&& fn, std::size_t shard = 0,
                          std::size_t stride = 1) {
  std::sort(verts.begin(), verts.end());
  std::size_t skip = shard;
  do {
    if (skip == 0) {
      fn(static_cast<const std::vector<int>&>(verts));
      skip = stride - 1;
    } else {
      --skip;
    }
  } while (std::next_permutation(verts.begin(), verts.end()));
}

/// Lazy stream of all total orders of {0..n-1} in lexicographic permutation
/// order. Cloneable; safe to shard across workers.
class TotalOrderStream {
 public:
  explicit TotalOrderStream(int n, int cap = default_enumeration_cap())
      : perm_(n) {
    if (n > cap)
      throw SizeError("refusing to stream " + std::to_string(n) +
                      "! total orders (cap " + std::to_string(cap) +
                      "; set QHSTRUCT_CAP to override)");
    std::iota(perm_.begin(), perm_.end(), 0);
  }

  std::optional<PartialOrder> next() {
    if (done_) return std::nullopt;
    PartialOrder o = chain_order((int)perm_.size(), perm_);
    done_ = !std::next_permutation(perm_.begin(), perm_.end());
    return o;
  }

 private:
  std::vector<int> perm_;
  bool done_ = false;
};

/// Adaptedness test (weak criterion). Total orders are adapted to any
/// algebra. For a non-total order the test is decided on interval modules,
/// which is only valid when the quiver is path-unique; anything else is
/// UnsupportedError.
inline bool is_adapted(const PartialOrder& o, const Quiver& q, Vset active = 0) {
  Vset mask = active ? active : all_of(q.n);
  if (is_total(o, mask)) return true;
  Quiver qr = restrict_to(q, mask);
  if (!is_path_unique(qr))
    throw UnsupportedError(
        "adaptedness of a non-total order is only decidable here for "
        "path-unique quivers");
  ReachPoset reach = reachability(qr);
  auto dn = reach.down_sets();
  auto up = o.above_sets();
  for (int i : bits(mask))
    for (int j : bits(reach.up[i] & mask & ~bit(i))) {
      if (o.comparable(i, j)) continue;
      Vset interval = reach.up[i] & dn[j] & mask;
      if (!(interval & (up[i] | up[j]))) return false;
    }
  return true;
}

/// Deterministic linear extension (smallest label first among minimal).
inline std::vector<int> linear_extension(const PartialOrder& o, Vset mask = 0) {
  Vset m = mask ? mask : all_of(o.n);
  std::vector<Vset> rem(o.below);
  std::vector<int> out;
  Vset left = m;
  while (left) {
    int pick = -1;
    for (int v : bits(left))
      if (!(rem[v] & left)) {
        pick = v;
        break;
      }
    assert(pick >= 0);
    out.push_back(pick);
    left &= ~bit(pick);
  }
  return out;
}

}  // namespace qhstruct
