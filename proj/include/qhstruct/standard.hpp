#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

#include "qhstruct/order.hpp"
#include "qhstruct/quiver.hpp"
#include "qhstruct/util.hpp"

namespace qhstruct {

/// Composition-factor data of the standard modules Δ(i) and costandard
/// modules ∇(i) attached to a partial order on the vertices. For a path
/// algebra, Δ(i) has basis the paths from i confined to the strict down-set
/// of i, so supports and multiplicities are plain path counts.
struct StandardSystem {
  int n = 0;
  Vset active = 0;
  std::vector<Vset> delta_supp, nabla_supp;
  std::vector<std::vector<std::uint64_t>> delta_dim, nabla_dim;  // n x n

  /// Canonical equivalence-class key: the active-vertex-ordered Δ and ∇
  /// multiplicity matrices, flattened.
  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> k;
    k.reserve(2 * std::size_t(popcount(active)) * popcount(active));
    for (int i : bits(active))
      for (int j : bits(active)) k.push_back(delta_dim[i][j]);
    for (int i : bits(active))
      for (int j : bits(active)) k.push_back(nabla_dim[i][j]);
    return k;
  }

  bool operator==(const StandardSystem& o) const {
    return n == o.n && active == o.active && delta_dim == o.delta_dim &&
           nabla_dim == o.nabla_dim;
  }
};

namespace detail {

/// Precomputed quiver data for repeated confined-path DP runs.
struct PathEngine {
  int n = 0;
  Vset active = 0;
  std::vector<std::pair<int, int>> fwd;  // arrows sorted by topo position of source
  std::vector<std::pair<int, int>> bwd;  // arrows sorted by reverse topo of target

  PathEngine() = default;
  PathEngine(const Quiver& q, Vset mask) : n(q.n), active(mask) {
    reject_parallel_arrows(q);
    auto order = q.topo_order();
    std::vector<int> pos(q.n);
    for (int k = 0; k < q.n; ++k) pos[order[k]] = k;
    for (auto [u, v] : q.arrows)
      if (has(mask, u) && has(mask, v)) {
        fwd.emplace_back(u, v);
        bwd.emplace_back(u, v);
      }
    std::sort(fwd.begin(), fwd.end(), [&](auto a, auto b) {
      return pos[a.first] < pos[b.first];
    });
    std::sort(bwd.begin(), bwd.end(), [&](auto a, auto b) {
      return pos[a.second] > pos[b.second];
    });
  }

  // counts[j] = number of paths i -> j inside `allowed`
  void paths_from(int i, Vset allowed, std::uint64_t* counts) const {
    for (int v : bits(active)) counts[v] = 0;
    counts[i] = 1;
    for (auto [u, v] : fwd)
      if (counts[u] && has(allowed, u) && has(allowed, v)) counts[v] += counts[u];
  }

  // counts[j] = number of paths j -> i inside `allowed`
  void paths_into(int i, Vset allowed, std::uint64_t* counts) const {
    for (int v : bits(active)) counts[v] = 0;
    counts[i] = 1;
    for (auto [u, v] : bwd)
      if (counts[v] && has(allowed, u) && has(allowed, v)) counts[u] += counts[v];
  }
};

}  // namespace detail

/// Δ and ∇ data of (o, q) on the active vertex set.
inline StandardSystem standard_system(const PartialOrder& o, const Quiver& q,
                                      Vset active = 0) {
  Vset mask = active ? active : all_of(q.n);
  detail::PathEngine eng(q, mask);
  StandardSystem sys;
  sys.n = q.n;
  sys.active = mask;
  sys.delta_supp.assign(q.n, 0);
  sys.nabla_supp.assign(q.n, 0);
  sys.delta_dim.assign(q.n, std::vector<std::uint64_t>(q.n, 0));
  sys.nabla_dim.assign(q.n, std::vector<std::uint64_t>(q.n, 0));
  for (int i : bits(mask)) {
    Vset allowed = (o.below[i] & mask) | bit(i);
    eng.paths_from(i, allowed, sys.delta_dim[i].data());
    eng.paths_into(i, allowed, sys.nabla_dim[i].data());
    for (int j : bits(mask)) {
      if (sys.delta_dim[i][j]) sys.delta_supp[i] |= bit(j);
      if (sys.nabla_dim[i][j]) sys.nabla_supp[i] |= bit(j);
    }
    assert(sys.delta_dim[i][i] == 1 && sys.nabla_dim[i][i] == 1);
  }
  return sys;
}

/// Dec(⊲) and Inc(⊲) as strict relations, stored by their down-sets:
/// dec_below[j] = {i : [Δ(j):S(i)] != 0, i != j} and dually.
struct DecInc {
  int n = 0;
  std::vector<Vset> dec_below, inc_below;

  std::vector<std::pair<int, int>> dec_pairs() const { return pairs(dec_below); }
  std::vector<std::pair<int, int>> inc_pairs() const { return pairs(inc_below); }

  /// dec ⊆ other.dec (strict parts).
  bool dec_subset(const DecInc& other) const {
    for (int j = 0; j < n; ++j)
      if (dec_below[j] & ~other.dec_below[j]) return false;
    return true;
  }
  bool inc_subset(const DecInc& other) const {
    for (int j = 0; j < n; ++j)
      if (inc_below[j] & ~other.inc_below[j]) return false;
    return true;
  }

 private:
  static std::vector<std::pair<int, int>> pairs(const std::vector<Vset>& rel) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < (int)rel.size(); ++j)
      for (int i : bits(rel[j])) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline DecInc dec_inc(const StandardSystem& sys) {
  DecInc d;
  d.n = sys.n;
  d.dec_below.assign(sys.n, 0);
  d.inc_below.assign(sys.n, 0);
  for (int j : bits(sys.active)) {
    d.dec_below[j] = sys.delta_supp[j] & ~bit(j);
    d.inc_below[j] = sys.nabla_supp[j] & ~bit(j);
  }
  return d;
}

/// ⊲_m = (Dec ∪ Inc)^tc. A CycleError here is a bug for adapted input.
inline PartialOrder minimal_from(const DecInc& d) {
  std::vector<std::pair<int, int>> pairs = d.dec_pairs();
  auto inc = d.inc_pairs();
  pairs.insert(pairs.end(), inc.begin(), inc.end());
  return transitive_closure(d.n, pairs);
}

/// Minimal adapted order of the class of (o, q).
inline PartialOrder minimal_adapted(const PartialOrder& o, const Quiver& q,
                                    Vset active = 0) {
  StandardSystem sys = standard_system(o, q, active);
  PartialOrder m = minimal_from(dec_inc(sys));
  assert(is_refinement(o, m));  // ⊲_m ⊆ ⊲
  return m;
}

/// Same quasi-hereditary structure: full standard/costandard data coincide.
inline bool equivalent(const PartialOrder& o1, const PartialOrder& o2,
                       const Quiver& q, Vset active = 0) {
  StandardSystem s1 = standard_system(o1, q, active);
  StandardSystem s2 = standard_system(o2, q, active);
  bool eq = s1 == s2;
  assert(eq == (minimal_from(dec_inc(s1)) == minimal_from(dec_inc(s2))));
  return eq;
}

inline bool is_type_a(const Quiver& q, Vset active = 0) {
  Vset mask = active ? active : all_of(q.n);
  if (popcount(mask) == 0) return false;
  Quiver qr = restrict_to(q, mask);
  if (!underlying_connected(qr, mask)) return false;
  int arrow_cnt = (int)qr.arrows.size();
  if (arrow_cnt != popcount(mask) - 1) return false;
  std::vector<int> deg(q.n, 0);
  for (auto [u, v] : qr.arrows) deg[u]++, deg[v]++;
  for (int v : bits(mask))
    if (deg[v] > 2) return false;
  return true;
}

/// Characteristic tilting composition supports for a type A quiver:
/// supp T(i) = {j : j ⊲_m i} ∪ {i}. Only valid for minimal adapted orders
/// on type A; the general tree case is assembled in deconcat.hpp.
inline std::vector<Vset> tilting_supports(const PartialOrder& min_order,
                                          const Quiver& q, Vset active = 0) {
  Vset mask = active ? active : all_of(q.n);
  if (!is_type_a(q, mask))
    throw UnsupportedError(
        "the down-set support formula is proved for type A quivers only");
  std::vector<Vset> supp(q.n, 0);
  for (int i : bits(mask)) supp[i] = (min_order.below[i] & mask) | bit(i);
  return supp;
}

}  // namespace qhstruct
