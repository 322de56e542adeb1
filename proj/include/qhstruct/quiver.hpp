#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhstruct/util.hpp"

namespace qhstruct {

/// Finite acyclic quiver. Vertices are 0..n-1 internally; every constructor
/// path validates acyclicity. Parallel arrows are representable but rejected
/// by the module operations that need path/interval combinatorics.
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based

  Quiver() = default;
  Quiver(int n, std::vector<std::pair<int, int>> a)
      : n(n), arrows(std::move(a)) {
    validate();
  }

  void validate() const {
    if (n < 1 || n > kMaxVertices)
      throw SizeError("vertex count must be in 1.." +
                      std::to_string(kMaxVertices) + ", got " +
                      std::to_string(n));
    for (auto [u, v] : arrows) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error("arrow endpoint out of range: (" + std::to_string(u + 1) +
                    "," + std::to_string(v + 1) + ")");
      if (u == v)
        throw Error("loop arrow at vertex " + std::to_string(u + 1));
    }
    topo_order();  // throws on an oriented cycle
  }

  /// Topological order of the arrow digraph (Kahn, smallest label first).
  std::vector<int> topo_order() const {
    std::vector<int> indeg(n, 0), order;
    for (auto [u, v] : arrows) indeg[v]++;
    Vset ready = 0;
    for (int i = 0; i < n; ++i)
      if (indeg[i] == 0) ready |= bit(i);
    while (ready) {
      int u = lowest(ready);
      ready &= ready - 1;
      order.push_back(u);
      for (auto [a, b] : arrows)
        if (a == u && --indeg[b] == 0) ready |= bit(b);
    }
    if ((int)order.size() != n) throw Error("quiver has an oriented cycle");
    return order;
  }

  int out_degree(int v) const {
    int d = 0;
    for (auto [a, b] : arrows) d += (a == v);
    return d;
  }
  int in_degree(int v) const {
    int d = 0;
    for (auto [a, b] : arrows) d += (b == v);
    return d;
  }
};

inline bool has_parallel_arrows(const Quiver& q) {
  auto a = q.arrows;
  std::sort(a.begin(), a.end());
  return std::adjacent_find(a.begin(), a.end()) != a.end();
}

inline void reject_parallel_arrows(const Quiver& q) {
  if (has_parallel_arrows(q))
    throw ParallelArrowError("parallel arrows are not supported here");
}

inline Quiver reverse(const Quiver& q) {
  Quiver r;
  r.n = q.n;
  for (auto [u, v] : q.arrows) r.arrows.emplace_back(v, u);
  return r;
}

/// Full subquiver on `mask` (arrow endpoints both in mask); keeps ambient n.
inline Quiver restrict_to(const Quiver& q, Vset mask) {
  Quiver r;
  r.n = q.n;
  for (auto [u, v] : q.arrows)
    if (has(mask, u) && has(mask, v)) r.arrows.emplace_back(u, v);
  return r;
}

/// Reachability order (Q_0, ⇝): up[i] = {j : some directed path i ⇝ j},
/// reflexive by convention.
struct ReachPoset {
  int n = 0;
  std::vector<Vset> up;

  bool leq(int i, int j) const { return has(up[i], j); }

  std::vector<Vset> down_sets() const {
    std::vector<Vset> dn(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j : bits(up[i])) dn[j] |= bit(i);
    return dn;
  }
};

inline ReachPoset reachability(const Quiver& q) {
  ReachPoset p;
  p.n = q.n;
  p.up.assign(q.n, 0);
  for (int i = 0; i < q.n; ++i) p.up[i] = bit(i);
  auto order = q.topo_order();
  for (int k = q.n - 1; k >= 0; --k) {
    int u = order[k];
    for (auto [a, b] : q.arrows)
      if (a == u) p.up[u] |= p.up[b];
  }
  return p;
}

/// Number of directed paths i ⇝ j whose vertices all lie in `allowed`.
/// The trivial path counts when i == j ∈ allowed.
inline std::uint64_t count_paths(const Quiver& q, int i, int j, Vset allowed) {
  if (!has(allowed, i)) return 0;
  std::vector<std::uint64_t> cnt(q.n, 0);
  cnt[i] = 1;
  for (int u : q.topo_order()) {
    if (!cnt[u]) continue;
    for (auto [a, b] : q.arrows)
      if (a == u && has(allowed, b)) cnt[b] += cnt[u];
  }
  return has(allowed, j) ? cnt[j] : 0;
}

/// True iff every ordered vertex pair is joined by at most one directed path;
/// equivalently kQ is the (hereditary) incidence algebra of a diamond-free
/// reachability poset.
inline bool is_path_unique(const Quiver& q) {
  std::vector<std::vector<std::uint64_t>> cnt(q.n,
                                              std::vector<std::uint64_t>(q.n));
  auto order = q.topo_order();
  for (int s = 0; s < q.n; ++s) {
    cnt[s][s] = 1;
    for (int u : order)
      if (cnt[s][u])
        for (auto [a, b] : q.arrows)
          if (a == u) {
            cnt[s][b] += cnt[s][u];
            if (cnt[s][b] > 1) return false;
          }
  }
  return true;
}

inline bool underlying_connected(const Quiver& q, Vset within = 0) {
  Vset mask = within ? within : all_of(q.n);
  if (!mask) return true;
  Vset seen = bit(lowest(mask));
  for (;;) {
    Vset grow = seen;
    for (auto [u, v] : q.arrows)
      if (has(mask, u) && has(mask, v)) {
        if (has(seen, u)) grow |= bit(v);
        if (has(seen, v)) grow |= bit(u);
      }
    if (grow == seen) break;
    seen = grow;
  }
  return seen == mask;
}

inline bool is_tree(const Quiver& q) {
  return underlying_connected(q) && (int)q.arrows.size() == q.n - 1;
}

inline Vset sinks(const Quiver& q) {
  Vset s = all_of(q.n);
  for (auto [u, v] : q.arrows) s &= ~bit(u);
  return s;
}

inline Vset sources(const Quiver& q) {
  Vset s = all_of(q.n);
  for (auto [u, v] : q.arrows) s &= ~bit(v);
  return s;
}

/// Diamond-free test: no a ≤ b ≤ d, a ≤ c ≤ d with b, c incomparable.
inline bool diamond_free(const ReachPoset& p) {
  for (int a = 0; a < p.n; ++a)
    for (int d : bits(p.up[a] & ~bit(a))) {
      Vset interior = 0;
      for (int b : bits(p.up[a] & ~bit(a) & ~bit(d)))
        if (p.leq(b, d)) interior |= bit(b);
      for (int b : bits(interior))
        if (interior & ~p.up[b] & ~bit(b)) {
          for (int c : bits(interior & ~p.up[b] & ~bit(b)))
            if (!p.leq(c, b)) return false;
        }
    }
  return true;
}

/// Hasse reduction: the covering arrows of the reachability order.
inline Quiver hasse(const ReachPoset& p) {
  Quiver h;
  h.n = p.n;
  for (int i = 0; i < p.n; ++i)
    for (int j : bits(p.up[i] & ~bit(i))) {
      bool cover = true;
      for (int k : bits(p.up[i] & ~bit(i) & ~bit(j)))
        if (p.leq(k, j)) {
          cover = false;
          break;
        }
      if (cover) h.arrows.emplace_back(i, j);
    }
  return h;
}

// ---------------------------------------------------------------------------
// Built-in catalog.
//
//   A<n>       equioriented type A: 1 -> 2 -> ... -> n
//   K<n>       complete quiver: one arrow i -> j whenever i > j
//   Z<n>       zigzag cycle (n even): odd vertices are sources
//   Dtilde<n>  two sources -> chain -> two sinks (n+1 vertices)
//   D1<n>      Q(n-3,1,1)     D2<n>  Q(1,n-3,1)
//   Q(r,s,t)   a-chain of length r into the center, b/c-chains of lengths
//              s and t out of it
// ---------------------------------------------------------------------------

inline Quiver make_A(int n) {
  Quiver q;
  q.n = n;
  for (int i = 0; i + 1 < n; ++i) q.arrows.emplace_back(i, i + 1);
  q.validate();
  return q;
}

inline Quiver make_K(int n) {
  Quiver q;
  q.n = n;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) q.arrows.emplace_back(i, j);
  q.validate();
  return q;
}

inline Quiver make_Z(int n) {
  if (n < 4 || n % 2 != 0)
    throw Error("Z<n> needs even n >= 4, got " + std::to_string(n));
  Quiver q;
  q.n = n;
  for (int k = 0; k < n; k += 2) {  // 0-based even = 1-based odd source
    q.arrows.emplace_back(k, (k + 1) % n);
    q.arrows.emplace_back(k, (k + n - 1) % n);
  }
  q.validate();
  return q;
}

inline Quiver make_star(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0) throw Error("Q(r,s,t) needs r,s,t >= 0");
  Quiver q;
  q.n = r + s + t + 1;
  int center = r;  // 0-based; a-chain is 0..r
  for (int i = 0; i < r; ++i) q.arrows.emplace_back(i, i + 1);
  if (s > 0) {
    q.arrows.emplace_back(center, r + 1);
    for (int j = 1; j < s; ++j) q.arrows.emplace_back(r + j, r + j + 1);
  }
  if (t > 0) {
    q.arrows.emplace_back(center, r + s + 1);
    for (int k = 1; k < t; ++k)
      q.arrows.emplace_back(r + s + k, r + s + k + 1);
  }
  q.validate();
  return q;
}

inline Quiver make_Dtilde(int n) {
  if (n < 4) throw Error("Dtilde<n> needs n >= 4");
  Quiver q;
  q.n = n + 1;
  q.arrows.emplace_back(0, 2);
  q.arrows.emplace_back(1, 2);
  for (int i = 2; i + 1 < n - 1; ++i) q.arrows.emplace_back(i, i + 1);
  q.arrows.emplace_back(n - 2, n - 1);
  q.arrows.emplace_back(n - 2, n);
  q.validate();
  return q;
}

inline std::optional<Quiver> catalog(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto num = [](const std::string& s) -> std::optional<int> {
    if (s.empty()) return std::nullopt;
    for (char c : s)
      if (!isdigit((unsigned char)c)) return std::nullopt;
    return std::stoi(s);
  };
  if (name.size() >= 2 && name[0] == 'Q' && name[1] == '(' &&
      name.back() == ')') {
    std::string body = name.substr(2, name.size() - 3);
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string tok = body.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto v = num(tok);
      if (!v) return std::nullopt;
      parts.push_back(*v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (parts.size() != 3) return std::nullopt;
    return make_star(parts[0], parts[1], parts[2]);
  }
  if (name.rfind("Dtilde", 0) == 0) {
    if (auto v = num(name.substr(6))) return make_Dtilde(*v);
    return std::nullopt;
  }
  if (name.rfind("D1", 0) == 0) {
    if (auto v = num(name.substr(2)); v && *v >= 4)
      return make_star(*v - 3, 1, 1);
    return std::nullopt;
  }
  if (name.rfind("D2", 0) == 0) {
    if (auto v = num(name.substr(2)); v && *v >= 4)
      return make_star(1, *v - 3, 1);
    return std::nullopt;
  }
  if (name[0] == 'A') {
    if (auto v = num(name.substr(1))) return make_A(*v);
    return std::nullopt;
  }
  if (name[0] == 'K') {
    if (auto v = num(name.substr(1))) return make_K(*v);
    return std::nullopt;
  }
  if (name[0] == 'Z') {
    if (auto v = num(name.substr(1))) return make_Z(*v);
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace qhstruct
