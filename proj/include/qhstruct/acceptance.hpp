#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhstruct/binary_tree.hpp"
#include "qhstruct/counting.hpp"
#include "qhstruct/deconcat.hpp"
#include "qhstruct/io.hpp"
#include "qhstruct/order.hpp"
#include "qhstruct/qh_poset.hpp"
#include "qhstruct/quiver.hpp"
#include "qhstruct/standard.hpp"

namespace qhstruct::accept {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

using qhstruct::detail::components;

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& msg) {
    if (ok && !cond) {
      ok = false;
      why = msg;
    }
  }
};

// The worked quiver 1 -> 2 <- 3 <- 4 -> 5.
inline Quiver worked_quiver() {
  return Quiver(5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}});
}

// Catalog quivers with at most `max_n` vertices, used by the order-level and
// duality criteria.
inline std::vector<std::pair<std::string, Quiver>> small_catalog(int max_n) {
  std::vector<std::pair<std::string, Quiver>> out;
  auto add = [&](const std::string& name, const Quiver& q) {
    if (q.n <= max_n) out.emplace_back(name, q);
  };
  for (int n = 1; n <= max_n; ++n) add("A" + std::to_string(n), make_A(n));
  for (int n = 3; n <= 5; ++n) add("K" + std::to_string(n), make_K(n));
  add("Z4", make_Z(4));
  add("Z6", make_Z(6));
  add("Dtilde4", make_Dtilde(4));
  add("Dtilde5", make_Dtilde(5));
  for (int n = 4; n <= 6; ++n) {
    add("D1" + std::to_string(n), make_star(n - 3, 1, 1));
    add("D2" + std::to_string(n), make_star(1, n - 3, 1));
  }
  add("Q(1,2,2)", make_star(1, 2, 2));
  add("Q(2,2,1)", make_star(2, 2, 1));
  add("W", worked_quiver());
  return out;
}

// Canonical encoding of a directed tree up to isomorphism: root at the
// center(s) of the underlying tree, encode subtrees recursively with
// edge-direction flags, sort sibling encodings.
inline std::string directed_tree_canon(int n,
                                       const std::vector<std::pair<int, int>>& arrows) {
  if (n == 1) return "1:()";
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (auto [u, v] : arrows) {
    adj[u].push_back({v, 1});
    adj[v].push_back({u, 0});
  }
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = (int)adj[v].size();
  std::vector<int> layer, next;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    for (int v : layer) removed[v] = 1;
    remaining -= (int)layer.size();
    next.clear();
    for (int v : layer)
      for (auto [w, d] : adj[v])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    layer.swap(next);
  }
  std::function<std::string(int, int)> enc = [&](int v, int parent) -> std::string {
    std::vector<std::string> kids;
    for (auto [w, d] : adj[v])
      if (w != parent) kids.push_back((d ? ">" : "<") + enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const std::string& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int v : layer) {
    std::string s = enc(v, -1);
    if (best.empty() || s < best) best = s;
  }
  return std::to_string(n) + ":" + best;
}

// All directed tree quivers with <= max_n vertices, one per isomorphism
// class (undirected trees via Pruefer sequences, then all orientations,
// deduplicated by the canonical encoding).
inline const std::vector<Quiver>& tree_quivers_upto(int max_n) {
  static std::map<int, std::vector<Quiver>> cache;
  auto it = cache.find(max_n);
  if (it != cache.end()) return it->second;

  std::vector<Quiver> result;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<std::pair<int, int>>> edges_list;
    if (n == 1) {
      edges_list.push_back({});
    } else if (n == 2) {
      edges_list.push_back({{0, 1}});
    } else {
      std::vector<int> pruefer(n - 2, 0);
      for (;;) {
        // decode
        std::vector<int> deg(n, 1);
        for (int v : pruefer) deg[v]++;
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
          if (deg[v] == 1) leaves.insert(v);
        for (int v : pruefer) {
          int leaf = *leaves.begin();
          leaves.erase(leaves.begin());
          edges.emplace_back(leaf, v);
          if (--deg[v] == 1) leaves.insert(v);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        edges_list.push_back(std::move(edges));
        // next sequence
        int k = n - 3;
        while (k >= 0 && pruefer[k] == n - 1) pruefer[k--] = 0;
        if (k < 0) break;
        pruefer[k]++;
      }
    }

    std::set<std::string> canon_seen;
    for (const auto& edges : edges_list) {
      int e = (int)edges.size();
      for (int mask = 0; mask < (1 << e); ++mask) {
        std::vector<std::pair<int, int>> arrows;
        for (int i = 0; i < e; ++i)
          arrows.push_back((mask >> i) & 1
                               ? std::make_pair(edges[i].second, edges[i].first)
                               : edges[i]);
        if (canon_seen.insert(directed_tree_canon(n, arrows)).second)
          result.push_back(Quiver(n, arrows));
      }
    }
  }
  return cache.emplace(max_n, std::move(result)).first->second;
}

// All orientations of the star tree with the given arm lengths (arms grown
// from a central vertex), as raw labeled quivers.
inline std::vector<Quiver> star_orientations(const std::vector<int>& arms) {
  int n = 1 + std::accumulate(arms.begin(), arms.end(), 0);
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int len : arms) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  std::vector<Quiver> out;
  for (int mask = 0; mask < (1 << edges.size()); ++mask) {
    std::vector<std::pair<int, int>> arrows;
    for (std::size_t i = 0; i < edges.size(); ++i)
      arrows.push_back((mask >> i) & 1
                           ? std::make_pair(edges[i].second, edges[i].first)
                           : edges[i]);
    out.push_back(Quiver(n, arrows));
  }
  return out;
}

inline std::unordered_map<std::vector<std::uint64_t>, int, VecU64Hash>
key_index(const QhPoset& p) {
  std::unordered_map<std::vector<std::uint64_t>, int, VecU64Hash> idx;
  for (int i = 0; i < p.size(); ++i) idx.emplace(p.structures[i].key, i);
  return idx;
}

// Vertices of the equioriented segment `mask` of q in path order.
inline std::vector<int> segment_path(const Quiver& q, Vset mask) {
  Quiver qr = restrict_to(q, mask);
  std::vector<int> verts{lowest(mask & sources(qr))};
  while ((int)verts.size() < popcount(mask))
    for (auto [u, v] : qr.arrows)
      if (u == verts.back()) {
        verts.push_back(v);
        break;
      }
  return verts;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Criteria
// --------------------------------------------------------------------------

inline CriterionResult criterion_1() {
  detail::Check c;
  for (int n = 1; n <= 7; ++n) {
    QhPoset p = enumerate_structures(make_A(n));
    c.require(BigInt(p.size()) == catalan(n),
              "A" + std::to_string(n) + ": " + std::to_string(p.size()) +
                  " structures, expected c_" + std::to_string(n));
  }
  return {1, "type A counts |qh.str| = c_n, n = 1..7", c.ok, c.why};
}

inline CriterionResult criterion_2() {
  detail::Check c;
  for (int n = 2; n <= 6; ++n) {
    TreePoset tp = tamari_poset(n);
    QhPoset qp = enumerate_structures(make_A(n));
    auto idx = detail::key_index(qp);
    std::vector<int> map;
    for (const BinaryTree& t : tp.trees) {
      auto key = standard_system(tree_to_order(t), qp.quiver).key();
      auto it = idx.find(key);
      c.require(it != idx.end(), "tree class missing for n=" + std::to_string(n));
      map.push_back(it == idx.end() ? 0 : it->second);
    }
    if (!c.ok) break;
    c.require(poset_isomorphic_via(map, tp.leq, qp.leq),
              "Tamari(" + std::to_string(n) + ") != qh.str(A" +
                  std::to_string(n) + ") under the tree map");
  }
  return {2, "Tamari(n) = qh.str(Lambda_n) via trees, n = 2..6", c.ok, c.why};
}

inline CriterionResult criterion_3() {
  detail::Check c;
  Quiver w = detail::worked_quiver();
  QhPoset qp = enumerate_structures(w);
  c.require(qp.size() == 20, "expected 20 structures, got " +
                                 std::to_string(qp.size()));
  Deconcatenation d = iterated_typeA(w);
  c.require(d.parts.size() == 3, "expected 3 segments");
  if (!c.ok) return {3, "worked example 1->2<-3<-4->5", c.ok, c.why};

  auto idx = detail::key_index(qp);
  std::vector<TreePoset> tam;
  std::vector<std::vector<int>> paths;
  for (const DeconcatPart& part : d.parts) {
    tam.push_back(tamari_poset(popcount(part.vertices)));
    paths.push_back(detail::segment_path(w, part.vertices));
  }
  // map a tuple of trees to a structure of the whole quiver through psi
  std::vector<int> sizes{(int)tam[0].trees.size(), (int)tam[1].trees.size(),
                         (int)tam[2].trees.size()};
  c.require(sizes[0] * sizes[1] * sizes[2] == 20, "product 2*5*2 expected");
  int total = sizes[0] * sizes[1] * sizes[2];
  std::vector<int> map(total, -1);
  std::vector<std::array<int, 3>> tuples(total);
  for (int a = 0; a < sizes[0]; ++a)
    for (int b = 0; b < sizes[1]; ++b)
      for (int e = 0; e < sizes[2]; ++e) {
        std::array<int, 3> tup{a, b, e};
        std::vector<QhStructure> parts;
        for (int k = 0; k < 3; ++k) {
          PartialOrder local = tree_to_order(tam[k].trees[tup[k]]);
          PartialOrder amb(w.n);
          for (int j = 0; j < (int)paths[k].size(); ++j)
            for (int i : bits(local.below[j]))
              amb.below[paths[k][j]] |= bit(paths[k][i]);
          parts.push_back(build_structure(amb, w, d.parts[k].vertices));
        }
        QhStructure glued = psi(parts, d, w);
        auto it = idx.find(glued.key);
        c.require(it != idx.end(), "psi image missing");
        int t = a * sizes[1] * sizes[2] + b * sizes[2] + e;
        map[t] = it == idx.end() ? 0 : it->second;
        tuples[t] = tup;
        // phi inverts psi
        auto back = phi(qp.structures[map[t]], d, w);
        for (int k = 0; k < 3; ++k)
          c.require(back[k].key == parts[k].key, "phi(psi(x)) != x");
      }
  BitMatrix prod(total);
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y) {
      bool le = true;
      for (int k = 0; k < 3; ++k)
        le = le && tam[k].leq.get(tuples[x][k], tuples[y][k]);
      if (le) prod.set(x, y);
    }
  c.require(poset_isomorphic_via(map, prod, qp.leq),
            "qh.str(W) is not the product Tamari(2)xTamari(3)xTamari(2)");
  return {3, "worked example: 20 structures = Tamari(2)x(3)x(2) via psi", c.ok,
          c.why};
}

inline CriterionResult criterion_4() {
  detail::Check c;
  for (int n = 4; n <= 7; ++n) {
    QhPoset d1 = enumerate_structures(make_star(n - 3, 1, 1));
    QhPoset d2 = enumerate_structures(make_star(1, n - 3, 1));
    c.require(BigInt(d1.size()) == count_D1(n),
              "D1(" + std::to_string(n) + ") mismatch");
    c.require(BigInt(d2.size()) == count_D2(n),
              "D2(" + std::to_string(n) + ") mismatch");
    c.require(count_star(n - 3, 1, 1) == count_D1(n),
              "count_star disagrees with 2c_n-3c_{n-1}");
    c.require(count_star(1, n - 3, 1) == count_D2(n),
              "count_star disagrees with 3c_{n-1}-c_{n-2}");
  }
  return {4, "type D counts, brute force vs closed forms, n = 4..7", c.ok, c.why};
}

inline CriterionResult criterion_5() {
  detail::Check c;
  struct Row {
    int r, s, t;
    long total;
    std::vector<long> cs;
  };
  const std::vector<Row> table = {
      {1, 2, 2, 106, {7, 19}},   {2, 2, 1, 130, {23}},
      {1, 3, 2, 322, {19, 52}},  {2, 3, 1, 416, {66}},
      {3, 2, 1, 453, {76}},      {1, 4, 2, 1020, {56, 154}},
      {2, 4, 1, 1368, {202}},    {4, 2, 1, 1584, {255}}};
  for (const Row& row : table) {
    StarCensus cen = star_census(row.r, row.s, row.t);
    std::string tag = "Q(" + std::to_string(row.r) + "," +
                      std::to_string(row.s) + "," + std::to_string(row.t) + ")";
    c.require(cen.total == row.total, tag + " recursion total mismatch");
    for (std::size_t k = 0; k < row.cs.size(); ++k)
      c.require(cen.c[k] == row.cs[k],
                tag + " |C_" + std::to_string(k + 1) + "| mismatch");
    QhPoset p = enumerate_structures(make_star(row.r, row.s, row.t));
    c.require(BigInt(p.size()) == cen.total, tag + " brute force mismatch");
  }
  return {5, "type E table (106..1584) by recursion and brute force", c.ok, c.why};
}

inline CriterionResult criterion_6() {
  detail::Check c;
  for (int n = 3; n <= 5; ++n) {
    QhPoset qp = enumerate_structures(make_K(n));
    c.require(BigInt(qp.size()) == factorial(n),
              "K" + std::to_string(n) + " count != n!");
    auto idx = detail::key_index(qp);
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    int m = (int)perms.size();
    auto inversions = [&](const std::vector<int>& w) {
      std::vector<int> pos(n);
      for (int k = 0; k < n; ++k) pos[w[k]] = k;
      Vset inv = 0;
      int id = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++id)
          if (pos[i] > pos[j]) inv |= bit(id);
      return inv;
    };
    BitMatrix weak(m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (!(inversions(perms[b]) & ~inversions(perms[a]))) weak.set(a, b);
    std::vector<int> map;
    for (const auto& w : perms) {
      auto key = standard_system(chain_order(n, w), qp.quiver).key();
      auto it = idx.find(key);
      c.require(it != idx.end(), "permutation class missing");
      map.push_back(it == idx.end() ? 0 : it->second);
    }
    c.require(poset_isomorphic_via(map, weak, qp.leq),
              "weak order on S_" + std::to_string(n) + " != qh.str(K" +
                  std::to_string(n) + ")");
  }
  return {6, "K_n: n! structures, poset = weak order on S_n, n = 3..5", c.ok,
          c.why};
}

inline CriterionResult criterion_7() {
  detail::Check c;
  auto expect_lattice = [&](const Quiver& q, const std::string& tag) {
    QhPoset p = enumerate_structures(q);
    c.require(is_lattice(p).lattice, tag + " should be a lattice");
  };
  for (int n = 1; n <= 7; ++n)
    for (const Quiver& q : detail::star_orientations({n - 1}))
      expect_lattice(q, "A" + std::to_string(n) + " orientation");
  for (int n = 4; n <= 7; ++n)
    for (const Quiver& q : detail::star_orientations({n - 3, 1, 1}))
      expect_lattice(q, "D" + std::to_string(n) + " orientation");
  for (const Quiver& q : detail::star_orientations({1, 2, 2}))
    expect_lattice(q, "E6 orientation");
  for (const Quiver& q : detail::star_orientations({1, 2, 3}))
    expect_lattice(q, "E7 orientation");

  for (int n : {4, 5}) {
    Quiver q = make_Dtilde(n);
    c.require(!is_lattice(enumerate_structures(q)).lattice,
              "Dtilde" + std::to_string(n) + " should not be a lattice");
    c.require(has_Dtilde_subquiver(q), "Dtilde detection failed on itself");
    c.require(has_Zn_full_subposet(reachability(q)) == std::optional<int>(4),
              "Z4 not found in Dtilde");
  }
  for (int n : {4, 6}) {
    Quiver q = make_Z(n);
    c.require(!is_lattice(enumerate_structures(q)).lattice,
              "Z" + std::to_string(n) + " should not be a lattice");
    c.require(has_Zn_full_subposet(reachability(q)) == std::optional<int>(n),
              "Z" + std::to_string(n) + " self-detection failed");
  }

  for (const Quiver& q : detail::tree_quivers_upto(6)) {
    bool lattice = is_lattice(enumerate_structures(q)).lattice;
    bool dtilde = has_Dtilde_subquiver(q);
    auto zn = has_Zn_full_subposet(reachability(q));
    c.require(lattice == !dtilde,
              "lattice <=> no Dtilde failed on a tree with " +
                  std::to_string(q.n) + " vertices");
    c.require(lattice == !zn.has_value(),
              "lattice <=> no Z_n failed on a tree with " +
                  std::to_string(q.n) + " vertices");
  }
  return {7, "lattice iff no Dtilde / no Z_n (Dynkin, Dtilde, Z, all trees <= 6)",
          c.ok, c.why};
}

inline CriterionResult criterion_8() {
  detail::Check c;
  for (const Quiver& q : detail::tree_quivers_upto(6)) {
    if (has_Dtilde_subquiver(q)) continue;
    QhPoset p = enumerate_structures(q);
    auto idx = detail::key_index(p);
    for (int s = 0; s < p.size() && c.ok; ++s)
      for (int t = s; t < p.size() && c.ok; ++t) {
        PartialOrder fm = meet_formula(p.structures[s].min_order,
                                       p.structures[t].min_order, q);
        PartialOrder fj = join_formula(p.structures[s].min_order,
                                       p.structures[t].min_order, q);
        auto bm = meet_of(p, s, t);
        auto bj = join_of(p, s, t);
        c.require(bm && bj, "lattice meet/join missing on a Dtilde-free tree");
        if (!c.ok) break;
        auto fm_key = standard_system(fm, q).key();
        auto fj_key = standard_system(fj, q).key();
        c.require(idx.count(fm_key) && idx.at(fm_key) == *bm,
                  "meet formula disagrees with brute-force meet");
        c.require(idx.count(fj_key) && idx.at(fj_key) == *bj,
                  "join formula disagrees with brute-force join");
      }
    if (!c.ok) break;
  }
  return {8, "meet/join formulas match lattice meets/joins on all trees <= 6",
          c.ok, c.why};
}

inline CriterionResult criterion_9() {
  detail::Check c;
  std::vector<std::pair<std::string, Quiver>> quivers = detail::small_catalog(6);
  for (const Quiver& q : detail::tree_quivers_upto(6))
    quivers.emplace_back("tree/" + std::to_string(q.n), q);
  for (const auto& [name, q] : quivers) {
    std::vector<int> verts(q.n);
    std::iota(verts.begin(), verts.end(), 0);
    struct Class {
      PartialOrder min;
      std::vector<Vset> inter;
    };
    std::unordered_map<std::vector<std::uint64_t>, Class, VecU64Hash> classes;
    for_each_permutation(verts, [&](const std::vector<int>& perm) {
      PartialOrder total = chain_order(q.n, perm);
      StandardSystem sys = standard_system(total, q);
      auto key = sys.key();
      auto it = classes.find(key);
      if (it == classes.end()) {
        Class cl;
        cl.min = minimal_from(dec_inc(sys));
        cl.inter = total.below;
        classes.emplace(key, std::move(cl));
        it = classes.find(key);
      } else {
        for (int v = 0; v < q.n; ++v) it->second.inter[v] &= total.below[v];
      }
      c.require(is_refinement(total, it->second.min),
                name + ": (Dec u Inc)^tc not contained in a class member");
    });
    for (auto& [key, cl] : classes) {
      c.require(standard_system(cl.min, q).key() == key,
                name + ": minimal order is not equivalent to its class");
      c.require(cl.inter == cl.min.below,
                name + ": minimal order != intersection of class total orders");
      c.require(minimal_adapted(cl.min, q) == cl.min,
                name + ": minimal_adapted is not idempotent");
    }
  }
  return {9, "minimal orders: containment, equivalence, intersection (n <= 6)",
          c.ok, c.why};
}

inline CriterionResult criterion_10() {
  detail::Check c;
  for (int n = 1; n <= 8 && c.ok; ++n) {
    Quiver q = make_A(n);
    for_each_tree(n, [&](const BinaryTree& t) {
      if (!c.ok) return;
      std::vector<Vset> lhs = tilting_supports(tree_to_order(t), q);
      std::vector<Vset> rhs = tree_to_tilting(t);
      c.require(lhs == rhs,
                "tilting_supports(tree_to_order) != tree_to_tilting at n=" +
                    std::to_string(n));
    });
  }
  // down-set formula vs recursive push-out assembly on every type A
  // orientation
  for (int n = 2; n <= 6 && c.ok; ++n)
    for (const Quiver& q : detail::star_orientations({n - 1})) {
      QhPoset p = enumerate_structures(q);
      for (const QhStructure& s : p.structures) {
        std::vector<Vset> direct = tilting_supports(s.min_order, q);
        std::vector<Vset> rec = tree_tilting_supports(q, s.min_order);
        c.require(direct == rec,
                  "push-out assembly disagrees with the down-set formula");
        if (!c.ok) break;
      }
      if (!c.ok) break;
    }
  return {10, "tilting commutes with the tree bijection; supp T(i) = downset",
          c.ok, c.why};
}

inline CriterionResult criterion_11() {
  detail::Check c;
  // all 5-element diamond-free posets, one per isomorphism class
  std::vector<ReachPoset> posets;
  {
    const int n = 5;
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) all_pairs.emplace_back(i, j);
    std::vector<std::vector<int>> perms;
    std::vector<int> pp(n);
    std::iota(pp.begin(), pp.end(), 0);
    do perms.push_back(pp);
    while (std::next_permutation(pp.begin(), pp.end()));
    std::set<std::vector<Vset>> canon_seen;
    for (std::uint32_t mask = 0; mask < (1u << all_pairs.size()); ++mask) {
      std::vector<Vset> up(n);
      for (int v = 0; v < n; ++v) up[v] = bit(v);
      bool anti = true;
      for (std::size_t k = 0; k < all_pairs.size(); ++k)
        if ((mask >> k) & 1) up[all_pairs[k].first] |= bit(all_pairs[k].second);
      for (int v = 0; v < n && anti; ++v)
        for (int wv : bits(up[v] & ~bit(v)))
          if (has(up[wv], v)) {
            anti = false;
            break;
          }
      if (!anti) continue;
      bool closed = true;
      for (int v = 0; v < n && closed; ++v)
        for (int wv : bits(up[v]))
          if (up[wv] & ~up[v]) {
            closed = false;
            break;
          }
      if (!closed) continue;
      ReachPoset p{n, up};
      if (!diamond_free(p)) continue;
      std::vector<Vset> best;
      for (const auto& pm : perms) {
        std::vector<Vset> relab(n, 0);
        for (int v = 0; v < n; ++v)
          for (int wv : bits(up[v])) relab[pm[v]] |= bit(pm[wv]);
        if (best.empty() || relab < best) best = relab;
      }
      if (canon_seen.insert(best).second) posets.push_back(std::move(p));
    }
  }

  for (const ReachPoset& p : posets) {
    Quiver hq = hasse(p);
    QhPoset amb = enumerate_structures(hq);
    auto amb_idx = detail::key_index(amb);
    for (Vset subset = 0; subset < 32 && c.ok; ++subset) {
      if (popcount(subset) != 3) continue;
      // the induced subposet has its own Hasse quiver (covers may skip over
      // removed vertices)
      ReachPoset induced{p.n, std::vector<Vset>(p.n)};
      for (int v = 0; v < p.n; ++v)
        induced.up[v] = has(subset, v) ? (p.up[v] & subset) : bit(v);
      Quiver sub_hasse = hasse(induced);
      QhPoset sub = enumerate_structures(sub_hasse, subset);
      std::vector<int> map(sub.size(), -1);
      for (int i = 0; i < sub.size(); ++i) {
        PartialOrder lifted = lift_order(p, subset, sub.structures[i].min_order);
        c.require(is_adapted(lifted, hq), "lifted order is not adapted");
        StandardSystem sys = standard_system(lifted, hq);
        for (int r : bits(all_of(p.n) & ~subset))
          c.require(sys.delta_supp[r] == bit(r),
                    "lifted standard at an outside vertex is not simple");
        auto it = amb_idx.find(sys.key());
        c.require(it != amb_idx.end(), "lift misses qh.str of the ambient poset");
        if (it == amb_idx.end()) break;
        map[i] = it->second;
        // well-defined: lifting a total refinement lands in the same class
        PartialOrder refined = chain_order(
            p.n, linear_extension(sub.structures[i].min_order, subset));
        PartialOrder lifted2 = lift_order(p, subset, restrict(refined, subset));
        c.require(standard_system(lifted2, hq).key() == sys.key(),
                  "lift depends on the representative");
      }
      if (!c.ok) break;
      for (int i = 0; i < sub.size(); ++i)
        for (int j = 0; j < sub.size(); ++j) {
          if (i != j)
            c.require(map[i] != map[j], "lift is not injective");
          c.require(sub.leq.get(i, j) == amb.leq.get(map[i], map[j]),
                    "lift is not full");
        }
      // interval-preserving
      std::vector<int> pre(amb.size(), -1);
      for (int i = 0; i < sub.size(); ++i) pre[map[i]] = i;
      for (int a = 0; a < sub.size() && c.ok; ++a)
        for (int b = 0; b < sub.size() && c.ok; ++b) {
          if (!sub.leq.get(a, b)) continue;
          for (int z = 0; z < amb.size(); ++z)
            if (amb.leq.get(map[a], z) && amb.leq.get(z, map[b])) {
              bool hit = pre[z] >= 0 && sub.leq.get(a, pre[z]) &&
                         sub.leq.get(pre[z], b);
              c.require(hit, "lift is not interval-preserving");
              if (!c.ok) break;
            }
        }
    }
    if (!c.ok) break;
  }
  std::string note = "(" + std::to_string(posets.size()) + " poset classes)";
  return {11, "lifting along 3-element full subposets of 5-element posets " + note,
          c.ok, c.why};
}

inline CriterionResult criterion_12() {
  detail::Check c;
  for (const auto& [name, q] : detail::small_catalog(6))
    c.require(opposite_check(q), name + ": opposite check failed");
  return {12, "duality: qh.str(A) anti-isomorphic to qh.str(A^op), catalog <= 6",
          c.ok, c.why};
}

inline bool run_all(const std::function<void(const CriterionResult&)>& report) {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::function<CriterionResult()>> criteria = {
      criterion_1, criterion_2, criterion_3,  criterion_4,
      criterion_5, criterion_6, criterion_7,  criterion_8,
      criterion_9, criterion_10, criterion_11, criterion_12};
  bool all = true;
  for (const auto& fn : criteria) {
    auto t0 = Clock::now();
    CriterionResult r = fn();
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    all = all && r.pass;
    report(r);
  }
  return all;
}

}  // namespace qhstruct::accept
