#pragma once

#include <cassert>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qhstruct/order.hpp"
#include "qhstruct/util.hpp"

namespace qhstruct {

/// Rooted binary tree with the unique in-order (binary search) labeling by
/// 1..n. left[v]/right[v] hold child labels, 0 = none; index 0 unused.
struct BinaryTree {
  int n = 0;
  int root = 0;
  std::vector<int> left, right;

  BinaryTree() = default;
  explicit BinaryTree(int n) : n(n), root(0), left(n + 1, 0), right(n + 1, 0) {}

  bool operator==(const BinaryTree& o) const {
    return n == o.n && root == o.root && left == o.left && right == o.right;
  }

  /// Labels of the subtree rooted at v form the interval [min, max].
  std::pair<int, int> subtree_interval(int v) const {
    int lo = v, hi = v;
    while (left[lo]) lo = left[lo];
    while (right[hi]) hi = right[hi];
    return {lo, hi};
  }

  /// `(L)R` encoding: empty tree is "", a node is "(" + left + ")" + right.
  std::string to_parens() const {
    std::function<std::string(int)> rec = [&](int v) -> std::string {
      if (!v) return "";
      return "(" + rec(left[v]) + ")" + rec(right[v]);
    };
    return rec(root);
  }
};

/// Streams every binary tree of size n (in-order labeled) in the recursive
/// left-size-split order: root label ascending, then left shapes, then right.
template <typename Fn>
void for_each_tree(int n, Fn&& fn) {
  if (n > 14) throw SizeError("tree enumeration capped at size 14");
  BinaryTree t(n);
  std::function<void(int, int, const std::function<void(int)>&)> gen =
      [&](int lo, int hi, const std::function<void(int)>& cont) {
        if (lo > hi) {
          cont(0);
          return;
        }
        for (int r = lo; r <= hi; ++r) {
          gen(lo, r - 1, [&, r](int lroot) {
            t.left[r] = lroot;
            gen(r + 1, hi, [&, r](int rroot) {
              t.right[r] = rroot;
              cont(r);
            });
          });
        }
      };
  gen(1, n, [&](int r) {
    t.root = r;
    fn(static_cast<const BinaryTree&>(t));
  });
}

inline std::vector<BinaryTree> enumerate_trees(int n) {
  if (n > 12) throw SizeError("materializing all trees is capped at size 12");
  std::vector<BinaryTree> out;
  for_each_tree(n, [&](const BinaryTree& t) { out.push_back(t); });
  return out;
}

inline BinaryTree from_parens(const std::string& s) {
  int n = 0;
  for (char c : s) {
    if (c == '(')
      ++n;
    else if (c != ')')
      throw Error("tree string may contain only parentheses");
  }
  BinaryTree t(n);
  std::size_t pos = 0;
  int next_label = 0;  // assigned between the left and right parse = in-order
  std::function<int()> rec = [&]() -> int {
    if (pos >= s.size() || s[pos] != '(') return 0;
    ++pos;
    int l = rec();
    if (pos >= s.size() || s[pos] != ')')
      throw Error("unbalanced parentheses in tree string");
    ++pos;
    int label = ++next_label;
    t.left[label] = l;
    t.right[label] = rec();
    return label;
  };
  t.root = rec();
  if (pos != s.size()) throw Error("unbalanced parentheses in tree string");
  return t;
}

/// ⊲_T: i ⊲ j iff i labels a vertex in the (strict) subtree of j.
inline PartialOrder tree_to_order(const BinaryTree& t) {
  PartialOrder o(t.n);
  std::function<Vset(int)> rec = [&](int v) -> Vset {
    if (!v) return 0;
    Vset sub = rec(t.left[v]) | rec(t.right[v]);
    o.below[v - 1] = sub;  // orders are 0-based
    return sub | bit(v - 1);
  };
  rec(t.root);
  return o;
}

/// Inverse of tree_to_order; throws NotTreeOrderError naming the violated
/// characterization condition.
inline BinaryTree order_to_tree(const PartialOrder& o) {
  int n = o.n;
  // condition (2): for i<j<k, i ⊲ k implies j ⊲ k, and k ⊲ i implies j ⊲ i
  for (int k = 0; k < n; ++k)
    for (int i : bits(o.below[k]))
      for (int j = std::min(i, k) + 1; j < std::max(i, k); ++j)
        if (!has(o.below[k], j))
          throw NotTreeOrderError(
              2, "interval condition fails: " + std::to_string(i + 1) + "<" +
                     std::to_string(j + 1) + "<" + std::to_string(k + 1));
  // condition (1): incomparable i<j need k in between with i ⊲ k and j ⊲ k
  auto up = o.above_sets();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (o.comparable(i, j)) continue;
      Vset between = 0;
      for (int k = i + 1; k < j; ++k) between |= bit(k);
      if (!(between & up[i] & up[j]))
        throw NotTreeOrderError(1, "no common upper bound between " +
                                       std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1));
    }
  BinaryTree t(n);
  std::function<int(int, int)> build = [&](int lo, int hi) -> int {
    if (lo > hi) return 0;
    int root = -1;
    for (int v = lo; v <= hi; ++v) {
      Vset others = 0;
      for (int u = lo; u <= hi; ++u)
        if (u != v) others |= bit(u - 1);
      if (!(others & ~o.below[v - 1])) {  // v dominates the whole interval
        root = v;
        break;
      }
    }
    if (root < 0)
      throw NotTreeOrderError(1, "no maximum on the label interval [" +
                                     std::to_string(lo) + "," +
                                     std::to_string(hi) + "]");
    t.left[root] = build(lo, root - 1);
    t.right[root] = build(root + 1, hi);
    return root;
  };
  t.root = build(1, n);
  assert(tree_to_order(t) == o);
  return t;
}

/// Every single right rotation of t (the Tamari cover moves upward).
inline std::vector<BinaryTree> right_rotations(const BinaryTree& t) {
  std::vector<BinaryTree> out;
  std::vector<int> parent(t.n + 1, 0);
  for (int v = 1; v <= t.n; ++v) {
    if (t.left[v]) parent[t.left[v]] = v;
    if (t.right[v]) parent[t.right[v]] = v;
  }
  for (int x = 1; x <= t.n; ++x) {
    int y = t.left[x];
    if (!y) continue;
    BinaryTree r = t;
    int p = parent[x];
    r.left[x] = t.right[y];
    r.right[y] = x;
    if (p == 0)
      r.root = y;
    else if (t.left[p] == x)
      r.left[p] = y;
    else
      r.right[p] = y;
    out.push_back(r);
  }
  return out;
}

/// Tamari lattice on trees of size n: reflexive-transitive order generated by
/// right-rotation covers; bottom is the left comb.
struct TreePoset {
  std::vector<BinaryTree> trees;
  BitMatrix leq;
};

inline TreePoset tamari_poset(int n) {
  if (n > 10) throw SizeError("tamari poset capped at size 10");
  TreePoset tp;
  tp.trees = enumerate_trees(n);
  std::map<std::string, int> index;
  for (int i = 0; i < (int)tp.trees.size(); ++i)
    index[tp.trees[i].to_parens()] = i;
  int m = (int)tp.trees.size();
  std::vector<std::vector<int>> covers(m);
  std::vector<int> indeg(m, 0);
  for (int i = 0; i < m; ++i)
    for (const BinaryTree& r : right_rotations(tp.trees[i])) {
      covers[i].push_back(index.at(r.to_parens()));
      indeg[covers[i].back()]++;
    }
  // reachability along the (acyclic) rotation graph, propagated in reverse
  // topological order
  std::vector<int> topo;
  for (int i = 0; i < m; ++i)
    if (indeg[i] == 0) topo.push_back(i);
  for (std::size_t k = 0; k < topo.size(); ++k)
    for (int j : covers[topo[k]])
      if (--indeg[j] == 0) topo.push_back(j);
  assert((int)topo.size() == m);
  tp.leq = BitMatrix(m);
  for (int k = m - 1; k >= 0; --k) {
    int i = topo[k];
    tp.leq.set(i, i);
    for (int j : covers[i]) {
      const std::uint64_t* src = tp.leq.row(j);
      std::uint64_t* dst = tp.leq.row(i);
      for (int w = 0; w < tp.leq.words; ++w) dst[w] |= src[w];
    }
  }
  return tp;
}

/// Composition supports of the tilting summands attached to a tree:
/// vertex i carries the label interval of its full subtree.
inline std::vector<Vset> tree_to_tilting(const BinaryTree& t) {
  std::vector<Vset> supp(t.n, 0);
  for (int v = 1; v <= t.n; ++v) {
    auto [lo, hi] = t.subtree_interval(v);
    for (int j = lo; j <= hi; ++j) supp[v - 1] |= bit(j - 1);
  }
  return supp;
}

}  // namespace qhstruct
