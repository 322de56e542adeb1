#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhstruct/order.hpp"
#include "qhstruct/quiver.hpp"
#include "qhstruct/standard.hpp"
#include "qhstruct/util.hpp"

namespace qhstruct {

/// One quasi-hereditary structure: an equivalence class of adapted orders,
/// carried by its canonical key, minimal adapted order and Dec/Inc data.
struct QhStructure {
  std::vector<std::uint64_t> key;
  PartialOrder min_order;
  DecInc decinc;
  PartialOrder representative;  // one total order in the class
  std::optional<std::vector<Vset>> tilting;
};

struct QhPoset {
  Quiver quiver;
  Vset active = 0;
  std::vector<QhStructure> structures;
  BitMatrix leq;  // leq(s,t) <=> [s] ⪯ [t] <=> Dec(s) ⊆ Dec(t)

  int size() const { return (int)structures.size(); }

  int index_of_key(const std::vector<std::uint64_t>& key) const {
    for (int i = 0; i < size(); ++i)
      if (structures[i].key == key) return i;
    return -1;
  }
};

struct EnumerateOptions {
  int cap = default_enumeration_cap();
  int threads = 1;
};

inline QhStructure build_structure(const PartialOrder& rep, const Quiver& q,
                                   Vset active) {
  StandardSystem sys = standard_system(rep, q, active);
  QhStructure s;
  s.key = sys.key();
  s.decinc = dec_inc(sys);
  s.min_order = minimal_from(s.decinc);
  s.representative = rep;
  assert(is_refinement(rep, s.min_order));
  return s;
}

namespace detail {

inline void enumerate_shard(const Quiver& q, Vset active,
                            const std::vector<int>& verts, std::size_t shard,
                            std::size_t stride,
                            std::unordered_map<std::vector<std::uint64_t>,
                                               std::vector<int>, VecU64Hash>* out) {
  PathEngine eng(q, active);
  int n = q.n;
  std::vector<Vset> below(n, 0);
  std::vector<std::vector<std::uint64_t>> ddim(n, std::vector<std::uint64_t>(n, 0));
  std::vector<std::vector<std::uint64_t>> ndim(n, std::vector<std::uint64_t>(n, 0));
  std::vector<std::uint64_t> key;
  int m = (int)verts.size();
  for_each_permutation(
      verts,
      [&](const std::vector<int>& perm) {
        Vset seen = 0;
        for (int k = 0; k < m; ++k) {
          below[perm[k]] = seen;
          seen |= bit(perm[k]);
        }
        key.clear();
        for (int i : verts) {
          eng.paths_from(i, below[i] | bit(i), ddim[i].data());
          eng.paths_into(i, below[i] | bit(i), ndim[i].data());
        }
        for (int i : verts)
          for (int j : verts) key.push_back(ddim[i][j]);
        for (int i : verts)
          for (int j : verts) key.push_back(ndim[i][j]);
        auto [it, inserted] = out->try_emplace(key, perm);
        if (!inserted && perm < it->second) it->second = perm;
      },
      shard, stride);
}

}  // namespace detail

/// All quasi-hereditary structures of kQ (restricted to `active`), as the
/// poset (qh.str, ⪯). Iterates every total order of the active vertices,
/// dedupes by canonical key, and orders classes by Dec-containment.
inline QhPoset enumerate_structures(const Quiver& q, Vset active = 0,
                                    EnumerateOptions opts = {}) {
  Vset mask = active ? active : all_of(q.n);
  reject_parallel_arrows(q);
  std::vector<int> verts;
  for (int v : bits(mask)) verts.push_back(v);
  if ((int)verts.size() > opts.cap)
    throw SizeError("enumeration over " + std::to_string(verts.size()) +
                    " vertices exceeds the cap " + std::to_string(opts.cap) +
                    " (set QHSTRUCT_CAP to override)");

  using ClassMap = std::unordered_map<std::vector<std::uint64_t>,
                                      std::vector<int>, VecU64Hash>;
  int workers = std::max(1, opts.threads);
  std::vector<ClassMap> maps(workers);
  if (workers == 1) {
    detail::enumerate_shard(q, mask, verts, 0, 1, &maps[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(detail::enumerate_shard, std::cref(q), mask,
                        std::cref(verts), (std::size_t)w, (std::size_t)workers,
                        &maps[w]);
    for (auto& t : pool) t.join();
    for (int w = 1; w < workers; ++w)
      for (auto& [key, perm] : maps[w]) {
        auto [it, inserted] = maps[0].try_emplace(key, perm);
        if (!inserted && perm < it->second) it->second = perm;
      }
  }

  QhPoset p;
  p.quiver = q;
  p.active = mask;
  for (auto& [key, perm] : maps[0]) {
    QhStructure s = build_structure(chain_order(q.n, perm), q, mask);
    assert(s.key == key);
    p.structures.push_back(std::move(s));
  }
  std::sort(p.structures.begin(), p.structures.end(),
            [](const QhStructure& a, const QhStructure& b) {
              return a.min_order.pairs() < b.min_order.pairs();
            });

  int m = (int)p.structures.size();
  p.leq = BitMatrix(m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (p.structures[s].decinc.dec_subset(p.structures[t].decinc)) {
        p.leq.set(s, t);
        // hereditary converse: Dec-containment and reverse Inc-containment
        // define the same relation
        assert(p.structures[t].decinc.inc_subset(p.structures[s].decinc));
      } else {
        assert(!p.structures[t].decinc.inc_subset(p.structures[s].decinc));
      }
  return p;
}

// ---------------------------------------------------------------------------
// Lattice diagnostics
// ---------------------------------------------------------------------------

struct LatticeReport {
  bool lattice = true;
  std::optional<std::pair<int, int>> witness;  // pair with no join or no meet
  std::string reason;
};

namespace detail {
// The element z of `cand` whose `rows[z]` contains all of `cand`, or -1.
// With rows = up-sets this is the least element, with rows = down-sets the
// greatest.
inline int extreme_of(const BitMatrix& rows, const std::vector<std::uint64_t>& cand) {
  int words = rows.words;
  for (int w = 0; w < words; ++w)
    for (std::uint64_t block = cand[w]; block; block &= block - 1) {
      int z = w * 64 + lowest(block);
      const std::uint64_t* rz = rows.row(z);
      bool dominates = true;
      for (int x = 0; x < words; ++x)
        if (cand[x] & ~rz[x]) {
          dominates = false;
          break;
        }
      if (dominates) return z;
    }
  return -1;
}
}  // namespace detail

inline std::optional<int> join_of(const QhPoset& p, int s, int t) {
  int words = p.leq.words;
  std::vector<std::uint64_t> uppers(words);
  for (int w = 0; w < words; ++w)
    uppers[w] = p.leq.row(s)[w] & p.leq.row(t)[w];
  int z = detail::extreme_of(p.leq, uppers);
  if (z < 0) return std::nullopt;
  return z;
}

inline std::optional<int> meet_of(const QhPoset& p, int s, int t) {
  BitMatrix dn = p.leq.transposed();
  std::vector<std::uint64_t> lowers(dn.words);
  for (int w = 0; w < dn.words; ++w)
    lowers[w] = dn.row(s)[w] & dn.row(t)[w];
  int z = detail::extreme_of(dn, lowers);
  if (z < 0) return std::nullopt;
  return z;
}

inline LatticeReport is_lattice(const QhPoset& p) {
  LatticeReport rep;
  int m = p.size(), words = p.leq.words;
  BitMatrix dn = p.leq.transposed();
  std::vector<std::uint64_t> cand(words);
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t) {
      if (p.leq.get(s, t) || p.leq.get(t, s)) continue;
      for (int w = 0; w < words; ++w)
        cand[w] = p.leq.row(s)[w] & p.leq.row(t)[w];
      if (detail::extreme_of(p.leq, cand) < 0) {
        rep.lattice = false;
        rep.witness = {s, t};
        rep.reason = "no join";
        return rep;
      }
      for (int w = 0; w < words; ++w) cand[w] = dn.row(s)[w] & dn.row(t)[w];
      if (detail::extreme_of(dn, cand) < 0) {
        rep.lattice = false;
        rep.witness = {s, t};
        rep.reason = "no meet";
        return rep;
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Meet / join closed formulas for hereditary incidence algebras
// ---------------------------------------------------------------------------

/// Crown obstruction: smallest even m >= 4 such that Z_m embeds as a full
/// subposet, or nullopt.
inline std::optional<int> has_Zn_full_subposet(const ReachPoset& p) {
  auto dn = p.down_sets();
  std::vector<int> verts(p.n);
  std::iota(verts.begin(), verts.end(), 0);
  for (int m = 4; m <= p.n; m += 2) {
    std::vector<int> comb(m);
    std::function<bool(int, int)> scan = [&](int start, int depth) -> bool {
      if (depth == m) {
        Vset S = 0;
        for (int v : comb) S |= bit(v);
        Vset mins = 0, maxs = 0;
        for (int v : comb) {
          bool is_min = !(dn[v] & S & ~bit(v));
          bool is_max = !(p.up[v] & S & ~bit(v));
          if (is_min == is_max) return false;  // isolated or interior
          (is_min ? mins : maxs) |= bit(v);
        }
        if (popcount(mins) != m / 2) return false;
        for (int v : bits(mins))
          if (popcount(p.up[v] & maxs) != 2) return false;
        for (int v : bits(maxs))
          if (popcount(dn[v] & mins) != 2) return false;
        // the degree-2 bipartite comparability graph must be one cycle
        Vset seen = bit(lowest(mins));
        for (;;) {
          Vset grow = seen;
          for (int v : bits(seen & mins)) grow |= p.up[v] & maxs;
          for (int v : bits(seen & maxs)) grow |= dn[v] & mins;
          if (grow == seen) break;
          seen = grow;
        }
        return seen == S;
      }
      for (int v = start; v <= p.n - (m - depth); ++v) {
        comb[depth] = v;
        if (scan(v + 1, depth + 1)) return true;
      }
      return false;
    };
    if (scan(0, 0)) return m;
  }
  return std::nullopt;
}

/// Tree obstruction: some vertex with two incoming arrows reaches (possibly
/// trivially) a vertex with two outgoing arrows.
inline bool has_Dtilde_subquiver(const Quiver& q) {
  if (!is_tree(q))
    throw UnsupportedError("Dtilde subquiver detection expects a tree quiver");
  ReachPoset reach = reachability(q);
  for (int x = 0; x < q.n; ++x) {
    if (q.in_degree(x) < 2) continue;
    for (int y : bits(reach.up[x]))
      if (q.out_degree(y) >= 2) return true;
  }
  return false;
}

namespace detail {
inline void require_lattice_hypotheses(const Quiver& q) {
  if (!is_path_unique(q))
    throw PreconditionError("meet/join formulas need a path-unique quiver");
  if (auto m = has_Zn_full_subposet(reachability(q)))
    throw PreconditionError("meet/join formulas fail on Z_" +
                            std::to_string(*m) + "-containing posets");
}
}  // namespace detail

/// meet = ((Dec1 ∩ Dec2) ∪ Inc1 ∪ Inc2)^tc
inline PartialOrder meet_formula(const PartialOrder& o1, const PartialOrder& o2,
                                 const Quiver& q, Vset active = 0) {
  Vset mask = active ? active : all_of(q.n);
  detail::require_lattice_hypotheses(restrict_to(q, mask));
  DecInc d1 = dec_inc(standard_system(o1, q, mask));
  DecInc d2 = dec_inc(standard_system(o2, q, mask));
  std::vector<std::pair<int, int>> pairs;
  for (int j : bits(mask)) {
    for (int i : bits(d1.dec_below[j] & d2.dec_below[j])) pairs.emplace_back(i, j);
    for (int i : bits(d1.inc_below[j] | d2.inc_below[j])) pairs.emplace_back(i, j);
  }
  return transitive_closure(q.n, pairs);
}

/// join = (Dec1 ∪ Dec2 ∪ (Inc1 ∩ Inc2))^tc
inline PartialOrder join_formula(const PartialOrder& o1, const PartialOrder& o2,
                                 const Quiver& q, Vset active = 0) {
  Vset mask = active ? active : all_of(q.n);
  detail::require_lattice_hypotheses(restrict_to(q, mask));
  DecInc d1 = dec_inc(standard_system(o1, q, mask));
  DecInc d2 = dec_inc(standard_system(o2, q, mask));
  std::vector<std::pair<int, int>> pairs;
  for (int j : bits(mask)) {
    for (int i : bits(d1.dec_below[j] | d2.dec_below[j])) pairs.emplace_back(i, j);
    for (int i : bits(d1.inc_below[j] & d2.inc_below[j])) pairs.emplace_back(i, j);
  }
  return transitive_closure(q.n, pairs);
}

// ---------------------------------------------------------------------------
// Lifting along a full subposet (the hat construction)
// ---------------------------------------------------------------------------

/// Lift an adapted order on a full subposet Q of a diamond-free poset P to
/// the adapted order ⊲̂ on P that restricts to ≤ outside Q and to ⊲ on Q.
inline PartialOrder lift_order(const ReachPoset& p, Vset subset,
                               const PartialOrder& o) {
  if (!diamond_free(p))
    throw PreconditionError("lift_order needs a diamond-free ambient poset");
  auto dn = p.down_sets();
  Vset rest = all_of(p.n) & ~subset;
  std::vector<std::pair<int, int>> pairs;
  for (int j : bits(subset))
    for (int i : bits(o.below[j] & subset)) pairs.emplace_back(i, j);
  for (int r : bits(rest)) {
    for (int r2 : bits(rest & p.up[r] & ~bit(r))) pairs.emplace_back(r, r2);
    for (int qv : bits(subset)) {
      // the witness condition is reflexive: the nearest subset element q1
      // must satisfy q1 ⊲ q or q1 = q
      if (p.leq(r, qv)) {
        Vset chain = p.up[r] & dn[qv] & subset;  // a chain; diamond-free
        int q1 = -1;
        for (int x : bits(chain))
          if (!(dn[x] & chain & ~bit(x))) q1 = x;  // minimum of the chain
        if (q1 >= 0 && (q1 == qv || o.less(q1, qv))) pairs.emplace_back(r, qv);
      } else if (p.leq(qv, r)) {
        Vset chain = p.up[qv] & dn[r] & subset;
        int q1 = -1;
        for (int x : bits(chain))
          if (!(p.up[x] & chain & ~bit(x))) q1 = x;  // maximum of the chain
        if (q1 >= 0 && (q1 == qv || o.less(q1, qv))) pairs.emplace_back(r, qv);
      }
    }
  }
  return transitive_closure(p.n, pairs);  // a partial order by construction
}

// ---------------------------------------------------------------------------
// Poset comparisons
// ---------------------------------------------------------------------------

/// Verifies that the supplied bijection map: p1 -> p2 (index vector) is an
/// isomorphism of posets.
inline bool poset_isomorphic_via(const std::vector<int>& map,
                                 const BitMatrix& p1, const BitMatrix& p2) {
  int m = p1.m;
  if (p2.m != m || (int)map.size() != m) return false;
  std::vector<char> hit(m, 0);
  for (int i : map) {
    if (i < 0 || i >= m || hit[i]) return false;
    hit[i] = 1;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p1.get(a, b) != p2.get(map[a], map[b])) return false;
  return true;
}

/// Enumerates qh.str of q and of its opposite quiver and verifies that the
/// identity on orders reverses ⪯.
inline bool opposite_check(const Quiver& q, EnumerateOptions opts = {}) {
  QhPoset a = enumerate_structures(q, 0, opts);
  QhPoset b = enumerate_structures(reverse(q), 0, opts);
  if (a.size() != b.size()) return false;
  std::map<std::vector<std::pair<int, int>>, int> by_min;
  for (int i = 0; i < b.size(); ++i)
    by_min[b.structures[i].min_order.pairs()] = i;
  std::vector<int> map(a.size(), -1);
  for (int i = 0; i < a.size(); ++i) {
    auto it = by_min.find(a.structures[i].min_order.pairs());
    if (it == by_min.end()) return false;
    map[i] = it->second;
  }
  for (int s = 0; s < a.size(); ++s)
    for (int t = 0; t < a.size(); ++t)
      if (a.leq.get(s, t) != b.leq.get(map[t], map[s])) return false;
  return true;
}

/// Covering pairs of a reflexive poset matrix.
inline std::vector<std::pair<int, int>> hasse_covers(const BitMatrix& leq) {
  std::vector<std::pair<int, int>> covers;
  BitMatrix dn = leq.transposed();
  for (int a = 0; a < leq.m; ++a)
    for (int b = 0; b < leq.m; ++b) {
      if (a == b || !leq.get(a, b)) continue;
      // a covered by b: the interval [a,b] is exactly {a,b}
      bool cover = true;
      const std::uint64_t *ua = leq.row(a), *db = dn.row(b);
      for (int w = 0; w < leq.words && cover; ++w) {
        std::uint64_t between = ua[w] & db[w];
        if (w == a / 64) between &= ~(std::uint64_t{1} << (a % 64));
        if (w == b / 64) between &= ~(std::uint64_t{1} << (b % 64));
        if (between) cover = false;
      }
      if (cover) covers.emplace_back(a, b);
    }
  return covers;
}

}  // namespace qhstruct
