#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <vector>

#include "qhstruct/binary_tree.hpp"
#include "qhstruct/order.hpp"
#include "qhstruct/qh_poset.hpp"
#include "qhstruct/quiver.hpp"
#include "qhstruct/standard.hpp"
#include "qhstruct/util.hpp"

namespace qhstruct {

struct DeconcatPart {
  Vset vertices = 0;
  Quiver quiver;  // ambient n, arrows inside `vertices`
};

struct Deconcatenation {
  std::vector<DeconcatPart> parts;
  std::vector<std::pair<int, bool>> cuts;  // (vertex, is_sink)
};

namespace detail {
inline std::vector<Vset> components(const Quiver& q, Vset mask) {
  std::vector<Vset> comps;
  Vset left = mask;
  while (left) {
    Vset comp = bit(lowest(left));
    for (;;) {
      Vset grow = comp;
      for (auto [u, v] : q.arrows)
        if (has(mask, u) && has(mask, v)) {
          if (has(comp, u)) grow |= bit(v);
          if (has(comp, v)) grow |= bit(u);
        }
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}
}  // namespace detail

/// Splits q at the sink or source v into the connected components of q - v,
/// each re-adjoined with v. nullopt when removing v keeps q connected.
inline std::optional<Deconcatenation> deconcatenate(const Quiver& q, int v,
                                                    Vset active = 0) {
  Vset mask = active ? active : all_of(q.n);
  Quiver qr = restrict_to(q, mask);
  bool sink = has(sinks(qr) & mask, v);
  bool source = has(sources(qr) & mask, v);
  if (!sink && !source)
    throw NotSinkSourceError("vertex " + std::to_string(v + 1) +
                             " is neither a sink nor a source");
  auto comps = detail::components(q, mask & ~bit(v));
  if (comps.size() < 2) return std::nullopt;
  Deconcatenation d;
  d.cuts.emplace_back(v, sink);
  for (Vset comp : comps) {
    DeconcatPart part;
    part.vertices = comp | bit(v);
    part.quiver = restrict_to(q, part.vertices);
    d.parts.push_back(std::move(part));
  }
  return d;
}

/// Maximal iterated deconcatenation of the type A quiver q into equioriented
/// segments, listed along the path from its smaller-labeled endpoint.
inline Deconcatenation iterated_typeA(const Quiver& q) {
  if (!is_type_a(q)) throw NotTypeAError("underlying graph is not a path");
  // walk the path from an endpoint
  std::vector<std::vector<int>> nb(q.n);
  for (auto [u, v] : q.arrows) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  int start = 0;
  for (int v = 0; v < q.n; ++v)
    if (nb[v].size() <= 1) {
      start = v;
      break;
    }
  std::vector<int> path{start};
  Vset seen = bit(start);
  while ((int)path.size() < q.n) {
    for (int w : nb[path.back()])
      if (!has(seen, w)) {
        path.push_back(w);
        seen |= bit(w);
        break;
      }
  }
  auto arrow_dir = [&](int a, int b) {  // +1 if a -> b
    for (auto [u, v] : q.arrows)
      if (u == a && v == b) return +1;
    return -1;
  };
  Deconcatenation d;
  std::vector<int> segment{path[0]};
  int dir = 0;
  auto flush = [&] {
    DeconcatPart part;
    for (int v : segment) part.vertices |= bit(v);
    part.quiver = restrict_to(q, part.vertices);
    d.parts.push_back(std::move(part));
  };
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    int dk = arrow_dir(path[k], path[k + 1]);
    if (dir != 0 && dk != dir) {
      flush();
      d.cuts.emplace_back(path[k], dir == +1);  // sink iff previous run entered it
      segment.assign(1, path[k]);
    }
    segment.push_back(path[k + 1]);
    dir = dk;
  }
  flush();
  return d;
}

/// Iterated deconcatenation of a tree-ish quiver into indecomposable parts.
/// `prefer_high` only changes which cut is taken first (used to test
/// confluence of the result).
inline Deconcatenation maximal_deconcatenation(const Quiver& q, Vset active = 0,
                                               bool prefer_high = false) {
  Vset mask = active ? active : all_of(q.n);
  Deconcatenation out;
  std::function<void(Vset)> rec = [&](Vset part) {
    Quiver qr = restrict_to(q, part);
    Vset cuttable = (sinks(qr) | sources(qr)) & part;
    std::vector<int> candidates;
    for (int v : bits(cuttable))
      if (detail::components(q, part & ~bit(v)).size() >= 2) candidates.push_back(v);
    if (candidates.empty()) {
      DeconcatPart leaf;
      leaf.vertices = part;
      leaf.quiver = qr;
      out.parts.push_back(std::move(leaf));
      return;
    }
    int v = prefer_high ? candidates.back() : candidates.front();
    out.cuts.emplace_back(v, has(sinks(qr) & part, v));
    for (Vset comp : detail::components(q, part & ~bit(v))) rec(comp | bit(v));
  };
  for (Vset comp : detail::components(q, mask)) rec(comp);
  return out;
}

/// Restriction half of the product decomposition: the structure of the whole
/// quiver restricted to every part (restrictions of minimal adapted orders
/// are minimal adapted).
inline std::vector<QhStructure> phi(const QhStructure& s, const Deconcatenation& d,
                                    const Quiver& q) {
  std::vector<QhStructure> out;
  for (const DeconcatPart& part : d.parts) {
    PartialOrder restricted = restrict(s.min_order, part.vertices);
    out.push_back(build_structure(restricted, q, part.vertices));
    assert(out.back().min_order == restricted);  // restriction stays minimal
  }
  return out;
}

/// Gluing half: parts share their cut vertices by label, so the glue of the
/// per-part orders is simply the transitive closure of their union.
inline PartialOrder glue_orders(const std::vector<const PartialOrder*>& orders,
                                int n) {
  std::vector<std::pair<int, int>> pairs;
  for (const PartialOrder* o : orders) {
    auto p = o->pairs();
    pairs.insert(pairs.end(), p.begin(), p.end());
  }
  return transitive_closure(n, pairs);
}

inline QhStructure psi(const std::vector<QhStructure>& tuple,
                       const Deconcatenation& d, const Quiver& q) {
  assert(tuple.size() == d.parts.size());
  std::vector<const PartialOrder*> orders;
  Vset mask = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    orders.push_back(&tuple[i].min_order);
    mask |= d.parts[i].vertices;
  }
  PartialOrder glued = glue_orders(orders, q.n);
  QhStructure s = build_structure(glued, q, mask);
  assert(s.min_order == glued);  // glue of minimal orders is minimal
  return s;
}

// ---------------------------------------------------------------------------
// Characteristic tilting supports on tree quivers, assembled recursively by
// cutting at sinks/sources. Equioriented segments are the base case and get
// their supports from the binary-tree bijection (subtree label intervals);
// a sink cut v merges supports by the push-out rule
//   supp T(i) = supp T^1(i) ∪ supp T^2(v)   when v ∈ supp T^1(i).
// Source cuts reduce to sink cuts on the reversed quiver (composition
// supports are preserved by duality).
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_equioriented_path(const Quiver& q, Vset mask) {
  Quiver qr = restrict_to(q, mask);
  if ((int)qr.arrows.size() != popcount(mask) - 1) return false;
  if (!underlying_connected(qr, mask)) return false;
  for (int v : bits(mask))
    if (qr.in_degree(v) > 1 || qr.out_degree(v) > 1) return false;
  return true;
}

inline std::vector<Vset> tilting_on_segment(const Quiver& q, const PartialOrder& o,
                                            Vset mask) {
  // vertices in path order, following the arrows
  Quiver qr = restrict_to(q, mask);
  int head = lowest(mask & sources(qr));
  std::vector<int> verts{head};
  while ((int)verts.size() < popcount(mask)) {
    for (auto [u, v] : qr.arrows)
      if (u == verts.back()) {
        verts.push_back(v);
        break;
      }
  }
  int m = (int)verts.size();
  std::vector<int> pos(q.n, -1);
  for (int k = 0; k < m; ++k) pos[verts[k]] = k;
  PartialOrder rel(m);
  for (int k = 0; k < m; ++k)
    for (int i : bits(o.below[verts[k]] & mask)) rel.below[k] |= bit(pos[i]);
  BinaryTree t = order_to_tree(rel);
  std::vector<Vset> local = tree_to_tilting(t);
  std::vector<Vset> supp(q.n, 0);
  for (int k = 0; k < m; ++k)
    for (int j : bits(local[k])) supp[verts[k]] |= bit(verts[j]);
  return supp;
}

inline std::vector<Vset> tree_tilting_rec(const Quiver& q, const PartialOrder& o,
                                          Vset mask) {
  if (is_equioriented_path(q, mask)) return tilting_on_segment(q, o, mask);
  Quiver qr = restrict_to(q, mask);
  Vset cuttable = (sinks(qr) | sources(qr)) & mask;
  int cut = -1;
  for (int v : bits(cuttable))
    if (components(q, mask & ~bit(v)).size() >= 2) {
      cut = v;
      break;
    }
  if (cut < 0)
    throw UnsupportedError(
        "no sink/source deconcatenation exists and the part is not of type A; "
        "no tilting recipe is available");
  if (has(sources(qr) & mask, cut)) return tree_tilting_rec(reverse(q), o, mask);
  Vset comp0 = components(q, mask & ~bit(cut))[0];
  Vset part1 = comp0 | bit(cut);
  Vset part2 = mask & ~comp0;
  std::vector<Vset> t1 = tree_tilting_rec(q, restrict(o, part1), part1);
  std::vector<Vset> t2 = tree_tilting_rec(q, restrict(o, part2), part2);
  std::vector<Vset> supp(q.n, 0);
  for (int i : bits(part1))
    supp[i] = t1[i] | (has(t1[i], cut) ? t2[cut] : 0);
  for (int i : bits(part2 & ~bit(cut)))
    supp[i] = t2[i] | (has(t2[i], cut) ? t1[cut] : 0);
  return supp;
}

}  // namespace detail

/// Per-vertex composition supports of the characteristic tilting module of a
/// tree quiver. UnsupportedError when the recursion reaches a part with no
/// sink/source cut that is not of type A (star centers).
inline std::vector<Vset> tree_tilting_supports(const Quiver& q,
                                               const PartialOrder& adapted,
                                               Vset active = 0) {
  Vset mask = active ? active : all_of(q.n);
  Quiver qr = restrict_to(q, mask);
  if ((int)qr.arrows.size() != popcount(mask) - 1 || !underlying_connected(qr, mask))
    throw UnsupportedError("tree tilting supports expect a tree quiver");
  PartialOrder m = minimal_adapted(adapted, q, mask);
  return detail::tree_tilting_rec(q, m, mask);
}

}  // namespace qhstruct
