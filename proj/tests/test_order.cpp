#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <set>

#include "qhstruct/order.hpp"
#include "qhstruct/standard.hpp"

using namespace qhstruct;

namespace {
PartialOrder from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
  for (auto& [i, j] : pairs) --i, --j;  // tests speak 1-based
  return transitive_closure(n, pairs);
}
}  // namespace

TEST_CASE("transitive closure") {
  PartialOrder o = from_pairs(3, {{1, 2}, {2, 3}});
  CHECK(o.less(0, 2));  // (1,3) added
  CHECK(o.pair_count() == 3);

  CHECK_THROWS_AS(from_pairs(2, {{1, 2}, {2, 1}}), CycleError);
  try {
    from_pairs(3, {{1, 2}, {2, 3}, {3, 1}});
    FAIL("expected CycleError");
  } catch (const CycleError& e) {
    CHECK(e.cycle.size() >= 3);
  }
}

TEST_CASE("intersection") {
  PartialOrder o = from_pairs(3, {{1, 2}, {2, 3}});
  CHECK(intersect(o, o) == o);
  PartialOrder rev = from_pairs(3, {{3, 2}, {2, 1}});
  CHECK(intersect(o, rev).pair_count() == 0);
}

TEST_CASE("restrict and refinement") {
  PartialOrder o = from_pairs(3, {{1, 2}, {2, 3}});
  PartialOrder r = restrict(o, bit(0) | bit(2));
  CHECK(r.pairs() == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(is_refinement(o, r));
  CHECK_FALSE(is_refinement(r, o));
}

TEST_CASE("total order streams") {
  auto count_stream = [](int n) {
    TotalOrderStream s(n);
    int c = 0;
    while (auto o = s.next()) {
      CHECK(is_total(*o));
      ++c;
    }
    return c;
  };
  CHECK(count_stream(3) == 6);
  CHECK(count_stream(5) == 120);
  CHECK_THROWS_AS(TotalOrderStream(11), SizeError);
}

TEST_CASE("permutation sharding covers the stream exactly once") {
  std::vector<int> verts{0, 1, 2, 3};
  std::vector<std::vector<int>> all;
  for_each_permutation(verts, [&](const std::vector<int>& p) { all.push_back(p); });
  CHECK(all.size() == 24);
  std::vector<std::vector<int>> sharded;
  for (std::size_t w = 0; w < 3; ++w)
    for_each_permutation(
        verts, [&](const std::vector<int>& p) { sharded.push_back(p); }, w, 3);
  std::sort(sharded.begin(), sharded.end());
  std::sort(all.begin(), all.end());
  CHECK(sharded == all);
}

TEST_CASE("adaptedness") {
  // total orders are adapted to anything
  CHECK(is_adapted(from_pairs(3, {{3, 2}, {2, 1}}), make_K(3)));
  // binary-tree order with root 2 on Lambda_3
  CHECK(is_adapted(from_pairs(3, {{1, 2}, {3, 2}}), make_A(3)));
  // empty order on Lambda_2: the interval [1,2] has no witness above 1 or 2
  CHECK_FALSE(is_adapted(PartialOrder(2), make_A(2)));
  CHECK_THROWS_AS(is_adapted(PartialOrder(3), make_K(3)), UnsupportedError);
}

namespace {
// all strict partial orders on n elements (0-based), by brute force
std::vector<PartialOrder> all_orders(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.emplace_back(i, j);
  std::vector<PartialOrder> out;
  for (std::uint32_t mask = 0; mask < (1u << arcs.size()); ++mask) {
    PartialOrder o(n);
    bool ok = true;
    for (std::size_t k = 0; k < arcs.size(); ++k)
      if ((mask >> k) & 1) o.below[arcs[k].second] |= bit(arcs[k].first);
    for (int j = 0; j < n && ok; ++j)
      for (int i : bits(o.below[j]))
        if (has(o.below[i], j)) ok = false;
    if (!ok) continue;
    bool closed = true;
    for (int j = 0; j < n && closed; ++j)
      for (int k : bits(o.below[j]))
        if (o.below[k] & ~o.below[j]) closed = false;
    if (closed) out.push_back(o);
  }
  return out;
}
}  // namespace

TEST_CASE("refinements of adapted orders have the same standard data") {
  std::vector<Quiver> trees = {make_A(4), Quiver(4, {{0, 1}, {2, 1}, {2, 3}}),
                               make_A(5), Quiver(5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}}),
                               make_star(1, 1, 1), make_star(0, 2, 2)};
  for (const Quiver& q : trees) {
    auto orders = all_orders(q.n);
    std::vector<const PartialOrder*> adapted;
    for (const PartialOrder& o : orders)
      if (is_adapted(o, q)) adapted.push_back(&o);
    CHECK(adapted.size() > 1);
    for (const PartialOrder* o : adapted) {
      StandardSystem base = standard_system(*o, q);
      for (const PartialOrder& fine : orders)
        if (is_total(fine) && is_refinement(fine, *o))
          CHECK(standard_system(fine, q) == base);
    }
  }
}

TEST_CASE("intersections of equivalent adapted orders stay in the class") {
  Quiver q(5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}});
  auto orders = all_orders(q.n);
  std::map<std::vector<std::uint64_t>, std::vector<const PartialOrder*>> classes;
  for (const PartialOrder& o : orders)
    if (is_adapted(o, q)) classes[standard_system(o, q).key()].push_back(&o);
  for (auto& [key, members] : classes)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        PartialOrder both = intersect(*members[a], *members[b]);
        CHECK(is_adapted(both, q));
        CHECK(standard_system(both, q).key() == key);
      }
}

TEST_CASE("linear extension") {
  PartialOrder o = from_pairs(4, {{3, 1}, {3, 2}});
  auto ext = linear_extension(o);
  std::vector<int> pos(4);
  for (int k = 0; k < 4; ++k) pos[ext[k]] = k;
  for (auto [i, j] : o.pairs()) CHECK(pos[i] < pos[j]);
}

TEST_CASE("equivalence classes honor adaptedness and minimal orders") {
  // orders sharing the standard data of an adapted order are adapted, and
  // two orders share a class exactly when their (Dec u Inc)^tc coincide
  for (const Quiver& q : {make_A(4), Quiver(4, {{0, 1}, {2, 1}, {2, 3}}),
                          make_star(1, 1, 1)}) {
    std::map<std::vector<std::uint64_t>, std::vector<const PartialOrder*>> classes;
    auto orders = all_orders(q.n);
    for (const PartialOrder& o : orders)
      classes[standard_system(o, q).key()].push_back(&o);
    std::set<std::vector<std::pair<int, int>>> min_orders;
    for (auto& [key, members] : classes) {
      bool any_adapted = false, all_adapted = true;
      PartialOrder min = minimal_from(dec_inc(standard_system(*members[0], q)));
      for (const PartialOrder* o : members) {
        any_adapted |= is_adapted(*o, q);
        all_adapted &= is_adapted(*o, q);
        CHECK(minimal_from(dec_inc(standard_system(*o, q))) == min);
        CHECK(is_refinement(*o, min));  // the minimum sits inside every member
      }
      if (any_adapted) CHECK(all_adapted);
      CHECK(min_orders.insert(min.pairs()).second);  // distinct keys, distinct minima
    }
  }
}
