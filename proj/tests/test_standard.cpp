#include <catch2/catch_amalgamated.hpp>

#include "qhstruct/binary_tree.hpp"
#include "qhstruct/quiver.hpp"
#include "qhstruct/standard.hpp"

using namespace qhstruct;

namespace {
PartialOrder from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
  for (auto& [i, j] : pairs) --i, --j;
  return transitive_closure(n, pairs);
}

Vset vs(std::initializer_list<int> verts) {
  Vset s = 0;
  for (int v : verts) s |= bit(v - 1);
  return s;
}

Quiver worked() { return Quiver(5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}}); }
}  // namespace

TEST_CASE("standard modules on Lambda_3") {
  Quiver q = make_A(3);
  // maximal-first order: every standard is projective
  StandardSystem proj = standard_system(from_pairs(3, {{3, 2}, {2, 1}}), q);
  CHECK(proj.delta_supp[0] == vs({1, 2, 3}));
  CHECK(proj.delta_supp[1] == vs({2, 3}));
  CHECK(proj.delta_supp[2] == vs({3}));
  // natural order: every standard is simple, costandards are injective
  StandardSystem simple = standard_system(from_pairs(3, {{1, 2}, {2, 3}}), q);
  CHECK(simple.delta_supp[0] == vs({1}));
  CHECK(simple.delta_supp[1] == vs({2}));
  CHECK(simple.delta_supp[2] == vs({3}));
  CHECK(simple.nabla_supp[0] == vs({1}));
  CHECK(simple.nabla_supp[1] == vs({1, 2}));
  CHECK(simple.nabla_supp[2] == vs({1, 2, 3}));
}

TEST_CASE("standard modules of the worked example") {
  Quiver q = worked();
  PartialOrder min = from_pairs(5, {{2, 1}, {2, 3}, {4, 3}, {4, 5}});
  StandardSystem sys = standard_system(min, q);
  CHECK(sys.delta_supp[2] == vs({2, 3}));
  CHECK(sys.delta_supp[0] == vs({1, 2}));
  CHECK(sys.delta_supp[4] == vs({5}));
  CHECK(sys.delta_supp[3] == vs({4}));
  // and the order is its own (Dec u Inc)^tc
  CHECK(minimal_from(dec_inc(sys)) == min);
}

TEST_CASE("dec and inc") {
  Quiver q = make_A(2);
  DecInc a = dec_inc(standard_system(from_pairs(2, {{1, 2}}), q));
  CHECK(a.dec_pairs().empty());
  CHECK(a.inc_pairs() == std::vector<std::pair<int, int>>{{0, 1}});
  DecInc b = dec_inc(standard_system(from_pairs(2, {{2, 1}}), q));
  CHECK(b.dec_pairs() == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(b.inc_pairs().empty());
  Quiver semisimple(3, {});
  DecInc c = dec_inc(standard_system(from_pairs(3, {{1, 2}, {2, 3}}), semisimple));
  CHECK(c.dec_pairs().empty());
  CHECK(c.inc_pairs().empty());
}

TEST_CASE("multiplicities beyond path-unique quivers") {
  Quiver k3 = make_K(3);
  StandardSystem sys = standard_system(from_pairs(3, {{1, 2}, {2, 3}}), k3);
  CHECK(sys.delta_dim[2][0] == 2);  // two paths 3 ~> 1 inside the down-set
  CHECK(sys.delta_dim[2][1] == 1);
  CHECK(sys.delta_supp[2] == vs({1, 2, 3}));
}

TEST_CASE("minimal adapted orders") {
  CHECK(minimal_adapted(from_pairs(2, {{2, 1}}), make_A(2)) ==
        from_pairs(2, {{2, 1}}));
  CHECK(minimal_adapted(from_pairs(3, {{1, 2}, {2, 3}}), Quiver(3, {})).pair_count() ==
        0);
  // binary-tree orders on Lambda_n are adapted and already minimal
  for (int n = 2; n <= 6; ++n) {
    Quiver q = make_A(n);
    for_each_tree(n, [&](const BinaryTree& t) {
      PartialOrder o = tree_to_order(t);
      CHECK(is_adapted(o, q));
      CHECK(minimal_adapted(o, q) == o);
    });
  }
}

TEST_CASE("equivalence") {
  Quiver q = make_A(3);
  PartialOrder tree = from_pairs(3, {{1, 2}, {3, 2}});
  PartialOrder refined = from_pairs(3, {{1, 3}, {3, 2}});  // total 1<3<2
  CHECK(equivalent(tree, refined, q));
  CHECK_FALSE(equivalent(from_pairs(2, {{1, 2}}), from_pairs(2, {{2, 1}}), make_A(2)));
  Quiver semisimple(3, {});
  CHECK(equivalent(from_pairs(3, {{1, 2}, {2, 3}}), from_pairs(3, {{3, 2}, {2, 1}}),
                   semisimple));
}

TEST_CASE("tilting supports on type A") {
  Quiver q = make_A(3);
  // left comb: natural chain; T(3) has full support
  auto chain = tilting_supports(from_pairs(3, {{1, 2}, {2, 3}}), q);
  CHECK(chain[2] == vs({1, 2, 3}));
  CHECK(chain[0] == vs({1}));
  // semisimple vertex minimal in the order
  auto tree = tilting_supports(from_pairs(3, {{1, 2}, {3, 2}}), q);
  CHECK(tree[0] == vs({1}));
  CHECK(tree[1] == vs({1, 2, 3}));
  CHECK(tree[2] == vs({3}));
  CHECK_THROWS_AS(tilting_supports(PartialOrder(4), make_star(1, 1, 1)),
                  UnsupportedError);
}

TEST_CASE("duality: delta of q equals nabla of reversed q") {
  for (const Quiver& q : {make_A(4), make_K(3), make_Z(4), worked()}) {
    TotalOrderStream stream(q.n);
    while (auto o = stream.next()) {
      StandardSystem fwd = standard_system(*o, q);
      StandardSystem bwd = standard_system(*o, reverse(q));
      CHECK(fwd.delta_supp == bwd.nabla_supp);
      CHECK(fwd.nabla_supp == bwd.delta_supp);
      CHECK(fwd.delta_dim == bwd.nabla_dim);
    }
  }
}

TEST_CASE("parallel arrows are rejected") {
  Quiver par(2, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(standard_system(PartialOrder(2), par), ParallelArrowError);
}
