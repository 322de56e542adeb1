#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "qhstruct/binary_tree.hpp"
#include "qhstruct/counting.hpp"
#include "qhstruct/qh_poset.hpp"

using namespace qhstruct;

namespace {
int tree_count(int n) {
  int c = 0;
  for_each_tree(n, [&](const BinaryTree&) { ++c; });
  return c;
}
}  // namespace

TEST_CASE("tree enumeration is Catalan") {
  CHECK(tree_count(1) == 1);
  CHECK(tree_count(3) == 5);
  CHECK(tree_count(5) == 42);
  CHECK(tree_count(8) == 1430);
  CHECK_THROWS_AS(for_each_tree(15, [](const BinaryTree&) {}), SizeError);
}

TEST_CASE("tree orders") {
  // left comb of size 3: root 3, left child 2, its left child 1
  BinaryTree lc = from_parens("((()))");
  CHECK(lc.root == 3);
  CHECK(tree_to_order(lc).pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  BinaryTree mid = from_parens("(())()");  // root 2, children 1 and 3
  CHECK(mid.root == 2);
  CHECK(tree_to_order(mid).pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});

  // root 4; left subtree root 2 with children 1, 3; right child 5
  BinaryTree fig = from_parens("((())())()");
  CHECK(fig.root == 4);
  CHECK(fig.left[4] == 2);
  CHECK(fig.right[4] == 5);
  std::set<std::pair<int, int>> got;
  for (auto [i, j] : tree_to_order(fig).pairs()) got.insert({i + 1, j + 1});
  CHECK(got == std::set<std::pair<int, int>>{
                   {2, 4}, {1, 4}, {3, 4}, {5, 4}, {1, 2}, {3, 2}});
}

TEST_CASE("order_to_tree inverts tree_to_order") {
  for (int n = 1; n <= 8; ++n)
    for_each_tree(n, [&](const BinaryTree& t) {
      CHECK(order_to_tree(tree_to_order(t)) == t);
    });
}

TEST_CASE("order_to_tree rejects non-tree orders") {
  CHECK_THROWS_AS(order_to_tree(PartialOrder(2)), NotTreeOrderError);
  try {
    order_to_tree(PartialOrder(2));
  } catch (const NotTreeOrderError& e) {
    CHECK(e.condition == 1);
  }
  PartialOrder o(3);
  o.below[2] |= bit(0);  // 1 < 3 alone: needs 2 < 3
  try {
    order_to_tree(o);
    FAIL("expected NotTreeOrderError");
  } catch (const NotTreeOrderError& e) {
    CHECK(e.condition == 2);
  }
}

TEST_CASE("parens round trip") {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, [&](const BinaryTree& t) {
      CHECK(from_parens(t.to_parens()) == t);
    });
  CHECK(from_parens("()()()").root == 1);  // right comb
  CHECK_THROWS_AS(from_parens("(()"), Error);
  CHECK_THROWS_AS(from_parens(")("), Error);
}

TEST_CASE("tamari pentagon") {
  TreePoset tp = tamari_poset(3);
  CHECK(tp.trees.size() == 5);
  CHECK(hasse_covers(tp.leq).size() == 5);
  // bottom = left comb, top = right comb
  int bottom = -1, top = -1;
  for (int i = 0; i < 5; ++i) {
    if (tp.trees[i].to_parens() == "((()))") bottom = i;
    if (tp.trees[i].to_parens() == "()()()") top = i;
  }
  REQUIRE(bottom >= 0);
  REQUIRE(top >= 0);
  for (int i = 0; i < 5; ++i) {
    CHECK(tp.leq.get(bottom, i));
    CHECK(tp.leq.get(i, top));
  }
}

TEST_CASE("rotations preserve in-order labeling") {
  for_each_tree(5, [&](const BinaryTree& t) {
    for (const BinaryTree& r : right_rotations(t)) {
      // a rotated tree is still a valid search tree of the same size
      CHECK(r.n == t.n);
      CHECK_NOTHROW(tree_to_order(r));
    }
  });
}

TEST_CASE("subtree intervals") {
  BinaryTree mid = from_parens("(())()");
  auto supp = tree_to_tilting(mid);
  CHECK(supp[0] == bit(0));
  CHECK(supp[1] == (bit(0) | bit(1) | bit(2)));
  CHECK(supp[2] == bit(2));
}

namespace {
// Interval modules [a,b] and [c,d] of the equioriented A_n extend one
// another exactly when they cross or sit flush next to each other; a
// tilting family is n distinct pairwise nested-or-separated intervals.
bool intervals_compatible(std::pair<int, int> x, std::pair<int, int> y) {
  auto ext = [](std::pair<int, int> a, std::pair<int, int> b) {
    return a.second + 1 >= b.first && b.first >= a.first + 1 &&
           b.second >= a.second + 1;
  };
  return !ext(x, y) && !ext(y, x);
}
}  // namespace

TEST_CASE("tree tilting families are exactly the compatible interval families") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> intervals;
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) intervals.emplace_back(a, b);
    std::set<std::set<std::pair<int, int>>> families;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if ((int)pick.size() == n) {
        std::set<std::pair<int, int>> fam;
        for (int k : pick) fam.insert(intervals[k]);
        families.insert(fam);
        return;
      }
      for (std::size_t k = from; k < intervals.size(); ++k) {
        bool ok = true;
        for (int j : pick)
          ok = ok && intervals_compatible(intervals[j], intervals[k]);
        if (!ok) continue;
        pick.push_back((int)k);
        rec(k + 1);
        pick.pop_back();
      }
    };
    rec(0);
    std::set<std::set<std::pair<int, int>>> image;
    for_each_tree(n, [&](const BinaryTree& t) {
      std::set<std::pair<int, int>> fam;
      for (int v = 1; v <= t.n; ++v) fam.insert(t.subtree_interval(v));
      CHECK((int)fam.size() == n);
      image.insert(fam);
    });
    // every tilting module of the equioriented A_n is characteristic
    CHECK(image == families);
    CHECK(BigInt((long)families.size()) == catalan(n));
  }
}
