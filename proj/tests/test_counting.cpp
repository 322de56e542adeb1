#include <catch2/catch_amalgamated.hpp>

#include "qhstruct/counting.hpp"
#include "qhstruct/qh_poset.hpp"

using namespace qhstruct;

TEST_CASE("catalan numbers") {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n < 10; ++n) CHECK(catalan(n) == expected[n]);
  CHECK(catalan(30) == BigInt("3814986502092304"));
}

TEST_CASE("Segner recurrence") {
  for (int n = 0; n <= 20; ++n) {
    BigInt sum = 0;
    for (int i = 0; i <= n; ++i) sum += catalan(i) * catalan(n - i);
    CHECK(catalan(n + 1) == sum);
  }
}

TEST_CASE("type D closed forms") {
  CHECK(count_D1(4) == 13);
  CHECK(count_D2(4) == 13);
  CHECK(count_D1(5) == 2 * 42 - 3 * 14);
  CHECK(count_D2(5) == 37);
  for (int n = 4; n <= 5; ++n) {
    CHECK(BigInt(enumerate_structures(make_star(n - 3, 1, 1)).size()) ==
          count_D1(n));
    CHECK(BigInt(enumerate_structures(make_star(1, n - 3, 1)).size()) ==
          count_D2(n));
  }
}

TEST_CASE("star recursion") {
  StarCensus e7 = star_census(1, 3, 2);
  CHECK(e7.total == 322);
  CHECK(e7.c == std::vector<BigInt>{19, 52});
  StarCensus e8 = star_census(2, 4, 1);
  CHECK(e8.total == 1368);
  CHECK(e8.c == std::vector<BigInt>{202});
  for (int n = 4; n <= 8; ++n) CHECK(count_star(n - 3, 1, 1) == count_D1(n));
  // degenerate arms are equioriented chains or source stars
  CHECK(count_star(3, 2, 0) == catalan(6));
  CHECK(count_star(0, 2, 3) == catalan(3) * catalan(4));
  CHECK(count_star(1, 2, 3) == count_star(1, 3, 2));
}

TEST_CASE("full type E table") {
  struct Row {
    int r, s, t;
    long total;
  };
  for (const Row& row : {Row{1, 2, 2, 106}, Row{2, 2, 1, 130}, Row{1, 3, 2, 322},
                         Row{2, 3, 1, 416}, Row{3, 2, 1, 453}, Row{1, 4, 2, 1020},
                         Row{2, 4, 1, 1368}, Row{4, 2, 1, 1584}})
    CHECK(count_star(row.r, row.s, row.t) == row.total);
}

TEST_CASE("complete quivers have n! structures") {
  CHECK(BigInt(enumerate_structures(make_K(4)).size()) == factorial(4));
}

TEST_CASE("closed forms match brute force out to eight vertices") {
  CHECK(BigInt(enumerate_structures(make_A(8)).size()) == catalan(8));
  CHECK(BigInt(enumerate_structures(make_star(5, 1, 1)).size()) == count_D1(8));
}
