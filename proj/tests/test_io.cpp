#include <catch2/catch_amalgamated.hpp>

#include "qhstruct/io.hpp"

using namespace qhstruct;

TEST_CASE("quiver JSON round trip") {
  Quiver q(5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}});
  Quiver back = quiver_from_json(to_json(q));
  CHECK(back.n == q.n);
  CHECK(back.arrows == q.arrows);
  CHECK_THROWS_AS(quiver_from_json(json{{"vertices", 2}}), Error);
  CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices":2,"arrows":[[1,1]]})")),
                  Error);
}

TEST_CASE("order JSON round trip") {
  PartialOrder o = transitive_closure(4, {{0, 1}, {1, 2}});
  PartialOrder back = order_from_json(to_json(o));
  CHECK(back == o);
  CHECK_THROWS_AS(order_from_json(json::parse(R"({"n":2,"pairs":[[1,3]]})")), Error);
  CHECK_THROWS_AS(order_from_json(json::parse(R"({"n":2,"pairs":[[1,2],[2,1]]})")),
                  CycleError);
}

TEST_CASE("poset JSON shape") {
  QhPoset p = enumerate_structures(make_A(3));
  json j = to_json(p);
  CHECK(j.at("schema") == kSchema);
  CHECK(j.at("count") == 5);
  CHECK(j.at("structures").size() == 5);
  CHECK(j.at("structures")[0].contains("min_order"));
  CHECK(j.at("structures")[0].contains("dec"));
  CHECK(j.at("structures")[0].contains("inc"));
}

TEST_CASE("standard system JSON") {
  Quiver q = make_K(3);
  StandardSystem sys =
      standard_system(transitive_closure(3, {{0, 1}, {1, 2}}), q);
  json j = to_json(sys);
  CHECK(j.at("delta").at("3").at("multiplicities").at("1") == 2);
}

TEST_CASE("deconcatenation JSON") {
  auto d = deconcatenate(Quiver(5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}}), 1);
  REQUIRE(d.has_value());
  json j = to_json(*d);
  CHECK(j.at("cuts")[0].at("vertex") == 2);
  CHECK(j.at("cuts")[0].at("kind") == "sink");
  CHECK(j.at("parts").size() == 2);
}

TEST_CASE("order labels") {
  CHECK(order_label(PartialOrder(3)) == "{}");
  CHECK(order_label(transitive_closure(3, {{1, 0}, {1, 2}})) == "2<1 2<3");
}

TEST_CASE("load_quiver resolves catalog names and rejects junk") {
  CHECK(load_quiver("A4").n == 4);
  CHECK_THROWS_AS(load_quiver("/nonexistent/file.json"), Error);
}
