#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bigraph/graph.hpp"

using namespace bg;

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(make_bigraph(2, 2, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_bigraph(1, 2, {{1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_bigraph_edges(2, 2, {{2, 0, 1}}), std::invalid_argument);
  Bigraph g = make_bigraph_edges(2, 2, {{0, 1, 2}, {0, 1, 3}});
  CHECK(g.mult[0][1] == 5);
}

TEST_CASE("params computes degree statistics") {
  Bigraph g = make_bigraph(2, 3, {{2, 1, 0}, {0, 1, 1}});
  GraphParams p = params(g);
  CHECK(p.n == 2);
  CHECK(p.ny == 3);
  CHECK(p.t == 1);
  CHECK(p.m == 5);
  CHECK(p.b == -1);
  CHECK(p.k == 2);       // both rows have degree 3 and 2
  CHECK(p.r == 2);
  CHECK(p.deltaY == 1);  // column 2
  CHECK(p.rY == 1);
}

TEST_CASE("neighborhoods and degrees") {
  Bigraph g = make_bigraph(3, 3, {{2, 0, 1}, {2, 1, 0}, {1, 1, 1}});
  CHECK(neighbors_x(g, 0) == std::vector<int>{0, 2});
  CHECK(neighbors_y(g, 1) == std::vector<int>{1, 2});
  CHECK(degree_x(g, 0) == 3);
  CHECK(degree_y(g, 0) == 5);
  CHECK(distinct_degree_x(g, 2) == 3);
  CHECK(neighborhood(g, {0, 1}) == std::vector<int>{0, 1, 2});
  CHECK(neighborhood(g, {}) == std::vector<int>{});
}

TEST_CASE("induced subgraph and vertex-pair removal") {
  Bigraph g = make_bigraph(3, 3, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  Bigraph h = induced_subgraph(g, {0, 2}, {1, 2});
  CHECK(h.nx == 2);
  CHECK(h.ny == 2);
  CHECK(h.mult == std::vector<std::vector<long long>>{{2, 3}, {8, 9}});
  Bigraph r = remove_vertex_pair(g, 1, 0);
  CHECK(r.mult == std::vector<std::vector<long long>>{{2, 3}, {8, 9}});
}

TEST_CASE("transpose and underlying simple graph") {
  Bigraph g = make_bigraph(2, 3, {{2, 0, 1}, {0, 3, 0}});
  Bigraph t = transpose(g);
  CHECK(t.nx == 3);
  CHECK(t.mult == std::vector<std::vector<long long>>{{2, 0}, {0, 3}, {1, 0}});
  Bigraph s = underlying_simple(g);
  CHECK(s.mult == std::vector<std::vector<long long>>{{1, 0, 1}, {0, 1, 0}});
}

TEST_CASE("universal columns") {
  Bigraph g = make_bigraph(2, 1, {{2}, {0}});
  Bigraph h = add_universal_columns(g, 2);
  CHECK(h.ny == 3);
  CHECK(h.mult == std::vector<std::vector<long long>>{{2, 1, 1}, {0, 1, 1}});
}

TEST_CASE("canonical key is permutation invariant") {
  Bigraph g = make_bigraph(3, 3, {{2, 0, 1}, {2, 1, 0}, {1, 1, 1}});
  auto key = canonical_key(g);
  std::mt19937 rng(7);
  std::vector<int> rp{0, 1, 2}, cp{0, 1, 2};
  for (int iter = 0; iter < 20; ++iter) {
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    Bigraph h(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h.mult[rp[i]][cp[j]] = g.mult[i][j];
    CHECK(canonical_key(h) == key);
  }
}

TEST_CASE("canonical key distinguishes non-isomorphic graphs") {
  Bigraph a = make_bigraph(2, 2, {{1, 1}, {1, 0}});
  Bigraph b = make_bigraph(2, 2, {{1, 1}, {0, 0}});
  CHECK(canonical_key(a) != canonical_key(b));
  Bigraph c = make_bigraph(2, 2, {{2, 1}, {1, 1}});
  Bigraph d = make_bigraph(2, 2, {{1, 1}, {1, 2}});
  CHECK(canonical_key(c) == canonical_key(d));
}

TEST_CASE("json round trip") {
  Bigraph g = make_bigraph(2, 3, {{2, 0, 1}, {0, 3, 0}});
  std::string s = to_json(g);
  Bigraph h = from_json(s);
  CHECK(h == g);
  CHECK(s.find("\"nx\":2") != std::string::npos);
  CHECK_THROWS_AS(from_json("{\"nx\":1}"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("{\"nx\":1,\"ny\":1,\"edges\":[[0,0,-2]]}"),
                  std::invalid_argument);
}

TEST_CASE("text round trip") {
  Bigraph g = make_bigraph(2, 2, {{0, 2}, {1, 0}});
  Bigraph h = from_text(to_text(g));
  CHECK(h == g);
  CHECK_THROWS_AS(from_text("2"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("1 1\n0 0 1 junk"), std::invalid_argument);
}

TEST_CASE("big number rendering") {
  CHECK(to_string(Int(-5)) == "-5");
  Int f = 1;
  for (int i = 2; i <= 30; ++i) f *= i;
  CHECK(to_string(f) == "265252859812191058636308480000000");
  CHECK(to_string(Rat(7, 2)) == "7/2");
  CHECK(to_string(Rat(8, 2)) == "4");
}
