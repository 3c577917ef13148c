#include <sstream>

#include "doctest.h"
#include "qcwalk/graph.hpp"

using namespace qcwalk;

TEST_CASE("basic generators") {
  CHECK(make_line(5).m() == 4);
  CHECK(make_cycle(8).m() == 8);
  Graph star = make_star(6);
  CHECK(star.m() == 5);
  CHECK(star.degree[0] == 5);
  CHECK(make_complete(5).m() == 10);
  CHECK(make_complete(5).connected);
  CHECK_THROWS_AS(make_line(1), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("lollipop dimensions") {
  Graph g = make_lollipop(12);
  CHECK(g.n == 12);
  CHECK(g.m() == 13);
  CHECK(diameter(g) == 9);
  CHECK(g.connected);
  CHECK_THROWS_AS(make_lollipop(7), std::invalid_argument);
}

TEST_CASE("petersen") {
  Graph g = make_petersen();
  CHECK(g.n == 10);
  CHECK(g.m() == 15);
  CHECK(diameter(g) == 2);
  for (int v = 0; v < g.n; ++v) CHECK(g.degree[v] == 3);
}

TEST_CASE("semi-regular circulant") {
  Graph g = make_semi_regular(10, 4);
  CHECK(g.n == 10);
  CHECK(g.m() == 40);
  CHECK(diameter(g) == 2);
  for (int v = 0; v < g.n; ++v) CHECK(g.degree[v] == 8);
  CHECK_THROWS_AS(make_semi_regular(8, 4), std::invalid_argument);
}

TEST_CASE("double star shape and admissibility") {
  Graph g = make_double_star(3, 2, 8);
  CHECK(g.n == 8);
  CHECK(g.m() == 9);
  CHECK(g.degree[0] == 3);  // 1 + k + (i-1-k) with i=3, k=2
  CHECK(g.degree[1] == 7);  // 1 + k + (n-1-i)
  CHECK(g.has_edge(0, 1));
  CHECK_THROWS_AS(make_double_star(2, 2, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_double_star(1, 1, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_double_star(6, 1, 6), std::invalid_argument);
}

TEST_CASE("degree-sum condition classification") {
  CHECK(assumption_check(make_cycle(4)).holds);
  CHECK(assumption_check(make_complete(5)).holds);
  CHECK(assumption_check(make_petersen()).holds);

  AssumptionReport star = assumption_check(make_star(5));
  CHECK_FALSE(star.holds);
  CHECK(star.failure_shape == "star");
  CHECK(star.worst_degree_sum == 5);  // 4 + 1 > m = 4

  AssumptionReport ds = assumption_check(make_double_star(3, 2, 8));
  CHECK_FALSE(ds.holds);
  CHECK(ds.failure_shape == "double_star");
  CHECK(ds.worst_degree_sum == 10);  // 3 + 7 > m = 9

  // short lines fail, longer ones pass
  CHECK_FALSE(assumption_check(make_line(3)).holds);
  CHECK_FALSE(assumption_check(make_line(4)).holds);
  CHECK(assumption_check(make_line(5)).holds);
}

TEST_CASE("build_graph rejects malformed edge lists") {
  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
  Graph g = build_graph(3, {{2, 0}, {1, 2}});  // normalized to u < v
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.connected);
}

TEST_CASE("text round trip") {
  Graph g = make_double_star(4, 2, 9);
  std::stringstream ss;
  write_graph_text(g, ss);
  Graph back = read_graph_text(ss);
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
}

TEST_CASE("spec strings") {
  CHECK(parse_graph_spec("cycle:8").n == 8);
  CHECK(parse_graph_spec("line:5").m() == 4);
  CHECK(parse_graph_spec("star:6").degree[0] == 5);
  CHECK(parse_graph_spec("complete:4").m() == 6);
  CHECK(parse_graph_spec("lollipop:12").m() == 13);
  CHECK(parse_graph_spec("petersen").n == 10);
  CHECK(parse_graph_spec("semi_regular:n=10,k=2").m() == 20);
  Graph ds = parse_graph_spec("double_star:i=4,k=2,n=9");
  CHECK(ds.n == 9);
  CHECK(ds.m() == 10);
  Graph r1 = parse_graph_spec("random:n=10,p=0.4,seed=7");
  Graph r2 = parse_graph_spec("random:n=10,p=0.4,seed=7");
  CHECK(r1.n == 10);
  CHECK(r1.connected);
  CHECK(r1.edges == r2.edges);
  Graph r3 = parse_graph_spec("random:n=10,p=0.4,seed=8");
  CHECK(r1.edges != r3.edges);
  CHECK_THROWS_AS(parse_graph_spec("bogus:xyz"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("cycle:notanumber"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("double_star:i=4"), std::invalid_argument);
}

TEST_CASE("distances") {
  Graph p4 = make_line(4);
  auto d = bfs_distances(p4, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3});
  CHECK(diameter(p4) == 3);
  CHECK(diameter(make_complete(5)) == 1);
  CHECK(diameter(make_cycle(8)) == 4);
}

TEST_CASE("square graph") {
  Graph p3 = make_line(3);
  Graph sq = cartesian_square(p3);
  CHECK(sq.n == 9);
  CHECK(sq.m() == 12);  // 2 * n * m
  // (0,0)-(1,0) and (0,0)-(0,1) must both exist under index x*n+y
  CHECK(sq.has_edge(0, 3));
  CHECK(sq.has_edge(0, 1));
  CHECK_FALSE(sq.has_edge(0, 4));  // diagonal moves are not product edges
}
