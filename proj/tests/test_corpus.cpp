#include "doctest.h"
#include "toric/corpus.hpp"

using namespace toric;

TEST_CASE("random multigraphs are connected and within bounds") {
  Rng rng(1);
  int loops = 0, parallels = 0;
  for (int it = 0; it < 300; ++it) {
    Graph g = random_connected_multigraph(rng, 7, 10);
    CHECK(g.vertex_count >= 1);
    CHECK(g.vertex_count <= 7);
    CHECK(g.edge_count() <= 10);
    CHECK(is_connected(g));
    for (int e = 0; e < g.edge_count(); ++e) {
      CHECK(g.edges[e].first < g.vertex_count);
      CHECK(g.edges[e].second < g.vertex_count);
      if (g.is_loop(e)) ++loops;
      for (int f = e + 1; f < g.edge_count(); ++f) {
        auto [a, b] = g.edges[e];
        auto [c, d] = g.edges[f];
        if ((a == c && b == d) || (a == d && b == c)) ++parallels;
      }
    }
  }
  // the generator must actually exercise multigraph features
  CHECK(loops > 50);
  CHECK(parallels > 50);
}

TEST_CASE("generators are deterministic under a fixed seed") {
  Rng a(42), b(42);
  for (int it = 0; it < 50; ++it) {
    Graph ga = random_connected_multigraph(a);
    Graph gb = random_connected_multigraph(b);
    CHECK(ga.vertex_count == gb.vertex_count);
    CHECK(ga.edges == gb.edges);
  }
  Rng ta(17), tb(17);
  for (int it = 0; it < 50; ++it) {
    Tree x = random_tree(ta);
    Tree y = random_tree(tb);
    CHECK(x.vertex_count == y.vertex_count);
    CHECK(x.edges == y.edges);
  }
}

TEST_CASE("random trees are trees in the requested size range") {
  Rng rng(3);
  for (int it = 0; it < 200; ++it) {
    Tree t = random_tree(rng, 3, 50);
    CHECK(t.vertex_count >= 3);
    CHECK(t.vertex_count <= 50);
    CHECK(t.is_valid_tree());
  }
}

TEST_CASE("exhaustive enumeration counts match known values") {
  // connected labeled graphs by vertex count: 1, 1, 4, 38, 728
  CHECK(exhaustive_connected_graphs(1, 9).size() == 1);
  CHECK(exhaustive_connected_graphs(2, 9).size() == 2);
  CHECK(exhaustive_connected_graphs(3, 9).size() == 6);
  CHECK(exhaustive_connected_graphs(4, 9).size() == 44);
  CHECK(exhaustive_connected_graphs(5, 9).size() == 771);  // 772 minus K5, which has 10 edges

  // restricting the edge budget to 3 keeps only the 16 spanning trees of K4
  CHECK(exhaustive_connected_graphs(4, 3).size() == 22);

  for (const Graph& g : exhaustive_connected_graphs(4, 9)) {
    CHECK(is_connected(g));
    CHECK(g.edge_count() <= 9);
    // spanning: no isolated vertices beyond the one-vertex graph
    if (g.vertex_count > 1) {
      std::vector<int> deg(g.vertex_count, 0);
      for (auto [a, b] : g.edges) {
        deg[a] += 1;
        deg[b] += 1;
      }
      for (int v = 0; v < g.vertex_count; ++v) CHECK(deg[v] > 0);
    }
  }
}
