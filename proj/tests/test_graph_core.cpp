#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "toric/blocks.hpp"
#include "toric/corpus.hpp"
#include "toric/cycles.hpp"
#include "toric/errors.hpp"
#include "toric/graph.hpp"
#include "toric/walk.hpp"

using namespace toric;
using namespace testsupport;

TEST_CASE("parse_graph reads the edge-list format") {
  Graph g = parse_graph("4\n0 1\n1 2\n2 3\n3 0");
  CHECK(g.vertex_count == 4);
  REQUIRE(g.edge_count() == 4);
  CHECK(g.edges[0] == std::pair<int, int>{0, 1});
  CHECK(g.edges[3] == std::pair<int, int>{3, 0});

  Graph loop = parse_graph("1\n0 0");
  CHECK(loop.vertex_count == 1);
  CHECK(loop.is_loop(0));

  Graph par = parse_graph("3\n0 1\n0 1");
  CHECK(par.edge_count() == 2);
  CHECK(par.edges[0] == par.edges[1]);

  Graph commented = parse_graph("# header\n3\n\n0 1  # an edge\n# nothing\n1 2\n");
  CHECK(commented.edge_count() == 2);
}

TEST_CASE("parse_graph rejects malformed documents") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("x"), ParseError);
  CHECK_THROWS_AS(parse_graph("2\n0"), ParseError);
  CHECK_THROWS_AS(parse_graph("2\n0 2"), ParseError);
  CHECK_THROWS_AS(parse_graph("2\n0 -1"), ParseError);
  CHECK_THROWS_AS(parse_graph("2\n0 1 junk"), ParseError);
  CHECK_THROWS_AS(parse_graph("-3"), ParseError);
}

TEST_CASE("parse and format round trip") {
  Graph g = parse_graph("5\n0 1\n1 1\n2 3\n3 4\n4 2");
  CHECK(parse_graph(format_graph(g)).edges == g.edges);
}

TEST_CASE("incidence matrix columns carry the edge endpoints") {
  IntegerMatrix A = incidence_matrix(four_cycle());
  REQUIRE(A.rows() == 4);
  REQUIRE(A.cols() == 4);
  CHECK(A.column(0) == SignedVector{1, 1, 0, 0});
  CHECK(A.column(1) == SignedVector{0, 1, 1, 0});
  CHECK(A.column(2) == SignedVector{0, 0, 1, 1});
  CHECK(A.column(3) == SignedVector{1, 0, 0, 1});

  IntegerMatrix L = incidence_matrix(parse_graph("1\n0 0"));
  CHECK(L.column(0) == SignedVector{2});  // loop column is 2, not 1

  IntegerMatrix E = incidence_matrix(Graph{2, {}});
  CHECK(E.rows() == 2);
  CHECK(E.cols() == 0);
}

TEST_CASE("blocks of the fixtures") {
  BlockDecomposition bow = blocks(bowtie());
  REQUIRE(bow.block_count() == 2);
  CHECK(bow.blocks[0].kind == BlockKind::Cycle);
  CHECK(bow.blocks[1].kind == BlockKind::Cycle);
  CHECK(bow.cut_vertices == std::vector<int>{2});
  CHECK(bow.cut_edges.empty());

  BlockDecomposition path = blocks(path_graph(3));
  REQUIRE(path.block_count() == 2);
  CHECK(path.blocks[0].kind == BlockKind::CutEdge);
  CHECK(path.blocks[1].kind == BlockKind::CutEdge);
  CHECK(path.cut_vertices == std::vector<int>{1});
  CHECK(path.cut_edges == std::vector<int>{0, 1});

  BlockDecomposition k = blocks(k4());
  REQUIRE(k.block_count() == 1);
  CHECK(k.blocks[0].kind == BlockKind::Other);
  CHECK(k.cut_vertices.empty());
}

TEST_CASE("multigraph blocks: loops, parallels, triples") {
  BlockDecomposition lp = blocks(parse_graph("2\n0 0\n0 1"));
  REQUIRE(lp.block_count() == 2);
  int loops = 0, bridges = 0;
  for (const Block& b : lp.blocks) {
    if (b.kind == BlockKind::Cycle) ++loops;
    if (b.kind == BlockKind::CutEdge) ++bridges;
  }
  CHECK(loops == 1);
  CHECK(bridges == 1);
  // the loop attaches a second block at vertex 0 without separating it
  CHECK(lp.cut_vertices == std::vector<int>{0});

  BlockDecomposition par = blocks(parse_graph("2\n0 1\n0 1"));
  REQUIRE(par.block_count() == 1);
  CHECK(par.blocks[0].kind == BlockKind::Cycle);
  CHECK(par.blocks[0].vertices.size() == 2);

  BlockDecomposition triple = blocks(parse_graph("2\n0 1\n0 1\n0 1"));
  REQUIRE(triple.block_count() == 1);
  CHECK(triple.blocks[0].kind == BlockKind::Other);
}

TEST_CASE("blocks partition the edges and cuts disconnect") {
  Rng rng(99);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_connected_multigraph(rng, 7, 10);
    BlockDecomposition d = blocks(g);
    std::vector<int> seen(g.edge_count(), 0);
    for (const Block& b : d.blocks)
      for (int e : b.edges) seen[e] += 1;
    for (int e = 0; e < g.edge_count(); ++e) CHECK(seen[e] == 1);

    // geometric cut property; a loop block attaches without separating, so
    // skip vertices carrying loops
    for (int v : d.cut_vertices) {
      bool loop_at_v = false;
      for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e) && g.edges[e].first == v) loop_at_v = true;
      if (loop_at_v) continue;
      auto label = component_labels(g, v);
      int comps = 0;
      for (int w = 0; w < g.vertex_count; ++w)
        if (w != v) comps = std::max(comps, label[w] + 1);
      CHECK(comps >= 2);
    }
    for (int e : d.cut_edges) {
      Graph h = g;
      h.edges.erase(h.edges.begin() + e);
      CHECK_FALSE(is_connected(h));
    }
  }
}

TEST_CASE("block tree of the fixtures") {
  BlockTree bow = block_tree(blocks(bowtie()));
  CHECK(bow.node_count == 2);
  REQUIRE(bow.edge_count() == 1);
  CHECK(bow.edges[0].shared_vertex == 2);
  CHECK(bow.is_tree());

  BlockTree ttb = block_tree(blocks(two_triangles_bridge()));
  CHECK(ttb.node_count == 3);
  CHECK(ttb.edge_count() == 2);
  CHECK(ttb.is_tree());
  int leaves = 0;
  for (int i = 0; i < ttb.node_count; ++i) leaves += ttb.leaf[i];
  CHECK(leaves == 2);

  BlockTree single = block_tree(blocks(four_cycle()));
  CHECK(single.node_count == 1);
  CHECK(single.edge_count() == 0);
  CHECK(single.is_tree());
}

TEST_CASE("block tree rejects disconnected subgraphs") {
  Graph two = parse_graph("6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3");
  CHECK_THROWS_AS(block_tree(blocks(two)), std::invalid_argument);
}

TEST_CASE("three blocks at one vertex give a block triangle, not a tree") {
  Graph g = parse_graph("7\n0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n0 5\n5 6\n6 0");
  BlockTree t = block_tree(blocks(g));
  CHECK(t.node_count == 3);
  CHECK(t.edge_count() == 3);
  CHECK_FALSE(t.is_tree());
}

TEST_CASE("simple cycle enumeration on the fixtures") {
  CHECK(enumerate_simple_cycles(four_cycle()).size() == 1);
  CHECK(enumerate_simple_cycles(four_cycle())[0].length() == 4);
  CHECK(enumerate_simple_cycles(k4()).size() == 7);  // 4 triangles + 3 quadrilaterals
  CHECK(enumerate_simple_cycles(path_graph(5)).empty());
  CHECK(enumerate_simple_cycles(parse_graph("1\n0 0")).size() == 1);
  CHECK(enumerate_simple_cycles(parse_graph("1\n0 0\n0 0")).size() == 2);  // two loops, no 2-cycle
  CHECK(enumerate_simple_cycles(parse_graph("2\n0 1\n0 1")).size() == 1);
  CHECK(enumerate_simple_cycles(parse_graph("2\n0 1\n0 1\n0 1")).size() == 3);  // parallel pairs
}

TEST_CASE("cycle enumeration agrees with 2-regular brute force") {
  Rng rng(123);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_connected_multigraph(rng, 6, 9);
    std::set<std::vector<int>> found;
    for (const Walk& c : enumerate_simple_cycles(g)) {
      std::vector<int> es = c.edge_sequence;
      std::sort(es.begin(), es.end());
      CHECK(found.insert(es).second);  // no duplicates up to rotation/reflection
    }
    CHECK(found == brute_force_cycle_edge_sets(g));
  }
}

TEST_CASE("cycle cap is a hard error") {
  CHECK_THROWS_AS(enumerate_simple_cycles(k4(), 3), CapExceeded);
}

TEST_CASE("walk_binomial splits odd and even positions") {
  Graph g = four_cycle();
  Walk w{0, {0, 1, 2, 3}};
  Binomial b = walk_binomial(g, w);
  CHECK(b.plus == ExponentVector{1, 0, 1, 0});
  CHECK(b.minus == ExponentVector{0, 1, 0, 1});

  CHECK_THROWS_AS(walk_binomial(g, Walk{0, {0, 1, 2}}), std::invalid_argument);  // odd
  CHECK_THROWS_AS(walk_binomial(g, Walk{0, {0, 1}}), std::invalid_argument);     // open
}

TEST_CASE("walk_binomial keeps common factors uncancelled") {
  Graph g = path_graph(2);
  Binomial b = walk_binomial(g, Walk{0, {0, 0}});  // out and back over one edge
  CHECK(b.plus == ExponentVector{1});
  CHECK(b.minus == ExponentVector{1});
  CHECK(b.is_zero());
  CHECK_FALSE(b.disjoint_supports());
}

TEST_CASE("every even cycle binomial lies in the kernel") {
  Rng rng(321);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_connected_multigraph(rng, 7, 10);
    IntegerMatrix A = incidence_matrix(g);
    for (const Walk& c : enumerate_simple_cycles(g)) {
      if (c.length() % 2 != 0) continue;
      CHECK(in_kernel(A, walk_binomial(g, c)));
    }
  }
}
