#include <catch2/catch_amalgamated.hpp>

#include "fibtype/graph.hpp"
#include "fibtype/planarity.hpp"
#include "fibtype/whitehead.hpp"

using namespace fibtype;

namespace {

LabeledMultigraph complete_graph(int n) {
  LabeledMultigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(VertexTag{i, false});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

LabeledMultigraph complete_bipartite_33() {
  LabeledMultigraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex(VertexTag{i, false});
  for (int i = 0; i < 3; ++i) g.add_vertex(VertexTag{i, true});
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("degrees count loops twice and simplification removes them") {
  LabeledMultigraph g;
  g.add_vertex(VertexTag{0, false});
  g.add_vertex(VertexTag{1, false});
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  REQUIRE(g.degree(0) == 4);
  REQUIRE(g.degree(1) == 2);
  LabeledMultigraph s = g.simplified();
  REQUIRE(s.edge_count() == 1);
  REQUIRE(s.vertex_count() == 2);
}

TEST_CASE("connectivity") {
  LabeledMultigraph g;
  g.add_vertex(VertexTag{0, false});
  g.add_vertex(VertexTag{1, false});
  REQUIRE_FALSE(g.is_connected());
  g.add_edge(0, 1);
  REQUIRE(g.is_connected());
}

TEST_CASE("complete graph recognizers") {
  REQUIRE(is_k5(complete_graph(5)));
  REQUIRE_FALSE(is_k5(complete_graph(4)));
  REQUIRE(is_k33(complete_bipartite_33()));
  REQUIRE_FALSE(is_k33(complete_graph(5)));
  // K33 plus an extra edge is not K33
  LabeledMultigraph g = complete_bipartite_33();
  g.add_edge(0, 1);
  REQUIRE_FALSE(is_k33(g));
}

TEST_CASE("minor operations resolve tags through earlier contractions") {
  // triangle a-b-c; contract a-b then b-c (b already merged into a)
  LabeledMultigraph g;
  VertexTag a{0, false}, b{1, false}, c{2, false};
  g.add_vertex(a);
  g.add_vertex(b);
  g.add_vertex(c);
  g.add_edge(a, b);
  g.add_edge(b, c);
  g.add_edge(c, a);
  LabeledMultigraph r = minor_reduce(
      g, {{MinorOp::Kind::ContractEdge, a, b}, {MinorOp::Kind::ContractEdge, b, c}});
  REQUIRE(r.vertex_count() == 1);
  REQUIRE(r.edge_count() == 1);  // the remaining triangle edge became a loop
  LabeledMultigraph r2 = minor_reduce(r, {{MinorOp::Kind::RemoveLoops, {}, {}}});
  REQUIRE(r2.edge_count() == 0);

  REQUIRE_THROWS_AS(minor_reduce(g, {{MinorOp::Kind::DeleteEdge, a, a}}),
                    std::invalid_argument);
}

TEST_CASE("whitehead graph has 2n vertices and 3n edges with provenance") {
  CyclicPresentation p = make_fib_presentation(FibTypeParams::make(9, 4, 1));
  LabeledMultigraph g = whitehead_graph(p);
  REQUIRE(g.vertex_count() == 18);
  REQUIRE(g.edge_count() == 27);
  for (const auto& e : g.edges()) {
    REQUIRE(e.provenance.relator >= 0);
    REQUIRE(e.provenance.relator < 9);
    REQUIRE(e.provenance.position >= 0);
    REQUIRE(e.provenance.position < 3);
  }
  // edge families: (v_i, v_{i+4}'), (v_i, v_{i+3}), (v_i', v_{i+1}')
  auto edges = g.edge_multiset();
  for (int i = 0; i < 9; ++i) {
    VertexTag vi{i, false}, vip{i, true};
    REQUIRE(g.has_edge(g.vertex(vi), g.vertex(VertexTag{(i + 4) % 9, true})));
    REQUIRE(g.has_edge(g.vertex(vi), g.vertex(VertexTag{(i + 3) % 9, false})));
    REQUIRE(g.has_edge(g.vertex(vip), g.vertex(VertexTag{(i + 1) % 9, true})));
  }
}

TEST_CASE("whitehead graph is invariant under the index shift") {
  for (auto [n, m, k] : {std::tuple{7, 2, 3}, {8, 3, 1}, {9, 4, 1}}) {
    CyclicPresentation p = make_fib_presentation(FibTypeParams::make(n, m, k));
    LabeledMultigraph g = whitehead_graph(p);
    int nn = n;
    LabeledMultigraph shifted_g = g.relabeled([nn](const VertexTag& t) {
      return VertexTag{(t.index + 1) % nn, t.primed};
    });
    REQUIRE(g.edge_multiset() == shifted_g.edge_multiset());
  }
}

TEST_CASE("planarity of the classical examples") {
  REQUIRE(planarity_test(complete_graph(4)).planar);

  PlanarityResult k5 = planarity_test(complete_graph(5));
  REQUIRE_FALSE(k5.planar);
  REQUIRE(k5.witness.has_value());
  REQUIRE(k5.witness->kind == KuratowskiWitness::Kind::K5);
  REQUIRE(verify_witness(complete_graph(5), *k5.witness));

  PlanarityResult k33 = planarity_test(complete_bipartite_33());
  REQUIRE_FALSE(k33.planar);
  REQUIRE(k33.witness->kind == KuratowskiWitness::Kind::K33);
  REQUIRE(verify_witness(complete_bipartite_33(), *k33.witness));
}

TEST_CASE("witness verification rejects corrupted certificates") {
  PlanarityResult k5 = planarity_test(complete_graph(5));
  KuratowskiWitness w = *k5.witness;
  w.kind = KuratowskiWitness::Kind::K33;  // wrong kind for the branch count
  REQUIRE_FALSE(verify_witness(complete_graph(5), w));

  KuratowskiWitness w2 = *k5.witness;
  w2.paths.pop_back();
  REQUIRE_FALSE(verify_witness(complete_graph(5), w2));

  KuratowskiWitness w3 = *k5.witness;
  std::swap(w3.paths[0].front(), w3.paths[0].back());
  REQUIRE_FALSE(verify_witness(complete_graph(4), w3));  // wrong graph
}

TEST_CASE("whitehead graphs of the two undecided h-form members are non-planar") {
  for (int m : {4, 7}) {
    CyclicPresentation p = make_fib_presentation(FibTypeParams::make(9, m, 1));
    PlanarityResult r = planarity_test(whitehead_graph(p));
    REQUIRE_FALSE(r.planar);
    REQUIRE(r.witness.has_value());
    REQUIRE(verify_witness(whitehead_graph(p), *r.witness));
  }
}

TEST_CASE("scripted minor reduction of the G_9(m,1) whitehead graph to K33") {
  for (int m : {4, 7}) {
    LabeledMultigraph g =
        whitehead_graph(make_fib_presentation(FibTypeParams::make(9, m, 1)));
    std::vector<MinorOp> ops;
    for (int i : {0, 3, 6})
      ops.push_back({MinorOp::Kind::DeleteEdge, VertexTag{i, true},
                     VertexTag{(i + 1) % 9, true}});
    for (int i = 0; i < 9; ++i)
      ops.push_back({MinorOp::Kind::ContractEdge, VertexTag{i, false},
                     VertexTag{(i + 3) % 9, false}});
    for (int i : {1, 2, 4, 5, 7, 8})
      ops.push_back({MinorOp::Kind::ContractEdge, VertexTag{i, true},
                     VertexTag{(i + 1) % 9, true}});
    ops.push_back({MinorOp::Kind::RemoveLoops, {}, {}});
    LabeledMultigraph reduced = minor_reduce(g, ops);
    REQUIRE(is_k33(reduced));
  }
}

TEST_CASE("whitehead graphs of spine-carrying members are planar") {
  // m' = 1 and m' = 2 cases
  for (auto [n, m, k] : {std::tuple{6, 1, 1}, {8, 1, 1}, {6, 2, 1}, {8, 2, 1}}) {
    CyclicPresentation p = make_fib_presentation(FibTypeParams::make(n, m, k));
    REQUIRE(planarity_test(whitehead_graph(p)).planar);
  }
}
