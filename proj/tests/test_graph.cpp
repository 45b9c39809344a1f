#include <doctest.h>

#include "testutil.hpp"
#include "upo/graph.hpp"

using namespace upo;
using testutil::expect_error;

TEST_SUITE("graph") {

TEST_CASE("build accepts the vee") {
  ProgressiveGraph g = testutil::vee().graph;
  CHECK(g.vertices() == std::vector<VertexId>{"a", "b", "c", "v"});
  CHECK(g.edges().size() == 3);
  CHECK(g.boundary() == std::set<VertexId>{"a", "b", "c"});
  CHECK(g.edge("e1") == EdgeEnds{"a", "v"});
}

TEST_CASE("boundary vertices must be leaves") {
  Error e = expect_error([] {
    build_graph({"a", "b", "c", "v"},
                {{"e1", {"a", "v"}}, {"e2", {"b", "v"}}, {"e3", {"v", "c"}}},
                {"v"});
  });
  CHECK(e.kind() == ErrorKind::BoundaryNotLeaf);
  CHECK(e.witness() == std::vector<std::string>{"v"});
}

TEST_CASE("boundary vertices must exist") {
  Error e = expect_error([] { build_graph({"a"}, {}, {"ghost"}); });
  CHECK(e.kind() == ErrorKind::BoundaryNotLeaf);
  CHECK(e.witness() == std::vector<std::string>{"ghost"});
}

TEST_CASE("cycles are rejected with a witness") {
  Error e = expect_error([] {
    build_graph({"x", "y"}, {{"e1", {"x", "y"}}, {"e2", {"y", "x"}}}, {});
  });
  CHECK(e.kind() == ErrorKind::CycleDetected);
  CHECK(e.witness().size() == 2);
}

TEST_CASE("self-loops are one-vertex cycles") {
  Error e = expect_error([] { build_graph({"x"}, {{"e", {"x", "x"}}}, {}); });
  CHECK(e.kind() == ErrorKind::CycleDetected);
  CHECK(e.witness() == std::vector<std::string>{"x"});
}

TEST_CASE("duplicate ids are rejected across both namespaces") {
  CHECK(expect_error([] { build_graph({"a", "a"}, {}, {}); }).kind() ==
        ErrorKind::DuplicateId);
  CHECK(expect_error([] {
          build_graph({"a", "b"}, {{"e", {"a", "b"}}, {"e", {"a", "b"}}}, {});
        }).kind() == ErrorKind::DuplicateId);
  CHECK(expect_error([] { build_graph({"a", "b"}, {{"a", {"a", "b"}}}, {}); })
            .kind() == ErrorKind::DuplicateId);
}

TEST_CASE("edges may not dangle") {
  Error e = expect_error([] { build_graph({"a"}, {{"e", {"a", "nope"}}}, {}); });
  CHECK(e.kind() == ErrorKind::DanglingEndpoint);
  CHECK(e.witness() == std::vector<std::string>{"e", "nope"});
}

TEST_CASE("ids must be plain tokens") {
  CHECK(expect_error([] { build_graph({""}, {}, {}); }).kind() ==
        ErrorKind::MalformedToken);
  CHECK(expect_error([] { build_graph({"a b"}, {}, {}); }).kind() ==
        ErrorKind::MalformedToken);
}

TEST_CASE("incidence lists are ordered by id") {
  ProgressiveGraph g = testutil::vee().graph;
  const IncidenceView& iv = g.incidence("v");
  CHECK(iv.in_edges == std::vector<EdgeId>{"e1", "e2"});
  CHECK(iv.out_edges == std::vector<EdgeId>{"e3"});
  CHECK(iv.all_edges == std::vector<EdgeId>{"e1", "e2", "e3"});
  CHECK(g.incidence("a").in_edges.empty());
  CHECK(g.incidence("a").out_edges == std::vector<EdgeId>{"e1"});
  CHECK(expect_error([&] { g.incidence("ghost"); }).kind() == ErrorKind::UnknownVertex);
}

TEST_CASE("processive means both polarities present") {
  ProgressiveGraph g = testutil::vee().graph;
  CHECK(g.is_processive("v"));
  CHECK_FALSE(g.is_processive("a"));
  ProgressiveGraph lone = build_graph({"p"}, {}, {});
  CHECK_FALSE(lone.is_processive("p"));
  CHECK(lone.is_isolated("p"));
}

TEST_CASE("edge reachability follows directed paths and is reflexive") {
  ProgressiveGraph g = testutil::vee().graph;
  CHECK(g.edge_reachable("e1", "e3"));
  CHECK_FALSE(g.edge_reachable("e3", "e1"));
  CHECK_FALSE(g.edge_reachable("e1", "e2"));
  CHECK(g.edge_reachable("e1", "e1"));
  // two-step path through a middle vertex
  ProgressiveGraph chain = build_graph(
      {"a", "b", "c", "d"},
      {{"x", {"a", "b"}}, {"y", {"b", "c"}}, {"z", {"c", "d"}}}, {});
  CHECK(chain.edge_reachable("x", "z"));
  CHECK_FALSE(chain.edge_reachable("z", "x"));
}

TEST_CASE("domain and codomain read off the boundary") {
  auto [in_v, out_v] = testutil::vee().graph.domain_codomain();
  CHECK(in_v == std::set<EdgeId>{"e1", "e2"});
  CHECK(out_v == std::set<EdgeId>{"e3"});

  auto [in_w, out_w] = testutil::single_wire().graph.domain_codomain();
  CHECK(in_w == std::set<EdgeId>{"w"});
  CHECK(out_w == std::set<EdgeId>{"w"});  // a wire is both

  ProgressiveGraph closed = build_graph({"a", "b"}, {{"e", {"a", "b"}}}, {});
  auto [in_c, out_c] = closed.domain_codomain();
  CHECK(in_c.empty());
  CHECK(out_c.empty());
}

TEST_CASE("virtualize replaces isolated vertices by fresh wires") {
  ProgressiveGraph lone = build_graph({"u"}, {}, {});
  ProgressiveGraph v = virtualize_isolated(lone);
  CHECK(v.vertices() == std::vector<VertexId>{"u.s", "u.t"});
  CHECK(v.edges().size() == 1);
  CHECK(v.edge("u.e") == EdgeEnds{"u.s", "u.t"});
  CHECK(v.boundary().empty());

  // no isolated vertices: unchanged
  ProgressiveGraph g = testutil::vee().graph;
  CHECK(virtualize_isolated(g) == g);

  // idempotent
  CHECK(virtualize_isolated(v) == v);
}

TEST_CASE("virtualize keeps clear of existing names") {
  ProgressiveGraph g = build_graph({"u", "u.s"}, {}, {});
  ProgressiveGraph v = virtualize_isolated(g);
  CHECK(v.edges().size() == 2);
  CHECK(v.vertices().size() == 4);
  // "u" needed a dodge for its source leaf, "u.s" got its own pair
  CHECK(v.has_vertex("u.s_"));
  CHECK(v.has_vertex("u.s.s"));
}

TEST_CASE("random graphs: invariants hold") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 150; ++iter) {
    ProgressiveGraph g = testutil::random_dag(rng);

    // acyclic: never reachable both ways
    for (const auto& [e1, _1] : g.edges()) {
      for (const auto& [e2, _2] : g.edges()) {
        if (e1 < e2) {
          CHECK_FALSE((g.edge_reachable(e1, e2) && g.edge_reachable(e2, e1)));
        }
      }
    }

    // boundary members have degree one
    for (const VertexId& v : g.boundary()) {
      const IncidenceView& iv = g.incidence(v);
      CHECK(iv.in_edges.size() + iv.out_edges.size() == 1);
    }

    // domain/codomain touch the boundary; wires are exactly the overlap
    auto [inputs, outputs] = g.domain_codomain();
    for (const EdgeId& e : inputs) CHECK(g.boundary().count(g.edge(e).source));
    for (const EdgeId& e : outputs) CHECK(g.boundary().count(g.edge(e).target));

    // virtualize: idempotent, removes isolation, preserves edge count + isolated
    ProgressiveGraph v = virtualize_isolated(g);
    std::size_t isolated = 0;
    for (const VertexId& u : g.vertices()) isolated += g.is_isolated(u) ? 1 : 0;
    CHECK(v.edges().size() == g.edges().size() + isolated);
    for (const VertexId& u : v.vertices()) CHECK_FALSE(v.is_isolated(u));
    CHECK(virtualize_isolated(v) == v);
  }
}

}  // TEST_SUITE
