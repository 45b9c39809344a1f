#include <doctest.h>

#include <map>

#include "testutil.hpp"
#include "upo/upg.hpp"

using namespace upo;
using testutil::expect_error;

namespace {

// frozen digests of the shipped example files; a failure here means a
// fixture changed and every hand-checked expectation must be re-derived
const std::map<std::string, std::uint64_t> kFixtureDigests = {
    {"islands.upg", 0xac6b3cf37fe51724ull},
    {"closed-pair.upg", 0x198842d5fbc834dcull},
    {"stack.layers", 0x74f487cd5c82586bull},
    {"fork.upg", 0xda9d0b15dc048dc4ull},
    {"merge.upg", 0x468cdfccbc1f8320ull},
    {"showcase.upg", 0x65a01ca393b4b02cull},
    {"wire-outside.upg", 0x6c76dc12aa0839f4ull},
    {"wire-between.upg", 0x3d7a584205779a54ull},
    {"vee.upg", 0xa14c044ab8ee65baull},
    {"wire.upg", 0xc76fcc6a86e49715ull},
};

}  // namespace

TEST_SUITE("format") {

TEST_CASE("fixture files are pinned byte for byte") {
  for (const auto& [name, digest] : kFixtureDigests) {
    INFO(name);
    CHECK(testutil::fnv1a(testutil::slurp(testutil::fixture_path(name))) == digest);
  }
}

TEST_CASE("parsing the vee") {
  UpgDocument doc = parse_upg(testutil::slurp(testutil::fixture_path("vee.upg")));
  CHECK(doc.graph.vertices() == std::vector<VertexId>{"a", "b", "c", "v"});
  CHECK(doc.graph.boundary() == std::set<VertexId>{"a", "b", "c"});
  CHECK(doc.graph.edge("e1") == EdgeEnds{"a", "v"});
  REQUIRE(doc.order.has_value());
  CHECK(doc.order->sequence() == std::vector<EdgeId>{"e1", "e2", "e3"});
  CHECK(doc.source_lines.at("v") == 6);
  CHECK(doc.source_lines.at("e3") == 9);
}

TEST_CASE("a document needs no order") {
  UpgDocument doc = parse_upg("upg 1\nvertex a boundary\nvertex z\nedge e a z\n");
  CHECK_FALSE(doc.order.has_value());
  UpgDocument iso = testutil::load_fixture("islands.upg");
  CHECK_FALSE(iso.order.has_value());
  CHECK(iso.graph.edges().size() == 14);
}

TEST_CASE("serialization is canonical") {
  UpgDocument doc = parse_upg(
      "upg 1\n# scrambled on purpose\nvertex v\nedge e3 v c\n"
      "vertex c boundary\nedge e2 b v\nvertex b boundary\n"
      "vertex a boundary\nedge e1 a v\norder e1 e2 e3\n");
  CHECK(serialize_upg(doc) ==
        "upg 1\n"
        "vertex a boundary\n"
        "vertex b boundary\n"
        "vertex c boundary\n"
        "vertex v\n"
        "edge e1 a v\n"
        "edge e2 b v\n"
        "edge e3 v c\n"
        "order e1 e2 e3\n");

  CHECK(serialize_upg(parse_upg("upg 1\n")) == "upg 1\n");
}

TEST_CASE("parse and serialize are inverse on every fixture") {
  for (const auto& [name, digest] : kFixtureDigests) {
    if (name.find(".upg") == std::string::npos) continue;
    INFO(name);
    UpgDocument doc = testutil::load_fixture(name);
    std::string flat = serialize_upg(doc);
    UpgDocument again = parse_upg(flat);
    CHECK(same_content(doc, again));
    CHECK(serialize_upg(again) == flat);
  }
}

TEST_CASE("multi-line orders") {
  UpgDocument doc = parse_upg(
      "upg 1\nvertex a boundary\nvertex b boundary\nvertex c boundary\nvertex v\n"
      "edge e1 a v\nedge e2 b v\nedge e3 v c\n"
      "order e1\norder e2 e3\n");
  REQUIRE(doc.order.has_value());
  CHECK(doc.order->sequence() == std::vector<EdgeId>{"e1", "e2", "e3"});

  Error dup = expect_error([] {
    parse_upg("upg 1\nvertex a boundary\nvertex b boundary\n"
              "edge e a b\norder e e\n");
  });
  CHECK(dup.kind() == ErrorKind::SyntaxError);
  CHECK(dup.line == 5);
}

TEST_CASE("syntax errors carry their line") {
  Error header = expect_error([] { parse_upg("upg 2\n"); });
  CHECK(header.kind() == ErrorKind::SyntaxError);
  CHECK(header.line == 1);

  Error directive = expect_error([] { parse_upg("upg 1\nnode a b\n"); });
  CHECK(directive.kind() == ErrorKind::SyntaxError);
  CHECK(directive.line == 2);

  Error vertex_arity = expect_error([] { parse_upg("upg 1\nvertex a frontier\n"); });
  CHECK(vertex_arity.kind() == ErrorKind::SyntaxError);
  CHECK(vertex_arity.line == 2);

  Error edge_arity = expect_error([] { parse_upg("upg 1\nvertex a\nedge e a\n"); });
  CHECK(edge_arity.kind() == ErrorKind::SyntaxError);
  CHECK(edge_arity.line == 3);
}

TEST_CASE("structural errors point back at the source line") {
  // dangling endpoint: edge on line 3 names a vertex that never appears
  Error dangling = expect_error(
      [] { parse_upg("upg 1\nvertex a boundary\nedge e a ghost\n"); });
  CHECK(dangling.kind() == ErrorKind::ValidationError);
  CHECK(dangling.line == 3);
  CHECK(std::string(dangling.what()).find("line 3") != std::string::npos);

  // boundary vertex of degree two, reported at its declaration
  Error fat = expect_error([] {
    parse_upg("upg 1\nvertex a boundary\nvertex b boundary\nvertex c boundary\n"
              "edge e1 a c\nedge e2 c b\nedge e3 a b\n");
  });
  CHECK(fat.kind() == ErrorKind::ValidationError);
  CHECK(fat.line == 2);

  Error unknown_edge = expect_error([] {
    parse_upg("upg 1\nvertex a boundary\nvertex b boundary\n"
              "edge e a b\norder phantom\n");
  });
  CHECK(unknown_edge.kind() == ErrorKind::OrderDomainMismatch);

  Error partial = expect_error([] {
    parse_upg("upg 1\nvertex a boundary\nvertex b boundary\nvertex v\n"
              "edge e1 a v\nedge e2 b v\norder e1\n");
  });
  CHECK(partial.kind() == ErrorKind::OrderDomainMismatch);
  CHECK(std::string(partial.what()).find("e2") != std::string::npos);
}

TEST_CASE("dot export ranks and shapes") {
  UpgDocument doc = testutil::load_fixture("vee.upg");
  std::string dot = export_dot(doc);
  CHECK(dot.find("digraph upg {") == 0);
  CHECK(dot.find("rankdir=TB;") != std::string::npos);
  CHECK(dot.find("\"a\" [shape=point];") != std::string::npos);
  CHECK(dot.find("\"v\" [shape=circle];") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"v\" [label=\"e1:1\"];") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);

  UpgDocument bare = doc;
  bare.order.reset();
  std::string plain = export_dot(bare);
  CHECK(plain.find("[label=\"e1\"];") != std::string::npos);
  CHECK(plain.find("e1:") == std::string::npos);

  UpgDocument right = testutil::load_fixture("wire-between.upg");
  std::string rdot = export_dot(right);
  std::size_t points = 0, pos = 0;
  while ((pos = rdot.find("shape=point", pos)) != std::string::npos) {
    ++points;
    pos += 1;
  }
  CHECK(points == 4);
  CHECK(rdot.find("\"z\" [shape=circle];") != std::string::npos);
}

TEST_CASE("layer files parse into width-chained stacks") {
  LayerStack stack =
      parse_layers(testutil::slurp(testutil::fixture_path("stack.layers")));
  REQUIRE(stack.layers.size() == 5);
  std::vector<std::pair<int, int>> expect = {
      {0, 9}, {9, 11}, {11, 10}, {10, 4}, {4, 0}};
  for (std::size_t i = 0; i < stack.layers.size(); ++i) {
    auto [top, bottom] = widths(stack.layers[i]);
    CHECK(top == expect[i].first);
    CHECK(bottom == expect[i].second);
  }
  CHECK(stack.layers[1].cells[0].kind == Cell::Kind::Node);
  CHECK(stack.layers[1].cells[3].kind == Cell::Kind::Wire);

  Error no_header = expect_error([] { parse_layers("layer\nwire\n"); });
  CHECK(no_header.kind() == ErrorKind::SyntaxError);

  Error stray = expect_error([] { parse_layers("layers 1\nwire\n"); });
  CHECK(stray.kind() == ErrorKind::SyntaxError);
  CHECK(stray.line == 2);

  Error hollow = expect_error([] { parse_layers("layers 1\nlayer\nnode 0 0\n"); });
  CHECK(hollow.kind() == ErrorKind::SyntaxError);
  CHECK(hollow.line == 3);

  Error garbage = expect_error([] { parse_layers("layers 1\nlayer\nnode two 1\n"); });
  CHECK(garbage.kind() == ErrorKind::SyntaxError);
}

}  // TEST_SUITE
