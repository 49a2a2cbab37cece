#include "ccloops/dsl.hpp"

#include <gtest/gtest.h>

#include "ccloops/errors.hpp"

namespace ccl {
namespace {

// Runs the parser and returns the diagnostic, or "" when parsing succeeds.
struct Diagnostic {
  std::string message;
  int line = 0;
  int column = 0;
};

Diagnostic ParseFailure(std::string_view text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return {e.what(), e.line(), e.column()};
  }
  return {};
}

TEST(DslTest, A2Diagram) {
  const CoxeterDiagram d = parse_coxeter("coxeter v1\nrank 2\nedge 1 2 3\n");
  EXPECT_EQ(d.rank(), 2);
  EXPECT_EQ(d.label(0, 1), 3);
  EXPECT_EQ(d.label(1, 0), 3);
}

TEST(DslTest, UnlistedPairsDefaultToTwo) {
  const CoxeterDiagram d = parse_coxeter("coxeter v1\nrank 3\nedge 1 2 4\n");
  EXPECT_EQ(d.label(0, 2), 2);
  EXPECT_EQ(d.label(1, 2), 2);
  EXPECT_EQ(d.label(0, 1), 4);
}

TEST(DslTest, InfinityAndComments) {
  const CoxeterDiagram d = parse_coxeter(
      "# affine A1\ncoxeter v1   # header\n\nrank 2\nedge 2 1 inf  # reversed\n");
  EXPECT_EQ(d.label(0, 1), kInfinity);
  EXPECT_FALSE(d.all_finite());
}

TEST(DslTest, LabelTwoIsRejected) {
  const Diagnostic d = ParseFailure("coxeter v1\nrank 2\nedge 1 2 2");
  EXPECT_NE(d.message.find("edge label must be >= 3"), std::string::npos) << d.message;
  EXPECT_EQ(d.line, 3);
  EXPECT_EQ(d.column, 10);
}

TEST(DslTest, Z2Table) {
  const LoopTable l = parse_table("table v1 2\n0 1\n1 0");
  EXPECT_EQ(l.order(), 2);
  EXPECT_EQ(l.mul(1, 1), 0);
}

TEST(DslTest, GraphVertexCount) {
  EXPECT_EQ(parse_graph("graph v1\nedge 1 3\n").vertex_count(), 3);
  const Graph g = parse_graph("graph v1\nvertices 5\nedge 1 2\nedge 3 4\n");
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.component_count(), 3);
}

TEST(DslTest, InputKind) {
  EXPECT_EQ(input_kind(parse_input("coxeter v1\nrank 1")), "coxeter");
  EXPECT_EQ(input_kind(parse_input("graph v1\nedge 1 2")), "graph");
  EXPECT_EQ(input_kind(parse_input("table v1 1\n0")), "table");
}

struct BadInput {
  const char* text;
  const char* fragment;
  int line;
  int column;
};

class DslErrorTest : public ::testing::TestWithParam<BadInput> {};

TEST_P(DslErrorTest, ReportsPosition) {
  const BadInput& b = GetParam();
  const Diagnostic d = ParseFailure(b.text);
  EXPECT_NE(d.message.find(b.fragment), std::string::npos) << d.message;
  EXPECT_EQ(d.line, b.line) << d.message;
  EXPECT_EQ(d.column, b.column) << d.message;
}

INSTANTIATE_TEST_SUITE_P(
    Cases, DslErrorTest,
    ::testing::Values(
        BadInput{"", "empty input", 1, 1},
        BadInput{"matrix v1\nrank 2", "unknown header", 1, 1},
        BadInput{"coxeter v2\nrank 2", "unsupported version", 1, 9},
        BadInput{"coxeter v1\nedge 1 2 3", "expected 'rank <n>'", 2, 1},
        BadInput{"coxeter v1\nrank 0", "rank must be between", 2, 6},
        BadInput{"coxeter v1\nrank two", "must be an integer", 2, 6},
        BadInput{"coxeter v1\nrank 2\nedge 1 3 3", "out of range 1..2", 3, 8},
        BadInput{"coxeter v1\nrank 2\nedge 1 1 3", "endpoints must differ", 3, 8},
        BadInput{"coxeter v1\nrank 3\nedge 1 2 3\n\nedge 2 1 4", "duplicate edge {1,2} (first on line 3)", 5,
                 1},
        BadInput{"coxeter v1\nrank 2\nedge 1 2 x", "integer or 'inf'", 3, 10},
        BadInput{"coxeter v1\nrank 2\nedge 1 2 3 4", "unexpected token '4'", 3, 12},
        BadInput{"coxeter v1\nrank 2\nvertex 1", "unknown keyword", 3, 1},
        BadInput{"graph v1\nedge 1 2\nedge 2 1", "duplicate edge", 3, 1},
        BadInput{"table v1 2\n0 1", "expected 2 rows", 2, 1},
        BadInput{"table v1 2\n0 1\n1 2", "out of range 0..1", 3, 3},
        BadInput{"table v1 2\n0 1\n0 1", "not a Latin square", 1, 1},
        BadInput{"table v1 2\n1 0\n0 1", "identity", 1, 1}));

}  // namespace
}  // namespace ccl
