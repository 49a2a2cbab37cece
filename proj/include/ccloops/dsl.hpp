#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ccloops/coxeter.hpp"
#include "ccloops/graph.hpp"
#include "ccloops/loop.hpp"

namespace ccl {

// Line-oriented input formats. `#` starts a comment; blank lines are ignored.
//
//   coxeter v1          graph v1           table v1 <order>
//   rank <n>            [vertices <n>]     <order rows of order entries>
//   edge <i> <j> <m>    edge <i> <j>
//
// Coxeter and graph vertices are 1-based; unlisted Coxeter pairs have m = 2
// and m is an integer >= 3 or `inf`. Graphs without a `vertices` line take
// the largest endpoint as the vertex count. Table entries are 0-based and
// element 0 must be the identity.
using ParsedInput = std::variant<CoxeterDiagram, Graph, LoopTable>;

// Throws ParseError with the line and column of the first problem.
ParsedInput parse_input(std::string_view text);

CoxeterDiagram parse_coxeter(std::string_view text);
Graph parse_graph(std::string_view text);
LoopTable parse_table(std::string_view text);

std::string input_kind(const ParsedInput& in);

}  // namespace ccl
