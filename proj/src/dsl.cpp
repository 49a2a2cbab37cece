#include "ccloops/dsl.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <vector>

#include "ccloops/errors.hpp"

namespace ccl {

namespace {

struct Token {
  std::string_view text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Non-empty lines after stripping comments.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& what, const Line& line, const Token& tok) {
  throw ParseError(what, line.number, tok.column);
}

[[noreturn]] void fail_end(const std::string& what, const Line& line) {
  const Token& last = line.tokens.back();
  throw ParseError(what, line.number, last.column + static_cast<int>(last.text.size()));
}

std::optional<long long> to_integer(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

long long integer(const Line& line, std::size_t k, const std::string& what) {
  if (k >= line.tokens.size()) fail_end("missing " + what, line);
  auto v = to_integer(line.tokens[k].text);
  if (!v) fail(what + " must be an integer, got '" + std::string(line.tokens[k].text) + "'", line,
               line.tokens[k]);
  return *v;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() > n) fail("unexpected token '" + std::string(line.tokens[n].text) + "'",
                                   line, line.tokens[n]);
  if (line.tokens.size() < n) fail_end("too few fields for '" + std::string(line.tokens[0].text) + "'",
                                       line);
}

enum class Kind { kCoxeter, kGraph, kTable };

Kind header_kind(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("empty input; expected a header", 1, 1);
  const Line& h = lines.front();
  const std::string_view word = h.tokens[0].text;
  Kind kind;
  if (word == "coxeter") kind = Kind::kCoxeter;
  else if (word == "graph") kind = Kind::kGraph;
  else if (word == "table") kind = Kind::kTable;
  else fail("unknown header '" + std::string(word) + "'; expected coxeter, graph or table", h, h.tokens[0]);
  if (h.tokens.size() < 2) fail_end("missing format version", h);
  if (h.tokens[1].text != "v1")
    fail("unsupported version '" + std::string(h.tokens[1].text) + "'", h, h.tokens[1]);
  expect_arity(h, kind == Kind::kTable ? 3 : 2);
  return kind;
}

int vertex(const Line& line, std::size_t k, long long n) {
  const long long v = integer(line, k, "vertex index");
  if (v < 1 || v > n)
    fail("vertex index " + std::to_string(v) + " out of range 1.." + std::to_string(n), line,
         line.tokens[k]);
  return static_cast<int>(v) - 1;
}

CoxeterDiagram coxeter_from(const std::vector<Line>& lines) {
  if (lines.size() < 2 || lines[1].tokens[0].text != "rank") {
    const Line& at = lines.size() < 2 ? lines[0] : lines[1];
    if (lines.size() < 2) fail_end("expected 'rank <n>' after the header", at);
    fail("expected 'rank <n>' after the header", at, at.tokens[0]);
  }
  const Line& rank_line = lines[1];
  expect_arity(rank_line, 2);
  const long long n = integer(rank_line, 1, "rank");
  if (n < 1 || n > 64) fail("rank must be between 1 and 64", rank_line, rank_line.tokens[1]);
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  std::map<std::pair<int, int>, int> seen;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0].text != "edge")
      fail("unknown keyword '" + std::string(line.tokens[0].text) + "'", line, line.tokens[0]);
    expect_arity(line, 4);
    const int i = vertex(line, 1, n);
    const int j = vertex(line, 2, n);
    if (i == j) fail("edge endpoints must differ", line, line.tokens[2]);
    auto key = std::minmax(i, j);
    if (auto it = seen.find(key); it != seen.end())
      fail("duplicate edge {" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) +
               "} (first on line " + std::to_string(it->second) + ")",
           line, line.tokens[0]);
    seen.emplace(key, line.number);
    const Token& label = line.tokens[3];
    int value;
    if (label.text == "inf") {
      value = kInfinity;
    } else {
      auto v = to_integer(label.text);
      if (!v) fail("edge label must be an integer or 'inf', got '" + std::string(label.text) + "'",
                   line, label);
      if (*v < 3)
        fail("edge label must be >= 3; pairs with m = 2 are left out", line, label);
      if (*v > 1'000'000) fail("edge label too large", line, label);
      value = static_cast<int>(*v);
    }
    m[i][j] = m[j][i] = value;
  }
  return CoxeterDiagram::Validate(m);
}

Graph graph_from(const std::vector<Line>& lines) {
  std::optional<long long> declared;
  std::size_t k = 1;
  if (lines.size() > 1 && lines[1].tokens[0].text == "vertices") {
    expect_arity(lines[1], 2);
    declared = integer(lines[1], 1, "vertex count");
    if (*declared < 1 || *declared > 4096)
      fail("vertex count must be between 1 and 4096", lines[1], lines[1].tokens[1]);
    k = 2;
  }
  const long long limit = declared.value_or(4096);
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> seen;
  int largest = 0;
  for (; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0].text != "edge")
      fail("unknown keyword '" + std::string(line.tokens[0].text) + "'", line, line.tokens[0]);
    expect_arity(line, 3);
    const int i = vertex(line, 1, limit);
    const int j = vertex(line, 2, limit);
    if (i == j) fail("edge endpoints must differ", line, line.tokens[2]);
    auto key = std::minmax(i, j);
    if (auto it = seen.find(key); it != seen.end())
      fail("duplicate edge {" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) +
               "} (first on line " + std::to_string(it->second) + ")",
           line, line.tokens[0]);
    seen.emplace(key, line.number);
    edges.push_back({key.first, key.second});
    largest = std::max({largest, i + 1, j + 1});
  }
  const int n = declared ? static_cast<int>(*declared) : largest;
  if (n == 0) throw ParseError("graph has no vertices; add 'vertices <n>'", lines[0].number, 1);
  return Graph(n, std::move(edges));
}

LoopTable table_from(const std::vector<Line>& lines) {
  const Line& h = lines[0];
  const long long n = integer(h, 2, "table order");
  if (n < 1 || n > 4096) fail("table order must be between 1 and 4096", h, h.tokens[2]);
  if (static_cast<long long>(lines.size()) - 1 != n) {
    const Line& at = lines.back();
    throw ParseError("expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     at.number, 1);
  }
  std::vector<Elem> data;
  data.reserve(n * n);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const Line& line = lines[r];
    if (static_cast<long long>(line.tokens.size()) != n) {
      if (static_cast<long long>(line.tokens.size()) > n) fail("row has too many entries", line, line.tokens[n]);
      fail_end("row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                   std::to_string(n),
               line);
    }
    for (std::size_t c = 0; c < line.tokens.size(); ++c) {
      const long long v = integer(line, c, "table entry");
      if (v < 0 || v >= n)
        fail("entry " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1), line,
             line.tokens[c]);
      data.push_back(static_cast<Elem>(v));
    }
  }
  CayleyTable t(static_cast<int>(n), std::move(data));
  if (!is_quasigroup(t)) throw ParseError("table is not a Latin square", h.number, 1);
  if (find_identity(t) != kIdentity)
    throw ParseError("element 0 is not a two-sided identity", h.number, 1);
  return LoopTable::FromCayley(std::move(t));
}

}  // namespace

ParsedInput parse_input(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  switch (header_kind(lines)) {
    case Kind::kCoxeter: return coxeter_from(lines);
    case Kind::kGraph: return graph_from(lines);
    case Kind::kTable: return table_from(lines);
  }
  throw ParseError("unreachable", 1, 1);
}

namespace {

template <typename T>
T parse_as(std::string_view text, const char* name) {
  ParsedInput in = parse_input(text);
  if (!std::holds_alternative<T>(in)) throw ParseError(std::string("expected a ") + name + " input", 1, 1);
  return std::get<T>(std::move(in));
}

}  // namespace

CoxeterDiagram parse_coxeter(std::string_view text) { return parse_as<CoxeterDiagram>(text, "coxeter"); }
Graph parse_graph(std::string_view text) { return parse_as<Graph>(text, "graph"); }
LoopTable parse_table(std::string_view text) { return parse_as<LoopTable>(text, "table"); }

std::string input_kind(const ParsedInput& in) {
  static const char* names[] = {"coxeter", "graph", "table"};
  return names[in.index()];
}

}  // namespace ccl
