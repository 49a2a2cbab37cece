#pragma once

#include <compare>
#include <vector>

namespace ccl {

// Undirected edge {a, b} with a < b. Vertices are 0-based.
struct Edge {
  int a = 0;
  int b = 0;
  bool contains(int v) const { return a == v || b == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Edges are kept sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  // Throws PreconditionError on self-loops, out-of-range endpoints or
  // duplicate edges. Endpoints may be given in either order.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Indices (into edges()) of the edges at v, ascending.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int valency(int v) const { return static_cast<int>(incident_[v].size()); }
  // Neighbouring vertices of v, ascending.
  std::vector<int> neighbours(int v) const;

  // Component id per vertex, numbered by smallest member.
  std::vector<int> components() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace ccl
