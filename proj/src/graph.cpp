#include "ccloops/graph.hpp"

#include <algorithm>
#include <string>

#include "ccloops/errors.hpp"

namespace ccl {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.a == e.b) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.a + 1));
    }
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 0 || e.b >= vertex_count) {
      throw PreconditionError("edge endpoint out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw PreconditionError("duplicate edge");
  }
  incident_.assign(vertex_count, {});
  for (int k = 0; k < edge_count(); ++k) {
    incident_[edges_[k].a].push_back(k);
    incident_[edges_[k].b].push_back(k);
  }
}

std::vector<int> Graph::neighbours(int v) const {
  std::vector<int> out;
  for (int k : incident_[v]) out.push_back(edges_[k].a == v ? edges_[k].b : edges_[k].a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(vertex_count_, -1);
  for (int s = 0; s < vertex_count_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbours(v)) {
        if (comp[w] < 0) {
          comp[w] = s;
          stack.push_back(w);
        }
      }
    }
  }
  return comp;
}

int Graph::component_count() const {
  auto comp = components();
  int count = 0;
  for (int v = 0; v < vertex_count_; ++v) count += comp[v] == v;
  return count;
}

}  // namespace ccl
