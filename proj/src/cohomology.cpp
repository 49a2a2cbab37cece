#include "ccloops/cohomology.hpp"

#include <algorithm>
#include <deque>

#include "ccloops/errors.hpp"

namespace ccl {

std::vector<int> common_vertices(const Graph& g, const Simplex& s) {
  std::vector<int> common{g.edges()[s.front()].a, g.edges()[s.front()].b};
  for (int e : s) {
    std::erase_if(common, [&](int v) { return !g.edges()[e].contains(v); });
  }
  return common;
}

int SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > 3) return -1;
  const auto& list = pointed[s.size() - 1];
  auto it = std::lower_bound(list.begin(), list.end(), s);
  return it != list.end() && *it == s ? static_cast<int>(it - list.begin()) : -1;
}

SimplicialComplex build_complex(const Graph& g) {
  SimplicialComplex c;
  c.graph = g;
  const int m = g.edge_count();
  auto add = [&](Simplex s) {
    const int r = static_cast<int>(s.size()) - 1;
    if (!common_vertices(g, s).empty()) c.pointed[r].push_back(s);
    c.simplices[r].push_back(std::move(s));
  };
  // Nested loops emit each level in lexicographic order.
  for (int a = 0; a < m; ++a) add({a});
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) add({a, b});
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int d = b + 1; d < m; ++d) add({a, b, d});
  return c;
}

BitMatrix coboundary_matrix(const SimplicialComplex& c, int r) {
  if (r != 0 && r != 1) throw PreconditionError("coboundary degree must be 0 or 1");
  const auto& cols = c.pointed[r];
  const auto& rows = c.pointed[r + 1];
  BitMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (std::includes(rows[i].begin(), rows[i].end(), cols[j].begin(), cols[j].end()))
        d.set(i, j);
  return d;
}

namespace {

bool at_vertex(const Graph& g, const Simplex& s, int i) {
  return std::all_of(s.begin(), s.end(), [&](int e) { return g.edges()[e].contains(i); });
}

}  // namespace

VertexBlock vertex_subcomplex(const SimplicialComplex& c, int i) {
  const Graph& g = c.graph;
  if (i < 0 || i >= g.vertex_count()) throw PreconditionError("vertex out of range");
  VertexBlock block;
  block.vertex = i;
  block.edges = g.incident(i);
  for (int r = 1; r <= 2; ++r) {
    auto& coords = r == 1 ? block.c1_coordinates : block.c2_coordinates;
    for (std::size_t k = 0; k < c.pointed[r].size(); ++k)
      if (at_vertex(g, c.pointed[r][k], i)) coords.push_back(static_cast<int>(k));
  }
  auto contained = [](const Simplex& small, const Simplex& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  block.d0 = BitMatrix(static_cast<int>(block.c1_coordinates.size()),
                       static_cast<int>(block.edges.size()));
  for (int row = 0; row < block.d0.rows(); ++row)
    for (int col = 0; col < block.d0.cols(); ++col)
      if (contained({block.edges[col]}, c.pointed[1][block.c1_coordinates[row]]))
        block.d0.set(row, col);
  block.d1 = BitMatrix(static_cast<int>(block.c2_coordinates.size()),
                       static_cast<int>(block.c1_coordinates.size()));
  for (int row = 0; row < block.d1.rows(); ++row)
    for (int col = 0; col < block.d1.cols(); ++col)
      if (contained(c.pointed[1][block.c1_coordinates[col]],
                    c.pointed[2][block.c2_coordinates[row]]))
        block.d1.set(row, col);
  return block;
}

bool verify_vertex_decomposition(const SimplicialComplex& c) {
  std::vector<int> hits1(c.pointed[1].size(), 0);
  std::vector<int> hits2(c.pointed[2].size(), 0);
  for (int i = 0; i < c.graph.vertex_count(); ++i) {
    const VertexBlock b = vertex_subcomplex(c, i);
    for (int k : b.c1_coordinates) ++hits1[k];
    for (int k : b.c2_coordinates) ++hits2[k];
  }
  auto once = [](const std::vector<int>& h) {
    return std::all_of(h.begin(), h.end(), [](int x) { return x == 1; });
  };
  return once(hits1) && once(hits2);
}

BitMatrix vertex_coboundary(const SimplicialComplex& c, int i, int e) {
  if (!c.graph.edges()[e].contains(i)) throw PreconditionError("edge not incident to vertex");
  BitMatrix v(1, static_cast<int>(c.pointed[1].size()));
  for (int f : c.graph.incident(i)) {
    if (f == e) continue;
    v.set(0, c.index_of({std::min(e, f), std::max(e, f)}));
  }
  return v;
}

SpanningForest spanning_tree(const Graph& g) {
  SpanningForest forest;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<char> used(g.edge_count(), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbours(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        const Edge e{std::min(v, w), std::max(v, w)};
        const auto& edges = g.edges();
        const int idx = static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) -
                                         edges.begin());
        used[idx] = 1;
        queue.push_back(w);
      }
    }
  }
  for (int k = 0; k < g.edge_count(); ++k) {
    if (used[k]) forest.tree_edges.push_back(k);
    else forest.non_tree.push_back({k, g.edges()[k].a, g.edges()[k].b});
  }
  return forest;
}

CohomologyResult cohomology(const Graph& g, bool strict) {
  if (strict && !g.is_connected()) {
    throw PreconditionError("graph is disconnected (" +
                            std::to_string(g.component_count()) + " components)");
  }
  CohomologyResult r;
  const SimplicialComplex c = build_complex(g);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.components = g.component_count();
  r.connected = g.is_connected();
  for (int k = 0; k < 3; ++k) r.c_dims[k] = static_cast<int>(c.pointed[k].size());
  r.d0 = coboundary_matrix(c, 0);
  r.d1 = coboundary_matrix(c, 1);
  r.d1d0_zero = is_zero(multiply(r.d1, r.d0));

  const BitMatrix kernel = kernel_basis(r.d1);
  const BitMatrix image = image_basis(r.d0);
  r.z1 = kernel.rows();
  r.b1 = image.rows();
  r.h1 = r.z1 - r.b1;

  // Z_Delta: d^0_i(a_e) for e at i other than the smallest edge f_i.
  r.z_basis = BitMatrix(0, r.c_dims[1]);
  for (int i = 0; i < g.vertex_count(); ++i) {
    const auto& at = g.incident(i);
    for (std::size_t k = 1; k < at.size(); ++k)
      r.z_basis.append_row(vertex_coboundary(c, i, at[k]), 0);
  }
  r.z_matches = rank_gf2(r.z_basis) == r.z_basis.rows() && r.z_basis.rows() == r.z1 &&
                is_zero(multiply(r.d1, r.z_basis.transpose()));

  // B_Delta: d^0(a_e) for every edge except the smallest of its component.
  const BitMatrix d0t = r.d0.transpose();
  const std::vector<int> comp = g.components();
  std::vector<char> component_seen(g.vertex_count(), 0);
  r.b_basis = BitMatrix(0, r.c_dims[1]);
  int components_with_edges = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const int id = comp[g.edges()[e].a];
    if (!component_seen[id]) {
      component_seen[id] = 1;
      ++components_with_edges;
      continue;
    }
    r.b_basis.append_row(d0t, e);
  }
  r.b_matches = rank_gf2(r.b_basis) == r.b_basis.rows() && r.b_basis.rows() == r.b1 &&
                row_span_contains(r.b_basis, image);

  r.forest = spanning_tree(g);
  r.h_basis = BitMatrix(0, r.c_dims[1]);
  for (const NonTreeEdge& nt : r.forest.non_tree)
    r.h_basis.append_row(vertex_coboundary(c, nt.origin, nt.edge), 0);
  r.h_independent =
      static_cast<int>(r.forest.non_tree.size()) == r.h1 &&
      rank_gf2(r.b_basis.stack(r.h_basis)) == r.b1 + r.h1 &&
      is_zero(multiply(r.d1, r.h_basis.transpose()));

  r.decomposition = verify_vertex_decomposition(c);

  int isolated = 0;
  for (int i = 0; i < g.vertex_count(); ++i) isolated += g.valency(i) == 0;
  r.formulas_hold = r.z1 == 2 * r.edges - r.vertices + isolated &&
                    r.b1 == r.edges - components_with_edges &&
                    r.h1 == r.edges - r.vertices + r.components;
  return r;
}

}  // namespace ccl
