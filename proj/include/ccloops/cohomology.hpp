#pragma once

#include <array>
#include <vector>

#include "ccloops/bitmatrix.hpp"
#include "ccloops/graph.hpp"

namespace ccl {

// Sorted edge indices into Graph::edges(). Lexicographic order on these
// tuples is the coordinate order of every cochain space.
using Simplex = std::vector<int>;

// Edge complex of a graph: all sets of one to three edges, and the pointed
// ones (edges with a common vertex).
struct SimplicialComplex {
  Graph graph;
  std::array<std::vector<Simplex>, 3> simplices;  // F^r, r = 0, 1, 2
  std::array<std::vector<Simplex>, 3> pointed;    // F_bullet^r

  // Position of a pointed simplex in pointed[s.size() - 1], or -1.
  int index_of(const Simplex& s) const;
};

SimplicialComplex build_complex(const Graph& g);

// Vertices common to every edge of s, ascending.
std::vector<int> common_vertices(const Graph& g, const Simplex& s);

// d^r for r = 0, 1: columns F_bullet^r, rows F_bullet^{r+1}.
BitMatrix coboundary_matrix(const SimplicialComplex& c, int r);

// Star subcomplex at vertex i, in its own lexicographic coordinates.
struct VertexBlock {
  int vertex = 0;
  std::vector<int> edges;  // E_i, ascending edge indices
  BitMatrix d0;            // |F_i^1| x |E_i|
  BitMatrix d1;            // |F_i^2| x |F_i^1|
  std::vector<int> c1_coordinates;  // positions of F_i^1 in pointed[1]
  std::vector<int> c2_coordinates;  // positions of F_i^2 in pointed[2]
};
VertexBlock vertex_subcomplex(const SimplicialComplex& c, int i);

// Every pointed pair and triple has exactly one common vertex, so the
// coordinates of C^1 and C^2 are partitioned by the vertex blocks.
bool verify_vertex_decomposition(const SimplicialComplex& c);

// d^0_i(a_e) = sum of a_{e,f} over the other edges f at i, as a row vector of
// C^1. Requires e incident to i.
BitMatrix vertex_coboundary(const SimplicialComplex& c, int i, int e);

struct NonTreeEdge {
  int edge = 0;    // index into Graph::edges()
  int origin = 0;  // o_j, the smaller endpoint
  int target = 0;  // t_j
};

struct SpanningForest {
  std::vector<int> tree_edges;          // ascending edge indices
  std::vector<NonTreeEdge> non_tree;    // ascending by edge
};

// Breadth-first from the smallest vertex of each component, neighbours in
// ascending order.
SpanningForest spanning_tree(const Graph& g);

struct CohomologyResult {
  int vertices = 0;
  int edges = 0;
  int components = 0;  // including isolated vertices
  bool connected = true;
  std::array<int, 3> c_dims{};  // dim C^0, C^1, C^2
  int z1 = 0;  // by elimination
  int b1 = 0;
  int h1 = 0;
  BitMatrix d0;
  BitMatrix d1;
  BitMatrix z_basis;   // closed form Z_Delta, rows in C^1
  BitMatrix b_basis;   // closed form B_Delta
  BitMatrix h_basis;   // d^0_{o_j}(e_j), one row per non-tree edge
  SpanningForest forest;

  bool d1d0_zero = false;
  bool z_matches = false;       // Z_Delta independent and spans ker d^1
  bool b_matches = false;       // B_Delta independent and spans im d^0
  bool h_independent = false;   // rank [B_Delta; H_Delta] = b1 + h1
  bool decomposition = false;   // vertex blocks partition C^1 and C^2
  bool formulas_hold = false;   // dims equal the closed-form counts
  bool ok() const {
    return d1d0_zero && z_matches && b_matches && h_independent && decomposition &&
           formulas_hold;
  }
};

// Computes everything above. Disconnected graphs are handled per component
// (dim B^1 = |E| - components with edges, dim H^1 = |E| - |I| + components);
// with strict set they raise PreconditionError instead.
CohomologyResult cohomology(const Graph& g, bool strict = false);

}  // namespace ccl
