#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccloops/graph.hpp"
#include "ccloops/table.hpp"

namespace ccl {

// Label standing for m_ij = infinity.
inline constexpr int kInfinity = std::numeric_limits<int>::max();
inline constexpr int kDefaultCap = 10000;

// Symmetric Coxeter matrix over {0, ..., rank-1}. Always validated.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;

  // Throws DiagramError naming the first offending (i, j): non-square shape,
  // diagonal entry != 1, asymmetry, or off-diagonal entry < 2.
  static CoxeterDiagram Validate(const std::vector<std::vector<int>>& labels);

  int rank() const { return rank_; }
  int label(int i, int j) const { return labels_[i * rank_ + j]; }
  std::vector<std::vector<int>> matrix() const;

  // True when every m_ij is finite.
  bool all_finite() const;
  // Diagram induced on the given vertices (in the order given).
  CoxeterDiagram restrict(std::span<const int> vertices) const;

 private:
  int rank_ = 0;
  std::vector<int> labels_;
};

// Edges {i, j} with m_ij >= 3 (infinity included).
Graph underlying_graph(const CoxeterDiagram& d);

// One irreducible finite Coxeter type.
struct IrreducibleType {
  std::string family;  // "A", "B", "D", "E", "F", "G", "H" or "I2"
  int rank = 0;
  int m = 0;  // only for I2(m)
  std::uint64_t order = 0;
  std::vector<int> vertices;  // 0-based diagram vertices of the component

  std::string name() const;
};

struct SphericalClassification {
  bool spherical = false;
  std::vector<IrreducibleType> components;  // empty when non-spherical
  // Product of component orders; empty when non-spherical or on overflow.
  std::optional<std::uint64_t> predicted_order;
  // First component that failed to match a finite type.
  std::string reason;
};

// Matches each connected component of the underlying graph against the
// finite types A_n, B_n, D_n, E_6..8, F_4, H_3, H_4, I_2(m).
SphericalClassification recognize_spherical(const CoxeterDiagram& d);

// Coset enumeration of W over the trivial subgroup. Elements are numbered
// breadth-first by shortlex word (identity 0, then s_1, ..., s_n, ...), and
// labels are those words. Throws ResourceLimitError when the group has more
// than `cap` elements or the working space runs out, and PreconditionError
// when some m_ij is infinite.
GroupTable enumerate_group(const CoxeterDiagram& d, int cap = kDefaultCap);

struct Subgroup {
  GroupTable group;
  // embedding[k] = index in the parent of subgroup element k.
  std::vector<Elem> embedding;
};

// Closure of {s_j : j in generator_indices} (0-based positions into
// g.generators()), renumbered shortlex over those generators.
Subgroup parabolic_subgroup(const GroupTable& g,
                            std::span<const int> generator_indices);

}  // namespace ccl
