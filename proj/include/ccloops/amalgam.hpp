#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccloops/bitmatrix.hpp"
#include "ccloops/cohomology.hpp"
#include "ccloops/coxeter.hpp"
#include "ccloops/loop.hpp"
#include "ccloops/morphism.hpp"

namespace ccl {

// L_J = M(W_J, 2) for a set J of at most two diagram vertices. Element k < |W_J|
// is the k-th element of W_J (shortlex over the generators s_j, j in J
// ascending), and u = |W_J|.
struct VertexLoop {
  std::vector<int> vertices;  // J, ascending, 0-based
  GroupTable group;           // W_J
  LoopTable loop;             // M(W_J, 2)
  // Loop index of s_j for the j-th entry of `vertices`.
  Elem generator(int position) const { return group.generators()[position]; }
  Elem u() const { return group.order(); }
};

VertexLoop vertex_loop(const CoxeterDiagram& d, std::vector<int> vertices);

// Homomorphism L_J -> L_K (J a subset of K) with s_j -> s_j s_inf^twist[j]
// and u -> u. `twisted` lists the j in J whose image is s_j u. Throws
// PreconditionError when the assignment is not a homomorphism.
Morphism vertex_loop_map(const VertexLoop& from, const VertexLoop& to,
                         const std::vector<int>& twisted = {});

struct Connection {
  int face = 0;    // rho (index into simplices), the larger loop
  int coface = 0;  // tau, rho < tau
  Morphism map;    // G_tau -> G_rho
};

// Simplicial amalgam over the edge complex. Simplices are all nonempty sets
// of at most three edges, ordered by size and then lexicographically.
struct Amalgam {
  CoxeterDiagram diagram;
  SimplicialComplex complex;
  std::vector<Simplex> simplices;
  std::vector<std::vector<int>> apex;  // common vertices J per simplex
  std::vector<int> loop_of;            // simplex -> index into loops
  std::vector<VertexLoop> loops;       // one per distinct J
  std::vector<Connection> connections; // every proper face pair, sorted

  const LoopTable& loop(int simplex) const { return loops[loop_of[simplex]].loop; }
  int index_of(const Simplex& s) const;
  // Position in `connections`, or -1.
  int connection(int face, int coface) const;
};

// G_sigma = L_J with J the common vertices of sigma; all maps are the natural
// inclusions. Throws PreconditionError for an infinite label on an edge or an
// empty underlying graph.
Amalgam standard_amalgam(const CoxeterDiagram& d);

struct AmalgamReport {
  bool ok = true;
  std::vector<Check> checks;
  std::vector<std::string> violations;  // "face (..) < (..): reason"
};

// Every map is an injective homomorphism; compositions commute along every
// chain rho < sigma < tau.
AmalgamReport verify_amalgam(const Amalgam& a);

// Images of every connecting map equal those of the standard amalgam.
bool is_of_type_g(const Amalgam& a);

struct CompletionReport {
  bool ok = true;
  bool non_collapsing = false;
  std::vector<std::string> violations;
};

// phi[s] : G_s -> target must be homomorphisms with phi_rho o psi = phi_tau.
CompletionReport verify_completion(const Amalgam& a, const LoopTable& target,
                                   const std::vector<Morphism>& phi);

// M(W, 2) with the inclusion maps; W enumerated under `cap`.
struct StandardCompletion {
  LoopTable target;
  std::vector<Morphism> maps;
};
StandardCompletion standard_completion(const Amalgam& a, int cap = kDefaultCap);

// Non-tree edges of the breadth-first spanning forest, and delta as sorted
// 0-based positions among them.
struct TwistSelection {
  SpanningForest forest;
  std::vector<int> delta;
};
TwistSelection make_twist(const CoxeterDiagram& d, std::vector<int> delta);

// Standard amalgam with the map G_tau -> G_{e_j} replaced by
// s_{o_j} -> s_{o_j} u, u -> u whenever j is in delta, e_j is in tau and the
// common vertex of tau is o_j. Throws PreconditionError when delta is out of
// range.
Amalgam twisted_amalgam(const CoxeterDiagram& d, const TwistSelection& tw);

// The normalized amalgam of a 1-cocycle z (a 1 x dim C^1 row). The order on
// edges puts the non-tree edges first, then the tree edges, each block in
// index order. A coordinate z_{e,f} = 1 acts on L_j (j the common vertex) as
// gamma_j. Throws PreconditionError when d^1 z != 0 or z has the wrong
// length.
Amalgam cocycle_to_amalgam(const CoxeterDiagram& d, const BitMatrix& z);

// sum over j in delta of d^0_{o_j}(e_j).
BitMatrix twist_cocycle(const CoxeterDiagram& d, const TwistSelection& tw);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<Morphism> witness;  // theta per simplex when isomorphic
  std::int64_t nodes = 0;
};

// Searches families theta_sigma in Aut(G_sigma) with
// theta_rho o phi_a = phi_b o theta_tau on every face pair. theta on each
// edge is chosen from Aut(L_e); theta on larger simplices is then forced. The
// first witness in lexicographic order is returned; exhaustion certifies
// non-isomorphism. Throws ResourceLimitError past `budget` nodes.
IsomorphismResult amalgams_isomorphic(const Amalgam& a, const Amalgam& b,
                                      std::int64_t budget = kDefaultBudget);

// Twisted amalgams for every delta, grouped into isomorphism classes. Masks
// index delta by bit j for the j-th non-tree edge.
struct AmalgamClassification {
  int n = 0;                                      // number of non-tree edges
  std::vector<std::vector<int>> representatives;  // first delta of each class, 0-based
  std::vector<int> class_of;                      // per mask
  std::vector<std::vector<int>> invalid_twists;   // deltas failing verify_amalgam or type G
  // deltas whose cocycle amalgam is invalid or not isomorphic to the twist
  std::vector<std::vector<int>> cocycle_mismatches;
  std::int64_t nodes = 0;
  int class_count() const { return static_cast<int>(representatives.size()); }
};
AmalgamClassification classify_amalgams(const CoxeterDiagram& d,
                                        std::int64_t budget = kDefaultBudget);

// A_sigma for the standard amalgam.
struct CoefficientGroup {
  int simplex = 0;
  std::vector<int> apex;
  std::string generator_name;            // "id", "gamma_j" or "gamma_ij"
  std::vector<Morphism> closed_form;     // {id} or {id, gamma}, sorted
  std::optional<std::vector<Morphism>> brute_force;  // sorted
  bool generator_is_automorphism = true;
  // Every proper subset of the apex is the apex of some coface. Without
  // these cofaces the stabilizers leave more than the closed form.
  bool cofaces_cover_apex = true;
  bool agree() const { return !brute_force || *brute_force == closed_form; }
};

// Closed form: trivial with no common vertex, <gamma_j> on L_j for a common
// vertex j of two or three edges, and <gamma_ij> on L_{ij} for a single edge.
// With cross_check, also the intersection of stabilizers of every coface
// image inside Aut(G_sigma), for loops of order at most `max_order`.
CoefficientGroup coefficient_group(const Amalgam& a, int simplex, bool cross_check = true,
                                   int max_order = 48,
                                   std::int64_t budget = kDefaultBudget);

std::string simplex_name(const Amalgam& a, int simplex);

}  // namespace ccl
