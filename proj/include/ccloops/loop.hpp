#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccloops/table.hpp"

namespace ccl {

// Records that a loop was built as M(G, 2): elements [0, group_order) form G
// in its own numbering, element group_order + g is g*u, and u = group_order.
struct CheinMarker {
  int group_order = 0;
  Elem u() const { return group_order; }
};

// Finite loop with identity 0. Construction validates the Latin property and
// the identity.
class LoopTable : public CayleyTable {
 public:
  LoopTable() = default;
  // Throws PreconditionError unless `table` is a loop with identity 0.
  static LoopTable FromCayley(CayleyTable table,
                              std::vector<std::string> labels = {});

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem x) const;
  const std::optional<CheinMarker>& group_part() const { return group_part_; }

  // Right inverse: the y with x*y = e.
  Elem inverse(Elem x) const;
  // Order of x under left powers x, x(x), x(x(x)), ...
  int element_order(Elem x) const;

  // Test hook: overwrite one product. The result may no longer be a loop.
  LoopTable with_entry(Elem x, Elem y, Elem value) const;

 private:
  friend LoopTable chein_loop(const GroupTable& g);
  std::vector<std::string> labels_;
  std::optional<CheinMarker> group_part_;
};

// Outcome of an exhaustive identity check. When the identity fails,
// `counterexample` holds the lexicographically smallest failing tuple in the
// order the variables are listed in `variables`.
struct IdentityReport {
  std::string name;
  std::string statement;
  std::string variables;
  bool holds = true;
  std::vector<Elem> counterexample;
};

// M(G, 2) on G + Gu with
//   g1 (g2 u) = (g2 g1) u,  (g1 u) g2 = (g1 g2^-1) u,  (g1 u)(g2 u) = g2^-1 g1.
LoopTable chein_loop(const GroupTable& g);

// The three Moufang identities, each over all |t|^3 triples:
//   right  z(x(yx)) = ((zx)y)x
//   left   x(y(xz)) = ((xy)x)z
//   middle (xy)(zx) = (x(yz))x, together with (x(yz))x = x((yz)x)
std::array<IdentityReport, 3> is_moufang(const CayleyTable& t);

IdentityReport is_associative(const CayleyTable& t);
IdentityReport is_commutative(const CayleyTable& t);

// Smallest subset containing S and the identity closed under the product,
// ascending.
std::vector<Elem> subloop_closure(const CayleyTable& t, std::span<const Elem> s);

// The defining rules of M(G, 2) checked for every pair g1, g2 in G.
// Throws PreconditionError when the loop carries no Chein marker.
std::array<IdentityReport, 3> verify_chein_identities(const LoopTable& l);

// Identities that hold in M(T, 2) for T generated by g.generators(): the
// ((g1 g2) u)^2 = e relations on generators and e, u w u = w^-1 for all w,
// the Chein rules for all pairs, the generator-level identities
// s_i u = u s_i^-1, s_i(s_j u) = (s_j s_i) u, (s_i u) s_j = (s_i s_j^-1) u,
// (s_i u)(s_j u) = s_j^-1 s_i, (u s_i) s_j = s_j^-1 (u s_i), the left
// peeling rule u(s_1 ... s_k) = s_1^-1 (u(s_2 ... s_k)) for words up to
// length 4, and the equivalence of the two one-sided Chein rules pairwise.
std::vector<IdentityReport> verify_chein_consequences(const GroupTable& g);

// Elements [0, group_order) of a marked loop as a group, with the group's
// generators when supplied.
GroupTable group_part_table(const LoopTable& l, std::vector<Elem> generators = {});

// Reinterprets an associative loop as a group. Throws PreconditionError if
// the loop is not associative.
GroupTable as_group(const LoopTable& l, std::vector<Elem> generators = {});

}  // namespace ccl
