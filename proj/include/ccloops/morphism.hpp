#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccloops/loop.hpp"
#include "ccloops/table.hpp"

namespace ccl {

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

// Map between two tables, stored as an image array. Partial maps mark
// unassigned entries with -1.
struct Morphism {
  int domain_order = 0;
  int codomain_order = 0;
  std::vector<Elem> image;

  static Morphism Identity(int order);
  Elem operator()(Elem x) const { return image[x]; }
  bool is_injective() const;
  bool is_bijective() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism& a, const Morphism& b) {
    return a.image <=> b.image;
  }
};

// (f o g)(x) = f(g(x)).
Morphism compose(const Morphism& f, const Morphism& g);
// Inverse of a bijection.
Morphism inverse(const Morphism& f);

// f(xy) = f(x)f(y) for all x, y (which forces f(e) = e in loops).
bool is_homomorphism(const Morphism& f, const CayleyTable& a,
                     const CayleyTable& b);

// Extends the assignment gens[k] -> images[k] to the subloop generated by
// gens, closing under products. Returns nullopt on an inconsistency. The
// result is total only when gens generate the domain; unreached entries are
// -1.
std::optional<Morphism> extend_homomorphism(const CayleyTable& domain,
                                            std::span<const Elem> gens,
                                            const CayleyTable& codomain,
                                            std::span<const Elem> images);

// Greedy generating set: scan elements in index order and keep those not
// already in the closure of the kept ones.
std::vector<Elem> greedy_generators(const CayleyTable& t);

struct AutGroup {
  std::vector<Morphism> elements;  // lexicographic by image
  std::int64_t nodes = 0;          // search nodes visited
  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Morphism& f) const;
};

// All automorphisms of a loop by backtracking over generator images in
// ascending index order. Throws ResourceLimitError when more than `budget`
// candidate images are tried.
AutGroup automorphism_group(const CayleyTable& t,
                            std::int64_t budget = kDefaultBudget);

// True when the set is closed under composition and inverses and holds the
// identity.
bool is_closed_group(const std::vector<Morphism>& elements);

struct CheinDecomposition {
  std::vector<Elem> subgroup;  // ascending, index 2, abelian
  Elem involution = 0;         // outside subgroup, inverts it
};

// Finds an abelian index-2 subgroup H and an involution u' outside H with
// u'hu' = h^-1 for all h in H, i.e. g = M(H, 2). Deterministic: smallest H
// by sorted element list, then smallest u'.
std::optional<CheinDecomposition> recognize_chein_decomposition(const GroupTable& g);

enum class Trichotomy { kElementaryAbelian = 1, kNoDecomposition = 2, kAbelianDecomposition = 3 };
std::string to_string(Trichotomy t);

// kElementaryAbelian iff M(g,2) is an elementary abelian 2-group,
// kNoDecomposition iff g is not of the form M(H,2), kAbelianDecomposition
// otherwise.
Trichotomy classify_trichotomy(const GroupTable& g);

// A subgroup G' of a loop and an element u' outside it such that the loop is
// M(G', 2) with respect to u'.
struct CheinFrame {
  std::vector<Elem> subgroup;  // ascending
  Elem u = 0;
};

// Frame of a loop built by chein_loop.
CheinFrame frame_of(const LoopTable& l);
// The three Chein rules for all pairs of the frame's subgroup.
bool satisfies_chein_rules(const CayleyTable& l, const CheinFrame& frame);

// Fixes G' pointwise and sends g1 u' to (g g1) u'.
Morphism phi_g(const CayleyTable& l, const CheinFrame& frame, Elem g);
// Extends psi (a map on loop indices, read only on G') by gu' -> psi(g)u'.
Morphism phi_psi(const CayleyTable& l, const CheinFrame& frame,
                 const Morphism& psi);

// Throws PreconditionError when g is not in the group part.
Morphism build_phi_g(const LoopTable& l, Elem g);
// psi is an automorphism of the group part (group indices). Throws
// PreconditionError otherwise.
Morphism build_phi_psi(const LoopTable& l, const Morphism& psi);

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct TheoremReport {
  std::string name;
  bool holds = true;
  std::vector<Check> checks;
  std::int64_t constructed_order = 0;
  std::int64_t brute_force_order = 0;
  std::int64_t formula_order = 0;
  void add(std::string check, bool pass, std::string detail = {});
};

// For g not of the form M(H,2): {phi_g o phi_psi} equals Aut(M(g,2)) as a
// set, N = {phi_g} is normal, K = {phi_psi} is a complement, and the
// conjugation and u-coordinate laws hold. Throws PreconditionError when g is
// not in that case.
TheoremReport verify_theorem_case2(const GroupTable& g,
                                   std::int64_t budget = kDefaultBudget);

// For abelian h with an element of order > 2: builds G = M(h,2),
// L = M(G,2) = H + Hu1 + Hu2 + Hu3, checks the Klein four group
// {e,u1,u2,u3}, the coset swaps sigma_1, sigma_2 generating S3, the H x H
// kernel, A = Aut(H) extended, and compares the full constructed set with a
// brute-force Aut(L). Throws PreconditionError otherwise.
TheoremReport verify_theorem_case3(const GroupTable& h,
                                   std::int64_t budget = kDefaultBudget);

// Centralizer {x : xh = hx}, ascending.
std::vector<Elem> centralizer(const CayleyTable& l, Elem h);

// |GL_n(2)|.
std::int64_t gl2_order(int n);

}  // namespace ccl
