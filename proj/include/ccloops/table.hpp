#pragma once

#include <span>
#include <string>
#include <vector>

namespace ccl {

// Index of an element in a finite multiplication table.
using Elem = int;

inline constexpr Elem kIdentity = 0;

// A square multiplication table on {0, ..., order-1}. Only shape and range
// are enforced here; algebraic properties are checked by the callers that
// need them.
class CayleyTable {
 public:
  CayleyTable() = default;
  CayleyTable(int order, std::vector<Elem> product);

  int order() const { return order_; }
  Elem mul(Elem x, Elem y) const {
    return product_[static_cast<std::size_t>(x) * order_ + y];
  }
  std::span<const Elem> row(Elem x) const {
    return {product_.data() + static_cast<std::size_t>(x) * order_,
            static_cast<std::size_t>(order_)};
  }
  const std::vector<Elem>& data() const { return product_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  int order_ = 0;
  std::vector<Elem> product_;
};

// Finite group with identity 0, cached inverses and a designated generating
// list. Generators of Coxeter groups are involutions; groups from the corpus
// (cyclic, Q8, ...) carry whatever generating set they were built from.
class GroupTable : public CayleyTable {
 public:
  GroupTable() = default;

  // Checks the Latin property, identity at 0 and associativity on all
  // triples. Throws PreconditionError on failure.
  static GroupTable FromCayley(CayleyTable table, std::vector<Elem> generators,
                               std::vector<std::string> labels = {});

  // Skips the cubic associativity check; for tables that are associative by
  // construction (permutation actions, formulas).
  static GroupTable FromTrustedCayley(CayleyTable table,
                                      std::vector<Elem> generators,
                                      std::vector<std::string> labels = {});

  Elem inverse(Elem x) const { return inverse_[x]; }
  const std::vector<Elem>& inverses() const { return inverse_; }
  const std::vector<Elem>& generators() const { return generators_; }
  // Display names; empty when none were supplied.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem x) const;

  bool is_abelian() const;
  // Order of x as a group element.
  int element_order(Elem x) const;

 private:
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
};

// Latin-square test: every row and every column is a permutation.
bool is_quasigroup(const CayleyTable& t);
// Quasigroup with some two-sided identity element.
bool is_loop(const CayleyTable& t);
// Smallest two-sided identity, or -1 when there is none.
Elem find_identity(const CayleyTable& t);

}  // namespace ccl
