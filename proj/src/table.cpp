#include "ccloops/table.hpp"

#include <numeric>

#include "ccloops/errors.hpp"

namespace ccl {

CayleyTable::CayleyTable(int order, std::vector<Elem> product)
    : order_(order), product_(std::move(product)) {
  if (order < 1) throw PreconditionError("table order must be positive");
  if (product_.size() != static_cast<std::size_t>(order) * order) {
    throw PreconditionError("table has " + std::to_string(product_.size()) +
                            " entries, expected " +
                            std::to_string(order * order));
  }
  for (Elem v : product_) {
    if (v < 0 || v >= order) {
      throw PreconditionError("table entry " + std::to_string(v) +
                              " out of range");
    }
  }
}

bool is_quasigroup(const CayleyTable& t) {
  const int n = t.order();
  std::vector<int> seen(n);
  int stamp = 0;
  for (Elem x = 0; x < n; ++x) {
    ++stamp;
    for (Elem y = 0; y < n; ++y) {
      int& s = seen[t.mul(x, y)];
      if (s == stamp) return false;
      s = stamp;
    }
  }
  for (Elem y = 0; y < n; ++y) {
    ++stamp;
    for (Elem x = 0; x < n; ++x) {
      int& s = seen[t.mul(x, y)];
      if (s == stamp) return false;
      s = stamp;
    }
  }
  return true;
}

Elem find_identity(const CayleyTable& t) {
  for (Elem e = 0; e < t.order(); ++e) {
    bool ok = true;
    for (Elem x = 0; x < t.order() && ok; ++x) {
      ok = t.mul(e, x) == x && t.mul(x, e) == x;
    }
    if (ok) return e;
  }
  return -1;
}

bool is_loop(const CayleyTable& t) {
  return is_quasigroup(t) && find_identity(t) >= 0;
}

namespace {

std::vector<Elem> compute_inverses(const CayleyTable& t) {
  std::vector<Elem> inv(t.order(), -1);
  for (Elem x = 0; x < t.order(); ++x) {
    for (Elem y = 0; y < t.order(); ++y) {
      if (t.mul(x, y) == kIdentity) {
        inv[x] = y;
        break;
      }
    }
  }
  return inv;
}

}  // namespace

GroupTable GroupTable::FromTrustedCayley(CayleyTable table,
                                         std::vector<Elem> generators,
                                         std::vector<std::string> labels) {
  if (!is_quasigroup(table) || find_identity(table) != kIdentity) {
    throw PreconditionError("group table must be a Latin square with identity 0");
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(table.order())) {
    throw PreconditionError("label count does not match group order");
  }
  for (Elem g : generators) {
    if (g < 0 || g >= table.order()) {
      throw PreconditionError("generator index out of range");
    }
  }
  GroupTable g;
  static_cast<CayleyTable&>(g) = std::move(table);
  g.inverse_ = compute_inverses(g);
  g.generators_ = std::move(generators);
  g.labels_ = std::move(labels);
  return g;
}

GroupTable GroupTable::FromCayley(CayleyTable table,
                                  std::vector<Elem> generators,
                                  std::vector<std::string> labels) {
  const int n = table.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = table.mul(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (table.mul(xy, z) != table.mul(x, table.mul(y, z))) {
          throw PreconditionError(
              "table is not associative at (" + std::to_string(x) + "," +
              std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  return FromTrustedCayley(std::move(table), std::move(generators),
                           std::move(labels));
}

std::string GroupTable::label(Elem x) const {
  if (labels_.empty()) return "g" + std::to_string(x);
  return labels_[x];
}

bool GroupTable::is_abelian() const {
  for (Elem x = 0; x < order(); ++x) {
    for (Elem y = x + 1; y < order(); ++y) {
      if (mul(x, y) != mul(y, x)) return false;
    }
  }
  return true;
}

int GroupTable::element_order(Elem x) const {
  int k = 1;
  for (Elem p = x; p != kIdentity; p = mul(p, x)) ++k;
  return k;
}

}  // namespace ccl
