#include "ccloops/loop.hpp"

#include <algorithm>
#include <functional>

#include "ccloops/errors.hpp"

namespace ccl {

LoopTable LoopTable::FromCayley(CayleyTable table,
                                std::vector<std::string> labels) {
  if (!is_quasigroup(table)) throw PreconditionError("table is not a quasigroup");
  if (find_identity(table) != kIdentity) {
    throw PreconditionError("element 0 is not a two-sided identity");
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(table.order())) {
    throw PreconditionError("label count does not match loop order");
  }
  LoopTable l;
  static_cast<CayleyTable&>(l) = std::move(table);
  l.labels_ = std::move(labels);
  return l;
}

std::string LoopTable::label(Elem x) const {
  if (labels_.empty()) return "x" + std::to_string(x);
  return labels_[x];
}

Elem LoopTable::inverse(Elem x) const {
  auto r = row(x);
  return static_cast<Elem>(std::find(r.begin(), r.end(), kIdentity) - r.begin());
}

int LoopTable::element_order(Elem x) const {
  int k = 1;
  for (Elem p = x; p != kIdentity && k <= order(); p = mul(x, p)) ++k;
  return k;
}

LoopTable LoopTable::with_entry(Elem x, Elem y, Elem value) const {
  LoopTable copy = *this;
  std::vector<Elem> data = copy.data();
  data[static_cast<std::size_t>(x) * order() + y] = value;
  static_cast<CayleyTable&>(copy) = CayleyTable(order(), std::move(data));
  return copy;
}

LoopTable chein_loop(const GroupTable& g) {
  const int n = g.order();
  const int m = 2 * n;
  std::vector<Elem> product(static_cast<std::size_t>(m) * m);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      const Elem g1 = a % n;
      const Elem g2 = b % n;
      Elem r;
      if (a < n && b < n) {
        r = g.mul(g1, g2);
      } else if (a < n) {
        r = n + g.mul(g2, g1);
      } else if (b < n) {
        r = n + g.mul(g1, g.inverse(g2));
      } else {
        r = g.mul(g.inverse(g2), g1);
      }
      product[static_cast<std::size_t>(a) * m + b] = r;
    }
  }
  std::vector<std::string> labels;
  for (Elem x = 0; x < n; ++x) labels.push_back(g.label(x));
  for (Elem x = 0; x < n; ++x) labels.push_back(x == 0 ? "u" : g.label(x) + "u");
  LoopTable l = LoopTable::FromCayley(CayleyTable(m, std::move(product)),
                                      std::move(labels));
  l.group_part_ = CheinMarker{n};
  return l;
}

namespace {

// Runs `ok` over all triples in lexicographic order, recording the first
// failure.
IdentityReport check_triples(const CayleyTable& t, std::string name,
                             std::string statement, std::string variables,
                             const std::function<bool(Elem, Elem, Elem)>& ok) {
  IdentityReport r{std::move(name), std::move(statement), std::move(variables)};
  const int n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (!ok(a, b, c)) {
          r.holds = false;
          r.counterexample = {a, b, c};
          return r;
        }
  return r;
}

IdentityReport check_pairs(int range, std::string name, std::string statement,
                           std::string variables,
                           const std::function<bool(Elem, Elem)>& ok) {
  IdentityReport r{std::move(name), std::move(statement), std::move(variables)};
  for (Elem a = 0; a < range; ++a)
    for (Elem b = 0; b < range; ++b)
      if (!ok(a, b)) {
        r.holds = false;
        r.counterexample = {a, b};
        return r;
      }
  return r;
}

}  // namespace

std::array<IdentityReport, 3> is_moufang(const CayleyTable& t) {
  auto m = [&t](Elem a, Elem b) { return t.mul(a, b); };
  return {
      check_triples(t, "moufang_right", "z(x(yx)) = ((zx)y)x", "x,y,z",
                    [&](Elem x, Elem y, Elem z) {
                      return m(z, m(x, m(y, x))) == m(m(m(z, x), y), x);
                    }),
      check_triples(t, "moufang_left", "x(y(xz)) = ((xy)x)z", "x,y,z",
                    [&](Elem x, Elem y, Elem z) {
                      return m(x, m(y, m(x, z))) == m(m(m(x, y), x), z);
                    }),
      check_triples(t, "moufang_middle", "(xy)(zx) = (x(yz))x = x((yz)x)",
                    "x,y,z",
                    [&](Elem x, Elem y, Elem z) {
                      const Elem yz = m(y, z);
                      const Elem rhs = m(m(x, yz), x);
                      return rhs == m(x, m(yz, x)) && m(m(x, y), m(z, x)) == rhs;
                    }),
  };
}

IdentityReport is_associative(const CayleyTable& t) {
  return check_triples(t, "associative", "(xy)z = x(yz)", "x,y,z",
                       [&t](Elem x, Elem y, Elem z) {
                         return t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z));
                       });
}

IdentityReport is_commutative(const CayleyTable& t) {
  return check_pairs(t.order(), "commutative", "xy = yx", "x,y",
                     [&t](Elem x, Elem y) { return t.mul(x, y) == t.mul(y, x); });
}

std::vector<Elem> subloop_closure(const CayleyTable& t, std::span<const Elem> s) {
  std::vector<char> in(t.order(), 0);
  std::vector<Elem> members;
  auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(kIdentity);
  for (Elem x : s) {
    if (x < 0 || x >= t.order()) throw PreconditionError("element out of range");
    add(x);
  }
  // Each new element is multiplied against everything seen so far, both
  // sides, so every pair is formed exactly once in each order.
  for (std::size_t k = 0; k < members.size(); ++k) {
    const Elem x = members[k];
    for (std::size_t j = 0; j <= k; ++j) {
      const Elem y = members[j];
      add(t.mul(x, y));
      add(t.mul(y, x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// Products inside M(G,2) written in terms of group indices.
struct CheinView {
  const CayleyTable& l;
  int n;
  Elem u() const { return n; }
  Elem coset(Elem g) const { return n + g; }  // g u
  Elem mul(Elem a, Elem b) const { return l.mul(a, b); }
};

Elem loop_inverse(const CayleyTable& t, Elem x) {
  auto r = t.row(x);
  return static_cast<Elem>(std::find(r.begin(), r.end(), kIdentity) - r.begin());
}

std::array<IdentityReport, 3> chein_reports(const CayleyTable& l, int n) {
  CheinView v{l, n};
  auto inv = [&](Elem g) { return loop_inverse(l, g); };
  return {
      check_pairs(n, "chein_left", "g1(g2 u) = (g2 g1)u", "g1,g2",
                  [&](Elem g1, Elem g2) {
                    return v.mul(g1, v.coset(g2)) == v.coset(v.mul(g2, g1));
                  }),
      check_pairs(n, "chein_right", "(g1 u)g2 = (g1 g2^-1)u", "g1,g2",
                  [&](Elem g1, Elem g2) {
                    return v.mul(v.coset(g1), g2) == v.coset(v.mul(g1, inv(g2)));
                  }),
      check_pairs(n, "chein_coset_product", "(g1 u)(g2 u) = g2^-1 g1", "g1,g2",
                  [&](Elem g1, Elem g2) {
                    return v.mul(v.coset(g1), v.coset(g2)) == v.mul(inv(g2), g1);
                  }),
  };
}

}  // namespace

std::array<IdentityReport, 3> verify_chein_identities(const LoopTable& l) {
  if (!l.group_part()) {
    throw PreconditionError("loop carries no M(G,2) group marker");
  }
  return chein_reports(l, l.group_part()->group_order);
}

std::vector<IdentityReport> verify_chein_consequences(const GroupTable& g) {
  const LoopTable l = chein_loop(g);
  const int n = g.order();
  const Elem u = n;
  auto m = [&l](Elem a, Elem b) { return l.mul(a, b); };
  auto inv = [&g](Elem a) { return g.inverse(a); };
  auto coset = [n](Elem a) { return n + a; };

  std::vector<Elem> gens_e{kIdentity};
  for (Elem s : g.generators()) gens_e.push_back(s);
  const std::vector<Elem>& gens = g.generators();
  const int k = static_cast<int>(gens.size());
  const int ke = static_cast<int>(gens_e.size());

  std::vector<IdentityReport> out;
  auto over_generators = [&](int range, const std::vector<Elem>& pool,
                             std::string name, std::string statement,
                             const std::function<bool(Elem, Elem)>& ok) {
    IdentityReport r = check_pairs(range, std::move(name), std::move(statement),
                                   "a,b", [&](Elem a, Elem b) {
                                     return ok(pool[a], pool[b]);
                                   });
    for (Elem& x : r.counterexample) x = pool[x];
    out.push_back(std::move(r));
  };

  over_generators(ke, gens_e, "generator_relations",
                  "((g1 g2)u)^2 = e for g1,g2 in S+{e}", [&](Elem a, Elem b) {
                    const Elem x = m(m(a, b), u);
                    return m(x, x) == kIdentity;
                  });

  {
    IdentityReport r{"u_conjugation_inverts", "(u w)u = u(w u) = w^-1", "w"};
    for (Elem w = 0; w < n; ++w) {
      if (m(m(u, w), u) != inv(w) || m(u, m(w, u)) != inv(w)) {
        r.holds = false;
        r.counterexample = {w};
        break;
      }
    }
    out.push_back(std::move(r));
  }

  for (auto& r : chein_reports(l, n)) out.push_back(std::move(r));

  out.push_back(check_pairs(
      n, "chein_one_sided_equivalence",
      "g1(g2 u) = (g2 g1)u iff (g2 u)g1^-1 = (g2 g1)u", "g1,g2",
      [&](Elem w1, Elem w2) {
        const bool c1 = m(w1, coset(w2)) == coset(m(w2, w1));
        const bool c2 = m(coset(w2), inv(w1)) == coset(m(w2, w1));
        return c1 == c2;
      }));

  over_generators(k, gens, "generator_u_inverse", "s_i u = u s_i^-1",
                  [&](Elem si, Elem) { return m(si, u) == m(u, inv(si)); });
  over_generators(k, gens, "generator_chein_left", "s_i(s_j u) = (s_j s_i)u",
                  [&](Elem si, Elem sj) {
                    return m(si, m(sj, u)) == m(m(sj, si), u);
                  });
  over_generators(k, gens, "generator_chein_right",
                  "(s_i u)s_j = (s_i s_j^-1)u", [&](Elem si, Elem sj) {
                    return m(m(si, u), sj) == m(m(si, inv(sj)), u);
                  });
  over_generators(k, gens, "generator_chein_coset_product",
                  "(s_i u)(s_j u) = s_j^-1 s_i", [&](Elem si, Elem sj) {
                    return m(m(si, u), m(sj, u)) == m(inv(sj), si);
                  });
  over_generators(k, gens, "generator_u_commutation",
                  "(u s_i)s_j = s_j^-1(u s_i)", [&](Elem si, Elem sj) {
                    return m(m(u, si), sj) == m(inv(sj), m(u, si));
                  });

  {
    IdentityReport r{"left_peeling",
                     "u(s_1 s_2 ... s_k) = s_1^-1(u(s_2 ... s_k)), k <= 4",
                     "s_1,...,s_k"};
    std::vector<int> word;
    std::function<bool()> visit = [&]() -> bool {
      if (!word.empty()) {
        Elem tail = kIdentity;
        for (std::size_t p = 1; p < word.size(); ++p) tail = m(tail, gens[word[p]]);
        const Elem s1 = gens[word[0]];
        if (m(u, m(s1, tail)) != m(inv(s1), m(u, tail))) {
          r.holds = false;
          for (int w : word) r.counterexample.push_back(gens[w]);
          return false;
        }
      }
      if (word.size() == 4) return true;
      for (int x = 0; x < k; ++x) {
        word.push_back(x);
        if (!visit()) return false;
        word.pop_back();
      }
      return true;
    };
    visit();
    out.push_back(std::move(r));
  }
  return out;
}

GroupTable group_part_table(const LoopTable& l, std::vector<Elem> generators) {
  if (!l.group_part()) throw PreconditionError("loop carries no M(G,2) group marker");
  const int n = l.group_part()->group_order;
  std::vector<Elem> product(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  for (Elem a = 0; a < n; ++a) {
    labels.push_back(l.label(a));
    for (Elem b = 0; b < n; ++b) product[static_cast<std::size_t>(a) * n + b] = l.mul(a, b);
  }
  return GroupTable::FromTrustedCayley(CayleyTable(n, std::move(product)),
                                       std::move(generators), std::move(labels));
}

GroupTable as_group(const LoopTable& l, std::vector<Elem> generators) {
  std::vector<std::string> labels;
  for (Elem x = 0; x < l.order(); ++x) labels.push_back(l.label(x));
  return GroupTable::FromCayley(static_cast<const CayleyTable&>(l),
                                std::move(generators), std::move(labels));
}

}  // namespace ccl
