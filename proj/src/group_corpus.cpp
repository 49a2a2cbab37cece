#include "ccloops/group_corpus.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ccloops/errors.hpp"

namespace ccl::corpus {
namespace {

GroupTable from_formula(int n, const std::function<Elem(Elem, Elem)>& mul,
                        std::vector<Elem> gens, std::vector<std::string> labels) {
  std::vector<Elem> product(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) product[static_cast<std::size_t>(x) * n + y] = mul(x, y);
  return GroupTable::FromTrustedCayley(CayleyTable(n, std::move(product)),
                                       std::move(gens), std::move(labels));
}

}  // namespace

GroupTable cyclic(int n) {
  if (n < 1) throw PreconditionError("cyclic group order must be >= 1");
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : "a^" + std::to_string(k));
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return from_formula(n, [n](Elem x, Elem y) { return (x + y) % n; }, gens, labels);
}

GroupTable dihedral(int n) {
  if (n < 1) throw PreconditionError("dihedral parameter must be >= 1");
  // r^a s^b is stored as a + n*b; s r^a = r^-a s.
  auto mul = [n](Elem x, Elem y) {
    const int a = x % n, b = x / n, c = y % n, d = y / n;
    const int rot = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
    return rot + n * ((b + d) % 2);
  };
  std::vector<std::string> labels;
  for (int k = 0; k < 2 * n; ++k) {
    const int a = k % n, b = k / n;
    std::string l = a == 0 ? "" : "r^" + std::to_string(a);
    if (b) l += "s";
    labels.push_back(l.empty() ? "e" : l);
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(n);
  return from_formula(2 * n, mul, gens, labels);
}

GroupTable quaternion8() {
  // Element = unit + 4*sign with units 1, i, j, k.
  static constexpr std::array<std::array<int, 4>, 4> unit{{
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  auto mul = [](Elem x, Elem y) {
    const int u = x % 4, v = y % 4;
    const int s = (x / 4 + y / 4 + sign[u][v]) % 2;
    return unit[u][v] + 4 * s;
  };
  return from_formula(8, mul, {1, 2},
                      {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

GroupTable alternating4() {
  using Perm = std::array<int, 4>;
  const Perm id{0, 1, 2, 3};
  const std::vector<Perm> gens{{1, 2, 0, 3}, {1, 0, 3, 2}};
  // x * y means apply x, then y.
  auto compose = [](const Perm& x, const Perm& y) {
    Perm r;
    for (int i = 0; i < 4; ++i) r[i] = y[x[i]];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t h = 0; h < elems.size(); ++h) {
    for (const Perm& g : gens) {
      Perm p = compose(elems[h], g);
      if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  for (const Perm& p : elems) {
    std::string l = "[";
    for (int i = 0; i < 4; ++i) l += std::to_string(p[i] + 1);
    labels.push_back(l + "]");
  }
  return from_formula(
      n, [&](Elem x, Elem y) { return index.at(compose(elems[x], elems[y])); },
      {index.at(gens[0]), index.at(gens[1])}, labels);
}

GroupTable elementary_abelian2(int k) {
  if (k < 0 || k > 10) throw PreconditionError("rank out of range");
  const int n = 1 << k;
  std::vector<Elem> gens;
  for (int i = 0; i < k; ++i) gens.push_back(1 << i);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    std::string l;
    for (int i = 0; i < k; ++i) l += (x >> i & 1) ? '1' : '0';
    labels.push_back(k == 0 ? "e" : l);
  }
  return from_formula(n, [](Elem x, Elem y) { return x ^ y; }, gens, labels);
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int na = a.order();
  auto mul = [&](Elem x, Elem y) {
    return a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  };
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(g);
  for (Elem g : b.generators()) gens.push_back(na * g);
  std::vector<std::string> labels;
  for (int x = 0; x < na * b.order(); ++x)
    labels.push_back("(" + a.label(x % na) + "," + b.label(x / na) + ")");
  return from_formula(na * b.order(), mul, gens, labels);
}

}  // namespace ccl::corpus
