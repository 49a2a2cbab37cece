#include "ccloops/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ccloops/errors.hpp"

namespace ccl {

// ---------------------------------------------------------------------------
// CoxeterDiagram

CoxeterDiagram CoxeterDiagram::Validate(
    const std::vector<std::vector<int>>& labels) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw DiagramError("diagram must have rank >= 1", 0, 0);
  CoxeterDiagram d;
  d.rank_ = n;
  d.labels_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(labels[i].size()) != n) {
      throw DiagramError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(labels[i].size()) +
                             " entries, expected " + std::to_string(n),
                         i, 0);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int m = labels[i][j];
      const std::string at =
          " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j && m != 1) throw DiagramError("diagonal entry must be 1" + at, i, j);
      if (i != j && m < 2) throw DiagramError("off-diagonal entry must be >= 2" + at, i, j);
      if (m != labels[j][i]) throw DiagramError("matrix is not symmetric" + at, i, j);
      d.labels_[i * n + j] = m;
    }
  }
  return d;
}

std::vector<std::vector<int>> CoxeterDiagram::matrix() const {
  std::vector<std::vector<int>> out(rank_, std::vector<int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i][j] = label(i, j);
  return out;
}

bool CoxeterDiagram::all_finite() const {
  return std::none_of(labels_.begin(), labels_.end(),
                      [](int m) { return m == kInfinity; });
}

CoxeterDiagram CoxeterDiagram::restrict(std::span<const int> vertices) const {
  std::vector<std::vector<int>> sub(vertices.size(),
                                    std::vector<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = 0; b < vertices.size(); ++b)
      sub[a][b] = label(vertices[a], vertices[b]);
  if (sub.empty()) {
    CoxeterDiagram empty;
    return empty;
  }
  return Validate(sub);
}

Graph underlying_graph(const CoxeterDiagram& d) {
  std::vector<Edge> edges;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = i + 1; j < d.rank(); ++j)
      if (d.label(i, j) >= 3) edges.push_back({i, j});
  return Graph(d.rank(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Spherical recognition

std::string IrreducibleType::name() const {
  if (family == "I2") return "I2(" + std::to_string(m) + ")";
  return family + std::to_string(rank);
}

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

// Classifies one connected component; returns nullopt when it is not a
// finite type.
std::optional<IrreducibleType> classify_component(const CoxeterDiagram& d,
                                                  const Graph& g,
                                                  std::vector<int> vertices) {
  IrreducibleType t;
  t.vertices = vertices;
  const int k = static_cast<int>(vertices.size());
  t.rank = k;
  if (k == 1) {
    t.family = "A";
    t.order = 2;
    return t;
  }
  int edge_count = 0;
  for (int v : vertices) edge_count += g.valency(v);
  edge_count /= 2;
  if (edge_count != k - 1) return std::nullopt;  // contains a cycle
  for (int v : vertices)
    for (int w : g.neighbours(v))
      if (d.label(v, w) == kInfinity) return std::nullopt;

  if (k == 2) {
    const int m = d.label(vertices[0], vertices[1]);
    t.order = 2 * static_cast<std::uint64_t>(m);
    if (m == 3) {
      t.family = "A";
    } else if (m == 4) {
      t.family = "B";
    } else if (m == 6) {
      t.family = "G";
    } else {
      t.family = "I2";
      t.m = m;
    }
    return t;
  }

  std::vector<int> branch;
  for (int v : vertices) {
    if (g.valency(v) > 3) return std::nullopt;
    if (g.valency(v) == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return std::nullopt;

  if (branch.size() == 1) {
    // D_n / E_n: all labels 3, arms measured from the branch vertex.
    const int c = branch[0];
    std::vector<int> arms;
    for (int start : g.neighbours(c)) {
      if (d.label(c, start) != 3) return std::nullopt;
      int len = 1;
      int prev = c;
      int cur = start;
      while (true) {
        int next = -1;
        for (int w : g.neighbours(cur))
          if (w != prev) next = w;
        if (next < 0) break;
        if (d.label(cur, next) != 3) return std::nullopt;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      t.family = "D";
      t.order = (std::uint64_t{1} << (k - 1)) * factorial(k);
      return t;
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      t.family = "E";
      t.order = k == 6 ? 51840ULL : k == 7 ? 2903040ULL : 696729600ULL;
      return t;
    }
    return std::nullopt;
  }

  // Path: walk from an end vertex and collect the labels in order.
  int end = -1;
  for (int v : vertices)
    if (g.valency(v) == 1) {
      end = v;
      break;
    }
  std::vector<int> path_labels;
  int prev = -1;
  int cur = end;
  while (true) {
    int next = -1;
    for (int w : g.neighbours(cur))
      if (w != prev) next = w;
    if (next < 0) break;
    path_labels.push_back(d.label(cur, next));
    prev = cur;
    cur = next;
  }
  std::vector<std::size_t> big;
  for (std::size_t p = 0; p < path_labels.size(); ++p)
    if (path_labels[p] > 3) big.push_back(p);
  const std::size_t last = path_labels.size() - 1;
  if (big.empty()) {
    t.family = "A";
    t.order = factorial(k + 1);
    return t;
  }
  if (big.size() != 1) return std::nullopt;
  const int m = path_labels[big[0]];
  const bool at_end = big[0] == 0 || big[0] == last;
  if (m == 4 && at_end) {
    t.family = "B";
    t.order = (std::uint64_t{1} << k) * factorial(k);
    return t;
  }
  if (m == 4 && k == 4) {
    t.family = "F";
    t.order = 1152;
    return t;
  }
  if (m == 5 && at_end && (k == 3 || k == 4)) {
    t.family = "H";
    t.order = k == 3 ? 120 : 14400;
    return t;
  }
  return std::nullopt;
}

}  // namespace

SphericalClassification recognize_spherical(const CoxeterDiagram& d) {
  SphericalClassification out;
  const Graph g = underlying_graph(d);
  const std::vector<int> comp = g.components();
  std::uint64_t order = 1;
  bool overflow = false;
  for (int root = 0; root < d.rank(); ++root) {
    if (comp[root] != root) continue;
    std::vector<int> members;
    for (int v = 0; v < d.rank(); ++v)
      if (comp[v] == root) members.push_back(v);
    auto t = classify_component(d, g, members);
    if (!t) {
      out.spherical = false;
      out.components.clear();
      out.predicted_order.reset();
      out.reason = "component containing vertex " + std::to_string(root + 1) +
                   " is not of finite type";
      return out;
    }
    auto next = checked_mul(order, t->order);
    if (!next) overflow = true;
    else order = *next;
    out.components.push_back(std::move(*t));
  }
  out.spherical = true;
  if (!overflow) out.predicted_order = order;
  return out;
}

// ---------------------------------------------------------------------------
// Coset enumeration (HLT with lookahead) over the trivial subgroup. Every
// generator is an involution, so each column is its own inverse column.

namespace {

class CosetEnumerator {
 public:
  CosetEnumerator(int gens, std::vector<std::vector<int>> relators,
                  int capacity)
      : gens_(gens),
        relators_(std::move(relators)),
        capacity_(capacity),
        table_(static_cast<std::size_t>(capacity) * gens, -1),
        parent_(capacity, -1) {
    parent_[0] = 0;
    next_ = 1;
    live_ = 1;
  }

  // Returns false when the working space is exhausted.
  bool run() {
    int c = 0;
    while (c < next_) {
      if (!is_live(c)) {
        ++c;
        continue;
      }
      if (process(c)) {
        ++c;
        continue;
      }
      lookahead();
      compact(c);
      if (next_ > capacity_ - capacity_ / 8) return false;
    }
    return true;
  }

  int live() const { return live_; }
  int next() const { return next_; }
  int entry(int c, int x) const { return table_[idx(c, x)]; }
  bool is_live(int c) const { return parent_[c] == c; }

 private:
  std::size_t idx(int c, int x) const {
    return static_cast<std::size_t>(c) * gens_ + x;
  }

  // Scans every relator at c, then fills the remaining columns of c.
  bool process(int c) {
    for (const auto& r : relators_) {
      if (!scan(c, r, true)) return false;
      if (!is_live(c)) return true;
    }
    for (int x = 0; x < gens_; ++x) {
      if (table_[idx(c, x)] < 0 && !define(c, x)) return false;
    }
    return true;
  }

  bool define(int c, int x) {
    if (next_ >= capacity_) return false;
    const int d = next_++;
    parent_[d] = d;
    ++live_;
    table_[idx(c, x)] = d;
    table_[idx(d, x)] = c;
    return true;
  }

  // Scan of relator r at coset c; defines new cosets when `fill` is set.
  bool scan(int c, const std::vector<int>& r, bool fill) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(r.size()) - 1;
    while (true) {
      while (i <= j && table_[idx(f, r[i])] >= 0) f = table_[idx(f, r[i++])];
      if (i > j) {
        if (f != c) coincidence(f, c);
        return true;
      }
      while (j >= i && table_[idx(b, r[j])] >= 0) b = table_[idx(b, r[j--])];
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        table_[idx(f, r[i])] = b;
        table_[idx(b, r[i])] = f;
        return true;
      }
      if (!fill) return true;
      if (!define(f, r[i])) return false;
    }
  }

  int rep(int k) {
    int root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const int up = parent_[k];
      parent_[k] = root;
      k = up;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k);
    const int b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    parent_[hi] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int g = queue[q];
      for (int x = 0; x < gens_; ++x) {
        const int d = table_[idx(g, x)];
        if (d < 0) continue;
        table_[idx(d, x)] = -1;
        const int mu = rep(g);
        const int nu = rep(d);
        if (table_[idx(mu, x)] >= 0) {
          merge(nu, table_[idx(mu, x)], queue);
        } else if (table_[idx(nu, x)] >= 0) {
          merge(mu, table_[idx(nu, x)], queue);
        } else {
          table_[idx(mu, x)] = nu;
          table_[idx(nu, x)] = mu;
        }
      }
    }
  }

  void lookahead() {
    for (int c = 0; c < next_; ++c) {
      for (const auto& r : relators_) {
        if (!is_live(c)) break;
        scan(c, r, false);
      }
    }
  }

  // Drops dead cosets, preserving order; `cursor` is moved to the new index
  // of the first live coset at or after it.
  void compact(int& cursor) {
    std::vector<int> remap(next_, -1);
    int count = 0;
    int new_cursor = -1;
    for (int c = 0; c < next_; ++c) {
      if (c == cursor) new_cursor = count;
      if (is_live(c)) remap[c] = count++;
    }
    if (new_cursor < 0) new_cursor = count;
    std::vector<int> table(table_.size(), -1);
    for (int c = 0; c < next_; ++c) {
      if (remap[c] < 0) continue;
      for (int x = 0; x < gens_; ++x) {
        const int d = table_[idx(c, x)];
        table[idx(remap[c], x)] = d < 0 ? -1 : remap[d];
      }
    }
    table_ = std::move(table);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int c = 0; c < count; ++c) parent_[c] = c;
    next_ = count;
    live_ = count;
    cursor = new_cursor;
  }

  int gens_;
  std::vector<std::vector<int>> relators_;
  int capacity_;
  std::vector<int> table_;
  std::vector<int> parent_;
  int next_ = 0;
  int live_ = 0;
};

// Shortlex BFS numbering of a regular right action. `act(c, x)` gives the
// image of point c under generator x. Returns the BFS order and, per new
// index, the (parent, generator) pair that discovered it.
struct ShortlexOrder {
  std::vector<int> points;   // new index -> old point
  std::vector<int> parent;   // new index -> new index of parent (-1 for 0)
  std::vector<int> via;      // new index -> generator position
};

template <typename Act>
ShortlexOrder shortlex_bfs(int start, int point_space, int gens, Act act) {
  ShortlexOrder o;
  std::vector<int> seen(point_space, -1);
  seen[start] = 0;
  o.points.push_back(start);
  o.parent.push_back(-1);
  o.via.push_back(-1);
  for (std::size_t head = 0; head < o.points.size(); ++head) {
    for (int x = 0; x < gens; ++x) {
      const int q = act(o.points[head], x);
      if (seen[q] >= 0) continue;
      seen[q] = static_cast<int>(o.points.size());
      o.points.push_back(q);
      o.parent.push_back(static_cast<int>(head));
      o.via.push_back(x);
    }
  }
  return o;
}

// Builds the group table from a shortlex order and the right action of the
// generators on new indices: x * y = (x * parent(y)) * s_via(y).
GroupTable table_from_action(const ShortlexOrder& o,
                             const std::vector<std::vector<int>>& right,
                             const std::vector<std::string>& gen_names) {
  const int n = static_cast<int>(o.points.size());
  std::vector<Elem> product(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    product[static_cast<std::size_t>(x) * n] = x;
    for (int y = 1; y < n; ++y) {
      const Elem left = product[static_cast<std::size_t>(x) * n + o.parent[y]];
      product[static_cast<std::size_t>(x) * n + y] = right[left][o.via[y]];
    }
  }
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (int y = 1; y < n; ++y) {
    labels[y] = (o.parent[y] == 0 ? std::string() : labels[o.parent[y]]) +
                gen_names[o.via[y]];
  }
  std::vector<Elem> generators;
  for (int x = 0; x < static_cast<int>(gen_names.size()); ++x)
    generators.push_back(right[0][x]);
  return GroupTable::FromTrustedCayley(CayleyTable(n, std::move(product)),
                                       std::move(generators), std::move(labels));
}

}  // namespace

GroupTable enumerate_group(const CoxeterDiagram& d, int cap) {
  if (cap < 1) throw PreconditionError("cap must be >= 1");
  if (!d.all_finite()) {
    throw PreconditionError(
        "cannot enumerate a Coxeter group with an infinite label");
  }
  const int n = d.rank();
  std::vector<std::vector<int>> relators;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> r;
      for (int k = 0; k < d.label(i, j); ++k) {
        r.push_back(i);
        r.push_back(j);
      }
      relators.push_back(std::move(r));
    }
  }
  const long long capacity = 4LL * cap + 64;
  CosetEnumerator tc(n, std::move(relators),
                     static_cast<int>(std::min<long long>(capacity, 1 << 28)));
  if (!tc.run()) {
    throw ResourceLimitError("coset enumeration exceeded its working space (" +
                                 std::to_string(tc.live()) +
                                 " live cosets); the diagram is likely "
                                 "non-spherical or the cap too small",
                             tc.live());
  }
  if (tc.live() > cap) {
    throw ResourceLimitError("group order " + std::to_string(tc.live()) +
                                 " exceeds cap " + std::to_string(cap),
                             tc.live());
  }
  // Renumber the live cosets shortlex and build the right action on them.
  ShortlexOrder o = shortlex_bfs(0, tc.next(), n,
                                 [&](int c, int x) { return tc.entry(c, x); });
  std::vector<int> new_index(tc.next(), -1);
  for (int k = 0; k < static_cast<int>(o.points.size()); ++k)
    new_index[o.points[k]] = k;
  std::vector<std::vector<int>> right(o.points.size(), std::vector<int>(n));
  for (int k = 0; k < static_cast<int>(o.points.size()); ++k)
    for (int x = 0; x < n; ++x) right[k][x] = new_index[tc.entry(o.points[k], x)];
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) names.push_back("s" + std::to_string(x + 1));
  return table_from_action(o, right, names);
}

Subgroup parabolic_subgroup(const GroupTable& g,
                            std::span<const int> generator_indices) {
  std::vector<Elem> gens;
  std::vector<std::string> names;
  for (int j : generator_indices) {
    if (j < 0 || j >= static_cast<int>(g.generators().size())) {
      throw PreconditionError("generator index out of range");
    }
    gens.push_back(g.generators()[j]);
    names.push_back("s" + std::to_string(j + 1));
  }
  const int k = static_cast<int>(gens.size());
  ShortlexOrder o = shortlex_bfs(kIdentity, g.order(), k, [&](Elem x, int s) {
    return g.mul(x, gens[s]);
  });
  std::vector<int> new_index(g.order(), -1);
  for (int p = 0; p < static_cast<int>(o.points.size()); ++p)
    new_index[o.points[p]] = p;
  std::vector<std::vector<int>> right(o.points.size(), std::vector<int>(k));
  for (int p = 0; p < static_cast<int>(o.points.size()); ++p)
    for (int s = 0; s < k; ++s) right[p][s] = new_index[g.mul(o.points[p], gens[s])];
  Subgroup out{table_from_action(o, right, names), o.points};
  return out;
}

}  // namespace ccl
