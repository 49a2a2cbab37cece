#include "ccloops/amalgam.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ccloops/errors.hpp"

namespace ccl {

namespace {

GroupTable trivial_group() {
  return GroupTable::FromCayley(CayleyTable(1, {0}), {}, {"e"});
}

std::vector<Elem> image_set(const Morphism& f) {
  std::vector<Elem> s = f.image;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Preimage table of an injective map; -1 off the image.
std::vector<Elem> preimages(const Morphism& f) {
  std::vector<Elem> pre(f.codomain_order, -1);
  for (Elem x = 0; x < f.domain_order; ++x) pre[f.image[x]] = x;
  return pre;
}

std::string edge_name(const Graph& g, int e) {
  return "(" + std::to_string(g.edges()[e].a + 1) + "," +
         std::to_string(g.edges()[e].b + 1) + ")";
}

}  // namespace

VertexLoop vertex_loop(const CoxeterDiagram& d, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  VertexLoop v;
  v.vertices = vertices;
  v.group = vertices.empty() ? trivial_group() : enumerate_group(d.restrict(vertices));
  v.loop = chein_loop(v.group);
  return v;
}

Morphism vertex_loop_map(const VertexLoop& from, const VertexLoop& to,
                         const std::vector<int>& twisted) {
  std::vector<Elem> gens;
  std::vector<Elem> images;
  for (std::size_t k = 0; k < from.vertices.size(); ++k) {
    const int j = from.vertices[k];
    auto it = std::find(to.vertices.begin(), to.vertices.end(), j);
    if (it == to.vertices.end()) throw PreconditionError("vertex sets are not nested");
    Elem image = to.generator(static_cast<int>(it - to.vertices.begin()));
    if (std::find(twisted.begin(), twisted.end(), j) != twisted.end())
      image = to.loop.mul(image, to.u());
    gens.push_back(from.generator(static_cast<int>(k)));
    images.push_back(image);
  }
  gens.push_back(from.u());
  images.push_back(to.u());
  auto f = extend_homomorphism(from.loop, gens, to.loop, images);
  if (!f || std::count(f->image.begin(), f->image.end(), -1) > 0) {
    throw PreconditionError("generator assignment does not extend to a homomorphism");
  }
  return *f;
}

int Amalgam::index_of(const Simplex& s) const {
  auto it = std::find(simplices.begin(), simplices.end(), s);
  return it == simplices.end() ? -1 : static_cast<int>(it - simplices.begin());
}

int Amalgam::connection(int face, int coface) const {
  auto it = std::lower_bound(connections.begin(), connections.end(),
                             std::pair(face, coface), [](const Connection& c, auto key) {
                               return std::pair(c.face, c.coface) < key;
                             });
  if (it == connections.end() || it->face != face || it->coface != coface) return -1;
  return static_cast<int>(it - connections.begin());
}

std::string simplex_name(const Amalgam& a, int simplex) {
  std::string s = "{";
  for (std::size_t k = 0; k < a.simplices[simplex].size(); ++k) {
    if (k) s += ",";
    s += edge_name(a.complex.graph, a.simplices[simplex][k]);
  }
  return s + "}";
}

Amalgam standard_amalgam(const CoxeterDiagram& d) {
  const Graph g = underlying_graph(d);
  if (g.edge_count() == 0) throw PreconditionError("underlying graph has no edges");
  for (const Edge& e : g.edges()) {
    if (d.label(e.a, e.b) == kInfinity) {
      throw PreconditionError("label m_" + std::to_string(e.a + 1) + "," +
                              std::to_string(e.b + 1) + " is infinite");
    }
  }
  Amalgam a;
  a.diagram = d;
  a.complex = build_complex(g);
  std::map<std::vector<int>, int> loop_index;
  for (int r = 0; r < 3; ++r) {
    for (const Simplex& s : a.complex.simplices[r]) {
      const std::vector<int> j = common_vertices(g, s);
      auto [it, fresh] = loop_index.emplace(j, static_cast<int>(a.loops.size()));
      if (fresh) a.loops.push_back(vertex_loop(d, j));
      a.simplices.push_back(s);
      a.apex.push_back(j);
      a.loop_of.push_back(it->second);
    }
  }
  for (int tau = 0; tau < static_cast<int>(a.simplices.size()); ++tau) {
    const Simplex& t = a.simplices[tau];
    const int size = static_cast<int>(t.size());
    for (int mask = 1; mask < (1 << size) - 1; ++mask) {
      Simplex face;
      for (int k = 0; k < size; ++k)
        if (mask >> k & 1) face.push_back(t[k]);
      const int rho = a.index_of(face);
      a.connections.push_back({rho, tau,
                               vertex_loop_map(a.loops[a.loop_of[tau]],
                                               a.loops[a.loop_of[rho]])});
    }
  }
  std::sort(a.connections.begin(), a.connections.end(),
            [](const Connection& x, const Connection& y) {
              return std::pair(x.face, x.coface) < std::pair(y.face, y.coface);
            });
  return a;
}

AmalgamReport verify_amalgam(const Amalgam& a) {
  AmalgamReport r;
  auto pair_name = [&](int face, int coface) {
    return simplex_name(a, face) + " < " + simplex_name(a, coface);
  };
  bool maps_ok = true;
  for (const Connection& c : a.connections) {
    const LoopTable& from = a.loop(c.coface);
    const LoopTable& to = a.loop(c.face);
    if (!is_homomorphism(c.map, from, to)) {
      maps_ok = false;
      r.violations.push_back(pair_name(c.face, c.coface) + ": not a homomorphism");
    } else if (!c.map.is_injective()) {
      maps_ok = false;
      r.violations.push_back(pair_name(c.face, c.coface) + ": not injective");
    }
  }
  r.checks.push_back({"injective_homomorphisms", maps_ok, ""});
  bool chains_ok = true;
  for (const Connection& outer : a.connections) {
    for (const Connection& lower : a.connections) {
      if (lower.face != outer.face) continue;
      const int mid = lower.coface;
      const int upper = a.connection(mid, outer.coface);
      if (upper < 0) continue;
      if (compose(lower.map, a.connections[upper].map) != outer.map) {
        chains_ok = false;
        r.violations.push_back(pair_name(outer.face, outer.coface) + ": differs from path via " +
                               simplex_name(a, mid));
      }
    }
  }
  r.checks.push_back({"compositions_commute", chains_ok, ""});
  r.ok = maps_ok && chains_ok;
  return r;
}

bool is_of_type_g(const Amalgam& a) {
  const Amalgam g = standard_amalgam(a.diagram);
  if (g.connections.size() != a.connections.size()) return false;
  for (std::size_t k = 0; k < g.connections.size(); ++k) {
    if (image_set(g.connections[k].map) != image_set(a.connections[k].map)) return false;
  }
  return true;
}

CompletionReport verify_completion(const Amalgam& a, const LoopTable& target,
                                   const std::vector<Morphism>& phi) {
  CompletionReport r;
  if (phi.size() != a.simplices.size()) {
    r.ok = false;
    r.violations.push_back("expected one map per simplex");
    return r;
  }
  for (std::size_t s = 0; s < phi.size(); ++s) {
    if (!is_homomorphism(phi[s], a.loop(static_cast<int>(s)), target)) {
      r.ok = false;
      r.violations.push_back(simplex_name(a, static_cast<int>(s)) + ": not a homomorphism");
    }
    for (Elem y : phi[s].image) r.non_collapsing = r.non_collapsing || y > 0;
  }
  if (!r.ok) return r;
  for (const Connection& c : a.connections) {
    if (compose(phi[c.face], c.map) != phi[c.coface]) {
      r.ok = false;
      r.violations.push_back(simplex_name(a, c.face) + " < " + simplex_name(a, c.coface) +
                             ": phi does not commute");
    }
  }
  return r;
}

StandardCompletion standard_completion(const Amalgam& a, int cap) {
  VertexLoop whole;
  for (int i = 0; i < a.diagram.rank(); ++i) whole.vertices.push_back(i);
  whole.group = enumerate_group(a.diagram, cap);
  whole.loop = chein_loop(whole.group);
  StandardCompletion c{whole.loop, {}};
  for (std::size_t s = 0; s < a.simplices.size(); ++s)
    c.maps.push_back(vertex_loop_map(a.loops[a.loop_of[s]], whole));
  return c;
}

TwistSelection make_twist(const CoxeterDiagram& d, std::vector<int> delta) {
  TwistSelection tw{spanning_tree(underlying_graph(d)), {}};
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  for (int j : delta) {
    if (j < 0 || j >= static_cast<int>(tw.forest.non_tree.size())) {
      throw PreconditionError("twist index " + std::to_string(j + 1) + " out of range 1.." +
                              std::to_string(tw.forest.non_tree.size()));
    }
  }
  tw.delta = std::move(delta);
  return tw;
}

Amalgam twisted_amalgam(const CoxeterDiagram& d, const TwistSelection& tw) {
  Amalgam a = standard_amalgam(d);
  for (int j : tw.delta) {
    if (j < 0 || j >= static_cast<int>(tw.forest.non_tree.size()))
      throw PreconditionError("twist index out of range");
    const NonTreeEdge& nt = tw.forest.non_tree[j];
    const int rho = a.index_of({nt.edge});
    for (Connection& c : a.connections) {
      if (c.face != rho || a.apex[c.coface] != std::vector<int>{nt.origin}) continue;
      c.map = vertex_loop_map(a.loops[a.loop_of[c.coface]], a.loops[a.loop_of[rho]],
                              {nt.origin});
    }
  }
  return a;
}

BitMatrix twist_cocycle(const CoxeterDiagram& d, const TwistSelection& tw) {
  const SimplicialComplex c = build_complex(underlying_graph(d));
  BitMatrix z(1, static_cast<int>(c.pointed[1].size()));
  for (int j : tw.delta) {
    const NonTreeEdge& nt = tw.forest.non_tree[j];
    BitMatrix v = vertex_coboundary(c, nt.origin, nt.edge);
    for (int k : v.row_support(0)) z.flip(0, k);
  }
  return z;
}

Amalgam cocycle_to_amalgam(const CoxeterDiagram& d, const BitMatrix& z) {
  const Amalgam base = standard_amalgam(d);
  const SimplicialComplex& c = base.complex;
  if (z.rows() != 1 || z.cols() != static_cast<int>(c.pointed[1].size())) {
    throw PreconditionError("cocycle must be a row of length dim C^1 = " +
                            std::to_string(c.pointed[1].size()));
  }
  if (!is_zero(multiply(coboundary_matrix(c, 1), z.transpose()))) {
    throw PreconditionError("vector is not a cocycle: d^1 z != 0");
  }
  const SpanningForest forest = spanning_tree(c.graph);
  std::vector<int> rank(c.graph.edge_count());
  int next = 0;
  for (const NonTreeEdge& nt : forest.non_tree) rank[nt.edge] = next++;
  for (int e : forest.tree_edges) rank[e] = next++;
  auto top = [&](const Simplex& s) {
    return *std::max_element(s.begin(), s.end(),
                             [&](int x, int y) { return rank[x] < rank[y]; });
  };

  Amalgam a = base;
  for (Connection& conn : a.connections) {
    const int e = top(base.simplices[conn.face]);
    const int f = top(base.simplices[conn.coface]);
    if (e == f) continue;
    const int tau = conn.coface;
    const int pair = base.index_of({std::min(e, f), std::max(e, f)});
    const int single = base.index_of({e});
    const Morphism to_pair =
        pair == tau ? Morphism::Identity(base.loop(tau).order())
                    : base.connections[base.connection(pair, tau)].map;
    Morphism twist = Morphism::Identity(base.loop(pair).order());
    const int coordinate = c.index_of(base.simplices[pair]);
    if (coordinate >= 0 && z.get(0, coordinate)) {
      const VertexLoop& lj = base.loops[base.loop_of[pair]];
      twist = inverse(vertex_loop_map(lj, lj, lj.vertices));
    }
    const Morphism to_single = base.connections[base.connection(single, pair)].map;
    Morphism path = compose(to_single, compose(twist, to_pair));
    if (conn.face != single) {
      const std::vector<Elem> pre =
          preimages(base.connections[base.connection(single, conn.face)].map);
      for (Elem& y : path.image) {
        y = pre[y];
        if (y < 0) throw PreconditionError("twisted image leaves the face subloop");
      }
      path.codomain_order = base.loop(conn.face).order();
    }
    conn.map = std::move(path);
  }
  return a;
}

IsomorphismResult amalgams_isomorphic(const Amalgam& a, const Amalgam& b,
                                      std::int64_t budget) {
  if (a.simplices != b.simplices || a.loop_of != b.loop_of ||
      a.connections.size() != b.connections.size()) {
    throw PreconditionError("amalgams are not over the same complex");
  }
  const int edges = a.complex.graph.edge_count();
  const int count = static_cast<int>(a.simplices.size());
  IsomorphismResult result;

  // Candidate theta_e: automorphisms of L_e carrying every image of a into
  // the matching image of b.
  std::map<int, AutGroup> auts;
  std::vector<std::vector<Morphism>> candidates(edges);
  for (int e = 0; e < edges; ++e) {
    const int s = a.index_of({e});
    auto it = auts.find(a.loop_of[s]);
    if (it == auts.end()) it = auts.emplace(a.loop_of[s], automorphism_group(a.loop(s), budget)).first;
    for (const Morphism& theta : it->second.elements) {
      bool ok = true;
      for (std::size_t k = 0; k < a.connections.size() && ok; ++k) {
        if (a.connections[k].face != s) continue;
        std::vector<Elem> moved = image_set(compose(theta, a.connections[k].map));
        ok = moved == image_set(b.connections[k].map);
      }
      if (ok) candidates[e].push_back(theta);
    }
  }

  std::vector<int> top(count);
  for (int s = 0; s < count; ++s) top[s] = a.simplices[s].back();
  std::vector<Morphism> theta(count);
  std::vector<std::vector<Elem>> pre_b(b.connections.size());
  for (std::size_t k = 0; k < b.connections.size(); ++k) pre_b[k] = preimages(b.connections[k].map);

  // Fills theta for simplices whose largest edge is e; false on conflict.
  auto settle = [&](int e) {
    for (int s = 0; s < count; ++s) {
      if (top[s] != e || a.simplices[s].size() == 1) continue;
      std::optional<Morphism> forced;
      for (int f : a.simplices[s]) {
        const int single = a.index_of({f});
        const int k = a.connection(single, s);
        Morphism t = compose(theta[single], a.connections[k].map);
        for (Elem& y : t.image) y = pre_b[k][y];
        t.codomain_order = a.loop(s).order();
        if (!t.is_bijective()) return false;
        if (forced && *forced != t) return false;
        forced = std::move(t);
      }
      theta[s] = *forced;
    }
    for (std::size_t k = 0; k < a.connections.size(); ++k) {
      const Connection& c = a.connections[k];
      if (top[c.coface] != e) continue;
      if (compose(theta[c.face], c.map) != compose(b.connections[k].map, theta[c.coface]))
        return false;
    }
    return true;
  };

  std::function<bool(int)> search = [&](int e) {
    if (e == edges) return true;
    const int single = a.index_of({e});
    for (const Morphism& cand : candidates[e]) {
      if (++result.nodes > budget) {
        throw ResourceLimitError("amalgam isomorphism search exceeded budget of " +
                                     std::to_string(budget) + " nodes",
                                 result.nodes);
      }
      theta[single] = cand;
      if (settle(e) && search(e + 1)) return true;
    }
    return false;
  };
  result.isomorphic = search(0);
  if (result.isomorphic) result.witness = theta;
  return result;
}

AmalgamClassification classify_amalgams(const CoxeterDiagram& d, std::int64_t budget) {
  AmalgamClassification out;
  out.n = static_cast<int>(make_twist(d, {}).forest.non_tree.size());
  std::vector<Amalgam> reps;
  for (int mask = 0; mask < (1 << out.n); ++mask) {
    std::vector<int> delta;
    for (int j = 0; j < out.n; ++j)
      if (mask >> j & 1) delta.push_back(j);
    const TwistSelection tw = make_twist(d, delta);
    Amalgam t = twisted_amalgam(d, tw);
    if (!verify_amalgam(t).ok || !is_of_type_g(t)) out.invalid_twists.push_back(delta);
    const Amalgam z = cocycle_to_amalgam(d, twist_cocycle(d, tw));
    const IsomorphismResult zi = amalgams_isomorphic(z, t, budget);
    out.nodes += zi.nodes;
    if (!verify_amalgam(z).ok || !zi.isomorphic) out.cocycle_mismatches.push_back(delta);
    int found = -1;
    for (std::size_t r = 0; r < reps.size() && found < 0; ++r) {
      const IsomorphismResult iso = amalgams_isomorphic(reps[r], t, budget);
      out.nodes += iso.nodes;
      if (iso.isomorphic) found = static_cast<int>(r);
    }
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(std::move(t));
      out.representatives.push_back(delta);
    }
    out.class_of.push_back(found);
  }
  return out;
}

CoefficientGroup coefficient_group(const Amalgam& a, int simplex, bool cross_check,
                                   int max_order, std::int64_t budget) {
  CoefficientGroup g;
  g.simplex = simplex;
  g.apex = a.apex[simplex];
  const VertexLoop& vl = a.loops[a.loop_of[simplex]];
  const LoopTable& l = vl.loop;
  const Morphism id = Morphism::Identity(l.order());
  if (g.apex.empty()) {
    g.generator_name = "id";
    g.closed_form = {id};
  } else {
    // Twisting every vertex of J gives gamma_j on L_j and gamma_ij on L_ij.
    const Morphism gamma = vertex_loop_map(vl, vl, vl.vertices);
    g.generator_name = "gamma_";
    for (int j : g.apex) g.generator_name += std::to_string(j + 1);
    g.generator_is_automorphism = gamma.is_bijective() && is_homomorphism(gamma, l, l) &&
                                  gamma != id && compose(gamma, gamma) == id;
    g.closed_form = {id, gamma};
    std::sort(g.closed_form.begin(), g.closed_form.end());
  }
  {
    std::set<std::vector<int>> seen;
    for (const Connection& c : a.connections)
      if (c.face == simplex) seen.insert(a.apex[c.coface]);
    const int k = static_cast<int>(g.apex.size());
    for (int mask = 0; mask + 1 < (1 << k); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (mask >> b & 1) sub.push_back(g.apex[b]);
      if (!seen.count(sub)) g.cofaces_cover_apex = false;
    }
  }
  if (cross_check && l.order() <= max_order) {
    std::vector<std::vector<Elem>> images;
    for (const Connection& c : a.connections)
      if (c.face == simplex) images.push_back(image_set(c.map));
    std::vector<Morphism> stab;
    for (const Morphism& f : automorphism_group(l, budget).elements) {
      const bool keeps = std::all_of(images.begin(), images.end(), [&](const auto& im) {
        std::vector<Elem> moved;
        for (Elem x : im) moved.push_back(f(x));
        std::sort(moved.begin(), moved.end());
        return moved == im;
      });
      if (keeps) stab.push_back(f);
    }
    g.brute_force = std::move(stab);
  }
  return g;
}

}  // namespace ccl
