#include "ccloops/morphism.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ccloops/errors.hpp"

namespace ccl {

// ---------------------------------------------------------------------------
// Morphism basics

Morphism Morphism::Identity(int order) {
  Morphism f{order, order, std::vector<Elem>(order)};
  for (Elem x = 0; x < order; ++x) f.image[x] = x;
  return f;
}

bool Morphism::is_injective() const {
  std::vector<char> seen(codomain_order, 0);
  for (Elem y : image) {
    if (y < 0 || y >= codomain_order || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool Morphism::is_bijective() const {
  return domain_order == codomain_order && is_injective();
}

Morphism compose(const Morphism& f, const Morphism& g) {
  Morphism h{g.domain_order, f.codomain_order, std::vector<Elem>(g.domain_order)};
  for (Elem x = 0; x < g.domain_order; ++x) {
    const Elem y = g.image[x];
    h.image[x] = y < 0 ? -1 : f.image[y];
  }
  return h;
}

Morphism inverse(const Morphism& f) {
  if (!f.is_bijective()) throw PreconditionError("morphism is not a bijection");
  Morphism g{f.codomain_order, f.domain_order, std::vector<Elem>(f.domain_order)};
  for (Elem x = 0; x < f.domain_order; ++x) g.image[f.image[x]] = x;
  return g;
}

bool is_homomorphism(const Morphism& f, const CayleyTable& a,
                     const CayleyTable& b) {
  if (f.domain_order != a.order() || f.codomain_order != b.order() ||
      static_cast<int>(f.image.size()) != a.order()) {
    return false;
  }
  for (Elem y : f.image)
    if (y < 0 || y >= b.order()) return false;
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (f.image[a.mul(x, y)] != b.mul(f.image[x], f.image[y])) return false;
  return true;
}

std::optional<Morphism> extend_homomorphism(const CayleyTable& domain,
                                            std::span<const Elem> gens,
                                            const CayleyTable& codomain,
                                            std::span<const Elem> images) {
  if (gens.size() != images.size()) {
    throw PreconditionError("generator and image lists differ in length");
  }
  Morphism f{domain.order(), codomain.order(),
             std::vector<Elem>(domain.order(), -1)};
  std::vector<Elem> mapped;
  auto assign = [&](Elem x, Elem y) {
    if (f.image[x] >= 0) return f.image[x] == y;
    f.image[x] = y;
    mapped.push_back(x);
    return true;
  };
  assign(kIdentity, kIdentity);
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!assign(gens[k], images[k])) return std::nullopt;
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    const Elem x = mapped[k];
    for (std::size_t j = 0; j <= k; ++j) {
      const Elem y = mapped[j];
      if (!assign(domain.mul(x, y), codomain.mul(f.image[x], f.image[y])) ||
          !assign(domain.mul(y, x), codomain.mul(f.image[y], f.image[x]))) {
        return std::nullopt;
      }
    }
  }
  return f;
}

std::vector<Elem> greedy_generators(const CayleyTable& t) {
  std::vector<Elem> gens;
  std::vector<Elem> closure{kIdentity};
  for (Elem x = 1; x < t.order(); ++x) {
    if (std::binary_search(closure.begin(), closure.end(), x)) continue;
    gens.push_back(x);
    closure = subloop_closure(t, gens);
    if (static_cast<int>(closure.size()) == t.order()) break;
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Automorphism search

bool AutGroup::contains(const Morphism& f) const {
  return std::binary_search(elements.begin(), elements.end(), f);
}

namespace {

int left_power_order(const CayleyTable& t, Elem x) {
  int k = 1;
  for (Elem p = x; p != kIdentity && k <= t.order(); p = t.mul(x, p)) ++k;
  return k;
}

}  // namespace

AutGroup automorphism_group(const CayleyTable& t, std::int64_t budget) {
  if (budget < 1) throw PreconditionError("budget must be >= 1");
  const int n = t.order();
  const std::vector<Elem> gens = greedy_generators(t);
  std::vector<int> order(n);
  for (Elem x = 0; x < n; ++x) order[x] = left_power_order(t, x);

  AutGroup out;
  std::vector<Elem> images;
  std::function<void(const Morphism&)> search = [&](const Morphism& partial) {
    const std::size_t depth = images.size();
    if (depth == gens.size()) {
      out.elements.push_back(partial);
      return;
    }
    std::vector<char> used(n, 0);
    for (Elem y : partial.image)
      if (y >= 0) used[y] = 1;
    for (Elem c = 1; c < n; ++c) {
      if (used[c] || order[c] != order[gens[depth]]) continue;
      if (++out.nodes > budget) {
        throw ResourceLimitError("automorphism search exceeded budget of " +
                                     std::to_string(budget) + " nodes",
                                 out.nodes);
      }
      images.push_back(c);
      auto next = extend_homomorphism(
          t, std::span(gens).first(depth + 1), t, images);
      if (next) {
        // Injective on the generated part.
        std::vector<char> hit(n, 0);
        bool injective = true;
        for (Elem y : next->image) {
          if (y < 0) continue;
          if (hit[y]) {
            injective = false;
            break;
          }
          hit[y] = 1;
        }
        if (injective) search(*next);
      }
      images.pop_back();
    }
  };
  auto root = extend_homomorphism(t, {}, t, {});
  search(*root);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool is_closed_group(const std::vector<Morphism>& elements) {
  if (elements.empty()) return false;
  std::set<Morphism> set(elements.begin(), elements.end());
  if (!set.count(Morphism::Identity(elements.front().domain_order))) return false;
  for (const Morphism& f : elements) {
    if (!f.is_bijective() || !set.count(inverse(f))) return false;
    for (const Morphism& g : elements)
      if (!set.count(compose(f, g))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chein decompositions and the trichotomy

std::optional<CheinDecomposition> recognize_chein_decomposition(const GroupTable& g) {
  const int n = g.order();
  if (n % 2 != 0) return std::nullopt;
  const std::vector<Elem> gens = greedy_generators(g);
  const CayleyTable z2(2, {0, 1, 1, 0});
  // Index-2 subgroups are kernels of the nonzero homomorphisms onto Z2,
  // which are fixed by their values on a generating set.
  std::vector<std::vector<Elem>> kernels;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << gens.size()); ++bits) {
    std::vector<Elem> images;
    for (std::size_t k = 0; k < gens.size(); ++k) images.push_back((bits >> k) & 1);
    auto f = extend_homomorphism(g, gens, z2, images);
    if (!f) continue;
    std::vector<Elem> kernel;
    for (Elem x = 0; x < n; ++x)
      if (f->image[x] == 0) kernel.push_back(x);
    kernels.push_back(std::move(kernel));
  }
  std::sort(kernels.begin(), kernels.end());
  for (const auto& h : kernels) {
    bool abelian = true;
    for (Elem a : h)
      for (Elem b : h)
        if (g.mul(a, b) != g.mul(b, a)) abelian = false;
    if (!abelian) continue;
    std::vector<char> in(n, 0);
    for (Elem a : h) in[a] = 1;
    for (Elem u = 0; u < n; ++u) {
      if (in[u] || g.mul(u, u) != kIdentity) continue;
      const bool inverts = std::all_of(h.begin(), h.end(), [&](Elem a) {
        return g.mul(g.mul(u, a), u) == g.inverse(a);
      });
      if (inverts) return CheinDecomposition{h, u};
    }
  }
  return std::nullopt;
}

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::kElementaryAbelian: return "case1";
    case Trichotomy::kNoDecomposition: return "case2";
    case Trichotomy::kAbelianDecomposition: return "case3";
  }
  return "unknown";
}

Trichotomy classify_trichotomy(const GroupTable& g) {
  bool exponent_two = true;
  for (Elem x = 0; x < g.order() && exponent_two; ++x)
    exponent_two = g.mul(x, x) == kIdentity;
  if (exponent_two) return Trichotomy::kElementaryAbelian;
  return recognize_chein_decomposition(g) ? Trichotomy::kAbelianDecomposition
                                          : Trichotomy::kNoDecomposition;
}

// ---------------------------------------------------------------------------
// Frames and the explicit automorphisms

CheinFrame frame_of(const LoopTable& l) {
  if (!l.group_part()) throw PreconditionError("loop carries no M(G,2) group marker");
  CheinFrame f;
  for (Elem x = 0; x < l.group_part()->group_order; ++x) f.subgroup.push_back(x);
  f.u = l.group_part()->u();
  return f;
}

namespace {

Elem right_inverse(const CayleyTable& t, Elem x) {
  auto r = t.row(x);
  return static_cast<Elem>(std::find(r.begin(), r.end(), kIdentity) - r.begin());
}

bool in_frame(const CheinFrame& frame, Elem x) {
  return std::binary_search(frame.subgroup.begin(), frame.subgroup.end(), x);
}

}  // namespace

bool satisfies_chein_rules(const CayleyTable& l, const CheinFrame& frame) {
  const Elem u = frame.u;
  for (Elem a : frame.subgroup) {
    for (Elem b : frame.subgroup) {
      const Elem au = l.mul(a, u);
      const Elem bu = l.mul(b, u);
      if (l.mul(a, bu) != l.mul(l.mul(b, a), u)) return false;
      if (l.mul(au, b) != l.mul(l.mul(a, right_inverse(l, b)), u)) return false;
      if (l.mul(au, bu) != l.mul(right_inverse(l, b), a)) return false;
    }
  }
  return true;
}

Morphism phi_g(const CayleyTable& l, const CheinFrame& frame, Elem g) {
  if (!in_frame(frame, g)) throw PreconditionError("element is not in the frame subgroup");
  Morphism f{l.order(), l.order(), std::vector<Elem>(l.order(), -1)};
  for (Elem a : frame.subgroup) {
    f.image[a] = a;
    f.image[l.mul(a, frame.u)] = l.mul(l.mul(g, a), frame.u);
  }
  return f;
}

Morphism phi_psi(const CayleyTable& l, const CheinFrame& frame,
                 const Morphism& psi) {
  Morphism f{l.order(), l.order(), std::vector<Elem>(l.order(), -1)};
  for (Elem a : frame.subgroup) {
    f.image[a] = psi.image[a];
    f.image[l.mul(a, frame.u)] = l.mul(psi.image[a], frame.u);
  }
  return f;
}

Morphism build_phi_g(const LoopTable& l, Elem g) {
  const CheinFrame frame = frame_of(l);
  if (g < 0 || !in_frame(frame, g)) {
    throw PreconditionError("element " + std::to_string(g) + " is not in G");
  }
  return phi_g(l, frame, g);
}

Morphism build_phi_psi(const LoopTable& l, const Morphism& psi) {
  const GroupTable g = group_part_table(l);
  if (!psi.is_bijective() || !is_homomorphism(psi, g, g)) {
    throw PreconditionError("map is not an automorphism of G");
  }
  Morphism lifted{l.order(), l.order(), std::vector<Elem>(l.order(), -1)};
  for (Elem x = 0; x < g.order(); ++x) lifted.image[x] = psi.image[x];
  return phi_psi(l, frame_of(l), lifted);
}

// ---------------------------------------------------------------------------
// Theorem verification

void TheoremReport::add(std::string check, bool pass, std::string detail) {
  checks.push_back({std::move(check), pass, std::move(detail)});
  holds = holds && pass;
}

std::vector<Elem> centralizer(const CayleyTable& l, Elem h) {
  std::vector<Elem> out;
  for (Elem x = 0; x < l.order(); ++x)
    if (l.mul(x, h) == l.mul(h, x)) out.push_back(x);
  return out;
}

std::int64_t gl2_order(int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= (std::int64_t{1} << n) - (std::int64_t{1} << i);
  return r;
}

namespace {

bool all_automorphisms(const std::vector<Morphism>& fs, const CayleyTable& t) {
  return std::all_of(fs.begin(), fs.end(), [&](const Morphism& f) {
    return f.is_bijective() && is_homomorphism(f, t, t);
  });
}

// Closure of a set of bijections under composition.
std::vector<Morphism> generated_group(const std::vector<Morphism>& gens, int order) {
  std::set<Morphism> seen{Morphism::Identity(order)};
  std::vector<Morphism> queue(seen.begin(), seen.end());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const Morphism& g : gens) {
      Morphism h = compose(queue[k], g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Morphism> products(const std::vector<Morphism>& left,
                               const std::vector<Morphism>& right) {
  std::set<Morphism> out;
  for (const Morphism& a : left)
    for (const Morphism& b : right) out.insert(compose(a, b));
  return {out.begin(), out.end()};
}

std::string count_detail(std::size_t got, std::int64_t want) {
  return std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

}  // namespace

TheoremReport verify_theorem_case2(const GroupTable& g, std::int64_t budget) {
  if (classify_trichotomy(g) != Trichotomy::kNoDecomposition) {
    throw PreconditionError("group is of the form M(H,2) or elementary abelian; "
                            "the G x| Aut(G) description does not apply");
  }
  TheoremReport r;
  r.name = "aut_semidirect_G_AutG";
  const LoopTable l = chein_loop(g);
  const int n = g.order();
  const Elem u = n;
  const AutGroup aut_g = automorphism_group(g, budget);
  const AutGroup aut_l = automorphism_group(l, budget);

  std::vector<Morphism> normal;  // N = {phi_g}
  for (Elem x = 0; x < n; ++x) normal.push_back(build_phi_g(l, x));
  std::vector<Morphism> complement;  // K = {phi_psi}
  for (const Morphism& psi : aut_g.elements) complement.push_back(build_phi_psi(l, psi));

  r.add("phi_g_are_automorphisms", all_automorphisms(normal, l));
  r.add("phi_psi_are_automorphisms", all_automorphisms(complement, l));

  const std::vector<Morphism> constructed = products(normal, complement);
  r.constructed_order = static_cast<std::int64_t>(constructed.size());
  r.brute_force_order = aut_l.order();
  r.formula_order = static_cast<std::int64_t>(n) * aut_g.order();
  r.add("constructed_count", r.constructed_order == r.formula_order,
        count_detail(constructed.size(), r.formula_order));
  r.add("brute_force_order", r.brute_force_order == r.formula_order,
        count_detail(aut_l.elements.size(), r.formula_order));
  r.add("set_equality", constructed == aut_l.elements);

  bool preserves = true;
  for (const Morphism& f : aut_l.elements)
    for (Elem x = 0; x < n; ++x) preserves = preserves && f(x) < n;
  r.add("G_characteristic", preserves);

  std::set<Morphism> nset(normal.begin(), normal.end());
  bool is_normal = true;
  for (const Morphism& f : aut_l.elements) {
    const Morphism finv = inverse(f);
    for (const Morphism& x : normal)
      is_normal = is_normal && nset.count(compose(f, compose(x, finv)));
  }
  r.add("N_normal", is_normal);

  int overlap = 0;
  for (const Morphism& k : complement) overlap += nset.count(k) ? 1 : 0;
  r.add("K_complement", overlap == 1 && is_closed_group(complement) &&
                            normal.size() * complement.size() == aut_l.elements.size());

  bool conj = true;
  for (std::size_t p = 0; p < complement.size(); ++p) {
    const Morphism pinv = inverse(complement[p]);
    for (Elem x = 0; x < n; ++x) {
      const Morphism lhs = compose(complement[p], compose(normal[x], pinv));
      conj = conj && lhs == normal[aut_g.elements[p](x)];
    }
  }
  r.add("conjugation_relation", conj);

  // chi(f) is defined by f(u) = chi(f) u.
  bool chi = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Morphism fg = compose(normal[a], normal[b]);
      chi = chi && fg(u) - n == g.mul(a, b) && normal[a](u) - n == a;
    }
  r.add("chi_homomorphism", chi);
  return r;
}

TheoremReport verify_theorem_case3(const GroupTable& h, std::int64_t budget) {
  if (!h.is_abelian()) throw PreconditionError("H must be abelian");
  bool has_big = false;
  for (Elem x = 0; x < h.order(); ++x) has_big = has_big || h.element_order(x) > 2;
  if (!has_big) {
    throw PreconditionError(
        "H has exponent two, so M(M(H,2),2) is elementary abelian");
  }
  TheoremReport r;
  r.name = "aut_HxH_S3_AutH";
  const int nh = h.order();
  const LoopTable g_loop = chein_loop(h);
  const GroupTable g = as_group(g_loop);
  r.add("G_nonabelian", !g.is_abelian());
  const LoopTable l = chein_loop(g);
  const int nl = l.order();

  const Elem u1 = nh;
  const Elem u2 = 2 * nh;
  const Elem u3 = l.mul(u1, u2);
  {
    const std::vector<Elem> klein{kIdentity, u1, u2, u3};
    bool ok = true;
    for (Elem a : klein) {
      ok = ok && l.mul(a, a) == kIdentity;
      for (Elem b : klein)
        ok = ok && l.mul(a, b) == l.mul(b, a) &&
             std::find(klein.begin(), klein.end(), l.mul(a, b)) != klein.end();
    }
    r.add("klein_four", ok && u3 != u1 && u3 != u2 && u3 != kIdentity);
  }

  std::vector<Elem> hset(nh);
  for (Elem x = 0; x < nh; ++x) hset[x] = x;
  const std::array<Elem, 4> us{kIdentity, u1, u2, u3};
  auto coset = [&](Elem x, int i) { return l.mul(x, us[i]); };
  {
    std::vector<int> hits(nl, 0);
    for (int i = 0; i < 4; ++i)
      for (Elem x : hset) ++hits[coset(x, i)];
    r.add("four_cosets_partition",
          std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; }));
  }

  // G_i = H + H u_i, and L = M(G_i, 2) with respect to u_{3-i}.
  std::array<CheinFrame, 3> outer;
  std::array<CheinFrame, 3> inner;
  for (int i = 1; i <= 2; ++i) {
    CheinFrame gi{hset, us[3 - i]};
    for (Elem x : hset) gi.subgroup.push_back(coset(x, i));
    std::sort(gi.subgroup.begin(), gi.subgroup.end());
    outer[i] = gi;
    inner[i] = CheinFrame{hset, us[i]};
  }
  r.add("frames_satisfy_chein_rules",
        satisfies_chein_rules(l, outer[1]) && satisfies_chein_rules(l, outer[2]) &&
            satisfies_chein_rules(l, inner[1]) && satisfies_chein_rules(l, inner[2]));

  // sigma_i = Phi_i(u_i).
  std::array<Morphism, 3> sigma;
  bool sigma_shape = true;
  for (int i = 1; i <= 2; ++i) {
    sigma[i] = phi_g(l, outer[i], us[i]);
    for (Elem x : outer[i].subgroup) sigma_shape = sigma_shape && sigma[i](x) == x;
    for (Elem x : hset) {
      sigma_shape = sigma_shape && sigma[i](coset(x, 3 - i)) == coset(x, 3) &&
                    sigma[i](coset(x, 3)) == coset(x, 3 - i);
    }
  }
  r.add("sigma_fix_and_swap", sigma_shape);
  r.add("sigma_are_automorphisms", all_automorphisms({sigma[1], sigma[2]}, l));
  const std::vector<Morphism> s3 = generated_group({sigma[1], sigma[2]}, nl);
  r.add("sigma_generate_S3",
        s3.size() == 6 && compose(sigma[1], sigma[2]) != compose(sigma[2], sigma[1]),
        "order " + std::to_string(s3.size()));

  // Kernel N = { (Phi_1 Psi_1)(h1) o (Phi_2 Psi_2)(h2) }.
  auto kernel_map = [&](int i, Elem x) {
    return phi_psi(l, outer[i], phi_g(l, inner[i], x));
  };
  bool kernel_shape = true;
  std::array<std::vector<Morphism>, 3> family;
  for (int i = 1; i <= 2; ++i) {
    for (Elem x : hset) {
      Morphism f = kernel_map(i, x);
      for (Elem y : hset) {
        kernel_shape = kernel_shape && f(y) == y &&
                       f(coset(y, i)) == coset(h.mul(x, y), i) &&
                       f(coset(y, 3 - i)) == coset(y, 3 - i) &&
                       f(coset(y, 3)) == coset(h.mul(y, h.inverse(x)), 3);
      }
      family[i].push_back(std::move(f));
    }
  }
  r.add("kernel_maps_explicit_form", kernel_shape);
  r.add("kernel_maps_are_automorphisms",
        all_automorphisms(family[1], l) && all_automorphisms(family[2], l));
  std::vector<Morphism> kernel;
  bool chi_ok = true;
  for (Elem a : hset)
    for (Elem b : hset) {
      Morphism f = compose(family[1][a], family[2][b]);
      chi_ok = chi_ok && f(u1) == coset(a, 1) && f(u2) == coset(b, 2);
      kernel.push_back(std::move(f));
    }
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  r.add("kernel_is_HxH", static_cast<int>(kernel.size()) == nh * nh && chi_ok &&
                             is_closed_group(kernel),
        count_detail(kernel.size(), static_cast<std::int64_t>(nh) * nh));

  // A = Aut(H) extended through both levels.
  const AutGroup aut_h = automorphism_group(h, budget);
  std::vector<Morphism> a_group;
  bool a_shape = true;
  for (const Morphism& psi : aut_h.elements) {
    Morphism lifted{nl, nl, std::vector<Elem>(nl, -1)};
    for (Elem x : hset) lifted.image[x] = psi(x);
    Morphism f = phi_psi(l, outer[1], phi_psi(l, inner[1], lifted));
    for (Elem x : hset)
      for (int i = 1; i <= 3; ++i)
        a_shape = a_shape && f(coset(x, i)) == coset(psi(x), i);
    a_group.push_back(std::move(f));
  }
  r.add("A_extends_AutH", a_shape && all_automorphisms(a_group, l));
  bool commute = true;
  for (const Morphism& a : a_group)
    for (const Morphism& s : s3) commute = commute && compose(a, s) == compose(s, a);
  r.add("S_commutes_with_A", commute);
  std::vector<Morphism> kgens = a_group;
  kgens.push_back(sigma[1]);
  kgens.push_back(sigma[2]);
  const std::vector<Morphism> k = generated_group(kgens, nl);
  r.add("K_order", static_cast<int>(k.size()) == 6 * aut_h.order(),
        count_detail(k.size(), 6LL * aut_h.order()));

  const AutGroup aut_l = automorphism_group(l, budget);
  const std::vector<Morphism> constructed = products(kernel, k);
  r.constructed_order = static_cast<std::int64_t>(constructed.size());
  r.brute_force_order = aut_l.order();
  r.formula_order = static_cast<std::int64_t>(nh) * nh * 6 * aut_h.order();
  r.add("constructed_count", r.constructed_order == r.formula_order,
        count_detail(constructed.size(), r.formula_order));
  r.add("brute_force_order", r.brute_force_order == r.formula_order,
        count_detail(aut_l.elements.size(), r.formula_order));
  r.add("set_equality", constructed == aut_l.elements);

  // Elements of order > 2 lie in H, and each one centralizes exactly H.
  bool central = true;
  for (Elem x = 0; x < nl; ++x) {
    if (l.element_order(x) <= 2) continue;
    central = central && x < nh && centralizer(l, x) == hset;
  }
  r.add("H_is_centralizer", central);
  return r;
}

}  // namespace ccl
