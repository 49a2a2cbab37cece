// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime limits are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccloops/amalgam.hpp"
#include "ccloops/cli.hpp"
#include "ccloops/cohomology.hpp"
#include "ccloops/coxeter.hpp"
#include "ccloops/group_corpus.hpp"
#include "ccloops/loop.hpp"
#include "ccloops/morphism.hpp"

using namespace ccl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

CoxeterDiagram Diagram(int rank, std::vector<std::array<int, 3>> edges) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  for (auto [i, j, l] : edges) m[i - 1][j - 1] = m[j - 1][i - 1] = l;
  return CoxeterDiagram::Validate(m);
}

// Independent evaluation of the three Moufang identities.
bool MoufangOracle(const CayleyTable& t) {
  const int n = t.order();
  auto m = [&](Elem a, Elem b) { return t.mul(a, b); };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (m(z, m(x, m(y, x))) != m(m(m(z, x), y), x)) return false;
        if (m(x, m(y, m(x, z))) != m(m(m(x, y), x), z)) return false;
        if (m(m(x, y), m(z, x)) != m(m(x, m(y, z)), x)) return false;
      }
  return true;
}

// Naive GF(2) rank on dense rows.
int NaiveRank(std::vector<std::vector<int>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(rows.size()) && !rows[p][c]) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != rank && rows[r][c])
        for (int k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> Dense(const BitMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
  return out;
}

std::int64_t GlOrder(int n) {
  std::int64_t q = 1, out = 1;
  for (int k = 0; k < n; ++k) q *= 2;
  for (int k = 0, p = 1; k < n; ++k, p *= 2) out *= q - p;
  return out;
}

// ---------------------------------------------------------------------------

Outcome CheinConstruction() {
  Outcome o;
  const GroupTable w = enumerate_group(Diagram(2, {{1, 2, 3}}));
  const LoopTable l = chein_loop(w);
  o.require(l.order() == 12, "|L| = " + std::to_string(l.order()));
  o.require(is_loop(l), "not a loop");
  for (const auto& r : is_moufang(l)) o.require(r.holds, r.name + " fails");
  o.require(MoufangOracle(l), "oracle rejects Moufang");
  for (const auto& r : verify_chein_identities(l)) o.require(r.holds, r.name + " fails");
  const IdentityReport a = is_associative(l);
  o.require(!a.holds && a.counterexample.size() == 3, "no associativity counterexample");
  if (!a.holds) {
    const Elem x = a.counterexample[0], y = a.counterexample[1], z = a.counterexample[2];
    o.require(l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z)), "counterexample does not replay");
  }
  return o;
}

Outcome CheinConsequences() {
  Outcome o;
  const std::vector<std::pair<std::string, CoxeterDiagram>> cases = {
      {"A2", Diagram(2, {{1, 2, 3}})},
      {"B2", Diagram(2, {{1, 2, 4}})},
      {"I2(5)", Diagram(2, {{1, 2, 5}})},
      {"A3", Diagram(3, {{1, 2, 3}, {2, 3, 3}})}};
  for (const auto& [name, d] : cases) {
    const GroupTable g = enumerate_group(d);
    for (const auto& r : verify_chein_consequences(g)) o.require(r.holds, name + " " + r.name);
    const LoopTable l = chein_loop(g);
    const Elem u = g.order();
    for (Elem w = 0; w < g.order(); ++w) {
      o.require(l.mul(l.mul(u, w), u) == g.inverse(w), name + " (uw)u != w^-1");
      o.require(l.mul(u, l.mul(w, u)) == g.inverse(w), name + " u(wu) != w^-1");
    }
    for (Elem a : g.generators())
      for (Elem b : g.generators()) {
        const Elem x = u + g.mul(a, b);
        o.require(l.mul(x, x) == kIdentity, name + " ((g1 g2)u)^2 != e");
      }
  }
  return o;
}

Outcome AutomorphismTheorems() {
  Outcome o;
  const GroupTable q8 = corpus::quaternion8();
  const TheoremReport r2 = verify_theorem_case2(q8);
  const std::int64_t aut_q8 = automorphism_group(q8).order();
  o.require(r2.brute_force_order == 192, "|Aut(M(Q8,2))| = " + std::to_string(r2.brute_force_order));
  o.require(192 == 8 * aut_q8, "|Q8||Aut(Q8)| = " + std::to_string(8 * aut_q8));
  for (const Check& c : r2.checks) o.require(c.pass, "Q8 " + c.name);

  for (int n : {3, 4}) {
    const GroupTable h = corpus::cyclic(n);
    const std::int64_t formula = std::int64_t{n} * n * 6 * automorphism_group(h).order();
    const TheoremReport r3 = verify_theorem_case3(h);
    const std::string tag = n == 3 ? "S3" : "D4";
    const std::int64_t expected = n == 3 ? 108 : 192;
    o.require(formula == expected, tag + " formula " + std::to_string(formula));
    o.require(r3.brute_force_order == expected, tag + " brute force " + std::to_string(r3.brute_force_order));
    for (const Check& c : r3.checks) o.require(c.pass, tag + " " + c.name);
    // Same count in the input numbering of M(G,2).
    const GroupTable g = n == 3 ? corpus::dihedral(3) : corpus::dihedral(4);
    o.require(automorphism_group(chein_loop(g)).order() == expected, tag + " direct count");
  }
  const auto has_set_equality = [](const TheoremReport& r) {
    return std::any_of(r.checks.begin(), r.checks.end(),
                       [](const Check& c) { return c.name == "set_equality" && c.pass; });
  };
  o.require(has_set_equality(r2), "Q8 set equality missing");
  o.require(has_set_equality(verify_theorem_case3(corpus::cyclic(3))), "S3 set equality missing");

  const std::int64_t z23 = automorphism_group(chein_loop(corpus::elementary_abelian2(2))).order();
  o.require(z23 == 168 && GlOrder(3) == 168, "|Aut(Z2^3)| = " + std::to_string(z23));
  return o;
}

// Brute-force trichotomy: exponent 2, else some abelian index-2 subgroup H
// with an involution outside inverting it, else neither.
Trichotomy TrichotomyOracle(const GroupTable& g) {
  const int n = g.order();
  bool exponent2 = true;
  for (Elem x = 0; x < n; ++x) exponent2 = exponent2 && g.mul(x, x) == kIdentity;
  if (exponent2) return Trichotomy::kElementaryAbelian;
  if (n % 2) return Trichotomy::kNoDecomposition;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != n / 2 || !(mask & 1)) continue;
    auto in = [&](Elem x) { return (mask >> x & 1) != 0; };
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (in(a) && in(b)) ok = in(g.mul(a, b)) && g.mul(a, b) == g.mul(b, a);
    if (!ok) continue;
    for (Elem u = 0; u < n; ++u) {
      if (in(u) || g.mul(u, u) != kIdentity) continue;
      bool inverts = true;
      for (Elem h = 0; h < n && inverts; ++h)
        if (in(h)) inverts = g.mul(g.mul(u, h), u) == g.inverse(h);
      if (inverts) return Trichotomy::kAbelianDecomposition;
    }
  }
  return Trichotomy::kNoDecomposition;
}

Outcome TrichotomyCriterion() {
  Outcome o;
  o.require(classify_trichotomy(corpus::elementary_abelian2(2)) == Trichotomy::kElementaryAbelian,
            "Z2xZ2");
  o.require(classify_trichotomy(corpus::quaternion8()) == Trichotomy::kNoDecomposition, "Q8");
  o.require(classify_trichotomy(corpus::dihedral(3)) == Trichotomy::kAbelianDecomposition, "S3");
  std::vector<std::pair<std::string, GroupTable>> groups;
  for (int n = 1; n <= 12; ++n) groups.push_back({"Z" + std::to_string(n), corpus::cyclic(n)});
  for (int n = 1; n <= 6; ++n) groups.push_back({"D" + std::to_string(2 * n), corpus::dihedral(n)});
  groups.push_back({"Q8", corpus::quaternion8()});
  groups.push_back({"A4", corpus::alternating4()});
  for (const auto& [name, g] : groups) {
    const Trichotomy t = classify_trichotomy(g);
    o.require(t == TrichotomyOracle(g), name + " classified " + to_string(t));
  }
  return o;
}

Outcome CohomologyDimensions() {
  Outcome o;
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n));
    for (int v = 1; v < n; ++v) {
      const int p = static_cast<int>(rng() % v);
      edges.push_back({p, v});
      used[p][v] = true;
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!used[a][b] && rng() % 3 == 0) edges.push_back({a, b});
    const Graph g(n, edges);
    const CohomologyResult r = cohomology(g, true);
    const int e = g.edge_count();
    const std::string tag = "trial " + std::to_string(trial);
    const int z1 = r.c_dims[1] - NaiveRank(Dense(r.d1));
    const int b1 = NaiveRank(Dense(r.d0));
    o.require(z1 == 2 * e - n && r.z1 == z1, tag + " Z1");
    o.require(b1 == e - 1 && r.b1 == b1, tag + " B1");
    o.require(z1 - b1 == e - n + 1 && r.h1 == z1 - b1, tag + " H1");
    o.require(r.d1d0_zero && is_zero(multiply(r.d1, r.d0)), tag + " d1 d0 != 0");
    o.require(r.z_basis.rows() == z1 && rank_gf2(r.z_basis) == z1 && r.z_matches, tag + " Z basis");
    o.require(r.b_basis.rows() == b1 && rank_gf2(r.b_basis) == b1 && r.b_matches, tag + " B basis");
    o.require(rank_gf2(r.b_basis.stack(r.h_basis)) == b1 + r.h1 && r.h_independent, tag + " H basis");
  }
  return o;
}

Outcome CoefficientSystem() {
  Outcome o;
  const std::vector<std::pair<std::string, CoxeterDiagram>> cases = {
      {"A3", Diagram(3, {{1, 2, 3}, {2, 3, 3}})},
      {"triangle", Diagram(3, {{1, 2, 3}, {1, 3, 3}, {2, 3, 3}})}};
  for (const auto& [name, d] : cases) {
    const Amalgam a = standard_amalgam(d);
    for (int s = 0; s < static_cast<int>(a.simplices.size()); ++s) {
      const CoefficientGroup c = coefficient_group(a, s);
      o.require(c.generator_is_automorphism, name + " " + c.generator_name + " not an automorphism");
      if (!c.brute_force) {
        o.require(false, name + " " + simplex_name(a, s) + " not cross-checked");
        continue;
      }
      o.require(c.agree(), name + " " + simplex_name(a, s) + ": closed form " +
                               std::to_string(c.closed_form.size()) + ", stabilizers " +
                               std::to_string(c.brute_force->size()));
    }
  }
  return o;
}

Outcome ClassificationCriterion() {
  Outcome o;
  const std::vector<std::tuple<std::string, CoxeterDiagram, int>> cases = {
      {"triangle", Diagram(3, {{1, 2, 3}, {1, 3, 3}, {2, 3, 3}}), 2},
      {"two triangles", Diagram(4, {{1, 2, 3}, {1, 3, 3}, {2, 3, 3}, {2, 4, 3}, {3, 4, 3}}), 4}};
  for (const auto& [name, d, expected] : cases) {
    const Amalgam standard = standard_amalgam(d);
    const TwistSelection none = make_twist(d, {});
    const int n = static_cast<int>(none.forest.non_tree.size());
    const Amalgam zero = twisted_amalgam(d, none);
    bool same = zero.connections.size() == standard.connections.size();
    for (std::size_t k = 0; same && k < zero.connections.size(); ++k)
      same = zero.connections[k].map == standard.connections[k].map;
    o.require(same, name + ": empty delta differs from the standard amalgam");

    std::vector<Amalgam> twists;
    std::vector<BitMatrix> cocycles;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> delta;
      for (int j = 0; j < n; ++j)
        if (mask >> j & 1) delta.push_back(j);
      const TwistSelection tw = make_twist(d, delta);
      twists.push_back(twisted_amalgam(d, tw));
      cocycles.push_back(twist_cocycle(d, tw));
      o.require(verify_amalgam(twists.back()).ok && is_of_type_g(twists.back()),
                name + ": twist " + std::to_string(mask) + " invalid");
    }
    // Pairwise non-isomorphic, certified by exhausting the theta search.
    int classes = 0;
    for (int x = 0; x < (1 << n); ++x) {
      bool fresh = true;
      for (int y = 0; y < x; ++y)
        if (amalgams_isomorphic(twists[y], twists[x]).isomorphic) fresh = false;
      classes += fresh;
    }
    o.require(classes == expected && (1 << n) == expected,
              name + ": " + std::to_string(classes) + " classes");

    const SimplicialComplex c = build_complex(underlying_graph(d));
    const BitMatrix d0t = coboundary_matrix(c, 0).transpose();
    const int c0 = d0t.rows();
    for (int x = 0; x < (1 << n); ++x) {
      for (int mask = 0; mask < (1 << c0); ++mask) {
        BitMatrix coch(1, c0);
        for (int k = 0; k < c0; ++k)
          if (mask >> k & 1) coch.set(0, k, true);
        const BitMatrix b = multiply(coch, d0t);
        BitMatrix z = cocycles[x];
        for (int k = 0; k < z.cols(); ++k)
          if (b.get(0, k)) z.flip(0, k);
        const Amalgam az = cocycle_to_amalgam(d, z);
        if (!amalgams_isomorphic(az, twists[x]).isomorphic) {
          o.require(false, name + ": cocycle of class " + std::to_string(x) + " shifted by " +
                               std::to_string(mask) + " lands elsewhere");
        }
        if (x == 0 && !amalgams_isomorphic(az, standard).isomorphic)
          o.require(false, name + ": coboundary " + std::to_string(mask) + " not standard");
      }
    }
  }
  return o;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome Determinism() {
  Outcome o;
  const fs::path root = CCLOOPS_SOURCE_DIR;
  int files = 0;
  for (const auto& e : fs::recursive_directory_iterator(root / "corpus")) {
    if (!e.is_regular_file()) continue;
    const std::string rel = fs::relative(e.path(), root / "corpus").generic_string();
    RunConfig cfg;
    cfg.command = "verify";
    cfg.json = true;
    cfg.input_name = "corpus/" + rel;
    const std::string text = Slurp(e.path());
    const std::string first = run(cfg, text).output;
    o.require(first == run(cfg, text).output, rel + " differs between runs");
    std::string golden = rel;
    std::replace(golden.begin(), golden.end(), '/', '_');
    o.require(first == Slurp(root / "tests" / "golden" / (golden + ".verify.json")),
              rel + " differs from the stored report");
    ++files;
  }
  o.require(files > 0, "empty corpus");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "chein_construction_A2", 1.0, CheinConstruction},
      {2, "chein_consequences_A2_B2_I25_A3", 5.0, CheinConsequences},
      {3, "automorphism_orders_and_sets", 60.0, AutomorphismTheorems},
      {4, "trichotomy_small_groups", 60.0, TrichotomyCriterion},
      {5, "cohomology_dimensions_100_graphs", 5.0, CohomologyDimensions},
      {6, "coefficient_system_A3_triangle", 30.0, CoefficientSystem},
      {7, "amalgam_classification", 120.0, ClassificationCriterion},
      {8, "verify_determinism", 120.0, Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.require(false, "over time limit");
    failed += !o.pass;
    std::printf("[%s] criterion %d %-34s %8.3f s (limit %g s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name, secs, c.limit_seconds, o.note.empty() ? "" : "  ", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
