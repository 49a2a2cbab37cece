#include "ccloops/amalgam.hpp"

#include <gtest/gtest.h>

#include <map>

#include "ccloops/errors.hpp"

namespace ccl {
namespace {

CoxeterDiagram Diagram(int rank, const std::vector<std::array<int, 3>>& edges) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  for (auto [i, j, v] : edges) m[i][j] = m[j][i] = v;
  return CoxeterDiagram::Validate(m);
}

CoxeterDiagram A2() { return Diagram(2, {{0, 1, 3}}); }
CoxeterDiagram A3() { return Diagram(3, {{0, 1, 3}, {1, 2, 3}}); }
CoxeterDiagram Triangle() { return Diagram(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}); }
CoxeterDiagram TwoTriangles() {
  return Diagram(4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {1, 3, 3}, {2, 3, 3}});
}

TEST(StandardAmalgamTest, Shapes) {
  const Amalgam a2 = standard_amalgam(A2());
  ASSERT_EQ(a2.simplices.size(), 1u);
  EXPECT_EQ(a2.loop(0).order(), 12);
  EXPECT_TRUE(a2.connections.empty());
  EXPECT_TRUE(verify_amalgam(a2).ok);

  const Amalgam a3 = standard_amalgam(A3());
  ASSERT_EQ(a3.simplices.size(), 3u);
  EXPECT_EQ(a3.loop(0).order(), 12);
  EXPECT_EQ(a3.loop(1).order(), 12);
  EXPECT_EQ(a3.loop(2).order(), 4);
  EXPECT_EQ(a3.connections.size(), 2u);
  EXPECT_TRUE(verify_amalgam(a3).ok);

  const Amalgam tri = standard_amalgam(Triangle());
  ASSERT_EQ(tri.simplices.size(), 7u);
  for (int s = 3; s < 6; ++s) EXPECT_EQ(tri.loop(s).order(), 4);
  EXPECT_EQ(tri.loop(6).order(), 2);
  EXPECT_TRUE(verify_amalgam(tri).ok);
  EXPECT_TRUE(is_of_type_g(tri));
}

TEST(StandardAmalgamTest, Errors) {
  EXPECT_THROW(standard_amalgam(Diagram(2, {})), PreconditionError);
  EXPECT_THROW(standard_amalgam(Diagram(2, {{0, 1, kInfinity}})), PreconditionError);
}

TEST(StandardAmalgamTest, FaultInjection) {
  Amalgam a = standard_amalgam(A3());
  std::fill(a.connections[0].map.image.begin(), a.connections[0].map.image.end(), 0);
  const AmalgamReport r = verify_amalgam(a);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations[0].find("{(1,2)}"), std::string::npos) << r.violations[0];
}

TEST(CompletionTest, StandardCompletion) {
  for (const auto& d : {A2(), A3(), Diagram(3, {{0, 1, 4}, {1, 2, 3}})}) {
    const Amalgam a = standard_amalgam(d);
    const StandardCompletion c = standard_completion(a);
    const CompletionReport r = verify_completion(a, c.target, c.maps);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.non_collapsing);
  }
}

TEST(CompletionTest, CollapsingAndMismatch) {
  const Amalgam a = standard_amalgam(A3());
  const LoopTable z2 = LoopTable::FromCayley(CayleyTable(2, {0, 1, 1, 0}));
  std::vector<Morphism> trivial;
  for (std::size_t s = 0; s < a.simplices.size(); ++s)
    trivial.push_back({a.loop(s).order(), 2, std::vector<Elem>(a.loop(s).order(), 0)});
  const CompletionReport r = verify_completion(a, z2, trivial);
  EXPECT_TRUE(r.ok);
  EXPECT_FALSE(r.non_collapsing);

  StandardCompletion c = standard_completion(a);
  c.maps[2] = compose(c.maps[2], vertex_loop_map(a.loops[a.loop_of[2]], a.loops[a.loop_of[2]],
                                                 a.apex[2]));
  EXPECT_FALSE(verify_completion(a, c.target, c.maps).ok);
}

TEST(TwistTest, DeltaEmptyIsStandard) {
  const Amalgam s = standard_amalgam(Triangle());
  const Amalgam t = twisted_amalgam(Triangle(), make_twist(Triangle(), {}));
  EXPECT_EQ(s.connections.size(), t.connections.size());
  for (std::size_t k = 0; k < s.connections.size(); ++k)
    EXPECT_EQ(s.connections[k].map, t.connections[k].map);
  EXPECT_THROW(make_twist(Triangle(), {1}), PreconditionError);
}

TEST(TwistTest, TriangleTwistIsTypeG) {
  const Amalgam t = twisted_amalgam(Triangle(), make_twist(Triangle(), {0}));
  EXPECT_TRUE(verify_amalgam(t).ok);
  EXPECT_TRUE(is_of_type_g(t));
  // The edge (2,3) map from L_2 sends s_2 to s_2 u.
  const int face = t.index_of({2});
  const int coface = t.index_of({0, 2});  // common vertex 2
  const Connection& c = t.connections[t.connection(face, coface)];
  const VertexLoop& l2 = t.loops[t.loop_of[coface]];
  const VertexLoop& l23 = t.loops[t.loop_of[face]];
  EXPECT_EQ(c.map(l2.generator(0)), l23.loop.mul(l23.generator(0), l23.u()));
}

TEST(ClassificationTest, Triangle) {
  const auto d = Triangle();
  const Amalgam s = twisted_amalgam(d, make_twist(d, {}));
  const Amalgam t = twisted_amalgam(d, make_twist(d, {0}));
  EXPECT_TRUE(amalgams_isomorphic(s, s).isomorphic);
  EXPECT_TRUE(amalgams_isomorphic(t, t).isomorphic);
  EXPECT_FALSE(amalgams_isomorphic(s, t).isomorphic);
  EXPECT_FALSE(amalgams_isomorphic(t, s).isomorphic);
}

TEST(ClassificationTest, TwoTriangles) {
  const auto d = TwoTriangles();
  std::vector<Amalgam> all;
  for (int mask = 0; mask < 4; ++mask) {
    std::vector<int> delta;
    for (int j = 0; j < 2; ++j)
      if (mask >> j & 1) delta.push_back(j);
    all.push_back(twisted_amalgam(d, make_twist(d, delta)));
    EXPECT_TRUE(verify_amalgam(all.back()).ok);
  }
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      EXPECT_EQ(amalgams_isomorphic(all[x], all[y]).isomorphic, x == y) << x << " " << y;
}

TEST(CocycleTest, ZeroAndTwists) {
  const auto d = Triangle();
  const Amalgam zero = cocycle_to_amalgam(d, BitMatrix(1, 3));
  const Amalgam s = standard_amalgam(d);
  for (std::size_t k = 0; k < s.connections.size(); ++k)
    EXPECT_EQ(s.connections[k].map, zero.connections[k].map);
  const TwistSelection tw = make_twist(d, {0});
  const Amalgam from_z = cocycle_to_amalgam(d, twist_cocycle(d, tw));
  EXPECT_TRUE(verify_amalgam(from_z).ok);
  EXPECT_TRUE(is_of_type_g(from_z));
  EXPECT_TRUE(amalgams_isomorphic(from_z, twisted_amalgam(d, tw)).isomorphic);
  EXPECT_FALSE(amalgams_isomorphic(from_z, s).isomorphic);
}

TEST(CocycleTest, CoboundariesGiveStandardClass) {
  for (const auto& d : {Triangle(), TwoTriangles()}) {
    const SimplicialComplex c = build_complex(underlying_graph(d));
    const BitMatrix d0t = coboundary_matrix(c, 0).transpose();
    const Amalgam s = standard_amalgam(d);
    for (int e = 0; e < d0t.rows(); ++e) {
      BitMatrix z(1, d0t.cols());
      z.append_row(d0t, e);
      BitMatrix row(0, d0t.cols());
      row.append_row(d0t, e);
      const Amalgam a = cocycle_to_amalgam(d, row);
      EXPECT_TRUE(verify_amalgam(a).ok);
      EXPECT_TRUE(amalgams_isomorphic(a, s).isomorphic) << e;
    }
  }
}

TEST(CocycleTest, RejectsNonCocycle) {
  const auto d = Diagram(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}});
  BitMatrix z(1, 3);
  z.set(0, 0);
  EXPECT_THROW(cocycle_to_amalgam(d, z), PreconditionError);
  EXPECT_THROW(cocycle_to_amalgam(d, BitMatrix(1, 2)), PreconditionError);
}

TEST(CoefficientTest, Triangle) {
  const Amalgam a = standard_amalgam(Triangle());
  for (std::size_t s = 0; s < a.simplices.size(); ++s) {
    const CoefficientGroup g = coefficient_group(a, static_cast<int>(s));
    EXPECT_TRUE(g.generator_is_automorphism);
    ASSERT_TRUE(g.brute_force.has_value());
    EXPECT_TRUE(g.agree()) << simplex_name(a, static_cast<int>(s)) << " brute "
                           << g.brute_force->size();
  }
}

// With only two edges the cofaces giving L_i, L_j and L_0 are missing, so
// the stabilizer intersection is larger than the closed form.
TEST(CoefficientTest, A3DiffersWhereCofacesAreMissing) {
  const Amalgam a = standard_amalgam(A3());
  std::map<std::string, std::size_t> brute;
  for (std::size_t s = 0; s < a.simplices.size(); ++s) {
    const CoefficientGroup g = coefficient_group(a, static_cast<int>(s));
    ASSERT_TRUE(g.brute_force);
    EXPECT_EQ(g.agree(), g.cofaces_cover_apex) << simplex_name(a, static_cast<int>(s));
    brute[simplex_name(a, static_cast<int>(s))] = g.brute_force->size();
  }
  EXPECT_EQ(brute["{(1,2)}"], 12u);
  EXPECT_EQ(brute["{(2,3)}"], 12u);
  EXPECT_EQ(brute["{(1,2),(2,3)}"], 6u);
}

TEST(CoefficientTest, SingleEdgeKeepsWholeAutomorphismGroup) {
  const Amalgam a = standard_amalgam(CoxeterDiagram::Validate({{1, 3}, {3, 1}}));
  const CoefficientGroup g = coefficient_group(a, 0);
  EXPECT_FALSE(g.cofaces_cover_apex);
  EXPECT_EQ(static_cast<int>(g.brute_force->size()), automorphism_group(a.loop(0)).order());
}

}  // namespace
}  // namespace ccl
