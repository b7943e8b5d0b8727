#include <gtest/gtest.h>

#include <random>

#include "kantorlab/grading.hpp"

using namespace kantorlab;

namespace {

const FieldDescriptor& cyc() {
  static const FieldDescriptor f = FieldDescriptor::cyclo8();
  return f;
}

KantorPair cartan_pair(int dim) { return KantorPair::hurwitz(HurwitzAlgebra::cartan(dim, cyc())); }
KantorPair cd_pair(int dim) { return KantorPair::hurwitz(HurwitzAlgebra::cayley_dickson(dim, cyc())); }

mpz_class det(IntMatrix m) {
  // Bareiss
  std::size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMatrix c(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

void check_snf(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  EXPECT_EQ(mul(mul(f.u, m), f.v), f.s);
  EXPECT_EQ(abs(det(f.u)), 1);
  EXPECT_EQ(abs(det(f.v)), 1);
  std::size_t r = std::min(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < f.s.size(); ++i)
    for (std::size_t j = 0; j < f.s[i].size(); ++j)
      if (i != j) EXPECT_EQ(f.s[i][j], 0);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    EXPECT_GE(f.s[i][i], 0);
    if (f.s[i][i] != 0) EXPECT_EQ(f.s[i + 1][i + 1] % f.s[i][i], 0);
    else EXPECT_EQ(f.s[i + 1][i + 1], 0);
  }
}

IntMatrix ints(const std::vector<std::vector<long>>& v) {
  IntMatrix m;
  for (const auto& row : v) {
    std::vector<mpz_class> r;
    for (long x : row) r.push_back(x);
    m.push_back(r);
  }
  return m;
}

}  // namespace

TEST(Group, Basics) {
  FGAbelianGroup g(1, {2, 2});
  EXPECT_EQ(g.to_string(), "Z x Z2^2");
  EXPECT_EQ(g.reduce({3, 3, -1}), (GroupElement{3, 1, 1}));
  EXPECT_EQ(g.order({0, 1, 0}), 2);
  EXPECT_EQ(g.order({1, 0, 0}), 0);
  EXPECT_EQ(FGAbelianGroup::canonical(0, {2, 3}).to_string(), "Z6");
  EXPECT_EQ(FGAbelianGroup::canonical(1, {4, 6, 1}).torsion(), (std::vector<long long>{2, 12}));
  EXPECT_THROW(FGAbelianGroup(0, {3, 2}), Error);
}

TEST(Smith, Examples) {
  SmithForm a = smith_normal_form(ints({{1, 0}, {0, 1}}));
  EXPECT_EQ(a.s, ints({{1, 0}, {0, 1}}));
  SmithForm b = smith_normal_form(ints({{2, 0}, {0, 3}}));
  EXPECT_EQ(b.s, ints({{1, 0}, {0, 6}}));
  SmithForm c = smith_normal_form(ints({{0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(c.s, ints({{0, 0, 0}, {0, 0, 0}}));
  check_snf(ints({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
}

TEST(Smith, RandomMatrices) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(-9, 9), sz(1, 6);
  for (int it = 0; it < 200; ++it) {
    int m = sz(rng), n = sz(rng);
    std::vector<std::vector<long>> v(m, std::vector<long>(n));
    for (auto& row : v)
      for (auto& x : row) x = e(rng) * (it % 3 == 0 ? 2 : 1);
    check_snf(ints(v));
  }
}

TEST(Grading, CartanPairDegrees) {
  DegreeMap g = cartan_pair_grading(8);
  auto a = HurwitzAlgebra::cartan(8, cyc());
  EXPECT_EQ(g.plus[a->index_of("v1")], (GroupElement{1, 1, -1, 0}));
  EXPECT_EQ(g.plus[a->index_of("u3")], (GroupElement{1, 2, -1, -1}));
  EXPECT_EQ(g.minus[a->index_of("v3")], (GroupElement{-1, -2, 1, 1}));
  EXPECT_EQ(g.minus[a->index_of("e2")], (GroupElement{-1, 0, 0, 0}));
  DegreeMap g2 = cartan_pair_grading(2);
  EXPECT_EQ(g2.plus[0], (GroupElement{1, 0}));
  EXPECT_EQ(g2.plus[1], (GroupElement{0, 1}));
  DegreeMap t = cartan_triple_grading(8);
  EXPECT_EQ(t.plus[a->index_of("e1")], (GroupElement{1, 0, 0}));
  EXPECT_EQ(t.plus[a->index_of("u3")], (GroupElement{-1, -1, -1}));
  EXPECT_THROW(cartan_pair_grading(3), Error);
}

TEST(Grading, ImplementedGradingsAreGradings) {
  for (int d : {1, 2, 4, 8}) {
    SCOPED_TRACE(d);
    EXPECT_TRUE(is_grading(cartan_pair(d), cartan_pair_grading(d)).pass());
    EXPECT_TRUE(is_grading(cd_pair(d), cd_pair_grading(d, cyc())).pass());
    auto c = HurwitzAlgebra::cartan(d, cyc());
    auto x = HurwitzAlgebra::cayley_dickson(d, cyc());
    EXPECT_TRUE(is_grading(TripleSystem(c, TripleKind::Standard), cartan_triple_grading(d)).pass());
    EXPECT_TRUE(is_grading(TripleSystem(x, TripleKind::Standard), cd_triple_grading(d)).pass());
    EXPECT_TRUE(is_grading(*x, cd_algebra_grading(d)).pass());
  }
  auto g9 = FieldDescriptor::parse("gf2:3:-1");
  EXPECT_TRUE(is_grading(KantorPair::hurwitz(HurwitzAlgebra::cartan(2, g9)), cartan_pair_grading(2)).pass());
}

TEST(Grading, TrivialAndCorrupted) {
  KantorPair p = cartan_pair(8);
  DegreeMap triv{FGAbelianGroup(1, {}), std::vector<GroupElement>(8, {0}), std::vector<GroupElement>(8, {0})};
  EXPECT_TRUE(is_grading(p, triv).pass());
  DegreeMap g = cartan_pair_grading(8);
  g.plus[2] = {0, 0, 2, 0};  // u1+
  Report r = is_grading(p, g);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.failures.empty());
  EXPECT_THROW(universal_group(p, g), Error);
}

TEST(Grading, CayleyDickson) {
  DegreeMap g = cd_pair_grading(8, cyc());
  EXPECT_EQ(support(g).size(), 16u);
  EXPECT_EQ(grading_type(g), GradingType{16});
  EXPECT_EQ(g.group.to_string(), "Z x Z2^3");
  DegreeMap t = cd_triple_grading(2);
  EXPECT_EQ(t.group.to_string(), "Z2^2");
  EXPECT_EQ(support(t).size(), 2u);
  EXPECT_THROW(cd_pair_grading(2, FieldDescriptor::parse("gf2:3:-1")), Error);
  EXPECT_NO_THROW(cd_pair_grading(4, FieldDescriptor::parse("gf2:3:-1")));
}

TEST(Grading, Shifts) {
  DegreeMap g = cd_pair_grading(8, cyc());
  DegreeMap z = shift_pair(g, g.group.zero());
  EXPECT_EQ(z.plus, g.plus);
  EXPECT_EQ(z.minus, g.minus);
  DegreeMap s = shift_pair(g, {-1, 0, 0, 0});
  EXPECT_EQ(s.plus[0], (GroupElement{0, 0, 0, 0}));
  DegreeMap a = shift_pair(shift_pair(g, {2, 1, 0, 0}), {-1, 1, 1, 0});
  DegreeMap b = shift_pair(g, {1, 0, 1, 0});
  EXPECT_EQ(a.plus, b.plus);
  EXPECT_EQ(a.minus, b.minus);
  EXPECT_TRUE(is_grading(cd_pair(8), s).pass());

  DegreeMap t = cd_triple_grading(4);
  DegreeMap ts = shift_triple(t, {1, 0, 1});
  EXPECT_TRUE(is_grading(TripleSystem(HurwitzAlgebra::cayley_dickson(4, cyc()), TripleKind::Standard), ts).pass());
  DegreeMap z4{FGAbelianGroup(0, {4}), std::vector<GroupElement>(2, {1}), {}};
  EXPECT_THROW(shift_triple(z4, {1}), Error);
  EXPECT_NO_THROW(shift_triple(z4, {2}));
}

TEST(Universal, Groups) {
  EXPECT_EQ(universal_group(cartan_pair(8), cartan_pair_grading(8)).group.to_string(), "Z^4");
  EXPECT_EQ(universal_group(cartan_pair(4), cartan_pair_grading(4)).group.to_string(), "Z^3");
  EXPECT_EQ(universal_group(cartan_pair(2), cartan_pair_grading(2)).group.to_string(), "Z^2");
  EXPECT_EQ(universal_group(cartan_pair(1), cartan_pair_grading(1)).group.to_string(), "Z");
  EXPECT_EQ(universal_group(cd_pair(4), cd_pair_grading(4, cyc())).group.to_string(), "Z x Z2^2");
  EXPECT_EQ(universal_group(cd_pair(8), cd_pair_grading(8, cyc())).group.to_string(), "Z x Z2^3");
  auto x4 = HurwitzAlgebra::cayley_dickson(4, cyc());
  EXPECT_EQ(universal_group(TripleSystem(x4, TripleKind::Standard), cd_triple_grading(4)).group.to_string(), "Z2^3");
  auto c8 = HurwitzAlgebra::cartan(8, cyc());
  EXPECT_EQ(universal_group(TripleSystem(c8, TripleKind::Standard), cartan_triple_grading(8)).group.to_string(),
            "Z^3");
  auto c4 = HurwitzAlgebra::cartan(4, cyc());
  EXPECT_EQ(universal_group(TripleSystem(c4, TripleKind::Standard), cartan_triple_grading(4)).group.to_string(),
            "Z^2");
  auto x1 = HurwitzAlgebra::cayley_dickson(1, cyc());
  EXPECT_EQ(universal_group(TripleSystem(x1, TripleKind::Standard), cd_triple_grading(1)).group.to_string(), "Z2");
}

TEST(Universal, GivenByUniversalDegree) {
  // canonical degrees are distinct and determine the input degree
  UniversalGroup u = universal_group(cartan_pair(8), cartan_pair_grading(8));
  EXPECT_EQ(u.support.size(), 16u);
  std::set<GroupElement> seen(u.canonical.begin(), u.canonical.end());
  EXPECT_EQ(seen.size(), 16u);
}

TEST(Universal, RelabelingInvariance) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> e(-2, 2);
  KantorPair p = cartan_pair(8);
  DegreeMap g = cartan_pair_grading(8);
  FGAbelianGroup z5(5, {});
  for (int it = 0; it < 10; ++it) {
    // injective map Z^4 -> Z^5: identity block plus random last row
    GroupHom h{g.group, z5, {}};
    for (int i = 0; i < 4; ++i) {
      GroupElement img(5, 0);
      img[i] = 1;
      img[4] = e(rng);
      h.images.push_back(img);
    }
    DegreeMap r = coarsen(g, h);
    EXPECT_EQ(universal_group(p, r).group.to_string(), "Z^4");
  }
}

TEST(Types, MainAndExtendedGradings) {
  auto l4 = LieAlgebra::kantor(cd_pair(4));
  std::map<int, std::size_t> main;
  for (int z : *l4->z_degree()) ++main[z];
  LieGrading mg{FGAbelianGroup(1, {}), {}, {}};
  for (std::size_t i = 0; i < l4->dim(); ++i) {
    mg.degree.push_back({(*l4->z_degree())[i]});
    mg.basis.push_back(l4->basis(i));
  }
  EXPECT_EQ(grading_type(mg), (GradingType{0, 0, 2, 2, 0, 0, 1}));
  EXPECT_TRUE(is_grading(*l4, mg).pass());

  const GradingType cartan_types[] = {{3}, {6, 1}, {18, 0, 1}, {48, 0, 0, 1}};
  const GradingType cd_types[] = {{}, {8}, {15, 3}, {31, 0, 7}};
  const char* cartan_univ[] = {"Z", "Z^2", "Z^3", "Z^4"};
  const char* cd_univ[] = {"", "Z x Z2", "Z x Z2^2", "Z x Z2^3"};
  int k = 0;
  for (int d : {1, 2, 4, 8}) {
    SCOPED_TRACE(d);
    auto lc = LieAlgebra::kantor(cartan_pair(d));
    LieGrading ec = extend_to_lie(*lc, cartan_pair_grading(d));
    EXPECT_TRUE(is_grading(*lc, ec).pass());
    EXPECT_EQ(grading_type(ec), cartan_types[k]);
    EXPECT_EQ(universal_group(*lc, ec).group.to_string(), cartan_univ[k]);
    DegreeMap back = restrict_from_lie(*lc, ec);
    EXPECT_EQ(back.plus, cartan_pair_grading(d).plus);
    EXPECT_EQ(back.minus, cartan_pair_grading(d).minus);
    if (d > 1) {
      auto lx = LieAlgebra::kantor(cd_pair(d));
      LieGrading ex = extend_to_lie(*lx, cd_pair_grading(d, cyc()));
      EXPECT_TRUE(is_grading(*lx, ex).pass());
      EXPECT_EQ(grading_type(ex), cd_types[k]);
      EXPECT_EQ(universal_group(*lx, ex).group.to_string(), cd_univ[k]);
    }
    ++k;
  }
  DegreeMap triv{FGAbelianGroup(0, {}), std::vector<GroupElement>(8, GroupElement{}), {}};
  EXPECT_EQ(grading_type(triv), (GradingType{0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(Types, RoundTripIdentity) {
  auto l = LieAlgebra::kantor(cd_pair(8));
  LieGrading e = extend_to_lie(*l, cd_pair_grading(8, cyc()));
  DegreeMap r = restrict_from_lie(*l, e);
  LieGrading e2 = extend_to_lie(*l, r);
  EXPECT_EQ(e2.degree, e.degree);
  EXPECT_EQ(r.plus, cd_pair_grading(8, cyc()).plus);
}

TEST(Types, NotKantorCompatible) {
  auto l = LieAlgebra::kantor(cd_pair(2));
  LieGrading g{FGAbelianGroup(1, {}), {}, {}};
  std::size_t a = l->component(-1)[0], b = l->component(1)[0];
  for (std::size_t i = 0; i < l->dim(); ++i) {
    Vector v = l->basis(i);
    GroupElement d{0};
    if (i == a) v = add(l->basis(a), l->basis(b)), d = {5};
    if (i == b) v = sub(l->basis(a), l->basis(b)), d = {6};
    g.basis.push_back(v);
    g.degree.push_back(d);
  }
  EXPECT_THROW(restrict_from_lie(*l, g), Error);
}

TEST(Types, CoarseningCommutes) {
  auto l = LieAlgebra::kantor(cartan_pair(8));
  DegreeMap g = cartan_pair_grading(8);
  FGAbelianGroup z3(3, {});
  GroupHom h{g.group, z3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  LieGrading a = extend_to_lie(*l, coarsen(g, h));
  LieGrading b = coarsen(extend_to_lie(*l, g), h);
  EXPECT_EQ(a.degree, b.degree);
  EXPECT_TRUE(is_grading(*l, a).pass());
}

TEST(Structure, Checks) {
  for (int d : {2, 4, 8}) {
    Report r = structural_checks(cd_pair(d), cd_pair_grading(d, cyc()), cd_algebra_grading(d));
    EXPECT_TRUE(r.pass()) << r.to_json().dump();
    Report c = structural_checks(cartan_pair(d), cartan_pair_grading(d));
    EXPECT_TRUE(c.pass()) << c.to_json().dump();
    auto x = HurwitzAlgebra::cayley_dickson(d, cyc());
    Report t = structural_checks(TripleSystem(x, TripleKind::Standard), cd_triple_grading(d), cd_algebra_grading(d));
    EXPECT_TRUE(t.pass()) << t.to_json().dump();
  }
  EXPECT_EQ(structural_checks(cd_pair(4), cd_pair_grading(4, cyc()), cd_algebra_grading(4)).notes.back(),
            "Univ=Z x Z2^2");
  DegreeMap triv{FGAbelianGroup(1, {}), std::vector<GroupElement>(4, {0}), std::vector<GroupElement>(4, {0})};
  EXPECT_FALSE(structural_checks(cd_pair(4), triv).pass());
}

TEST(Structure, TraceHomogeneity) {
  for (int d : {1, 2, 4, 8}) {
    EXPECT_TRUE(trace_homogeneity(cartan_pair(d), cartan_pair_grading(d)).pass());
    EXPECT_TRUE(trace_homogeneity(cd_pair(d), cd_pair_grading(d, cyc())).pass());
    DegreeMap t = cartan_triple_grading(d);
    EXPECT_TRUE(trace_homogeneity(cartan_pair(d), DegreeMap{t.group, t.plus, t.plus}).pass());
    DegreeMap c = cd_triple_grading(d);
    EXPECT_TRUE(trace_homogeneity(cd_pair(d), DegreeMap{c.group, c.plus, c.plus}).pass());
  }
}

TEST(Roots, F4FromCartanGrading) {
  auto l = LieAlgebra::kantor(cartan_pair(8));
  LieGrading e = extend_to_lie(*l, cartan_pair_grading(8));
  RootDatum r = cartan_subalgebra_and_roots(*l, e.degree);
  EXPECT_EQ(r.cartan.size(), 4u);
  EXPECT_EQ(r.roots.size(), 48u);
  EXPECT_EQ(r.rank_of_roots, 4u);
  // the root formula agrees with the trace form on H
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(r.killing_h(i, j), killing_form(*l, l->basis(r.cartan[i]), l->basis(r.cartan[j])));
  // f4: two root lengths with squared ratio 2
  std::set<std::string> lengths;
  for (const auto& a : r.roots) lengths.insert(root_pairing(r, a, a).to_string());
  EXPECT_EQ(lengths.size(), 2u);

  LieGrading main{FGAbelianGroup(1, {}), {}, e.basis};
  for (int z : *l->z_degree()) main.degree.push_back({z});
  EXPECT_THROW(cartan_subalgebra_and_roots(*l, main.degree), Error);
}
