#include <gtest/gtest.h>

#include "kantorlab/peirce.hpp"

using namespace kantorlab;

namespace {

std::size_t dim_of(const PeirceDecomposition& d, const std::string& label, Sign s) {
  const PeirceComponent* c = d.find(label);
  if (!c) return 0;
  return (s == Sign::Plus ? c->plus : c->minus).dim();
}

}  // namespace

TEST(Idempotents, Basic) {
  auto f = FieldDescriptor::cyclo8();
  for (int d : {2, 4, 8}) {
    auto a = HurwitzAlgebra::cartan(d, f);
    KantorPair p = KantorPair::hurwitz(a);
    for (const auto& e : cartan_idempotents(d, f)) EXPECT_TRUE(is_idempotent(p, e)) << e.name;
    EXPECT_TRUE(is_idempotent(p, {a->unit(), a->unit(), "1"}));
    EXPECT_FALSE(is_idempotent(p, {a->basis("e1"), a->basis("e1"), "e1"}));
  }
}

TEST(Peirce, CayleyIdentityIdempotent) {
  auto f = FieldDescriptor::cyclo8();
  KantorPair p = KantorPair::hurwitz(HurwitzAlgebra::cartan(8, f));
  auto d = peirce_decompose(p, cartan_idempotent(8, f, 0, Character::One));
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    EXPECT_EQ(dim_of(d, "(1,1)", s), 1u);
    EXPECT_EQ(dim_of(d, "(-1/2,0)", s), 1u);
    EXPECT_EQ(dim_of(d, "(0,1)", s), 3u);
    EXPECT_EQ(dim_of(d, "(1/2,1/2)", s), 3u);
  }
  EXPECT_EQ(d.components.size(), 4u);
  auto j = peirce_json(d);
  EXPECT_EQ(j["components"].size(), 4u);
}

TEST(Peirce, UnitIdempotentSplitsHermitianAndSkew) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  KantorPair p = KantorPair::hurwitz(a);
  auto d = peirce_decompose(p, {a->unit(), a->unit(), "1"});
  // R(1) is 1 on F1 and 3 on the skew part
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(dim_of(d, "(1,1)", Sign::Plus), 1u);
  EXPECT_EQ(dim_of(d, "(1,3)", Sign::Plus), 7u);
  EXPECT_TRUE(d.find("(1,1)")->plus.contains(a->unit()));
  auto z = peirce_z_grading(p, {a->unit(), a->unit(), "1"});
  for (const auto& g : z.plus) EXPECT_EQ(g, GroupElement{2});
  for (const auto& g : z.minus) EXPECT_EQ(g, GroupElement{-2});
}

TEST(Peirce, DimensionTwo) {
  auto f = FieldDescriptor::cyclo8();
  KantorPair p = KantorPair::hurwitz(HurwitzAlgebra::cartan(2, f));
  auto d = peirce_decompose(p, cartan_idempotent(2, f, 0, Character::One));
  EXPECT_EQ(d.components.size(), 2u);
  EXPECT_EQ(dim_of(d, "(1,1)", Sign::Plus), 1u);
  EXPECT_EQ(dim_of(d, "(-1/2,0)", Sign::Minus), 1u);
}

TEST(Peirce, CartanTable) {
  for (const auto& f : {FieldDescriptor::cyclo8(), FieldDescriptor::gfp(17)})
    for (int d : {2, 4, 8}) {
      Report r = verify_cartan_peirce_table(d, f);
      EXPECT_TRUE(r.pass()) << r.to_json().dump();
      EXPECT_EQ(r.cases, std::size_t(d));
    }
}

TEST(Peirce, Totality) {
  auto f = FieldDescriptor::gfp(17);
  for (int dim : {2, 4, 8}) {
    KantorPair p = KantorPair::hurwitz(HurwitzAlgebra::cartan(dim, f));
    for (const auto& e : cartan_idempotents(dim, f)) {
      auto d = peirce_decompose(p, e);
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        std::size_t total = 0;
        for (const auto& c : d.components) total += (s == Sign::Plus ? c.plus : c.minus).dim();
        EXPECT_EQ(total, std::size_t(dim));
        EXPECT_EQ(commutator(peirce_left(p, s, e), peirce_right(p, s, e)).is_zero(), true);
      }
    }
  }
}

TEST(Peirce, CharacterTwist) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cartan(8, f);
  KantorPair p = KantorPair::hurwitz(a);
  auto fw = make_f_omega(TripleSystem(a, TripleKind::Standard)).matrix;
  for (unsigned g : {0u, 2u, 4u, 6u}) {
    auto d1 = peirce_decompose(p, cartan_idempotent(8, f, g, Character::One));
    auto d2 = peirce_decompose(p, cartan_idempotent(8, f, g, Character::Omega));
    for (const auto& c : d1.components) {
      const PeirceComponent* t = d2.find(c.label);
      ASSERT_NE(t, nullptr);
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const Subspace& src = s == Sign::Plus ? c.plus : c.minus;
        std::vector<Vector> image;
        for (const auto& v : src.basis()) image.push_back(fw.apply(v));
        EXPECT_TRUE(Subspace(8, f.zero(), image) == (s == Sign::Plus ? t->plus : t->minus)) << c.label;
      }
    }
  }
}

TEST(Peirce, NotDiagonalizable) {
  // nilpotent L(e) for a non-idempotent throws on the precondition instead
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cartan(2, f);
  KantorPair p = KantorPair::hurwitz(a);
  EXPECT_THROW(peirce_decompose(p, {a->basis("e1"), a->basis("e1"), "bad"}), Error);
  // (1, 1) in dimension 2 over GF(9) is excluded for tripotents
  auto k = HurwitzAlgebra::cartan(2, FieldDescriptor::parse("gf2:3:-1"));
  try {
    peirce_decompose(TripleSystem(k, TripleKind::Standard), k->unit());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExcludedCase);
  }
}

TEST(Peirce, TripotentDisplay) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cartan(8, f);
  TripleSystem t(a, TripleKind::Standard);
  auto one = peirce_decompose(t, a->unit());
  EXPECT_TRUE(tripotent_display_agreement(one).pass());
  ASSERT_NE(one.find("(1,3)"), nullptr);
  EXPECT_EQ(one.find("(1,3)")->plus.dim(), 7u);
  // n(u1 + v1) = 1 so u1 + v1 is a tripotent
  Vector x = add(a->basis("u1"), a->basis("v1"));
  ASSERT_TRUE(is_tripotent(t, x));
  auto d = peirce_decompose(t, x);
  EXPECT_TRUE(tripotent_display_agreement(d).pass()) << peirce_json(d).dump();
}

TEST(PeirceGrading, MatchesCartanSecondCoordinate) {
  auto f = FieldDescriptor::cyclo8();
  KantorPair p = KantorPair::hurwitz(HurwitzAlgebra::cartan(8, f));
  auto z = peirce_z_grading(p, cartan_idempotent(8, f, 6, Character::One));
  auto c = cartan_pair_grading(8);
  std::set<long long> support;
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(z.plus[i][0], c.plus[i][1]) << i;
    EXPECT_EQ(z.minus[i][0], c.minus[i][1]) << i;
    support.insert(z.plus[i][0]);
  }
  EXPECT_EQ(support, (std::set<long long>{2, -1, 0, 1}));
  for (const auto& e : cartan_idempotents(8, f)) EXPECT_NO_THROW(peirce_z_grading(p, e)) << e.name;
  // combined with the Kantor Z-grading it is still a grading
  DegreeMap both{FGAbelianGroup(2, {}), {}, {}};
  for (std::size_t i = 0; i < 8; ++i) {
    both.plus.push_back({1, z.plus[i][0]});
    both.minus.push_back({-1, z.minus[i][0]});
  }
  EXPECT_TRUE(is_grading(p, both).pass());
}

TEST(RootPeirce, ConstantsMatchRootPairing) {
  for (int dim : {2, 4, 8}) {
    auto res = root_peirce_constant_check(dim, FieldDescriptor::cyclo8());
    EXPECT_TRUE(res.report.pass()) << res.report.to_json().dump();
    EXPECT_TRUE(res.lengths.pass()) << res.lengths.to_json().dump();
    if (dim == 8) EXPECT_EQ(res.values, (std::vector<std::string>{"-1/2", "0", "1", "1/2"}));
  }
}
