#include <gtest/gtest.h>

#include <random>

#include "kantorlab/kantor.hpp"

using namespace kantorlab;

namespace {

const int kDims[] = {1, 2, 4, 8};

std::vector<FieldDescriptor> fields() {
  return {FieldDescriptor::cyclo8(), FieldDescriptor::parse("gf2:3:-1"), FieldDescriptor::gfp(17)};
}

std::vector<AlgebraPtr> algebras() {
  std::vector<AlgebraPtr> out;
  for (const auto& f : fields())
    for (int d : kDims) {
      out.push_back(HurwitzAlgebra::cayley_dickson(d, f));
      if (f.has_sqrt_minus_one()) out.push_back(HurwitzAlgebra::cartan(d, f));
    }
  return out;
}

void expect_pass(const std::vector<Report>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.pass()) << r.to_json().dump();
}

}  // namespace

TEST(Triple, UxFormulaRandom) {
  std::mt19937_64 rng(7);
  for (const auto& a : algebras()) {
    TripleSystem t(a, TripleKind::Standard);
    for (int it = 0; it < 200; ++it) {
      Vector x = a->random(rng), y = a->random(rng);
      Vector expect = sub(scale(a->polar(x, y) * a->field().from_int(2), x), scale(a->norm(x) * a->field().from_int(3), y));
      ASSERT_EQ(t.triple(x, y, x), expect) << a->describe();
      ASSERT_EQ(standard_triple(*a, x, y, x), expect);
    }
  }
}

TEST(Triple, UnitAndCartanExamples) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  EXPECT_EQ(standard_triple(*a, a->unit(), a->unit(), a->unit()), a->unit());
  auto c = HurwitzAlgebra::cartan(2, f);
  Vector e1 = c->basis("e1"), e2 = c->basis("e2");
  EXPECT_EQ(standard_triple(*c, e1, e2, e1), scale(f.from_int(2), e1));
  EXPECT_EQ(standard_triple(*c, e2, e1, e1), scale(f.from_int(-1), e1));
}

TEST(Triple, StandardVersusPrime) {
  std::mt19937_64 rng(11);
  for (const auto& a : algebras())
    for (int it = 0; it < 30; ++it) {
      Vector x = a->random(rng), y = a->random(rng), z = a->random(rng);
      Vector lhs = sub(standard_triple(*a, x, y, z), standard_triple(*a, z, y, x));
      Vector rhs = sub(scale(a->polar(x, z), y), scale(a->field().from_int(2), prime_triple(*a, z, x, y)));
      ASSERT_EQ(lhs, rhs) << a->describe();
    }
}

TEST(Triple, PairSignsAreChecked) {
  auto a = HurwitzAlgebra::cayley_dickson(4, FieldDescriptor::gfp(17));
  KantorPair p = KantorPair::hurwitz(a);
  PairElement x{Sign::Plus, a->unit()}, y{Sign::Minus, a->unit()};
  EXPECT_EQ(p.triple_pair(Sign::Plus, x, y, x).coords, a->unit());
  EXPECT_THROW(p.triple_pair(Sign::Plus, x, x, x), Error);
}

TEST(Operators, PsiIsLeftMultiplicationByK) {
  std::mt19937_64 rng(3);
  for (const auto& a : algebras()) {
    KantorPair p = KantorPair::hurwitz(a);
    for (int it = 0; it < 10; ++it) {
      Vector x = a->random(rng), y = a->random(rng);
      Matrix k = k_op(p, Sign::Plus, x, y).matrix;
      EXPECT_EQ(k, left_op(*a, psi(*a, x, y)).matrix) << a->describe();
      Matrix diff = u_op(p, Sign::Plus, x, y).matrix - u_op(p, Sign::Plus, y, x).matrix;
      EXPECT_EQ(k, diff);
      EXPECT_EQ(a->conj(psi(*a, x, y)), scale(a->field().from_int(-1), psi(*a, x, y)));
    }
    for (int g = 0; g < a->dim(); ++g) EXPECT_TRUE(k_op(p, Sign::Minus, a->basis(g), a->basis(g)).matrix.is_zero());
    EXPECT_EQ(v_op(p, Sign::Plus, a->unit(), a->unit()).matrix, Matrix::identity(a->dim(), a->field().zero()));
  }
}

TEST(Operators, PsiOfSkewWithUnit) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  Vector s = a->basis(1);
  EXPECT_EQ(psi(*a, s, a->unit()), scale(f.from_int(2), s));
  EXPECT_TRUE(is_zero(psi(*a, a->unit(), a->unit())));
  Vector x = add(a->basis(3), a->basis(6));
  EXPECT_TRUE(is_zero(psi(*a, x, x)));
}

TEST(Operators, DerivationOfPair) {
  std::mt19937_64 rng(5);
  for (const auto& a : algebras()) {
    if (a->dim() < 4) continue;
    KantorPair p = KantorPair::hurwitz(a);
    Vector xm = a->random(rng), xp = a->random(rng);
    auto [dm, dp] = d_derivation(p, xm, xp);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const Matrix& ds = s == Sign::Plus ? dp.matrix : dm.matrix;
      const Matrix& dt = s == Sign::Plus ? dm.matrix : dp.matrix;
      for (int it = 0; it < 5; ++it) {
        Vector x = a->random(rng), y = a->random(rng), z = a->random(rng);
        Vector lhs = ds.apply(p.triple(s, x, y, z));
        Vector rhs = add(add(p.triple(s, ds.apply(x), y, z), p.triple(s, x, dt.apply(y), z)),
                         p.triple(s, x, y, ds.apply(z)));
        ASSERT_EQ(lhs, rhs) << a->describe();
      }
    }
  }
}

TEST(Axioms, StructurableAllAlgebras) {
  for (const auto& a : algebras()) {
    Report r = verify_structurable(*a);
    EXPECT_TRUE(r.pass()) << a->describe();
    EXPECT_EQ(r.cases, std::size_t(a->dim()) * a->dim() * a->dim() * a->dim());
  }
}

TEST(Axioms, HurwitzPairsAndTriples) {
  for (const auto& a : algebras()) {
    SCOPED_TRACE(a->describe());
    expect_pass(verify_kantor_axioms(KantorPair::hurwitz(a)));
    expect_pass(verify_kantor_axioms(TripleSystem(a, TripleKind::Standard)));
    EXPECT_EQ(k_identically_zero(KantorPair::hurwitz(a)), a->dim() == 1);
  }
}

TEST(Axioms, BrokenTableFails) {
  auto a = HurwitzAlgebra::cayley_dickson(4, FieldDescriptor::gfp(17));
  TripleSystem t(a, TripleKind::Prime);
  KantorPair std_pair = KantorPair::hurwitz(a);
  KantorPair mixed = KantorPair::from_tables(std_pair.table(Sign::Plus), t.table(), a->field().zero());
  bool all = true;
  for (const auto& r : verify_kantor_axioms(mixed)) all = all && r.pass();
  EXPECT_FALSE(all);
}

TEST(ConjugateInverse, Cases) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  KantorPair p = KantorPair::hurwitz(a);
  SolutionSet s = conjugate_inverse(p, Sign::Plus, a->unit());
  ASSERT_TRUE(s.unique());
  EXPECT_EQ(*s.particular, a->unit());

  auto c = HurwitzAlgebra::cartan(8, f);
  EXPECT_TRUE(conjugate_inverse(KantorPair::hurwitz(c), Sign::Plus, c->basis("e1")).empty());

  auto g9 = FieldDescriptor::parse("gf2:3:-1");
  auto b = HurwitzAlgebra::cayley_dickson(2, g9);
  KantorPair q = KantorPair::hurwitz(b);
  SolutionSet fam = conjugate_inverse(q, Sign::Plus, b->unit());
  ASSERT_FALSE(fam.empty());
  ASSERT_EQ(fam.kernel.size(), 1u);
  EXPECT_EQ(b->conj(fam.kernel[0]), scale(g9.from_int(-1), fam.kernel[0]));
  EXPECT_EQ(v_op(q, Sign::Plus, b->unit(), add(b->unit(), b->basis(1))).matrix, Matrix::identity(2, g9.zero()));

  auto b17 = HurwitzAlgebra::cayley_dickson(2, FieldDescriptor::gfp(17));
  EXPECT_TRUE(conjugate_inverse(KantorPair::hurwitz(b17), Sign::Plus, b17->unit()).unique());
}

TEST(Ternary, LeftIdentity) {
  std::mt19937_64 rng(13);
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  for (int it = 0; it < 20; ++it)
    EXPECT_TRUE(ternary_left_identity_check(*a, a->basis(1), a->random(rng), a->random(rng), a->random(rng)));
  auto b = HurwitzAlgebra::cayley_dickson(4, f);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        EXPECT_TRUE(ternary_left_identity_check(*b, b->basis(2), b->basis(i), b->basis(j), b->basis(k)));
  EXPECT_THROW(ternary_left_identity_check(*a, a->unit(), a->unit(), a->unit(), a->unit()), Error);
}

TEST(Ternary, U1Eigenvalues) {
  for (const auto& f : fields()) {
    auto a = HurwitzAlgebra::cayley_dickson(8, f);
    KantorPair p = KantorPair::hurwitz(a);
    Matrix u = u_op(p, Sign::Plus, a->unit(), a->unit()).matrix;
    for (int g = 0; g < 8; ++g) {
      Scalar ev = g == 0 ? f.one() : f.from_int(-3);
      EXPECT_EQ(u.apply(a->basis(g)), scale(ev, a->basis(g))) << f.name() << " " << g;
    }
  }
}
