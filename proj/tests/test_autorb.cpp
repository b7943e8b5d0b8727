#include <gtest/gtest.h>

#include <random>

#include "kantorlab/autorb.hpp"

using namespace kantorlab;

namespace {

FieldDescriptor gf9() { return FieldDescriptor::parse("gf2:3:-1"); }

Matrix pattern(const Matrix& m) {
  Matrix p(m.rows(), m.cols(), FieldDescriptor::rationals().zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) p(r, c) = FieldDescriptor::rationals().one();
  return p;
}

}  // namespace

TEST(Constructors, LeftMultiplication) {
  auto f = FieldDescriptor::cyclo8();
  for (int d : {2, 4, 8}) {
    auto a = HurwitzAlgebra::cayley_dickson(d, f);
    TripleSystem t(a, TripleKind::Standard);
    for (int g = 1; g < d; ++g) EXPECT_NO_THROW(make_left_mult(t, a->basis(g))) << d << " " << g;
    EXPECT_THROW(make_left_mult(t, a->unit()), Error);
    EXPECT_THROW(make_left_mult(t, scale(f.from_int(2), a->basis(1))), Error);
  }
}

TEST(Constructors, CLambda) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cartan(8, f);
  TripleSystem t(a, TripleKind::Standard);
  KantorPair p = KantorPair::hurwitz(a);
  try {
    make_c_lambda(t, f.from_int(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAnAutomorphism);
  }
  EXPECT_NO_THROW(make_c_lambda(t, f.from_int(-1)));
  EXPECT_NO_THROW(make_c_lambda(t, f.one()));
  auto c3 = make_c_lambda(p, f.from_int(3));
  EXPECT_TRUE(isometry_and_trace_checks(a, std::vector<PairAutomorphism>{c3}).pass());
}

TEST(Constructors, DimensionTwoFamilies) {
  auto f = FieldDescriptor::gfp(17);
  auto a = HurwitzAlgebra::cartan(2, f);
  TripleSystem t(a, TripleKind::Standard);
  KantorPair p = KantorPair::hurwitz(a);
  for (long long l = 1; l < 17; ++l) {
    EXPECT_NO_THROW(make_f_lambda(t, f.from_int(l)));
    EXPECT_NO_THROW(make_T(p, f.from_int(l), f.from_int(3)));
  }
  EXPECT_NO_THROW(make_swap(t));
  // A_lambda needs characteristic 3
  EXPECT_THROW(make_A_lambda(p, f.one()), Error);
  auto big = HurwitzAlgebra::cartan(4, f);
  EXPECT_THROW(make_f_lambda(TripleSystem(big, TripleKind::Standard), f.from_int(2)), Error);
  EXPECT_THROW(make_A_lambda(KantorPair::hurwitz(big), f.one()), Error);
}

TEST(Constructors, CharThreeDualInverse) {
  auto f = gf9();
  auto a = HurwitzAlgebra::cartan(2, f);
  KantorPair p = KantorPair::hurwitz(a);
  std::vector<PairAutomorphism> autos;
  for (std::int64_t i = 0; i < f.order(); ++i) autos.push_back(make_A_lambda(p, f.element(i)));
  Scalar th = f.primitive_element();
  autos.push_back(make_T(p, th, th * th));
  for (const auto& g : default_pair_generators(p)) autos.push_back(g);
  auto r = isometry_and_trace_checks(a, autos);
  EXPECT_TRUE(r.pass()) << r.to_json().dump();
  EXPECT_EQ(r.cases, autos.size());
}

TEST(Isometry, TripleGeneratorsPreserveBothProducts) {
  auto f = FieldDescriptor::cyclo8();
  for (int d : {2, 4, 8}) {
    auto cd = HurwitzAlgebra::cayley_dickson(d, f);
    auto r = isometry_and_trace_checks(cd, weyl_generators(TripleSystem(cd, TripleKind::Standard), GradingKind::CayleyDickson));
    EXPECT_TRUE(r.pass()) << r.to_json().dump();
    auto ca = HurwitzAlgebra::cartan(d, f);
    r = isometry_and_trace_checks(ca, weyl_generators(TripleSystem(ca, TripleKind::Standard), GradingKind::Cartan));
    EXPECT_TRUE(r.pass()) << r.to_json().dump();
  }
  // automorphisms of {x,y,z}' are automorphisms of {x,y,z}
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  TripleSystem prime(a, TripleKind::Prime), standard(a, TripleKind::Standard);
  for (int g = 1; g < 8; ++g) {
    auto l = make_left_mult(prime, a->basis(g));
    EXPECT_TRUE(is_triple_automorphism(standard, l.matrix));
  }
}

TEST(Isometry, CompositionsStayAutomorphisms) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  TripleSystem t(a, TripleKind::Standard);
  KantorPair p = KantorPair::hurwitz(a);
  auto gens = weyl_generators(t, GradingKind::CayleyDickson);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int it = 0; it < 20; ++it) {
    const auto& x = gens[pick(rng)];
    const auto& y = gens[pick(rng)];
    EXPECT_NO_THROW(compose(t, x, y));
    auto px = compose(p, lift(p, x), make_c_lambda(p, f.from_int(it + 2)));
    EXPECT_NO_THROW(compose(p, px, lift(p, y)));
  }
}

TEST(Isometry, ConjugateInverseFunctorial) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  KantorPair p = KantorPair::hurwitz(a);
  TripleSystem t(a, TripleKind::Standard);
  std::vector<PairAutomorphism> autos{make_c_lambda(p, f.from_int(5))};
  for (int g : {1, 2, 5}) autos.push_back(lift(p, make_left_mult(t, a->basis(g))));
  autos.push_back(compose(p, autos[0], autos[2]));
  std::mt19937_64 rng(5);
  for (const auto& phi : autos)
    for (int it = 0; it < 4; ++it) {
      Vector x = a->random(rng);
      if (a->norm(x).is_zero()) continue;
      auto ci = conjugate_inverse(p, Sign::Plus, x);
      ASSERT_TRUE(ci.unique());
      auto image = conjugate_inverse(p, Sign::Plus, phi.phi_plus.apply(x));
      ASSERT_TRUE(image.unique());
      EXPECT_EQ(*image.particular, phi.phi_minus.apply(*ci.particular)) << phi.provenance;
    }
}

TEST(Rank, Classes) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cartan(8, f);
  EXPECT_EQ(rank(*a, a->unit(), SystemKind::Pair), 2);
  EXPECT_EQ(rank(*a, a->basis("e1"), SystemKind::Pair), 1);
  EXPECT_EQ(rank(*a, a->zero(), SystemKind::Triple), 0);
  Scalar l = f.from_int(3);
  EXPECT_EQ(orbit_invariant(*a, scale(l, a->unit()), SystemKind::Triple), "O2(" + (l * l).to_string() + ")");
  EXPECT_EQ(orbit_invariant(*a, a->basis("u2"), SystemKind::Triple), "O1");
  auto one = HurwitzAlgebra::cartan(1, f);
  EXPECT_EQ(rank(*one, one->unit(), SystemKind::Pair), 1);
  EXPECT_EQ(orbit_invariant(*one, scale(f.from_int(2), one->unit()), SystemKind::Triple), "O1(4)");
  auto k = HurwitzAlgebra::cartan(2, gf9());
  try {
    rank(*k, k->unit(), SystemKind::Pair);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExcludedCase);
  }
  EXPECT_EQ(rank(*k, k->unit(), SystemKind::Triple), 2);
}

TEST(Orbits, CharThreePairIsTransitive) {
  auto f = gf9();
  auto part = standard_orbits(f, SystemKind::Pair, 2);
  ASSERT_EQ(part.orbits.size(), 2u);
  EXPECT_EQ(part.orbits[0].size, 1u);
  EXPECT_EQ(part.orbits[1].size, 80u);
  EXPECT_TRUE(orbit_label_consistency(part).pass());

  KantorPair p = KantorPair::hurwitz(HurwitzAlgebra::cartan(2, f));
  std::vector<Matrix> plus;
  for (const auto& g : default_pair_generators(p)) plus.push_back(g.phi_plus);
  auto group = matrix_group_closure(plus);
  long long q = f.order();
  EXPECT_EQ(group.size(), std::size_t((q * q - 1) * (q * q - q)));
}

TEST(Orbits, TripleOverGF17) {
  auto f = FieldDescriptor::gfp(17);
  auto part = standard_orbits(f, SystemKind::Triple, 2);
  EXPECT_EQ(part.total(), 289u);
  auto a = HurwitzAlgebra::cartan(2, f);
  std::size_t isotropic = 0;
  for (std::int64_t i = 0; i < 17; ++i)
    for (std::int64_t j = 0; j < 17; ++j) {
      Vector x{f.element(i), f.element(j)};
      if (!is_zero(x) && a->norm(x).is_zero()) ++isotropic;
    }
  bool found = false;
  for (const auto& o : part.orbits)
    if (o.labels == std::vector<std::string>{"O1"}) {
      EXPECT_EQ(o.size, isotropic);
      found = true;
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(isotropic, 32u);
  EXPECT_TRUE(orbit_label_consistency(part).pass()) << orbit_label_consistency(part).to_json().dump();
  EXPECT_EQ(part.orbits.size(), 2u + 16u);
  EXPECT_EQ(part.orbits.front().size, 1u);
}

TEST(Orbits, PairOverGF17SplitsBySquareClass) {
  // c_lambda rescales n by squares only, and GF(17) is not algebraically closed
  auto part = standard_orbits(FieldDescriptor::gfp(17), SystemKind::Pair, 2);
  std::vector<std::size_t> sizes;
  for (const auto& o : part.orbits) sizes.push_back(o.size);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 32, 128, 128}));
  EXPECT_FALSE(orbit_label_consistency(part).pass());
}

TEST(Orbits, DimensionOne) {
  auto f = FieldDescriptor::gfp(17);
  auto pair = standard_orbits(f, SystemKind::Pair, 1);
  EXPECT_EQ(pair.orbits.size(), 2u);
  EXPECT_TRUE(orbit_label_consistency(pair).pass());
  auto triple = standard_orbits(f, SystemKind::Triple, 1);
  EXPECT_EQ(triple.orbits.size(), 1u + 8u);
  EXPECT_TRUE(orbit_label_consistency(triple).pass());
}

TEST(Orbits, Limits) {
  EXPECT_THROW(orbit_enumerate(FieldDescriptor::gfp(17), 5, {}), Error);
  auto zero = orbit_enumerate(FieldDescriptor::gfp(5), 2, {});
  EXPECT_EQ(zero.orbits.size(), 25u);
}

TEST(Monomial, Solver) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(8, f);
  TripleSystem t(a, TripleKind::Standard);
  std::vector<std::size_t> id(8), shift(8), bad(8);
  for (std::size_t g = 0; g < 8; ++g) {
    id[g] = g;
    shift[g] = g ^ 1u;
    bad[g] = g;
  }
  std::swap(bad[0], bad[1]);
  auto s = solve_monomial_automorphism(t, id);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(is_triple_automorphism(t, s->matrix));
  auto tr = solve_monomial_automorphism(t, shift);
  ASSERT_TRUE(tr.has_value());
  EXPECT_EQ(pattern(tr->matrix), pattern(make_left_mult(t, a->basis(1)).matrix));
  EXPECT_FALSE(solve_monomial_automorphism(t, bad).has_value());
}

TEST(Weyl, Orders) {
  struct Case {
    GradingKind k;
    int dim;
    std::size_t order;
  };
  const Case cases[] = {{GradingKind::CayleyDickson, 2, 2}, {GradingKind::CayleyDickson, 4, 24},
                        {GradingKind::CayleyDickson, 8, 1344}, {GradingKind::Cartan, 2, 2},
                        {GradingKind::Cartan, 4, 4}, {GradingKind::Cartan, 8, 48}};
  for (const auto& c : cases)
    for (SystemKind s : {SystemKind::Pair, SystemKind::Triple}) {
      auto w = compute_weyl(c.k, s, c.dim);
      EXPECT_EQ(w.order, c.order) << grading_kind_name(c.k) << " " << system_kind_name(s) << " " << c.dim;
      EXPECT_EQ(w.predicted_order, c.order);
      Report r = c.k == GradingKind::CayleyDickson ? weyl_block_form_check(w, c.dim) : weyl_product_form_check(w, c.dim);
      EXPECT_TRUE(r.pass()) << r.to_json().dump();
      EXPECT_EQ(r.cases, c.order);
    }
}

TEST(Weyl, NonHomogeneousGenerator) {
  auto f = FieldDescriptor::cyclo8();
  auto a = HurwitzAlgebra::cayley_dickson(4, f);
  TripleSystem t(a, TripleKind::Standard);
  // L_x with x = (x_1 + x_2) / sqrt 2 mixes components
  Vector x = scale(f.sqrt_two().inverse(), add(a->basis(1), a->basis(2)));
  auto l = make_left_mult(t, x);
  try {
    weyl_group(cd_triple_grading(4), std::vector<TripleAutomorphism>{l});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GeneratorNotHomogeneous);
  }
}

TEST(Weyl, Json) {
  auto w = compute_weyl(GradingKind::Cartan, SystemKind::Triple, 4);
  auto j = weyl_json(GradingKind::Cartan, SystemKind::Triple, 4, w);
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["support"].size(), 4u);
  EXPECT_EQ(j["generators"].size(), w.generators.size());
}
