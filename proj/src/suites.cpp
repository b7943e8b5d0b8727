#include "kantorlab/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "kantorlab/errors.hpp"
#include "kantorlab/peirce.hpp"

namespace kantorlab {

namespace {

const char kFixture[] =
#include "kantorlab_expected_summary.inc"
    ;

const std::vector<int> kDims{1, 2, 4, 8};

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidCombination, what); }

bool char_three(const FieldDescriptor& f) { return f.characteristic() == 3; }

AlgebraPtr algebra(bool cartan, int d, const FieldDescriptor& f) {
  return cartan ? HurwitzAlgebra::cartan(d, f) : HurwitzAlgebra::cayley_dickson(d, f);
}

Report verdict(std::string identity, bool ok, const std::string& witness) {
  Report r;
  r.identity = std::move(identity);
  r.cases = 1;
  if (!ok) r.fail(witness);
  return r;
}

std::vector<int> dims_for(const SuiteConfig& c, const std::vector<int>& allowed, const std::vector<int>& defaults) {
  if (c.dim == 0) return defaults;
  if (std::find(allowed.begin(), allowed.end(), c.dim) == allowed.end())
    invalid("suite " + c.suite + " does not cover dim " + std::to_string(c.dim));
  return {c.dim};
}

FieldDescriptor parse_field(const std::string& spec) {
  try {
    return FieldDescriptor::parse(spec);
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    throw Error(Errc::ParseError, e.what());
  }
}

std::vector<FieldDescriptor> fields_for(const SuiteConfig& c, const std::vector<std::string>& defaults) {
  std::vector<FieldDescriptor> out;
  if (c.field) {
    out.push_back(parse_field(*c.field));
    return out;
  }
  for (const auto& s : defaults) out.push_back(FieldDescriptor::parse(s));
  return out;
}

std::string system_for(const SuiteConfig& c, const std::string& fallback) {
  std::string s = c.system.empty() ? fallback : c.system;
  if (s != "pair" && s != "triple") invalid("unknown system '" + s + "'");
  return s;
}

Vector sparse_random(std::size_t n, const Scalar& proto, std::mt19937_64& rng) {
  Vector v = zero_vector(n, proto);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coeff(1, 3);
  for (int t = 0; t < 4; ++t) {
    int c = coeff(rng);
    v[idx(rng)] += proto.from_int_like(rng() & 1 ? c : -c);
  }
  return v;
}

std::vector<AlgebraPtr> battery_algebras(const FieldDescriptor& f) {
  std::vector<AlgebraPtr> out;
  for (int d : kDims) {
    out.push_back(HurwitzAlgebra::cayley_dickson(d, f));
    if (f.has_sqrt_minus_one()) out.push_back(HurwitzAlgebra::cartan(d, f));
  }
  return out;
}

Vector traceless(const HurwitzAlgebra& a, const Vector& x) {
  const FieldDescriptor& f = a.field();
  return sub(x, scale(a.trace(x) * f.from_int(2).inverse(), a.unit()));
}

Report ux_identity(const std::vector<AlgebraPtr>& algs, std::size_t samples, std::mt19937_64& rng) {
  Report r;
  r.identity = "U_x y = 2n(x,y)x - 3n(x)y";
  auto check = [&](const HurwitzAlgebra& a, const TripleSystem& t, const Vector& x, const Vector& y) {
    ++r.cases;
    const FieldDescriptor& f = a.field();
    Vector expect = sub(scale(a.polar(x, y) * f.from_int(2), x), scale(a.norm(x) * f.from_int(3), y));
    if (t.triple(x, y, x) != expect) r.fail(a.describe() + ": x=" + to_string(x) + " y=" + to_string(y));
  };
  for (const auto& a : algs) {
    TripleSystem t(a, TripleKind::Standard);
    for (int i = 0; i < a->dim(); ++i)
      for (int j = 0; j < a->dim(); ++j) check(*a, t, a->basis(i), a->basis(j));
    for (std::size_t s = 0; s < samples; ++s) {
      Vector x = a->random(rng), y = a->random(rng);
      check(*a, t, x, y);
    }
  }
  return r;
}

Report ternary_identity(const std::vector<AlgebraPtr>& algs, std::size_t samples, std::mt19937_64& rng) {
  Report r;
  r.identity = "(x y1)(bar(x y2))(x y3) = n(x) x((y1 bar y2) y3) for t(x) = 0";
  auto check = [&](const HurwitzAlgebra& a, const Vector& x, const Vector& y1, const Vector& y2, const Vector& y3) {
    ++r.cases;
    if (!ternary_left_identity_check(a, x, y1, y2, y3))
      r.fail(a.describe() + ": x=" + to_string(x) + " y=" + to_string(y1) + "," + to_string(y2) + "," + to_string(y3));
  };
  for (const auto& a : algs) {
    std::vector<Vector> xs;
    for (int i = 0; i < a->dim(); ++i)
      if (a->trace(a->basis(i)).is_zero()) xs.push_back(a->basis(i));
    if (a->basis_kind() == BasisKind::Cartan && a->dim() >= 2) xs.push_back(sub(a->basis("e1"), a->basis("e2")));
    for (const auto& x : xs)
      for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < a->dim(); ++j)
          for (int k = 0; k < a->dim(); ++k) check(*a, x, a->basis(i), a->basis(j), a->basis(k));
    if (a->dim() == 1 && xs.empty()) r.notes.push_back(a->describe() + ": only x = 0 is traceless");
    for (std::size_t s = 0; s < samples; ++s) {
      Vector x = traceless(*a, a->random(rng));
      Vector y1 = a->random(rng), y2 = a->random(rng), y3 = a->random(rng);
      check(*a, x, y1, y2, y3);
    }
  }
  return r;
}

Report psi_identity(const std::vector<AlgebraPtr>& algs, std::size_t samples, std::mt19937_64& rng) {
  Report r;
  r.identity = "L_psi(x,y) = K(x,y)";
  auto check = [&](const HurwitzAlgebra& a, const KantorPair& p, const Vector& x, const Vector& y) {
    ++r.cases;
    for (Sign s : {Sign::Plus, Sign::Minus})
      if (k_op(p, s, x, y).matrix != left_op(a, psi(a, x, y)).matrix) {
        r.fail(a.describe() + " " + sign_name(s) + ": x=" + to_string(x) + " y=" + to_string(y));
        return;
      }
  };
  for (const auto& a : algs) {
    KantorPair p = KantorPair::hurwitz(a);
    for (int i = 0; i < a->dim(); ++i)
      for (int j = 0; j < a->dim(); ++j) check(*a, p, a->basis(i), a->basis(j));
    for (std::size_t s = 0; s < samples; ++s) {
      Vector x = a->random(rng), y = a->random(rng);
      check(*a, p, x, y);
    }
  }
  return r;
}

// x_{g+h} v_k^alpha as a multiple of v_{g+k}^{alpha'}, g, k in <a2, a3>, h in <a1>
std::pair<Scalar, Vector> product_rule(int d, const FieldDescriptor& f, unsigned g, unsigned h, unsigned k,
                                       Character al) {
  int c = char_value(al, h) * (parity(k) ? char_value(Character::Omega, h) : 1) * cd_sigma(k, h) *
          cd_sigma(g | h, k | h);
  Scalar s = f.from_int(c) * (h ? f.sqrt_minus_one() : f.one());
  Character out = parity(g) ? twist(al) : al;
  return {s, v_basis(d, g ^ k, out, f)};
}

Report product_rule_identity(const FieldDescriptor& f, std::size_t samples, std::mt19937_64& rng) {
  Report r;
  r.identity = "x_{g+h} v_k^alpha product rule";
  if (!f.has_sqrt_minus_one() || !f.has_sqrt_two()) {
    r.notes.push_back("skipped: " + f.name() + " lacks sqrt(-1) or sqrt(2)");
    return r;
  }
  const Character chars[] = {Character::One, Character::Omega};
  for (int d : {2, 4, 8}) {
    auto cd = HurwitzAlgebra::cayley_dickson(d, f);
    for (unsigned g = 0; g < unsigned(d); g += 2)
      for (unsigned h = 0; h < 2; ++h)
        for (unsigned k = 0; k < unsigned(d); k += 2)
          for (Character al : chars) {
            ++r.cases;
            auto [s, v] = product_rule(d, f, g, h, k, al);
            if (cd->mul(cd->basis(g | h), v_basis(d, k, al, f)) != scale(s, v))
              r.fail("dim " + std::to_string(d) + " g=" + std::to_string(g) + " h=" + std::to_string(h) +
                     " k=" + std::to_string(k));
          }
    // bilinear expansion of random products through the rule
    for (std::size_t n = 0; n < samples; ++n) {
      ++r.cases;
      Vector x = cd->random(rng);
      Vector y = cd->zero(), expect = cd->zero();
      std::map<std::pair<unsigned, int>, Scalar> yc;
      for (unsigned k = 0; k < unsigned(d); k += 2)
        for (Character al : chars) {
          Scalar c = f.random(rng);
          yc.emplace(std::make_pair(k, int(al)), c);
          axpy(y, c, v_basis(d, k, al, f));
        }
      for (unsigned g = 0; g < unsigned(d); g += 2)
        for (unsigned h = 0; h < 2; ++h)
          for (unsigned k = 0; k < unsigned(d); k += 2)
            for (Character al : chars) {
              auto [s, v] = product_rule(d, f, g, h, k, al);
              axpy(expect, x[g | h] * yc.at({k, int(al)}) * s, v);
            }
      if (cd->mul(x, y) != expect) r.fail("dim " + std::to_string(d) + " random x=" + to_string(x));
    }
  }
  return r;
}

Vector homogeneous_random(const HurwitzAlgebra& a, const std::vector<GroupElement>& deg, const GroupElement& g,
                          std::mt19937_64& rng) {
  Vector v = a.zero();
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == g) v[i] = a.field().random(rng);
  return v;
}

Report trace_identity(const FieldDescriptor& f, std::size_t samples, std::mt19937_64& rng) {
  Report r;
  r.identity = "trace homogeneity";
  struct Case {
    KantorPair p;
    DegreeMap g;
    std::string name;
  };
  std::vector<Case> cases;
  for (int d : kDims) {
    auto cd = HurwitzAlgebra::cayley_dickson(d, f);
    KantorPair pcd = KantorPair::hurwitz(cd);
    if (char_three(f) && d == 2) {
      r.notes.push_back("cd pair grading dim 2 skipped in characteristic 3");
    } else {
      cases.push_back({pcd, cd_pair_grading(d, f), "cd pair " + std::to_string(d)});
    }
    DegreeMap t = cd_triple_grading(d);
    cases.push_back({pcd, DegreeMap{t.group, t.plus, t.plus}, "cd triple " + std::to_string(d)});
    auto ca = HurwitzAlgebra::cartan(d, f);
    KantorPair pca = KantorPair::hurwitz(ca);
    cases.push_back({pca, cartan_pair_grading(d), "cartan pair " + std::to_string(d)});
    DegreeMap ct = cartan_triple_grading(d);
    cases.push_back({pca, DegreeMap{ct.group, ct.plus, ct.plus}, "cartan triple " + std::to_string(d)});
  }
  for (const auto& c : cases) {
    Report exhaustive = trace_homogeneity(c.p, c.g);
    for (auto& w : exhaustive.failures) w = c.name + ": " + w;
    r.merge(exhaustive);
    const HurwitzAlgebra& a = *c.p.carrier();
    auto sp = support(DegreeMap{c.g.group, c.g.plus, {}});
    auto sm = support(DegreeMap{c.g.group, c.g.minus, {}});
    std::uniform_int_distribution<std::size_t> up(0, sp.size() - 1), um(0, sm.size() - 1);
    for (std::size_t n = 0; n < samples; ++n) {
      ++r.cases;
      const GroupElement& g = sp[up(rng)].degree;
      const GroupElement& h = sm[um(rng)].degree;
      Vector x = homogeneous_random(a, c.g.plus, g, rng), y = homogeneous_random(a, c.g.minus, h, rng);
      if (!a.polar(x, y).is_zero() && !c.g.group.is_zero(c.g.group.add(g, h)))
        r.fail(c.name + ": degrees " + to_string(g) + ", " + to_string(h));
    }
  }
  return r;
}

bool same_degrees(const DegreeMap& a, const DegreeMap& b) { return a.plus == b.plus && a.minus == b.minus; }

nlohmann::json type_json(const std::optional<GradingType>& t) {
  if (!t) return nullptr;
  return *t;
}

// grading suites ------------------------------------------------------------

void grading_suite(SuiteResult& out, bool cartan, bool pair, int d, const FieldDescriptor& f) {
  auto a = algebra(cartan, d, f);
  std::string kind = std::string(cartan ? "cartan" : "cd") + (pair ? "-pair" : "-triple");
  std::string tag = kind + " dim " + std::to_string(d) + " " + f.spec();
  auto tagged = [&](Report r) {
    r.identity = tag + ": " + r.identity;
    out.reports.push_back(std::move(r));
  };
  std::optional<DegreeMap> alg_grading;
  if (!cartan) alg_grading = cd_algebra_grading(d);
  nlohmann::json j;
  if (pair) {
    KantorPair p = KantorPair::hurwitz(a);
    DegreeMap g = cartan ? cartan_pair_grading(d) : cd_pair_grading(d, f);
    tagged(is_grading(p, g));
    tagged(structural_checks(p, g, alg_grading));
    tagged(trace_homogeneity(p, g));
    auto u = universal_group(p, g);
    j = grading_json("pair", d, f.spec(), kind, u, grading_type(g), support(g));
    auto l = LieAlgebra::kantor(p);
    LieGrading e = extend_to_lie(*l, g);
    tagged(is_grading(*l, e));
    auto ul = universal_group(*l, e);
    DegreeMap back = restrict_from_lie(*l, e);
    tagged(verdict("restriction of the extension", same_degrees(back, g), "degrees differ"));
    j["lie"] = {{"dim", l->dim()}, {"universal_group", ul.group.to_string()}, {"type", grading_type(e)}};
  } else {
    TripleSystem t(a, TripleKind::Standard);
    DegreeMap g = cartan ? cartan_triple_grading(d) : cd_triple_grading(d);
    tagged(is_grading(t, g));
    tagged(structural_checks(t, g, alg_grading));
    auto u = universal_group(t, g);
    j = grading_json("triple", d, f.spec(), kind, u, grading_type(g), support(g));
  }
  out.data["gradings"].push_back(j);
}

void run_grading(SuiteResult& out, const SuiteConfig& c, bool cartan, bool pair) {
  if (!c.system.empty() && c.system != (pair ? "pair" : "triple"))
    invalid("suite " + c.suite + " fixes the system to " + (pair ? "pair" : "triple"));
  auto dims = dims_for(c, kDims, cartan || !pair ? kDims : std::vector<int>{2, 4, 8});
  for (const auto& f : fields_for(c, {"qzeta8"})) {
    out.fields.push_back(f.spec());
    for (int d : dims) {
      if (!cartan && pair && d == 2 && char_three(f))
        invalid("the Cayley-Dickson pair grading in dim 2 is excluded in characteristic 3");
      grading_suite(out, cartan, pair, d, f);
    }
  }
}

// other suites ----------------------------------------------------------------

void run_axioms(SuiteResult& out, const SuiteConfig& c) {
  auto dims = dims_for(c, kDims, kDims);
  for (const auto& f : fields_for(c, {"qzeta8", "gf2:3:-1", "gf:17"})) {
    out.fields.push_back(f.spec());
    for (int d : dims)
      for (bool cartan : {false, true}) {
        if (cartan && !f.has_sqrt_minus_one()) continue;
        auto a = algebra(cartan, d, f);
        std::string tag = a->describe() + ": ";
        Report s = verify_structurable(*a, c.jobs);
        s.identity = tag + s.identity;
        out.reports.push_back(s);
        std::string sys = c.system;
        if (sys.empty() || sys == "pair")
          for (auto r : verify_kantor_axioms(KantorPair::hurwitz(a), c.jobs)) {
            r.identity = tag + "pair " + r.identity;
            out.reports.push_back(r);
          }
        if (sys.empty() || sys == "triple")
          for (auto r : verify_kantor_axioms(TripleSystem(a, TripleKind::Standard), c.jobs)) {
            r.identity = tag + "triple " + r.identity;
            out.reports.push_back(r);
          }
        if (sys != "" && sys != "pair" && sys != "triple") invalid("unknown system '" + sys + "'");
      }
  }
}

void run_lie(SuiteResult& out, const SuiteConfig& c) {
  auto dims = dims_for(c, kDims, kDims);
  for (const auto& f : fields_for(c, {"qzeta8"})) {
    out.fields.push_back(f.spec());
    for (int d : dims) {
      out.reports.push_back(lie_dimension_check(f, d));
      auto l = LieAlgebra::kantor(KantorPair::hurwitz(HurwitzAlgebra::cayley_dickson(d, f)));
      std::string tag = "dim " + std::to_string(d) + " " + f.spec() + ": ";
      bool exhaustive = l->dim() <= 21 || c.slow;
      Report j = exhaustive ? verify_jacobi(*l, c.jobs) : jacobi_random(*l, 10000, c.seed);
      j.identity = tag + j.identity;
      out.reports.push_back(j);
      Report z = verify_z_grading(*l);
      z.identity = tag + z.identity;
      out.reports.push_back(z);
      out.reports.push_back(verdict(tag + "simple", is_simple(*l, c.jobs), "proper ideal found"));
      out.data["algebras"].push_back({{"dim_c", d},
                                      {"field", f.spec()},
                                      {"dim", l->dim()},
                                      {"jacobi", exhaustive ? "exhaustive" : "random"},
                                      {"main_type", main_grading_type(f, d)}});
    }
  }
}

void run_identities(SuiteResult& out, const SuiteConfig& c) {
  if (c.dim != 0) invalid("suite identities runs every dimension");
  for (const auto& f : fields_for(c, {"qzeta8", "gf2:3:-1", "gf:17"})) {
    out.fields.push_back(f.spec());
    for (auto r : identity_battery(f, 1000, c.seed)) {
      r.identity = f.spec() + ": " + r.identity;
      out.reports.push_back(r);
    }
  }
}

void run_roundtrips(SuiteResult& out, const SuiteConfig& c) {
  if (c.dim != 0) invalid("suite roundtrips runs every dimension");
  for (const auto& f : fields_for(c, {"qzeta8", "gf:17"})) {
    out.fields.push_back(f.spec());
    for (auto r : round_trips(f)) {
      r.identity = f.spec() + ": " + r.identity;
      out.reports.push_back(r);
    }
  }
}

void run_weyl(SuiteResult& out, const SuiteConfig& c) {
  if (c.field && !(parse_field(*c.field) == FieldDescriptor::cyclo8()))
    invalid("Weyl groups are computed over qzeta8");
  auto dims = dims_for(c, {2, 4, 8}, {2, 4, 8});
  std::vector<GradingKind> kinds;
  if (c.grading.empty() || c.grading == "cd") kinds.push_back(GradingKind::CayleyDickson);
  if (c.grading.empty() || c.grading == "cartan") kinds.push_back(GradingKind::Cartan);
  if (kinds.empty()) invalid("unknown grading '" + c.grading + "'");
  std::vector<SystemKind> systems;
  if (c.system.empty() || c.system == "pair") systems.push_back(SystemKind::Pair);
  if (c.system.empty() || c.system == "triple") systems.push_back(SystemKind::Triple);
  if (systems.empty()) invalid("unknown system '" + c.system + "'");
  out.fields.push_back(FieldDescriptor::cyclo8().spec());
  for (GradingKind k : kinds)
    for (SystemKind s : systems)
      for (int d : dims) {
        auto w = compute_weyl(k, s, d);
        std::string tag =
            std::string(grading_kind_name(k)) + " " + system_kind_name(s) + " dim " + std::to_string(d) + ": ";
        out.reports.push_back(verdict(tag + "order equals prediction", w.order == w.predicted_order,
                                      std::to_string(w.order) + " != " + std::to_string(w.predicted_order)));
        Report shape = k == GradingKind::CayleyDickson ? weyl_block_form_check(w, d) : weyl_product_form_check(w, d);
        shape.identity = tag + shape.identity;
        out.reports.push_back(shape);
        out.data["weyl"].push_back(weyl_json(k, s, d, w));
      }
}

void run_peirce(SuiteResult& out, const SuiteConfig& c) {
  std::string sys = system_for(c, "pair");
  auto dims = dims_for(c, {2, 4, 8}, {2, 4, 8});
  for (const auto& f : fields_for(c, {"qzeta8", "gf:17"})) {
    std::int64_t p = f.characteristic();
    if (sys == "pair" && p == 3) invalid("the constants -1/2 and 1 coincide in characteristic 3");
    if (sys == "triple" && (p == 2 || p == 3 || p == 5))
      invalid("tripotent decompositions need characteristic other than 2, 3, 5");
    out.fields.push_back(f.spec());
    for (int d : dims) {
      auto a = HurwitzAlgebra::cartan(d, f);
      if (sys == "pair") {
        Report r = verify_cartan_peirce_table(d, f);
        r.identity = "dim " + std::to_string(d) + " " + f.spec() + ": " + r.identity;
        out.reports.push_back(r);
        KantorPair pr = KantorPair::hurwitz(a);
        for (const auto& e : cartan_idempotents(d, f)) out.data["decompositions"].push_back(peirce_json(peirce_decompose(pr, e)));
      } else {
        TripleSystem t(a, TripleKind::Standard);
        std::vector<Vector> tripotents{a->unit()};
        if (d >= 4) tripotents.push_back(add(a->basis("u1"), a->basis("v1")));
        for (const auto& x : tripotents) {
          if (!is_tripotent(t, x)) {
            out.reports.push_back(verdict("tripotent", false, to_string(x)));
            continue;
          }
          auto dec = peirce_decompose(t, x);
          Report r = tripotent_display_agreement(dec);
          r.identity = "dim " + std::to_string(d) + " " + f.spec() + ": " + r.identity;
          out.reports.push_back(r);
          out.data["decompositions"].push_back(peirce_json(dec));
        }
      }
    }
  }
}

void run_root_peirce(SuiteResult& out, const SuiteConfig& c) {
  auto dims = dims_for(c, {2, 4, 8}, {2, 4, 8});
  for (const auto& f : fields_for(c, {"qzeta8"})) {
    if (f.characteristic() != 0 || !f.has_sqrt_minus_one() || !f.has_sqrt_two())
      invalid("roots need characteristic 0 with sqrt(-1) and sqrt(2)");
    out.fields.push_back(f.spec());
    for (int d : dims) {
      auto res = root_peirce_constant_check(d, f);
      std::string tag = "dim " + std::to_string(d) + ": ";
      res.report.identity = tag + res.report.identity;
      res.lengths.identity = tag + res.lengths.identity;
      out.reports.push_back(res.report);
      out.reports.push_back(res.lengths);
      out.data["values"][std::to_string(d)] = res.values;
    }
  }
}

void run_orbits(SuiteResult& out, const SuiteConfig& c) {
  std::string sys = system_for(c, "pair");
  auto dims = dims_for(c, {1, 2}, {2});
  for (const auto& f : fields_for(c, {sys == "pair" ? "gf2:3" : "gf:17"})) {
    if (!f.is_finite()) invalid("orbits are enumerated over finite fields only");
    out.fields.push_back(f.spec());
    for (int d : dims) {
      SystemKind k = sys == "pair" ? SystemKind::Pair : SystemKind::Triple;
      std::string tag = sys + " dim " + std::to_string(d) + " " + f.spec() + ": ";
      if (k == SystemKind::Pair && d == 2 && char_three(f)) {
        auto res = char_three_check(f);
        res.transitivity.identity = tag + res.transitivity.identity;
        res.dual_inverse.identity = tag + res.dual_inverse.identity;
        out.reports.push_back(res.transitivity);
        out.reports.push_back(res.dual_inverse);
        auto j = orbits_json(k, res.orbits);
        j["group_order"] = res.group_order;
        out.data["orbits"].push_back(j);
        continue;
      }
      auto part = standard_orbits(f, k, d);
      std::size_t q = static_cast<std::size_t>(f.order());
      std::size_t expect = d == 1 ? q : q * q;
      out.reports.push_back(verdict(tag + "orbits partition F^dim", part.total() == expect,
                                    std::to_string(part.total()) + " != " + std::to_string(expect)));
      Report labels = orbit_label_consistency(part);
      auto j = orbits_json(k, part);
      j["labels_separate_orbits"] = labels.pass();
      out.data["orbits"].push_back(j);
    }
  }
}

void run_summary(SuiteResult& out, const SuiteConfig& c) {
  if (c.dim != 0) invalid("suite summary runs every dimension");
  for (const auto& f : fields_for(c, {"qzeta8"})) {
    out.fields.push_back(f.spec());
    auto rows = compute_summary(f);
    Report r = compare_summary(rows, expected_summary());
    r.identity = f.spec() + ": " + r.identity;
    out.reports.push_back(r);
    out.data["rows"] = summary_json(rows);
  }
}

}  // namespace

const char* tool_version() { return "0.1.0"; }

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",      "lie",         "identities",   "roundtrips",
                                              "cd-pair",     "cartan-pair", "cd-triple",    "cartan-triple",
                                              "weyl",        "peirce",      "root-peirce",  "orbits",
                                              "summary"};
  return names;
}

SuiteResult run_suite(const SuiteConfig& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end())
    throw Error(Errc::UnknownSuite, "'" + c.suite + "'");
  if (c.jobs > 0) set_default_jobs(c.jobs);
  SuiteResult out;
  out.suite = c.suite;
  if (c.suite == "axioms") run_axioms(out, c);
  else if (c.suite == "lie") run_lie(out, c);
  else if (c.suite == "identities") run_identities(out, c);
  else if (c.suite == "roundtrips") run_roundtrips(out, c);
  else if (c.suite == "cd-pair") run_grading(out, c, false, true);
  else if (c.suite == "cartan-pair") run_grading(out, c, true, true);
  else if (c.suite == "cd-triple") run_grading(out, c, false, false);
  else if (c.suite == "cartan-triple") run_grading(out, c, true, false);
  else if (c.suite == "weyl") run_weyl(out, c);
  else if (c.suite == "peirce") run_peirce(out, c);
  else if (c.suite == "root-peirce") run_root_peirce(out, c);
  else if (c.suite == "orbits") run_orbits(out, c);
  else run_summary(out, c);
  return out;
}

nlohmann::json suite_json(const SuiteResult& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = tool_version();
  j["suite"] = r.suite;
  j["status"] = r.reports.empty() ? "skipped" : (r.pass() ? "pass" : "fail");
  j["fields"] = r.fields;
  std::size_t cases = 0, failures = 0;
  j["reports"] = nlohmann::json::array();
  for (const auto& x : r.reports) {
    cases += x.cases;
    failures += x.failure_count;
    j["reports"].push_back(x.to_json());
  }
  j["cases_checked"] = cases;
  j["failure_count"] = failures;
  j["data"] = r.data;
  return j;
}

std::string suite_markdown(const SuiteResult& r) {
  std::ostringstream os;
  os << "# " << r.suite << "\n\n";
  os << "status: " << (r.reports.empty() ? "skipped" : (r.pass() ? "pass" : "fail")) << "\n\n";
  os << "| check | cases | failures |\n|---|---|---|\n";
  for (const auto& x : r.reports) os << "| " << x.identity << " | " << x.cases << " | " << x.failure_count << " |\n";
  for (const auto& x : r.reports)
    for (const auto& w : x.failures) os << "\n- " << x.identity << ": " << w;
  if (r.suite == "summary" && r.data.contains("rows")) {
    std::vector<SummaryRow> rows;
    for (const auto& row : r.data["rows"]) {
      SummaryRow s;
      s.dim = row["dim"];
      s.lie_dim = row["lie_dim"];
      s.univ_z = row["univ_z"];
      s.type_z = row["type_z"].get<GradingType>();
      if (!row["univ_cd"].is_null()) s.univ_cd = row["univ_cd"].get<std::string>();
      if (!row["type_cd"].is_null()) s.type_cd = row["type_cd"].get<GradingType>();
      rows.push_back(s);
    }
    os << "\n" << summary_markdown(rows);
  }
  os << "\n";
  return os.str();
}

Report jacobi_random(const LieAlgebra& l, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<Vector, 3>> xs(samples);
  for (auto& t : xs)
    for (auto& v : t) v = sparse_random(l.dim(), l.proto(), rng);
  return run_cases("jacobi (random)", samples, [&](std::size_t i) -> std::optional<std::string> {
    const auto& [x, y, z] = xs[i];
    Vector s = add(add(l.bracket(l.bracket(x, y), z), l.bracket(l.bracket(y, z), x)), l.bracket(l.bracket(z, x), y));
    if (is_zero(s)) return std::nullopt;
    return "sample " + std::to_string(i);
  });
}

Report lie_dimension_check(const FieldDescriptor& f, int dim) {
  static const std::map<int, std::size_t> expect{{1, 3}, {2, 8}, {4, 21}, {8, 52}};
  auto l = LieAlgebra::kantor(KantorPair::hurwitz(HurwitzAlgebra::cayley_dickson(dim, f)));
  std::size_t want = expect.at(dim);
  // V_{s,1} = 3L_s vanishes in characteristic 3, leaving psl_3
  if (dim == 2 && char_three(f)) want = 7;
  return verdict("dim K(C) for dim C = " + std::to_string(dim) + " over " + f.spec(), l->dim() == want,
                 std::to_string(l->dim()) + " != " + std::to_string(want));
}

std::vector<Report> identity_battery(const FieldDescriptor& f, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto algs = battery_algebras(f);
  std::vector<Report> out;
  out.push_back(ux_identity(algs, samples, rng));
  out.push_back(ternary_identity(algs, samples, rng));
  out.push_back(psi_identity(algs, samples, rng));
  out.push_back(product_rule_identity(f, samples, rng));
  out.push_back(trace_identity(f, samples, rng));
  return out;
}

std::vector<Report> round_trips(const FieldDescriptor& f) {
  std::vector<Report> out;
  Report basis;
  basis.identity = "CD <-> Cartan basis change";
  for (int d : kDims) {
    Matrix a = cartan_to_cd_matrix(d, f), b = cd_to_cartan_matrix(d, f);
    Matrix id = Matrix::identity(d, f.zero());
    ++basis.cases;
    if (a * b != id || b * a != id) basis.fail("dim " + std::to_string(d) + ": not mutually inverse");
    auto cd = HurwitzAlgebra::cayley_dickson(d, f);
    auto ca = HurwitzAlgebra::cartan(d, f);
    for (int i = 0; i < d; ++i) {
      Vector xi = cd_from_cartan(ca->basis(i), f);
      ++basis.cases;
      if (cartan_from_cd(xi, f) != ca->basis(i)) basis.fail("dim " + std::to_string(d) + " " + ca->label(i));
      for (int j = 0; j < d; ++j) {
        ++basis.cases;
        Vector xj = cd_from_cartan(ca->basis(j), f);
        if (cd_from_cartan(ca->mul(ca->basis(i), ca->basis(j)), f) != cd->mul(xi, xj))
          basis.fail("dim " + std::to_string(d) + " " + ca->label(i) + "*" + ca->label(j));
        if (ca->polar(ca->basis(i), ca->basis(j)) != cd->polar(xi, xj))
          basis.fail("dim " + std::to_string(d) + " n(" + ca->label(i) + "," + ca->label(j) + ")");
      }
    }
  }
  out.push_back(basis);

  Report er;
  er.identity = "E o R = R o E = id on fine gradings";
  for (int d : kDims)
    for (bool cartan : {true, false}) {
      if (!cartan && (d == 1 || (d == 2 && char_three(f)))) continue;
      KantorPair p = KantorPair::hurwitz(algebra(cartan, d, f));
      DegreeMap g = cartan ? cartan_pair_grading(d) : cd_pair_grading(d, f);
      auto l = LieAlgebra::kantor(p);
      LieGrading e = extend_to_lie(*l, g);
      DegreeMap r = restrict_from_lie(*l, e);
      LieGrading e2 = extend_to_lie(*l, r);
      std::string tag = std::string(cartan ? "cartan" : "cd") + " dim " + std::to_string(d);
      er.cases += 2;
      if (!same_degrees(r, g)) er.fail(tag + ": R(E(g)) != g");
      if (e2.degree != e.degree || e2.basis != e.basis) er.fail(tag + ": E(R(E(g))) != E(g)");
    }
  out.push_back(er);

  Report pg;
  pg.identity = "pair_from_graded o kantor reproduces the triple products";
  for (int d : kDims)
    for (bool cartan : {false, true}) {
      auto a = algebra(cartan, d, f);
      std::string tag = a->describe();
      TripleSystem t(a, TripleKind::Standard);
      KantorPair back = pair_from_graded(*LieAlgebra::kantor(KantorPair::from_triple(t)));
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        ++pg.cases;
        if (!(back.table(s) == t.table())) pg.fail(tag + " " + sign_name(s));
      }
    }
  out.push_back(pg);
  return out;
}

CharThreeResult char_three_check(const FieldDescriptor& f) {
  if (!char_three(f) || !f.is_finite()) throw Error(Errc::PreconditionViolated, "needs a finite field of characteristic 3");
  CharThreeResult res;
  res.orbits = standard_orbits(f, SystemKind::Pair, 2);
  std::size_t q = static_cast<std::size_t>(f.order());
  res.transitivity.identity = "generators act transitively on the nonzero vectors of V^+";
  res.transitivity.cases = 1;
  const auto& o = res.orbits.orbits;
  if (o.size() != 2 || o[0].size != 1 || o[1].size != q * q - 1) {
    std::string sizes;
    for (const auto& x : o) sizes += std::to_string(x.size) + " ";
    res.transitivity.fail("orbit sizes " + sizes);
  }

  auto a = HurwitzAlgebra::cartan(2, f);
  KantorPair p = KantorPair::hurwitz(a);
  // (phi-, phi+) as one block diagonal matrix so composition is matrix product
  std::vector<Matrix> blocks;
  for (const auto& g : default_pair_generators(p)) {
    Matrix m(4, 4, f.zero());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        m(i, j) = g.phi_minus(i, j);
        m(i + 2, j + 2) = g.phi_plus(i, j);
      }
    blocks.push_back(m);
  }
  auto group = matrix_group_closure(blocks);
  res.group_order = group.size();
  std::vector<PairAutomorphism> autos;
  res.dual_inverse.identity = "every generated automorphism satisfies t(phi+ x, phi- y) = t(x, y)";
  for (std::size_t n = 0; n < group.size(); ++n) {
    Matrix minus(2, 2, f.zero()), plus(2, 2, f.zero());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        minus(i, j) = group[n](i, j);
        plus(i, j) = group[n](i + 2, j + 2);
      }
    ++res.dual_inverse.cases;
    if (!is_pair_automorphism(p, minus, plus)) res.dual_inverse.fail("element " + std::to_string(n) + " is not an automorphism");
    autos.push_back({plus, minus, "element " + std::to_string(n)});
  }
  Report iso = isometry_and_trace_checks(a, autos);
  iso.cases = 0;
  res.dual_inverse.merge(iso);
  return res;
}

GradingType main_grading_type(const FieldDescriptor& f, int dim) {
  auto l = LieAlgebra::kantor(KantorPair::hurwitz(HurwitzAlgebra::cayley_dickson(dim, f)));
  LieGrading g{FGAbelianGroup(1, {}), {}, {}};
  for (std::size_t i = 0; i < l->dim(); ++i) {
    g.degree.push_back({(*l->z_degree())[i]});
    g.basis.push_back(l->basis(i));
  }
  return grading_type(g);
}

std::vector<SummaryRow> compute_summary(const FieldDescriptor& f) {
  std::vector<SummaryRow> rows;
  for (int d : kDims) {
    SummaryRow row;
    row.dim = d;
    auto lc = LieAlgebra::kantor(KantorPair::hurwitz(HurwitzAlgebra::cartan(d, f)));
    LieGrading ec = extend_to_lie(*lc, cartan_pair_grading(d));
    row.lie_dim = lc->dim();
    row.univ_z = universal_group(*lc, ec).group.to_string();
    row.type_z = grading_type(ec);
    if (d > 1 && !(d == 2 && char_three(f))) {
      auto lx = LieAlgebra::kantor(KantorPair::hurwitz(HurwitzAlgebra::cayley_dickson(d, f)));
      LieGrading ex = extend_to_lie(*lx, cd_pair_grading(d, f));
      row.univ_cd = universal_group(*lx, ex).group.to_string();
      row.type_cd = grading_type(ex);
    }
    rows.push_back(row);
  }
  return rows;
}

const nlohmann::json& expected_summary() {
  static const nlohmann::json j = nlohmann::json::parse(kFixture);
  return j;
}

Report compare_summary(const std::vector<SummaryRow>& rows, const nlohmann::json& expected) {
  Report r;
  r.identity = "kantor-summary table against the fixture";
  for (const auto& e : expected["rows"]) {
    int d = e["dim"];
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& s) { return s.dim == d; });
    std::string tag = "dim " + std::to_string(d) + " ";
    ++r.cases;
    if (it == rows.end()) {
      r.fail(tag + "row missing");
      continue;
    }
    nlohmann::json got = summary_json({*it})[0];
    for (const char* key : {"lie_dim", "univ_z", "type_z", "univ_cd", "type_cd"}) {
      ++r.cases;
      if (got[key] != e[key]) r.fail(tag + key + ": computed " + got[key].dump() + ", expected " + e[key].dump());
    }
  }
  return r;
}

nlohmann::json summary_json(const std::vector<SummaryRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : rows) {
    nlohmann::json j;
    j["dim"] = s.dim;
    j["lie_dim"] = s.lie_dim;
    j["univ_z"] = s.univ_z;
    j["type_z"] = s.type_z;
    j["univ_cd"] = s.univ_cd ? nlohmann::json(*s.univ_cd) : nlohmann::json(nullptr);
    j["type_cd"] = type_json(s.type_cd);
    out.push_back(j);
  }
  return out;
}

std::string summary_markdown(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  os << "| dim C | dim K(C) | Univ(Gamma_Z) | Type(Gamma_Z) | Univ(Gamma_CD) | Type(Gamma_CD) |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& s : rows)
    os << "| " << s.dim << " | " << s.lie_dim << " | " << s.univ_z << " | " << to_string(s.type_z) << " | "
       << (s.univ_cd ? *s.univ_cd : "-") << " | " << (s.type_cd ? to_string(*s.type_cd) : "-") << " |\n";
  return os.str();
}

}  // namespace kantorlab
