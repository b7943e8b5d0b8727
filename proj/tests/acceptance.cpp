// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "kantorlab/peirce.hpp"
#include "kantorlab/suites.hpp"

using namespace kantorlab;

namespace {

bool g_slow = false;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
  void require(const Report& r) {
    std::string what = r.identity;
    if (!r.failures.empty()) what += ": " + r.failures.front();
    require(r.pass(), what);
  }
};

const std::vector<FieldDescriptor>& fields() {
  static const std::vector<FieldDescriptor> f{FieldDescriptor::cyclo8(), FieldDescriptor::parse("gf2:3:-1"),
                                              FieldDescriptor::gfp(17)};
  return f;
}

void axioms(Outcome& o) {
  std::size_t cases = 0;
  for (const auto& f : fields())
    for (int d : {1, 2, 4, 8})
      for (bool cartan : {false, true}) {
        if (cartan && !f.has_sqrt_minus_one()) continue;
        auto a = cartan ? HurwitzAlgebra::cartan(d, f) : HurwitzAlgebra::cayley_dickson(d, f);
        Report s = verify_structurable(*a);
        o.require(s.cases == std::size_t(d) * d * d * d, "structurable not exhaustive");
        o.require(s);
        cases += s.cases;
        for (const auto& r : verify_kantor_axioms(KantorPair::hurwitz(a))) o.require(r), cases += r.cases;
        for (const auto& r : verify_kantor_axioms(TripleSystem(a, TripleKind::Standard))) o.require(r), cases += r.cases;
      }
  o.detail << cases << " basis tuples";
}

void lie_dims(Outcome& o) {
  auto f = FieldDescriptor::cyclo8();
  const std::size_t want[] = {3, 8, 21, 52};
  int k = 0;
  for (int d : {1, 2, 4, 8}) {
    auto l = LieAlgebra::kantor(KantorPair::hurwitz(HurwitzAlgebra::cayley_dickson(d, f)));
    o.require(l->dim() == want[k], "dim K(C) for dim C = " + std::to_string(d) + " is " + std::to_string(l->dim()));
    if (l->dim() <= 21) {
      o.require(verify_jacobi(*l));
    } else {
      Report r = jacobi_random(*l, 10000, 1);
      o.require(r.cases == 10000, "random sample count");
      o.require(r);
      if (g_slow) o.require(verify_jacobi(*l));
    }
    ++k;
  }
  o.detail << "dims 3, 8, 21, 52; dim 52 Jacobi " << (g_slow ? "random + exhaustive" : "random 10^4");
}

void main_type(Outcome& o) {
  GradingType t = main_grading_type(FieldDescriptor::cyclo8(), 4);
  o.require(t == GradingType{0, 0, 2, 2, 0, 0, 1}, "type " + to_string(t));
  o.detail << to_string(t);
}

void figure_two(Outcome& o) {
  auto rows = compute_summary(FieldDescriptor::cyclo8());
  const char* univ_z[] = {"Z", "Z^2", "Z^3", "Z^4"};
  const GradingType type_z[] = {{3}, {6, 1}, {18, 0, 1}, {48, 0, 0, 1}};
  const char* univ_cd[] = {"", "Z x Z2", "Z x Z2^2", "Z x Z2^3"};
  const GradingType type_cd[] = {{}, {8}, {15, 3}, {31, 0, 7}};
  o.require(rows.size() == 4, "row count");
  for (std::size_t k = 0; k < rows.size() && k < 4; ++k) {
    const auto& r = rows[k];
    std::string tag = "dim " + std::to_string(r.dim) + " ";
    o.require(r.univ_z == univ_z[k], tag + "Univ Z " + r.univ_z);
    o.require(r.type_z == type_z[k], tag + "Type Z " + to_string(r.type_z));
    if (k == 0) {
      o.require(!r.univ_cd && !r.type_cd, "dim 1 has no CD column");
    } else {
      o.require(r.univ_cd && *r.univ_cd == univ_cd[k], tag + "Univ CD");
      o.require(r.type_cd && *r.type_cd == type_cd[k], tag + "Type CD");
    }
  }
  o.require(compare_summary(rows, expected_summary()));
  o.detail << "7 types and 7 universal groups";
}

void triple_universal(Outcome& o) {
  auto f = FieldDescriptor::cyclo8();
  int m = 0;
  for (int d : {1, 2, 4, 8}) {
    TripleSystem cd(HurwitzAlgebra::cayley_dickson(d, f), TripleKind::Standard);
    auto u = universal_group(cd, cd_triple_grading(d));
    o.require(u.group == FGAbelianGroup(0, std::vector<long long>(m + 1, 2)), "CD dim " + std::to_string(d) + " " +
                                                                                   u.group.to_string());
    if (d > 1) {
      TripleSystem ca(HurwitzAlgebra::cartan(d, f), TripleKind::Standard);
      auto v = universal_group(ca, cartan_triple_grading(d));
      o.require(v.group == FGAbelianGroup(m, {}), "Cartan dim " + std::to_string(d) + " " + v.group.to_string());
    }
    ++m;
  }
  o.detail << "Z2^{m+1} and Z^m";
}

void weyl(Outcome& o) {
  struct Case {
    GradingKind k;
    int dim;
    std::size_t order;
  };
  const Case cases[] = {{GradingKind::Cartan, 2, 2},         {GradingKind::Cartan, 4, 4},
                        {GradingKind::Cartan, 8, 48},        {GradingKind::CayleyDickson, 2, 2},
                        {GradingKind::CayleyDickson, 4, 24}, {GradingKind::CayleyDickson, 8, 1344}};
  for (const auto& c : cases)
    for (SystemKind s : {SystemKind::Pair, SystemKind::Triple}) {
      auto w = compute_weyl(c.k, s, c.dim);
      std::string tag = std::string(grading_kind_name(c.k)) + " " + system_kind_name(s) + " " + std::to_string(c.dim);
      o.require(w.order == c.order, tag + " order " + std::to_string(w.order));
      o.require(w.predicted_order == c.order, tag + " formula " + std::to_string(w.predicted_order));
      Report shape = c.k == GradingKind::CayleyDickson ? weyl_block_form_check(w, c.dim) : weyl_product_form_check(w, c.dim);
      o.require(shape.cases == w.order, tag + " shape check incomplete");
      o.require(shape);
    }
  o.detail << "orders 2, 4, 48 and 2, 24, 1344";
}

void peirce(Outcome& o) {
  for (const auto& f : {FieldDescriptor::cyclo8(), FieldDescriptor::gfp(17)})
    for (int d : {2, 4, 8}) {
      Report r = verify_cartan_peirce_table(d, f);
      o.require(r.cases == std::size_t(d), "not all idempotents");
      o.require(r);
    }
  o.detail << "all 2^m idempotents, dims 2, 4, 8";
}

void root_peirce(Outcome& o) {
  auto res = root_peirce_constant_check(8, FieldDescriptor::cyclo8());
  o.require(res.report);
  o.require(res.lengths);
  std::set<std::string> got(res.values.begin(), res.values.end());
  o.require(got == std::set<std::string>{"1", "1/2", "0", "-1/2"}, "value set");
  o.detail << res.report.cases << " (idempotent, root) pairs";
}

void char_three(Outcome& o) {
  auto f = FieldDescriptor::parse("gf2:3:-1");
  auto res = char_three_check(f);
  o.require(res.transitivity);
  o.require(res.orbits.orbits.size() == 2 && res.orbits.orbits[1].size == 80, "80 nonzero vectors in one orbit");
  o.require(res.group_order == 5760, "group order " + std::to_string(res.group_order));
  o.require(res.dual_inverse.cases == res.group_order, "not exhaustive");
  o.require(res.dual_inverse);
  o.detail << "orbit 80, group " << res.group_order;
}

void identities(Outcome& o) {
  std::size_t cases = 0;
  for (const auto& f : fields())
    for (const auto& r : identity_battery(f, 1000, 1)) {
      o.require(r.cases > 0, f.spec() + " " + r.identity + " skipped");
      o.require(r);
      cases += r.cases;
    }
  o.detail << cases << " cases";
}

void round_trip(Outcome& o) {
  std::size_t cases = 0;
  for (const auto& f : fields())
    for (const auto& r : round_trips(f)) {
      o.require(r.cases > 0, r.identity + " empty");
      o.require(r);
      cases += r.cases;
    }
  o.detail << cases << " cases";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no time bound
  std::function<void(Outcome&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) g_slow = true;
  const std::vector<Criterion> criteria{
      {1, "axiom suites", 60, axioms},
      {2, "Kantor-Lie dimensions and Jacobi", 300, lie_dims},
      {3, "main grading type at dim 4", 0, main_type},
      {4, "summary table", 0, figure_two},
      {5, "triple system universal groups", 0, triple_universal},
      {6, "Weyl group orders", 30, weyl},
      {7, "Cartan Peirce table", 0, peirce},
      {8, "root/Peirce correspondence", 120, root_peirce},
      {9, "characteristic 3 transitivity", 10, char_three},
      {10, "identity battery", 0, identities},
      {11, "round trips", 0, round_trip},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0) o.require(s < c.limit_seconds, "time limit " + std::to_string(int(c.limit_seconds)) + " s");
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail.str() << " ("
              << std::fixed << std::setprecision(2) << s << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
