#include "kantorlab/peirce.hpp"

#include <map>
#include <set>

namespace kantorlab {

namespace {

struct Constant {
  long long num;
  long long den;
  const char* name;
};

const Constant kConstants[] = {{0, 1, "0"},   {1, 2, "1/2"}, {-1, 2, "-1/2"}, {1, 1, "1"},
                               {3, 2, "3/2"}, {2, 1, "2"},   {3, 1, "3"}};

std::string component_label(const Constant& l, const Constant& m) {
  return std::string("(") + l.name + "," + m.name + ")";
}

Matrix shifted(const Matrix& a, const Scalar& c) {
  return a - Matrix::identity(a.rows(), a.proto()).scaled(c);
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols(), a.proto());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

struct Eigen {
  const Constant* lambda;
  const Constant* mu;
  Subspace space;
};

// simultaneous eigenspaces of commuting L, R over the candidate constants
std::vector<Eigen> simultaneous(const Matrix& l, const Matrix& r, const std::string& where) {
  const Scalar& z = l.proto();
  std::size_t n = l.rows();
  std::vector<const Constant*> distinct;
  std::vector<Scalar> seen;
  for (const auto& c : kConstants) {
    Scalar v = z.from_rational_like(c.num, c.den);
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == v;
    if (!dup) {
      seen.push_back(v);
      distinct.push_back(&c);
    }
  }
  std::vector<Eigen> out;
  std::size_t total = 0;
  for (const Constant* a : distinct) {
    Matrix la = shifted(l, z.from_rational_like(a->num, a->den));
    if (kernel(la).empty()) continue;
    for (const Constant* b : distinct) {
      auto k = kernel(stack(la, shifted(r, z.from_rational_like(b->num, b->den))));
      if (k.empty()) continue;
      total += k.size();
      out.push_back({a, b, Subspace(n, z, k)});
    }
  }
  Subspace sum(n, z, {});
  for (const auto& e : out) sum = sum.sum(e.space);
  if (total != n || sum.dim() != n)
    throw Error(Errc::NotDiagonalizable, where + ": Peirce spaces cover " + std::to_string(sum.dim()) + " of " +
                                             std::to_string(n) + " dimensions");
  return out;
}

std::string g_name(unsigned g) {
  switch (g) {
    case 0: return "0";
    case 2: return "a2";
    case 4: return "a3";
    case 6: return "a2+a3";
    default: return std::to_string(g);
  }
}

std::vector<unsigned> cartan_g_values(int dim) {
  std::vector<unsigned> out;
  for (unsigned g = 0; g < unsigned(dim); g += 2) out.push_back(g);
  return out;
}

}  // namespace

bool is_idempotent(const KantorPair& p, const Idempotent& e) {
  for (Sign s : {Sign::Plus, Sign::Minus})
    if (p.triple(s, e.at(s), e.at(opposite(s)), e.at(s)) != e.at(s)) return false;
  return true;
}

bool is_tripotent(const TripleSystem& t, const Vector& e) { return t.triple(e, e, e) == e; }

Matrix peirce_left(const KantorPair& p, Sign s, const Idempotent& e) {
  return v_op(p, s, e.at(s), e.at(opposite(s))).matrix;
}

Matrix peirce_right(const KantorPair& p, Sign s, const Idempotent& e) {
  std::size_t n = p.dim(s);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j)
    cols.push_back(p.triple(s, unit_vector(n, j, p.proto()), e.at(opposite(s)), e.at(s)));
  return Matrix::from_columns(cols);
}

const PeirceComponent* PeirceDecomposition::find(const std::string& label) const {
  for (const auto& c : components)
    if (c.label == label) return &c;
  return nullptr;
}

PeirceDecomposition peirce_decompose(const KantorPair& p, const Idempotent& e) {
  if (p.proto().from_int_like(2).is_zero()) throw Error(Errc::ExcludedCase, "Peirce spaces need char != 2");
  if (!is_idempotent(p, e)) throw Error(Errc::PreconditionViolated, e.name + " is not an idempotent");
  PeirceDecomposition d;
  d.idempotent = e.name;
  std::map<std::string, std::size_t> index;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Matrix l = peirce_left(p, s, e), r = peirce_right(p, s, e);
    if (commutator(l, r) != Matrix(l.rows(), l.cols(), l.proto()))
      throw Error(Errc::NotDiagonalizable, e.name + ": L(e) and R(e) do not commute");
    for (auto& ev : simultaneous(l, r, e.name + " sign " + sign_name(s))) {
      std::string label = component_label(*ev.lambda, *ev.mu);
      auto it = index.find(label);
      if (it == index.end()) {
        const Scalar& z = p.proto();
        PeirceComponent c{z.from_rational_like(ev.lambda->num, ev.lambda->den),
                          z.from_rational_like(ev.mu->num, ev.mu->den), label,
                          Subspace(p.dim(Sign::Plus), z, {}), Subspace(p.dim(Sign::Minus), z, {})};
        it = index.emplace(label, d.components.size()).first;
        d.components.push_back(std::move(c));
      }
      (s == Sign::Plus ? d.components[it->second].plus : d.components[it->second].minus) = ev.space;
    }
  }
  return d;
}

PeirceDecomposition peirce_decompose(const TripleSystem& t, const Vector& e) {
  long long p = t.carrier()->field().characteristic();
  if (p == 2 || p == 3 || p == 5) throw Error(Errc::ExcludedCase, "tripotent Peirce spaces need char != 2, 3, 5");
  if (!is_tripotent(t, e)) throw Error(Errc::PreconditionViolated, "not a tripotent");
  std::size_t n = t.dim();
  std::vector<Vector> lc, rc;
  for (std::size_t j = 0; j < n; ++j) {
    Vector b = unit_vector(n, j, t.table().proto());
    lc.push_back(t.triple(e, e, b));
    rc.push_back(t.triple(b, e, e));
  }
  Matrix l = Matrix::from_columns(lc), r = Matrix::from_columns(rc);
  PeirceDecomposition d;
  d.idempotent = to_string(e);
  const Scalar& z = t.table().proto();
  for (auto& ev : simultaneous(l, r, d.idempotent))
    d.components.push_back({z.from_rational_like(ev.lambda->num, ev.lambda->den),
                            z.from_rational_like(ev.mu->num, ev.mu->den), component_label(*ev.lambda, *ev.mu),
                            ev.space, Subspace()});
  return d;
}

Report tripotent_display_agreement(const PeirceDecomposition& d) {
  static const std::set<std::string> allowed = {"(0,0)",    "(1/2,1/2)", "(1,1)",   "(3/2,3/2)",
                                                "(-1/2,0)", "(0,1)",     "(1/2,2)", "(1,3)"};
  Report r;
  r.identity = "tripotent Peirce constants for " + d.idempotent;
  for (const auto& c : d.components) {
    ++r.cases;
    if (!allowed.count(c.label)) r.fail("unexpected component " + c.label);
  }
  return r;
}

Idempotent cartan_idempotent(int dim, const FieldDescriptor& f, unsigned g, Character alpha) {
  Idempotent e;
  e.plus = cartan_from_cd(v_basis(dim, g, alpha, f), f);
  e.minus = cartan_from_cd(v_basis(dim, g, twist(alpha), f), f);
  e.name = "e_" + g_name(g) + "^" + (alpha == Character::One ? "1" : "omega");
  return e;
}

std::vector<Idempotent> cartan_idempotents(int dim, const FieldDescriptor& f) {
  std::vector<Idempotent> out;
  for (unsigned g : cartan_g_values(dim))
    for (Character a : {Character::One, Character::Omega}) out.push_back(cartan_idempotent(dim, f, g, a));
  return out;
}

Report verify_cartan_peirce_table(int dim, const FieldDescriptor& f) {
  if (dim != 2 && dim != 4 && dim != 8) throw Error(Errc::PreconditionViolated, "the Cartan table covers dims 2, 4, 8");
  AlgebraPtr a = HurwitzAlgebra::cartan(dim, f);
  KantorPair p = KantorPair::hurwitz(a);
  Report r;
  r.identity = "Cartan Peirce table, dim " + std::to_string(dim) + " over " + f.name();
  auto part = [&](Sign s, unsigned h, Character al) {
    // (e_h^al)^s
    Idempotent e = cartan_idempotent(dim, f, h, al);
    return e.at(s);
  };
  for (unsigned g : cartan_g_values(dim))
    for (Character al : {Character::One, Character::Omega}) {
      ++r.cases;
      Idempotent e = cartan_idempotent(dim, f, g, al);
      if (!is_idempotent(p, e)) {
        r.fail(e.name + " is not an idempotent");
        continue;
      }
      PeirceDecomposition d;
      try {
        d = peirce_decompose(p, e);
      } catch (const Error& err) {
        r.fail(e.name + ": " + err.what());
        continue;
      }
      std::map<std::string, std::vector<std::pair<Sign, Vector>>> expect;
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        expect["(1,1)"].push_back({s, part(s, g, al)});
        expect["(-1/2,0)"].push_back({s, part(s, g, twist(al))});
        for (unsigned h : cartan_g_values(dim)) {
          if (h == g) continue;
          expect["(0,1)"].push_back({s, part(s, h, al)});
          expect["(1/2,1/2)"].push_back({s, part(s, h, twist(al))});
        }
      }
      if (d.components.size() != expect.size()) r.fail(e.name + ": " + std::to_string(d.components.size()) + " components");
      for (const auto& [label, vecs] : expect) {
        const PeirceComponent* c = d.find(label);
        if (!c) {
          r.fail(e.name + ": missing " + label);
          continue;
        }
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          std::vector<Vector> span;
          for (const auto& [sv, v] : vecs)
            if (sv == s) span.push_back(v);
          Subspace want(p.dim(s), p.proto(), span);
          if (!(want == (s == Sign::Plus ? c->plus : c->minus)))
            r.fail(e.name + ": " + label + " differs on sign " + sign_name(s));
        }
      }
    }
  return r;
}

DegreeMap peirce_z_grading(const KantorPair& p, const Idempotent& e) {
  PeirceDecomposition d = peirce_decompose(p, e);
  DegreeMap g{FGAbelianGroup(1, {}), {}, {}};
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    std::size_t n = p.dim(s);
    std::map<long long, Subspace> by_lambda;  // keyed by 2 lambda
    for (const auto& c : d.components) {
      long long twice = 0;
      for (const auto& k : kConstants)
        if (c.label.rfind(std::string("(") + k.name + ",", 0) == 0) twice = 2 * k.num / k.den;
      const Subspace& sp = s == Sign::Plus ? c.plus : c.minus;
      auto it = by_lambda.find(twice);
      if (it == by_lambda.end()) by_lambda.emplace(twice, sp);
      else it->second = it->second.sum(sp);
    }
    auto& out = s == Sign::Plus ? g.plus : g.minus;
    for (std::size_t i = 0; i < n; ++i) {
      Vector b = unit_vector(n, i, p.proto());
      std::optional<long long> deg;
      for (const auto& [twice, sp] : by_lambda)
        if (sp.dim() > 0 && sp.contains(b)) deg = sign_value(s) * twice;
      if (!deg) throw Error(Errc::NotAGrading, "basis vector " + std::to_string(i) + " is not in a Peirce space of " + e.name);
      out.push_back({*deg});
    }
  }
  Report r = is_grading(p, g);
  if (!r.pass()) throw Error(Errc::NotAGrading, "Peirce Z-grading of " + e.name + " fails: " + r.failures.front());
  return g;
}

Vector embed(const LieAlgebra& l, Sign s, const Vector& x) {
  std::size_t nm = l.n_minus(), np = l.n_plus();
  Block b{Matrix(nm + np, nm + np, l.proto()), zero_vector(nm + np, l.proto())};
  std::size_t off = s == Sign::Plus ? nm : 0;
  for (std::size_t i = 0; i < x.size(); ++i) b.v[off + i] = x[i];
  return l.coords_of(b);
}

Vector root_of(const LieAlgebra& l, const RootDatum& r, const Vector& x) {
  std::size_t lead = 0;
  while (lead < x.size() && x[lead].is_zero()) ++lead;
  if (lead == x.size()) throw Error(Errc::PreconditionViolated, "zero vector has no root");
  Vector root;
  for (std::size_t k : r.cartan) {
    Vector y = l.bracket(l.basis(k), x);
    Scalar c = y[lead] / x[lead];
    if (y != scale(c, x)) throw Error(Errc::NotDiagonalizable, "not a root vector");
    root.push_back(c);
  }
  return root;
}

RootPeirceResult root_peirce_constant_check(int dim, const FieldDescriptor& f) {
  if (f.characteristic() != 0) throw Error(Errc::PreconditionViolated, "roots need characteristic 0");
  AlgebraPtr a = HurwitzAlgebra::cartan(dim, f);
  KantorPair p = KantorPair::hurwitz(a);
  LiePtr l = LieAlgebra::kantor(p);
  LieGrading ext = extend_to_lie(*l, cartan_pair_grading(dim));
  RootDatum rd = cartan_subalgebra_and_roots(*l, ext.degree);

  RootPeirceResult out;
  out.report.identity = "left Peirce constant = (alpha|beta)/(alpha|alpha), dim " + std::to_string(dim);
  out.lengths.identity = "roots of V+ and V- have one length, dim " + std::to_string(dim);
  std::set<std::string> values;
  std::set<std::string> lengths;
  const std::size_t halves = std::size_t(dim / 2) - 1;
  const Scalar half = f.from_rational(1, 2);
  std::map<std::string, std::string> names;
  for (const auto& c : kConstants) names[f.from_rational(c.num, c.den).to_string()] = c.name;

  for (const Idempotent& e : cartan_idempotents(dim, f))
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      Vector alpha = root_of(*l, rd, embed(*l, s, e.at(s)));
      Scalar aa = root_pairing(rd, alpha, alpha);
      Matrix left = peirce_left(p, s, e);
      std::size_t half_count = 0;
      for (std::size_t j = 0; j < p.dim(s); ++j) {
        ++out.report.cases;
        Vector b = unit_vector(p.dim(s), j, f.zero());
        Vector beta = root_of(*l, rd, embed(*l, s, b));
        Scalar ab = root_pairing(rd, alpha, beta);
        lengths.insert(root_pairing(rd, beta, beta).to_string());
        Vector image = left.apply(b);
        Scalar c = image[j];
        if (image != scale(c, b)) {
          out.report.fail(e.name + " sign " + sign_name(s) + ": basis " + std::to_string(j) + " not an eigenvector");
          continue;
        }
        if (c != ab / aa)
          out.report.fail(e.name + " sign " + sign_name(s) + ": lambda " + c.to_string() + " vs " + (ab / aa).to_string());
        auto nm = names.find(c.to_string());
        values.insert(nm == names.end() ? c.to_string() : nm->second);
        if (c == half) ++half_count;
      }
      if (half_count != halves)
        out.report.fail(e.name + " sign " + sign_name(s) + ": constant 1/2 occurs " + std::to_string(half_count) + " times");
    }
  out.values.assign(values.begin(), values.end());
  ++out.lengths.cases;
  if (lengths.size() != 1) out.lengths.fail(std::to_string(lengths.size()) + " distinct lengths");
  return out;
}

nlohmann::json peirce_json(const PeirceDecomposition& d) {
  nlohmann::json j;
  j["idempotent"] = d.idempotent;
  j["components"] = nlohmann::json::array();
  for (const auto& c : d.components) {
    auto comma = c.label.find(',');
    j["components"].push_back({{"lambda", c.label.substr(1, comma - 1)},
                               {"mu", c.label.substr(comma + 1, c.label.size() - comma - 2)},
                               {"dim_plus", c.plus.dim()},
                               {"dim_minus", c.minus.dim()}});
  }
  return j;
}

}  // namespace kantorlab
