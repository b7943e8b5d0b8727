#include "kantorlab/autorb.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace kantorlab {

namespace {

Scalar power(const Scalar& x, long long e) {
  Scalar base = e < 0 ? x.inverse() : x;
  unsigned long long k = e < 0 ? -e : e;
  Scalar r = x.one_like();
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

const HurwitzAlgebra& carrier_of(const TripleSystem& t) { return *t.carrier(); }

void require_cartan_dim2(const HurwitzAlgebra& a, const char* what) {
  if (a.dim() != 2 || a.basis_kind() != BasisKind::Cartan)
    throw Error(Errc::PreconditionViolated, std::string(what) + " needs the 2-dimensional algebra on its Cartan basis");
}

const HurwitzAlgebra& pair_carrier(const KantorPair& p, const char* what) {
  if (!p.carrier()) throw Error(Errc::PreconditionViolated, std::string(what) + " needs a pair of Hurwitz type");
  return *p.carrier();
}

Matrix diag2(const Scalar& a, const Scalar& b) {
  Matrix m(2, 2, a.zero_like());
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

std::vector<Scalar> roots_of_unity8(const FieldDescriptor& f) {
  std::vector<Scalar> out;
  auto push = [&](const Scalar& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  if (f.is_finite()) {
    for (std::int64_t i = 1; i < f.order(); ++i) {
      Scalar x = f.element(i);
      if (power(x, 8).is_one()) push(x);
    }
    return out;
  }
  push(f.one());
  push(-f.one());
  if (f.has_sqrt_minus_one()) {
    const Scalar& i = f.sqrt_minus_one();
    push(i);
    push(-i);
    if (f.has_sqrt_two()) {
      Scalar z = f.sqrt_two() * (f.one() + i) / f.from_int(2);
      for (int k = 1; k < 8; k += 2) push(power(z, k));
    }
  }
  return out;
}

std::string matrix_key(const Matrix& m) { return m.to_string(); }

}  // namespace

const char* system_kind_name(SystemKind k) { return k == SystemKind::Pair ? "pair" : "triple"; }
const char* grading_kind_name(GradingKind k) { return k == GradingKind::CayleyDickson ? "cd" : "cartan"; }

bool is_triple_automorphism(const TripleSystem& t, const Matrix& phi) {
  std::size_t n = t.dim();
  if (phi.rows() != n || phi.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (phi.apply(t.table().dense(i, j, k)) != t.triple(phi.column(i), phi.column(j), phi.column(k)))
          return false;
  return rank(phi) == n;
}

TripleAutomorphism make_triple_automorphism(const TripleSystem& t, Matrix phi, std::string provenance) {
  if (!is_triple_automorphism(t, phi))
    throw Error(Errc::NotAnAutomorphism, provenance + " does not preserve the triple product");
  return {std::move(phi), std::move(provenance)};
}

PairAutomorphism make_pair_automorphism(const KantorPair& p, Matrix phi_minus, Matrix phi_plus,
                                        std::string provenance) {
  if (!is_pair_automorphism(p, phi_minus, phi_plus))
    throw Error(Errc::NotAnAutomorphism, provenance + " does not preserve the pair products");
  return {std::move(phi_plus), std::move(phi_minus), std::move(provenance)};
}

PairAutomorphism make_c_lambda(const KantorPair& p, const Scalar& lambda) {
  if (lambda.is_zero()) throw Error(Errc::PreconditionViolated, "c_lambda needs lambda != 0");
  Matrix plus = Matrix::identity(p.dim(Sign::Plus), p.proto()).scaled(lambda);
  Matrix minus = Matrix::identity(p.dim(Sign::Minus), p.proto()).scaled(lambda.inverse());
  return make_pair_automorphism(p, minus, plus, "c_" + lambda.to_string());
}

TripleAutomorphism make_c_lambda(const TripleSystem& t, const Scalar& lambda) {
  if (lambda.is_zero()) throw Error(Errc::PreconditionViolated, "c_lambda needs lambda != 0");
  return make_triple_automorphism(t, Matrix::identity(t.dim(), lambda).scaled(lambda), "c_" + lambda.to_string());
}

TripleAutomorphism make_f_lambda(const TripleSystem& t, const Scalar& lambda) {
  require_cartan_dim2(carrier_of(t), "f_lambda");
  if (lambda.is_zero()) throw Error(Errc::PreconditionViolated, "f_lambda needs lambda != 0");
  return make_triple_automorphism(t, diag2(lambda, lambda.inverse()), "f_" + lambda.to_string());
}

TripleAutomorphism make_swap(const TripleSystem& t) {
  require_cartan_dim2(carrier_of(t), "swap");
  Scalar z = carrier_of(t).field().zero();
  Matrix m(2, 2, z);
  m(0, 1) = z.one_like();
  m(1, 0) = z.one_like();
  return make_triple_automorphism(t, m, "swap");
}

PairAutomorphism make_T(const KantorPair& p, const Scalar& alpha, const Scalar& beta) {
  require_cartan_dim2(pair_carrier(p, "T"), "T");
  if (alpha.is_zero() || beta.is_zero()) throw Error(Errc::PreconditionViolated, "T needs nonzero scalars");
  return make_pair_automorphism(p, diag2(beta.inverse(), alpha.inverse()), diag2(alpha, beta),
                                "T_{" + alpha.to_string() + "," + beta.to_string() + "}");
}

PairAutomorphism make_A_lambda(const KantorPair& p, const Scalar& lambda) {
  require_cartan_dim2(pair_carrier(p, "A_lambda"), "A_lambda");
  Matrix plus = Matrix::identity(2, lambda), minus = plus;
  plus(0, 1) = lambda;
  minus(0, 1) = -lambda;
  return make_pair_automorphism(p, minus, plus, "A_" + lambda.to_string());
}

TripleAutomorphism make_left_mult(const TripleSystem& t, const Vector& x) {
  const HurwitzAlgebra& a = carrier_of(t);
  if (!a.trace(x).is_zero() || !a.norm(x).is_one())
    throw Error(Errc::PreconditionViolated, "L_x needs t(x) = 0 and n(x) = 1");
  return make_triple_automorphism(t, a.left_mult(x), "L_" + to_string(x));
}

TripleAutomorphism make_f_omega(const TripleSystem& t) {
  const HurwitzAlgebra& a = carrier_of(t);
  const FieldDescriptor& f = a.field();
  Matrix d(a.dim(), a.dim(), f.zero());
  for (int g = 0; g < a.dim(); ++g) d(g, g) = (g & 1) ? -f.one() : f.one();
  if (a.basis_kind() == BasisKind::Cartan) d = cd_to_cartan_matrix(a.dim(), f) * d * cartan_to_cd_matrix(a.dim(), f);
  return make_triple_automorphism(t, d, "f_omega");
}

PairAutomorphism lift(const KantorPair& p, const TripleAutomorphism& a) {
  return make_pair_automorphism(p, a.matrix, a.matrix, a.provenance);
}

TripleAutomorphism compose(const TripleSystem& t, const TripleAutomorphism& a, const TripleAutomorphism& b) {
  return make_triple_automorphism(t, a.matrix * b.matrix, "(" + a.provenance + ")(" + b.provenance + ")");
}

PairAutomorphism compose(const KantorPair& p, const PairAutomorphism& a, const PairAutomorphism& b) {
  return make_pair_automorphism(p, a.phi_minus * b.phi_minus, a.phi_plus * b.phi_plus,
                                "(" + a.provenance + ")(" + b.provenance + ")");
}

int rank(const HurwitzAlgebra& a, const Vector& x, SystemKind k) {
  if (k == SystemKind::Pair && a.dim() == 2 && a.field().characteristic() == 3)
    throw Error(Errc::ExcludedCase, "ranks collapse for the 2-dimensional pair in characteristic 3");
  if (is_zero(x)) return 0;
  if (a.dim() == 1) return 1;
  return a.norm(x).is_zero() ? 1 : 2;
}

std::string orbit_invariant(const HurwitzAlgebra& a, const Vector& x, SystemKind k) {
  int r = rank(a, x, k);
  std::string label = "O" + std::to_string(r);
  if (k == SystemKind::Triple && r > 0 && (r == 2 || a.dim() == 1)) label += "(" + a.norm(x).to_string() + ")";
  return label;
}

std::size_t OrbitPartition::total() const {
  std::size_t s = 0;
  for (const auto& o : orbits) s += o.size;
  return s;
}

OrbitPartition orbit_enumerate(const FieldDescriptor& f, std::size_t dim, const std::vector<Matrix>& generators,
                               const OrbitLabeler& label) {
  if (!f.is_finite()) throw Error(Errc::PreconditionViolated, "orbit enumeration needs a finite field");
  const std::int64_t q = f.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= q;
    if (total > 100000) throw Error(Errc::TooLarge, "more than 10^5 vectors");
  }
  for (const auto& g : generators)
    if (g.rows() != dim || g.cols() != dim) throw Error(Errc::PreconditionViolated, "generator size mismatch");

  auto decode = [&](std::size_t idx) {
    Vector v;
    for (std::size_t i = 0; i < dim; ++i) {
      v.push_back(f.element(idx % q));
      idx /= q;
    }
    return v;
  };
  auto encode = [&](const Vector& v) {
    std::size_t idx = 0;
    for (std::size_t i = dim; i-- > 0;) idx = idx * q + f.index_of(v[i]);
    return idx;
  };

  OrbitPartition out;
  out.field = f.spec();
  out.dim = dim;
  std::vector<bool> seen(total, false);
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    OrbitInfo o;
    o.representative = decode(start);
    std::set<std::string> labels;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      Vector v = decode(cur);
      ++o.size;
      if (label) labels.insert(label(v));
      for (const auto& g : generators) {
        std::size_t nxt = encode(g.apply(v));
        if (!seen[nxt]) {
          seen[nxt] = true;
          queue.push_back(nxt);
        }
      }
    }
    o.labels.assign(labels.begin(), labels.end());
    out.orbits.push_back(std::move(o));
  }
  std::stable_sort(out.orbits.begin(), out.orbits.end(),
                   [](const OrbitInfo& a, const OrbitInfo& b) { return a.size < b.size; });
  return out;
}

Report orbit_label_consistency(const OrbitPartition& p) {
  Report r;
  r.identity = "orbits match invariant classes over " + p.field;
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < p.orbits.size(); ++i) {
    ++r.cases;
    const auto& o = p.orbits[i];
    if (o.labels.size() != 1) {
      std::string s;
      for (const auto& l : o.labels) s += " " + l;
      r.fail("orbit of " + to_string(o.representative) + " meets labels" + s);
      continue;
    }
    auto [it, fresh] = owner.emplace(o.labels[0], i);
    if (!fresh) r.fail("label " + o.labels[0] + " split over several orbits");
  }
  return r;
}

std::vector<PairAutomorphism> default_pair_generators(const KantorPair& p) {
  const HurwitzAlgebra& a = pair_carrier(p, "default generators");
  const FieldDescriptor& f = a.field();
  Scalar theta = f.is_finite() ? f.primitive_element() : f.from_int(2);
  std::vector<PairAutomorphism> out;
  if (a.dim() == 1) {
    out.push_back(make_c_lambda(p, theta));
    return out;
  }
  require_cartan_dim2(a, "default generators");
  TripleSystem t(p.carrier(), TripleKind::Standard);
  if (f.characteristic() == 3) {
    out.push_back(lift(p, make_swap(t)));
    out.back().provenance = "tau";
    out.push_back(make_T(p, theta, f.one()));
    out.push_back(make_T(p, f.one(), theta));
    out.push_back(make_A_lambda(p, f.one()));
    if (f.kind() == FieldKind::GFp2) out.push_back(make_A_lambda(p, theta));
    return out;
  }
  out.push_back(make_c_lambda(p, theta));
  out.push_back(lift(p, make_f_lambda(t, theta)));
  out.push_back(lift(p, make_swap(t)));
  return out;
}

std::vector<TripleAutomorphism> default_triple_generators(const TripleSystem& t) {
  const HurwitzAlgebra& a = carrier_of(t);
  const FieldDescriptor& f = a.field();
  std::vector<TripleAutomorphism> out;
  if (a.dim() != 1) {
    require_cartan_dim2(a, "default generators");
    out.push_back(make_f_lambda(t, f.is_finite() ? f.primitive_element() : f.from_int(2)));
    out.push_back(make_swap(t));
  }
  out.push_back(make_c_lambda(t, -f.one()));
  return out;
}

OrbitPartition standard_orbits(const FieldDescriptor& f, SystemKind k, int dim) {
  if (dim != 1 && dim != 2) throw Error(Errc::PreconditionViolated, "standard orbits cover dimensions 1 and 2");
  AlgebraPtr a = HurwitzAlgebra::cartan(dim, f);
  std::vector<Matrix> gens;
  if (k == SystemKind::Pair) {
    for (const auto& g : default_pair_generators(KantorPair::hurwitz(a))) gens.push_back(g.phi_plus);
  } else {
    for (const auto& g : default_triple_generators(TripleSystem(a, TripleKind::Standard))) gens.push_back(g.matrix);
  }
  bool collapsed = k == SystemKind::Pair && dim == 2 && f.characteristic() == 3;
  OrbitLabeler label = [a, k, collapsed](const Vector& x) {
    if (collapsed) return std::string(is_zero(x) ? "O0" : "nonzero");
    return orbit_invariant(*a, x, k);
  };
  return orbit_enumerate(f, dim, gens, label);
}

std::vector<Matrix> matrix_group_closure(const std::vector<Matrix>& generators, std::size_t limit) {
  if (generators.empty()) return {};
  std::vector<Matrix> elems{Matrix::identity(generators[0].rows(), generators[0].proto())};
  std::set<std::string> seen{matrix_key(elems[0])};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Matrix m = g * elems[i];
      if (seen.insert(matrix_key(m)).second) {
        elems.push_back(std::move(m));
        if (elems.size() > limit) throw Error(Errc::TooLarge, "group exceeds " + std::to_string(limit) + " elements");
      }
    }
  }
  return elems;
}

Report isometry_and_trace_checks(const AlgebraPtr& a, const std::vector<TripleAutomorphism>& autos) {
  Report r;
  r.identity = "triple automorphisms are isometries preserving both products";
  TripleSystem standard(a, TripleKind::Standard), prime(a, TripleKind::Prime);
  const Matrix& g = a->norm_gram();
  for (const auto& x : autos) {
    ++r.cases;
    if (x.matrix.transpose() * g * x.matrix != g) r.fail(x.provenance + ": not an isometry of n");
    if (!is_triple_automorphism(standard, x.matrix)) r.fail(x.provenance + ": breaks {x,y,z}");
    if (!is_triple_automorphism(prime, x.matrix)) r.fail(x.provenance + ": breaks {x,y,z}'");
  }
  return r;
}

Report isometry_and_trace_checks(const AlgebraPtr& a, const std::vector<PairAutomorphism>& autos) {
  Report r;
  r.identity = "pair automorphisms preserve the trace pairing";
  const Matrix& g = a->norm_gram();
  for (const auto& x : autos) {
    ++r.cases;
    if (x.phi_plus.transpose() * g * x.phi_minus != g) r.fail(x.provenance + ": t(phi+ x, phi- y) != t(x, y)");
  }
  return r;
}

namespace {

struct MonomialEquation {
  std::map<std::size_t, long long> exponent;
  Scalar value;
};

class MonomialSolver {
 public:
  MonomialSolver(std::size_t n, std::vector<MonomialEquation> eqs, std::vector<Scalar> candidates)
      : n_(n), eqs_(std::move(eqs)), candidates_(std::move(candidates)) {}

  std::optional<std::vector<Scalar>> solve() {
    std::vector<std::optional<Scalar>> a(n_);
    return search(a);
  }

 private:
  bool propagate(std::vector<std::optional<Scalar>>& a) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : eqs_) {
        std::size_t unknown = n_;
        int count = 0;
        Scalar known = e.value.one_like();
        for (const auto& [v, k] : e.exponent) {
          if (k == 0) continue;
          if (a[v]) {
            known = known * power(*a[v], k);
          } else {
            ++count;
            unknown = v;
          }
        }
        if (count == 0) {
          if (known != e.value) return false;
        } else if (count == 1) {
          long long k = e.exponent.at(unknown);
          if (k != 1 && k != -1) continue;
          Scalar x = e.value / known;
          a[unknown] = k == 1 ? x : x.inverse();
          changed = true;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Scalar>> search(std::vector<std::optional<Scalar>> a) const {
    if (!propagate(a)) return std::nullopt;
    auto free = std::find_if(a.begin(), a.end(), [](const auto& x) { return !x.has_value(); });
    if (free == a.end()) {
      std::vector<Scalar> out;
      for (auto& x : a) out.push_back(*x);
      return out;
    }
    for (const auto& c : candidates_) {
      auto b = a;
      b[free - a.begin()] = c;
      if (auto r = search(std::move(b))) return r;
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::vector<MonomialEquation> eqs_;
  std::vector<Scalar> candidates_;
};

}  // namespace

std::optional<TripleAutomorphism> solve_monomial_automorphism(const TripleSystem& t,
                                                              const std::vector<std::size_t>& rho) {
  std::size_t n = t.dim();
  if (rho.size() != n) throw Error(Errc::PreconditionViolated, "permutation size mismatch");
  {
    std::vector<std::size_t> s = rho;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] != i) throw Error(Errc::PreconditionViolated, "not a permutation");
  }
  // c^{ijk}_l lambda_l = lambda_i lambda_j lambda_k c^{rho(ijk)}_{rho(l)}
  std::vector<MonomialEquation> eqs;
  std::set<std::string> dedup;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector src = t.table().dense(i, j, k);
        Vector dst = t.table().dense(rho[i], rho[j], rho[k]);
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& c = src[l];
          const Scalar& d = dst[rho[l]];
          if (c.is_zero() != d.is_zero()) return std::nullopt;
          if (c.is_zero()) continue;
          MonomialEquation e{{}, d / c};
          e.exponent[l] += 1;
          e.exponent[i] -= 1;
          e.exponent[j] -= 1;
          e.exponent[k] -= 1;
          std::string key = e.value.to_string();
          for (const auto& [v, x] : e.exponent) key += "|" + std::to_string(v) + ":" + std::to_string(x);
          if (dedup.insert(key).second) eqs.push_back(std::move(e));
        }
      }
  MonomialSolver solver(n, std::move(eqs), roots_of_unity8(carrier_of(t).field()));
  auto lambdas = solver.solve();
  if (!lambdas) return std::nullopt;
  Matrix phi(n, n, t.table().proto());
  for (std::size_t i = 0; i < n; ++i) phi(rho[i], i) = (*lambdas)[i];
  if (!is_triple_automorphism(t, phi)) return std::nullopt;
  std::string tag = "monomial[";
  for (std::size_t i = 0; i < n; ++i) tag += (i ? "," : "") + std::to_string(rho[i]);
  return TripleAutomorphism{phi, tag + "]"};
}

namespace {

using ComponentKey = std::pair<int, GroupElement>;

std::vector<SupportLabel> support_labels(const DegreeMap& g) {
  std::map<ComponentKey, std::size_t> index;
  std::vector<SupportLabel> out;
  auto add = [&](Sign s, const std::vector<GroupElement>& degs) {
    for (std::size_t i = 0; i < degs.size(); ++i) {
      GroupElement d = g.group.reduce(degs[i]);
      ComponentKey key{sign_value(s), d};
      auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(key, out.size());
        out.push_back({s, d, {i}});
      } else {
        out[it->second].basis.push_back(i);
      }
    }
  };
  add(Sign::Plus, g.plus);
  if (g.is_pair()) add(Sign::Minus, g.minus);
  return out;
}

SupportPermutation induced_permutation(const std::vector<SupportLabel>& supp, const Matrix* plus,
                                       const Matrix* minus, const std::string& tag) {
  // basis index -> component per sign
  std::map<std::pair<int, std::size_t>, std::size_t> owner;
  for (std::size_t c = 0; c < supp.size(); ++c)
    for (std::size_t b : supp[c].basis) owner[{sign_value(supp[c].sign), b}] = c;
  SupportPermutation perm(supp.size());
  std::vector<bool> hit(supp.size(), false);
  for (std::size_t c = 0; c < supp.size(); ++c) {
    const Matrix& m = *(supp[c].sign == Sign::Plus ? plus : minus);
    std::optional<std::size_t> target;
    for (std::size_t b : supp[c].basis)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, b).is_zero()) continue;
        std::size_t t = owner.at({sign_value(supp[c].sign), r});
        if (target && *target != t)
          throw Error(Errc::GeneratorNotHomogeneous, tag + " splits a homogeneous component");
        target = t;
      }
    if (!target || supp[*target].basis.size() != supp[c].basis.size() || hit[*target])
      throw Error(Errc::GeneratorNotHomogeneous, tag + " does not permute the components");
    hit[*target] = true;
    perm[c] = *target;
  }
  return perm;
}

WeylResult weyl_closure(std::vector<SupportLabel> supp, std::vector<SupportPermutation> gens) {
  WeylResult w;
  w.support = std::move(supp);
  w.generators = std::move(gens);
  SupportPermutation id(w.support.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::set<SupportPermutation> seen{id};
  w.elements.push_back(id);
  for (std::size_t i = 0; i < w.elements.size(); ++i)
    for (const auto& g : w.generators) {
      SupportPermutation p(id.size());
      for (std::size_t k = 0; k < id.size(); ++k) p[k] = g[w.elements[i][k]];
      if (seen.insert(p).second) w.elements.push_back(std::move(p));
    }
  w.order = w.elements.size();
  return w;
}

int log2_of(int dim) {
  switch (dim) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: throw Error(Errc::PreconditionViolated, "Weyl groups cover dimensions 2, 4 and 8");
  }
}

// (g, alpha) for the Cartan labels, g in Z_2^{m-1} encoded as a2 -> 1, a3 -> 2
std::pair<unsigned, unsigned> cartan_label(const std::string& s) {
  static const std::map<std::string, std::pair<unsigned, unsigned>> table = {
      {"e1", {0, 0}}, {"e2", {0, 1}}, {"u1", {1, 0}}, {"u2", {2, 0}},
      {"u3", {3, 0}}, {"v1", {1, 1}}, {"v2", {2, 1}}, {"v3", {3, 1}}};
  return table.at(s);
}

}  // namespace

WeylResult weyl_group(const DegreeMap& g, const std::vector<PairAutomorphism>& gens) {
  if (!g.is_pair()) throw Error(Errc::PreconditionViolated, "pair automorphisms need a pair grading");
  auto supp = support_labels(g);
  std::vector<SupportPermutation> perms;
  for (const auto& a : gens) perms.push_back(induced_permutation(supp, &a.phi_plus, &a.phi_minus, a.provenance));
  return weyl_closure(std::move(supp), std::move(perms));
}

WeylResult weyl_group(const DegreeMap& g, const std::vector<TripleAutomorphism>& gens) {
  if (g.is_pair()) throw Error(Errc::PreconditionViolated, "triple automorphisms need a triple grading");
  auto supp = support_labels(g);
  std::vector<SupportPermutation> perms;
  for (const auto& a : gens) perms.push_back(induced_permutation(supp, &a.matrix, nullptr, a.provenance));
  return weyl_closure(std::move(supp), std::move(perms));
}

std::vector<TripleAutomorphism> weyl_generators(const TripleSystem& t, GradingKind k) {
  const HurwitzAlgebra& a = carrier_of(t);
  int m = log2_of(a.dim());
  std::vector<TripleAutomorphism> out;
  if (k == GradingKind::CayleyDickson) {
    if (a.basis_kind() != BasisKind::CayleyDickson)
      throw Error(Errc::PreconditionViolated, "Cayley-Dickson generators need the Cayley-Dickson basis");
    for (int g = 1; g < a.dim(); ++g) out.push_back(make_left_mult(t, a.basis(g)));
    if (m >= 2) {
      std::vector<std::size_t> transvection(a.dim()), cyclic(a.dim());
      for (unsigned g = 0; g < unsigned(a.dim()); ++g) {
        transvection[g] = g ^ ((g & 1u) << 1);
        cyclic[g] = m == 2 ? (((g & 1u) << 1) | ((g >> 1) & 1u)) : (((g << 1) | (g >> 2)) & 7u);
      }
      for (const auto& rho : {transvection, cyclic})
        if (auto s = solve_monomial_automorphism(t, rho)) out.push_back(*s);
    }
    return out;
  }
  if (a.basis_kind() != BasisKind::Cartan) throw Error(Errc::PreconditionViolated, "Cartan generators need the Cartan basis");
  const FieldDescriptor& f = a.field();
  for (unsigned g : {2u, 4u, 6u}) {
    if (g >= unsigned(a.dim())) continue;
    Vector cd = unit_vector(a.dim(), g, f.zero());
    out.push_back(make_left_mult(t, cartan_from_cd(cd, f)));
    out.back().provenance = "L_x" + std::to_string(g);
  }
  out.push_back(make_f_omega(t));
  if (m == 3) {
    std::vector<std::vector<std::size_t>> rhos = {{0, 1, 3, 2, 4, 6, 5, 7}, {0, 1, 3, 4, 2, 6, 7, 5}};
    for (const auto& rho : rhos)
      if (auto s = solve_monomial_automorphism(t, rho)) out.push_back(*s);
  }
  return out;
}

std::size_t predicted_weyl_order(GradingKind k, int dim) {
  int m = log2_of(dim);
  if (k == GradingKind::CayleyDickson) {
    std::size_t gl = 1;
    for (int i = 0; i < m; ++i) gl *= (std::size_t(1) << m) - (std::size_t(1) << i);
    return (std::size_t(1) << m) * gl;
  }
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= (std::size_t(1) << (m - 1)); ++i) fact *= i;
  return fact * 2;
}

WeylResult compute_weyl(GradingKind k, SystemKind s, int dim) {
  FieldDescriptor f = FieldDescriptor::cyclo8();
  AlgebraPtr a = k == GradingKind::CayleyDickson ? HurwitzAlgebra::cayley_dickson(dim, f) : HurwitzAlgebra::cartan(dim, f);
  TripleSystem t(a, TripleKind::Standard);
  auto gens = weyl_generators(t, k);
  WeylResult w;
  if (s == SystemKind::Triple) {
    w = weyl_group(k == GradingKind::CayleyDickson ? cd_triple_grading(dim) : cartan_triple_grading(dim), gens);
  } else {
    KantorPair p = KantorPair::hurwitz(a);
    std::vector<PairAutomorphism> lifted;
    for (const auto& g : gens) lifted.push_back(lift(p, g));
    w = weyl_group(k == GradingKind::CayleyDickson ? cd_pair_grading(dim, f) : cartan_pair_grading(dim), lifted);
  }
  w.predicted_order = predicted_weyl_order(k, dim);
  return w;
}

Report weyl_block_form_check(const WeylResult& w, int dim) {
  int m = log2_of(dim);
  unsigned size = 1u << m;
  Report r;
  r.identity = "CD Weyl elements fix the first coordinate and act affinely";
  auto bits = [&](const GroupElement& d) {
    unsigned g = 0;
    for (int i = 0; i < m; ++i)
      if (d[1 + i] % 2) g |= 1u << i;
    return g;
  };
  for (const auto& p : w.elements) {
    ++r.cases;
    std::map<int, std::vector<int>> maps;  // sign -> map on Z_2^m
    bool ok = true;
    for (std::size_t c = 0; c < p.size(); ++c) {
      const auto& from = w.support[c];
      const auto& to = w.support[p[c]];
      if (from.degree[0] != to.degree[0] || from.sign != to.sign) ok = false;
      auto& f = maps[sign_value(from.sign)];
      f.resize(size, -1);
      f[bits(from.degree)] = int(bits(to.degree));
    }
    if (!ok) {
      r.fail("first coordinate moved");
      continue;
    }
    const std::vector<int>* ref = nullptr;
    for (const auto& [s, f] : maps) {
      if (std::count(f.begin(), f.end(), -1)) ok = false;
      for (unsigned x = 0; x < size && ok; ++x)
        for (unsigned y = 0; y < size && ok; ++y)
          for (unsigned z = 0; z < size && ok; ++z)
            if ((f[x] ^ f[y] ^ f[z]) != f[x ^ y ^ z]) ok = false;
      if (ref && *ref != f) ok = false;
      ref = &f;
    }
    if (!ok) r.fail("not a common affine map of Z_2^" + std::to_string(m));
  }
  return r;
}

Report weyl_product_form_check(const WeylResult& w, int dim) {
  AlgebraPtr a = HurwitzAlgebra::cartan(dim, FieldDescriptor::cyclo8());
  Report r;
  r.identity = "Cartan Weyl elements act as rho x tau on (g, alpha)";
  for (const auto& p : w.elements) {
    ++r.cases;
    std::map<std::pair<int, unsigned>, unsigned> rho, tau;
    bool ok = true;
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (w.support[c].basis.size() != 1 || w.support[c].sign != w.support[p[c]].sign) {
        ok = false;
        break;
      }
      int s = sign_value(w.support[c].sign);
      auto [g, al] = cartan_label(a->label(w.support[c].basis[0]));
      auto [g2, al2] = cartan_label(a->label(w.support[p[c]].basis[0]));
      auto [i1, f1] = rho.emplace(std::make_pair(s, g), g2);
      auto [i2, f2] = tau.emplace(std::make_pair(s, al), al2);
      if ((!f1 && i1->second != g2) || (!f2 && i2->second != al2)) ok = false;
    }
    if (!ok) r.fail("element is not a product permutation");
  }
  return r;
}

std::vector<std::vector<std::size_t>> cycles(const SupportPermutation& p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(c);
  }
  return out;
}

nlohmann::json weyl_json(GradingKind k, SystemKind s, int dim, const WeylResult& w) {
  nlohmann::json j;
  j["grading"] = grading_kind_name(k);
  j["system"] = system_kind_name(s);
  j["dim"] = dim;
  j["order"] = w.order;
  j["predicted_order"] = w.predicted_order;
  j["support"] = nlohmann::json::array();
  for (const auto& l : w.support)
    j["support"].push_back({{"sign", sign_name(l.sign)}, {"degree", l.degree}});
  j["generators"] = nlohmann::json::array();
  for (const auto& g : w.generators) j["generators"].push_back(cycles(g));
  return j;
}

nlohmann::json orbits_json(SystemKind k, const OrbitPartition& p) {
  nlohmann::json j;
  j["system"] = system_kind_name(k);
  j["field"] = p.field;
  j["dim"] = p.dim;
  j["total"] = p.total();
  j["orbits"] = nlohmann::json::array();
  for (const auto& o : p.orbits) {
    std::vector<std::string> rep;
    for (const auto& x : o.representative) rep.push_back(x.to_string());
    j["orbits"].push_back({{"representative", rep}, {"size", o.size}, {"labels", o.labels}});
  }
  return j;
}

}  // namespace kantorlab
