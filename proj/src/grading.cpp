#include "kantorlab/grading.hpp"

#include <map>
#include <numeric>
#include <set>

namespace kantorlab {

namespace {

long long mod_pos(long long a, long long d) {
  long long r = a % d;
  return r < 0 ? r + d : r;
}

int log2_dim(int dim) {
  switch (dim) {
    case 1: return 0;
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
  }
  throw Error(Errc::BadDimension, "dimension must be 1, 2, 4 or 8");
}

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

FGAbelianGroup::FGAbelianGroup(int rank, std::vector<long long> torsion) : rank_(rank), torsion_(std::move(torsion)) {
  if (rank_ < 0) throw Error(Errc::PreconditionViolated, "negative rank");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw Error(Errc::PreconditionViolated, "invariant factors must be at least 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw Error(Errc::PreconditionViolated, "invariant factors must form a divisibility chain");
  }
}

FGAbelianGroup FGAbelianGroup::canonical(int rank, const std::vector<long long>& moduli) {
  std::size_t n = moduli.size();
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = static_cast<long>(moduli[i]);
  SmithForm f = smith_normal_form(m);
  std::vector<long long> t;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.s[i][i] == 0) ++rank;
    else if (f.s[i][i] > 1) t.push_back(f.s[i][i].get_si());
  }
  return FGAbelianGroup(rank, t);
}

FGAbelianGroup FGAbelianGroup::product(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<long long> t = a.torsion_;
  t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
  return canonical(a.rank_ + b.rank_, t);
}

GroupElement FGAbelianGroup::reduce(GroupElement g) const {
  if (g.size() != size()) throw Error(Errc::BadDimension, "group element has the wrong length");
  for (std::size_t i = 0; i < torsion_.size(); ++i) g[rank_ + i] = mod_pos(g[rank_ + i], torsion_[i]);
  return g;
}

GroupElement FGAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = a.at(i) + b.at(i);
  return reduce(r);
}

GroupElement FGAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement FGAbelianGroup::neg(const GroupElement& a) const { return times(-1, a); }

GroupElement FGAbelianGroup::times(long long k, const GroupElement& a) const {
  GroupElement r(a);
  for (auto& x : r) x *= k;
  return reduce(r);
}

bool FGAbelianGroup::is_zero(const GroupElement& a) const {
  GroupElement r = reduce(a);
  for (long long x : r)
    if (x != 0) return false;
  return true;
}

long long FGAbelianGroup::order(const GroupElement& a) const {
  GroupElement r = reduce(a);
  for (int i = 0; i < rank_; ++i)
    if (r[i] != 0) return 0;
  long long o = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    long long d = torsion_[i];
    o = std::lcm(o, d / std::gcd(d, r[rank_ + i]));
  }
  return o;
}

std::string FGAbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (rank_ == 1) parts.push_back("Z");
  if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    std::string s = "Z" + std::to_string(torsion_[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    parts.push_back(s);
    i = j;
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

std::string to_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  if (x.size() != source.size() || images.size() != source.size())
    throw Error(Errc::BadDimension, "homomorphism does not match its source");
  GroupElement r = target.zero();
  for (std::size_t i = 0; i < x.size(); ++i) r = target.add(r, target.times(x[i], images[i]));
  return r;
}

Report is_grading(const HurwitzAlgebra& a, const DegreeMap& g) {
  Report r;
  r.identity = "algebra_grading";
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++r.cases;
      GroupElement target = g.group.add(g.plus[i], g.plus[j]);
      for (const auto& t : a.product_terms(i, j))
        if (g.group.reduce(g.plus[t.index]) != target) {
          r.fail(a.label(i) + "*" + a.label(j) + " -> " + a.label(t.index));
          break;
        }
    }
  return r;
}

Report is_grading(const KantorPair& p, const DegreeMap& g) {
  Report r;
  r.identity = "pair_grading";
  const FGAbelianGroup& G = g.group;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto& ds = s == Sign::Plus ? g.plus : g.minus;
    const auto& dt = s == Sign::Plus ? g.minus : g.plus;
    std::size_t n = p.dim(s), m = p.dim(opposite(s));
    if (ds.size() != n || dt.size() != m) throw Error(Errc::BadDimension, "degree map does not match the pair");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          ++r.cases;
          GroupElement target = G.add(G.add(ds[i], dt[j]), ds[k]);
          for (const auto& t : p.table(s).at(i, j, k))
            if (G.reduce(ds[t.index]) != target) {
              r.fail(std::string(sign_name(s)) + " {" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + "} -> " + std::to_string(t.index));
              break;
            }
        }
  }
  return r;
}

Report is_grading(const TripleSystem& t, const DegreeMap& g) {
  DegreeMap pg{g.group, g.plus, g.plus};
  Report r = is_grading(KantorPair::from_triple(t), pg);
  r.identity = "triple_grading";
  return r;
}

namespace {

// coordinates of brackets of homogeneous basis vectors in that basis
std::vector<Vector> homogeneous_brackets(const LieAlgebra& l, const LieGrading& g, Matrix& binv) {
  std::size_t d = l.dim();
  if (g.basis.size() != d || g.degree.size() != d) throw Error(Errc::BadDimension, "grading does not match algebra");
  binv = inverse(Matrix::from_columns(g.basis));
  std::vector<Vector> out(d * d);
  parallel_for(d * d, [&](std::size_t c) {
    out[c] = binv.apply(l.bracket(g.basis[c / d], g.basis[c % d]));
  });
  return out;
}

}  // namespace

Report is_grading(const LieAlgebra& l, const LieGrading& g) {
  Report r;
  r.identity = "lie_grading";
  Matrix binv;
  auto br = homogeneous_brackets(l, g, binv);
  std::size_t d = l.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      ++r.cases;
      GroupElement target = g.group.add(g.degree[a], g.degree[b]);
      const Vector& c = br[a * d + b];
      for (std::size_t t = 0; t < d; ++t)
        if (!c[t].is_zero() && g.group.reduce(g.degree[t]) != target) {
          r.fail("[" + std::to_string(a) + "," + std::to_string(b) + "] -> " + std::to_string(t));
          break;
        }
    }
  return r;
}

namespace {

GroupElement cd_bits(unsigned g, int m) {
  GroupElement e;
  for (int i = 0; i < m; ++i) e.push_back((g >> i) & 1);
  return e;
}

const std::vector<std::string>& cartan_labels(int dim) {
  static const std::vector<std::string> l1 = {"e1"}, l2 = {"e1", "e2"}, l4 = {"e1", "e2", "u1", "v1"},
                                        l8 = {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"};
  switch (dim) {
    case 1: return l1;
    case 2: return l2;
    case 4: return l4;
    default: return l8;
  }
}

GroupElement truncate(const std::vector<long long>& v, std::size_t k) { return GroupElement(v.begin(), v.begin() + k); }

}  // namespace

DegreeMap cd_algebra_grading(int dim) {
  int m = log2_dim(dim);
  DegreeMap g{FGAbelianGroup(0, std::vector<long long>(m, 2)), {}, {}};
  for (int i = 0; i < dim; ++i) g.plus.push_back(cd_bits(i, m));
  return g;
}

DegreeMap cd_pair_grading(int dim, const FieldDescriptor& f) {
  int m = log2_dim(dim);
  if (dim == 2 && f.characteristic() == 3)
    throw Error(Errc::ExcludedCase, "the Cayley-Dickson pair grading is excluded in characteristic 3, dimension 2");
  DegreeMap g{FGAbelianGroup(1, std::vector<long long>(m, 2)), {}, {}};
  for (int i = 0; i < dim; ++i) {
    GroupElement b = cd_bits(i, m);
    GroupElement p{1}, q{-1};
    p.insert(p.end(), b.begin(), b.end());
    q.insert(q.end(), b.begin(), b.end());
    g.plus.push_back(p);
    g.minus.push_back(q);
  }
  return g;
}

DegreeMap cd_triple_grading(int dim) {
  int m = log2_dim(dim);
  DegreeMap g{FGAbelianGroup(0, std::vector<long long>(m + 1, 2)), {}, {}};
  for (int i = 0; i < dim; ++i) {
    GroupElement e{1};
    GroupElement b = cd_bits(i, m);
    e.insert(e.end(), b.begin(), b.end());
    g.plus.push_back(e);
  }
  return g;
}

DegreeMap cartan_pair_grading(int dim) {
  int m = log2_dim(dim);
  if (dim == 1) {
    DegreeMap g{FGAbelianGroup(1, {}), {{1}}, {{-1}}};
    return g;
  }
  static const std::map<std::string, std::vector<long long>> plus = {
      {"e1", {1, 0, 0, 0}},  {"e2", {0, 1, 0, 0}},  {"u1", {0, 0, 1, 0}},   {"u2", {0, 0, 0, 1}},
      {"u3", {1, 2, -1, -1}}, {"v1", {1, 1, -1, 0}}, {"v2", {1, 1, 0, -1}}, {"v3", {0, -1, 1, 1}}};
  static const std::map<std::string, std::string> partner = {{"e1", "e2"}, {"e2", "e1"}, {"u1", "v1"}, {"u2", "v2"},
                                                             {"u3", "v3"}, {"v1", "u1"}, {"v2", "u2"}, {"v3", "u3"}};
  std::size_t k = m + 1;
  DegreeMap g{FGAbelianGroup(int(k), {}), {}, {}};
  for (const auto& lab : cartan_labels(dim)) {
    g.plus.push_back(truncate(plus.at(lab), k));
    GroupElement q = truncate(plus.at(partner.at(lab)), k);
    for (auto& x : q) x = -x;
    g.minus.push_back(q);
  }
  return g;
}

DegreeMap cartan_triple_grading(int dim) {
  int m = log2_dim(dim);
  if (dim == 1) return cd_triple_grading(1);
  static const std::map<std::string, std::vector<long long>> deg = {
      {"e1", {1, 0, 0}},  {"e2", {-1, 0, 0}}, {"u1", {0, 1, 0}},    {"v1", {0, -1, 0}},
      {"u2", {0, 0, 1}},  {"v2", {0, 0, -1}}, {"u3", {-1, -1, -1}}, {"v3", {1, 1, 1}}};
  DegreeMap g{FGAbelianGroup(m, {}), {}, {}};
  for (const auto& lab : cartan_labels(dim)) g.plus.push_back(truncate(deg.at(lab), m));
  return g;
}

DegreeMap shift_pair(const DegreeMap& g, const GroupElement& s) {
  DegreeMap r = g;
  for (auto& d : r.plus) d = g.group.add(d, s);
  for (auto& d : r.minus) d = g.group.sub(d, s);
  return r;
}

DegreeMap shift_triple(const DegreeMap& g, const GroupElement& s) {
  if (!g.group.is_zero(g.group.times(2, s)))
    throw Error(Errc::OrderViolation, "triple shifts need an element of order 1 or 2");
  DegreeMap r = g;
  for (auto& d : r.plus) d = g.group.add(d, s);
  return r;
}

DegreeMap coarsen(const DegreeMap& g, const GroupHom& h) {
  DegreeMap r{h.target, {}, {}};
  for (const auto& d : g.plus) r.plus.push_back(h.apply(d));
  for (const auto& d : g.minus) r.minus.push_back(h.apply(d));
  return r;
}

LieGrading coarsen(const LieGrading& g, const GroupHom& h) {
  LieGrading r{h.target, {}, g.basis};
  for (const auto& d : g.degree) r.degree.push_back(h.apply(d));
  return r;
}

LieGrading extend_to_lie(const LieAlgebra& l, const DegreeMap& pg) {
  const KantorPair& p = l.pair();
  if (pg.plus.size() != p.dim(Sign::Plus) || pg.minus.size() != p.dim(Sign::Minus))
    throw Error(Errc::BadDimension, "degree map does not match the pair");
  const FGAbelianGroup& G = pg.group;
  LieGrading out{G, {}, {}};
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Witness& w = l.witness(i);
    GroupElement d;
    switch (w.piece) {
      case Piece::KMinus: d = G.add(pg.minus[w.i], pg.minus[w.j]); break;
      case Piece::VMinus: d = G.reduce(pg.minus[w.i]); break;
      case Piece::D: d = G.add(pg.minus[w.i], pg.plus[w.j]); break;
      case Piece::VPlus: d = G.reduce(pg.plus[w.i]); break;
      case Piece::KPlus: d = G.add(pg.plus[w.i], pg.plus[w.j]); break;
      case Piece::Abstract: throw Error(Errc::PreconditionViolated, "basis vector without a Kantor witness");
    }
    out.degree.push_back(d);
    out.basis.push_back(l.basis(i));
  }
  return out;
}

DegreeMap restrict_from_lie(const LieAlgebra& l, const LieGrading& g) {
  const KantorPair& p = l.pair();
  std::size_t d = l.dim();
  std::map<GroupElement, std::vector<Vector>> comps;
  for (std::size_t a = 0; a < d; ++a) comps[g.group.reduce(g.degree[a])].push_back(g.basis[a]);
  std::map<GroupElement, Subspace> spaces;
  for (const auto& [deg, vs] : comps) spaces.emplace(deg, Subspace(d, l.proto(), vs));
  DegreeMap out{g.group, {}, {}};
  for (int s : {1, -1}) {
    std::vector<std::size_t> idx = l.component(s);
    std::vector<Vector> units;
    for (std::size_t i : idx) units.push_back(l.basis(i));
    Subspace ls(d, l.proto(), units);
    std::size_t total = 0;
    for (const auto& [deg, w] : spaces) total += ls.dim() + w.dim() - ls.sum(w).dim();
    if (total != ls.dim()) throw Error(Errc::NotKantorCompatible, "L_1 or L_-1 is not a graded subspace");
    auto& target = s == 1 ? out.plus : out.minus;
    for (std::size_t i : idx) {
      const GroupElement* found = nullptr;
      for (const auto& [deg, w] : spaces)
        if (w.contains(l.basis(i))) found = &deg;
      if (!found) throw Error(Errc::PreconditionViolated, "carrier basis vector is not homogeneous");
      target.push_back(*found);
    }
  }
  if (out.plus.size() != p.dim(Sign::Plus) || out.minus.size() != p.dim(Sign::Minus))
    throw Error(Errc::BadDimension, "restricted grading does not match the pair");
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  std::size_t m = input.size(), n = m ? input[0].size() : 0;
  IntMatrix a = input, u = identity_int(m), v = identity_int(n);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  auto row_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {  // row dst -= q row src
    for (std::size_t c = 0; c < n; ++c) a[dst][c] -= q * a[src][c];
    for (std::size_t c = 0; c < m; ++c) u[dst][c] -= q * u[src][c];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t r = 0; r < m; ++r) a[r][dst] -= q * a[r][src];
    for (std::size_t r = 0; r < n; ++r) v[r][dst] -= q * v[r][src];
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (a[i][t] != 0) {
          mpz_class q = a[i][t] / a[t][t];
          row_op(i, t, q);
          if (a[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[t][j] != 0) {
          mpz_class q = a[t][j] / a[t][t];
          col_op(j, t, q);
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
        if (bi != t) swap_rows(t, bi);
        if (bj != t) swap_cols(t, bj);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_op(t, bad, -1);
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
  return {u, a, v};
}

namespace {

struct Harvest {
  std::vector<GroupElement> support;
  std::map<GroupElement, std::size_t> index;
  std::set<std::vector<long long>> relations;

  std::size_t id(const FGAbelianGroup& g, const GroupElement& d) {
    GroupElement r = g.reduce(d);
    auto it = index.find(r);
    if (it != index.end()) return it->second;
    index.emplace(r, support.size());
    support.push_back(r);
    return support.size() - 1;
  }
  void relation(const std::vector<std::pair<std::size_t, long long>>& terms) {
    std::vector<long long> row(support.size(), 0);
    for (auto [i, c] : terms) row[i] += c;
    bool zero = true;
    for (long long x : row) zero = zero && x == 0;
    if (!zero) relations.insert(row);
  }
};

UniversalGroup solve_universal(const FGAbelianGroup& g, Harvest& h) {
  std::size_t n = h.support.size();
  for (const auto& rel : h.relations) {
    GroupElement sum = g.zero();
    for (std::size_t j = 0; j < rel.size(); ++j)
      if (rel[j]) sum = g.add(sum, g.times(rel[j], h.support[j]));
    if (!g.is_zero(sum)) throw Error(Errc::InconsistentGrading, "degrees do not satisfy a harvested relation");
  }
  IntMatrix m;
  for (const auto& rel : h.relations) {
    std::vector<mpz_class> row(n, 0);
    for (std::size_t j = 0; j < rel.size(); ++j) row[j] = static_cast<long>(rel[j]);
    m.push_back(std::move(row));
  }
  std::vector<mpz_class> diag(n, 0);
  IntMatrix v = identity_int(n);
  if (!m.empty()) {
    SmithForm f = smith_normal_form(m);
    for (std::size_t i = 0; i < std::min(m.size(), n); ++i) diag[i] = f.s[i][i];
    v = f.v;
  }
  std::vector<std::size_t> free_idx, tors_idx;
  std::vector<long long> tors;
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0) free_idx.push_back(i);
    else if (diag[i] > 1) {
      tors_idx.push_back(i);
      tors.push_back(diag[i].get_si());
    }
  }
  UniversalGroup u;
  u.group = FGAbelianGroup(int(free_idx.size()), tors);
  u.support = h.support;
  u.relations = h.relations.size();
  for (std::size_t j = 0; j < n; ++j) {
    GroupElement e;
    for (std::size_t i : free_idx) {
      if (!v[j][i].fits_slong_p()) throw Error(Errc::InconsistentGrading, "canonical degree overflow");
      e.push_back(v[j][i].get_si());
    }
    for (std::size_t k = 0; k < tors_idx.size(); ++k) {
      mpz_class r = v[j][tors_idx[k]] % diag[tors_idx[k]];
      if (r < 0) r += diag[tors_idx[k]];
      e.push_back(r.get_si());
    }
    u.canonical.push_back(e);
  }
  return u;
}

}  // namespace

GroupElement UniversalGroup::canonical_of(const GroupElement& input) const {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i] == input) return canonical[i];
  throw Error(Errc::PreconditionViolated, "degree is not in the support");
}

UniversalGroup universal_group(const HurwitzAlgebra& a, const DegreeMap& g) {
  Harvest h;
  std::vector<std::size_t> id;
  for (const auto& d : g.plus) id.push_back(h.id(g.group, d));
  for (std::size_t i = 0; i < std::size_t(a.dim()); ++i)
    for (std::size_t j = 0; j < std::size_t(a.dim()); ++j)
      for (const auto& t : a.product_terms(i, j)) h.relation({{id[i], 1}, {id[j], 1}, {id[t.index], -1}});
  return solve_universal(g.group, h);
}

UniversalGroup universal_group(const KantorPair& p, const DegreeMap& g) {
  Harvest h;
  std::vector<std::size_t> idp, idm;
  for (const auto& d : g.plus) idp.push_back(h.id(g.group, d));
  for (const auto& d : g.minus) idm.push_back(h.id(g.group, d));
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto& is = s == Sign::Plus ? idp : idm;
    const auto& it = s == Sign::Plus ? idm : idp;
    for (std::size_t i = 0; i < p.dim(s); ++i)
      for (std::size_t j = 0; j < p.dim(opposite(s)); ++j)
        for (std::size_t k = 0; k < p.dim(s); ++k)
          for (const auto& t : p.table(s).at(i, j, k))
            h.relation({{is[i], 1}, {it[j], 1}, {is[k], 1}, {is[t.index], -1}});
  }
  return solve_universal(g.group, h);
}

UniversalGroup universal_group(const TripleSystem& t, const DegreeMap& g) {
  Harvest h;
  std::vector<std::size_t> id;
  for (const auto& d : g.plus) id.push_back(h.id(g.group, d));
  std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& term : t.table().at(i, j, k))
          h.relation({{id[i], 1}, {id[j], 1}, {id[k], 1}, {id[term.index], -1}});
  return solve_universal(g.group, h);
}

UniversalGroup universal_group(const LieAlgebra& l, const LieGrading& g) {
  Matrix binv;
  auto br = homogeneous_brackets(l, g, binv);
  Harvest h;
  std::vector<std::size_t> id;
  for (const auto& d : g.degree) id.push_back(h.id(g.group, d));
  std::size_t d = l.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t t = 0; t < d; ++t)
        if (!br[a * d + b][t].is_zero()) h.relation({{id[a], 1}, {id[b], 1}, {id[t], -1}});
  return solve_universal(g.group, h);
}

namespace {

GradingType type_of(const std::map<GroupElement, std::size_t>& counts) {
  GradingType t;
  for (const auto& [deg, c] : counts) {
    if (t.size() < c) t.resize(c, 0);
    ++t[c - 1];
  }
  return t;
}

std::map<GroupElement, std::size_t> counts_of(const DegreeMap& g) {
  std::map<GroupElement, std::size_t> c;
  for (const auto& d : g.plus) ++c[g.group.reduce(d)];
  for (const auto& d : g.minus) ++c[g.group.reduce(d)];
  return c;
}

std::map<GroupElement, std::size_t> counts_of(const LieGrading& g) {
  std::map<GroupElement, std::size_t> c;
  for (const auto& d : g.degree) ++c[g.group.reduce(d)];
  return c;
}

std::vector<SupportEntry> entries(const std::map<GroupElement, std::size_t>& c) {
  std::vector<SupportEntry> out;
  for (const auto& [deg, n] : c) out.push_back({deg, n});
  return out;
}

}  // namespace

GradingType grading_type(const DegreeMap& g) { return type_of(counts_of(g)); }
GradingType grading_type(const LieGrading& g) { return type_of(counts_of(g)); }

std::string to_string(const GradingType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::vector<SupportEntry> support(const DegreeMap& g) { return entries(counts_of(g)); }
std::vector<SupportEntry> support(const LieGrading& g) { return entries(counts_of(g)); }

Report structural_checks(const KantorPair& p, const DegreeMap& g, const std::optional<DegreeMap>& algebra) {
  Report r;
  r.identity = "pair_structure";
  const FGAbelianGroup& G = g.group;

  ++r.cases;
  std::set<GroupElement> sp, sm;
  for (const auto& d : g.plus) sp.insert(G.reduce(d));
  for (const auto& d : g.minus) sm.insert(G.reduce(d));
  for (const auto& d : sp)
    if (sm.count(d)) r.fail("degree " + to_string(d) + " occurs in both supports");

  ++r.cases;
  UniversalGroup u = universal_group(p, g);
  if (r.pass()) {
    // pi on the free part, solved over Q; the support generates Univ so integrality is automatic
    auto q = FieldDescriptor::rationals();
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < u.support.size(); ++i) {
      Vector row;
      for (int k = 0; k < u.group.rank(); ++k) row.push_back(q.from_int(u.canonical[i][k]));
      rows.push_back(row);
      rhs.push_back(q.from_int(sp.count(u.support[i]) ? 1 : -1));
    }
    bool ok = u.group.rank() > 0 && !solve(Matrix::from_rows(rows), rhs).empty();
    if (!ok) r.fail("no homomorphism Univ -> Z with pi = s1 on supp V^s");
  }

  if (algebra) {
    ++r.cases;
    if (!p.carrier()) throw Error(Errc::PreconditionViolated, "factorization check needs the carrier algebra");
    UniversalGroup ua = universal_group(*p.carrier(), *algebra);
    FGAbelianGroup expect = FGAbelianGroup::product(ua.group, FGAbelianGroup(1, {}));
    if (!(u.group == expect)) r.fail("Univ is " + u.group.to_string() + ", expected " + expect.to_string());
  }
  r.notes.push_back("Univ=" + u.group.to_string());
  return r;
}

Report structural_checks(const TripleSystem& t, const DegreeMap& g, const std::optional<DegreeMap>& algebra) {
  Report r;
  r.identity = "triple_structure";
  UniversalGroup u = universal_group(t, g);
  if (algebra) {
    ++r.cases;
    UniversalGroup ua = universal_group(*t.carrier(), *algebra);
    FGAbelianGroup expect = FGAbelianGroup::product(ua.group, FGAbelianGroup(0, {2}));
    if (!(u.group == expect)) r.fail("Univ is " + u.group.to_string() + ", expected " + expect.to_string());
  }
  r.notes.push_back("Univ=" + u.group.to_string());
  return r;
}

Report trace_homogeneity(const KantorPair& p, const DegreeMap& g) {
  if (!p.carrier()) throw Error(Errc::PreconditionViolated, "trace needs the carrier algebra");
  const HurwitzAlgebra& a = *p.carrier();
  Report r;
  r.identity = "trace_homogeneity";
  for (std::size_t i = 0; i < p.dim(Sign::Plus); ++i)
    for (std::size_t j = 0; j < p.dim(Sign::Minus); ++j) {
      ++r.cases;
      if (a.polar(a.basis(i), a.basis(j)).is_zero()) continue;
      if (!g.group.is_zero(g.group.add(g.plus[i], g.minus[j])))
        r.fail(a.label(i) + "+ , " + a.label(j) + "-");
    }
  return r;
}

nlohmann::json grading_json(const std::string& system, int dim, const std::string& field, const std::string& name,
                            const UniversalGroup& u, const GradingType& type, const std::vector<SupportEntry>& supp) {
  nlohmann::json j;
  j["system"] = system;
  j["dim"] = dim;
  j["field"] = field;
  j["grading_name"] = name;
  j["universal_group"] = {{"rank", u.group.rank()}, {"torsion", u.group.torsion()}, {"name", u.group.to_string()}};
  j["type"] = type;
  nlohmann::json s = nlohmann::json::array();
  for (const auto& e : supp) s.push_back({{"degree", e.degree}, {"dimension", e.dimension}});
  j["support"] = s;
  return j;
}

}  // namespace kantorlab
