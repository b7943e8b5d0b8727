#include "kantorlab/kantor.hpp"

namespace kantorlab {

Vector standard_triple(const HurwitzAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  Vector yb = a.conj(y);
  Vector r = a.mul(a.mul(x, yb), z);
  r = add(r, a.mul(a.mul(z, yb), x));
  return sub(r, a.mul(a.mul(z, a.conj(x)), y));
}

Vector prime_triple(const HurwitzAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return a.mul(a.mul(x, a.conj(y)), z);
}

Vector psi(const HurwitzAlgebra& a, const Vector& x, const Vector& y) {
  return sub(a.mul(x, a.conj(y)), a.mul(y, a.conj(x)));
}

TripleTable::TripleTable(std::size_t n_outer, std::size_t n_mid, std::vector<SparseVec> entries, Scalar proto)
    : n_outer_(n_outer), n_mid_(n_mid), e_(std::move(entries)), proto_(proto.zero_like()) {
  if (e_.size() != n_outer_ * n_mid_ * n_outer_) throw Error(Errc::BadDimension, "triple table size mismatch");
}

Vector TripleTable::dense(std::size_t i, std::size_t j, std::size_t k) const {
  Vector v = zero_vector(n_outer_, proto_);
  for (const auto& t : at(i, j, k)) v[t.index] = t.coeff;
  return v;
}

Vector TripleTable::eval(const Vector& x, const Vector& y, const Vector& z) const {
  Vector out = zero_vector(n_outer_, proto_);
  for (std::size_t i = 0; i < n_outer_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_mid_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_outer_; ++k) {
        if (z[k].is_zero()) continue;
        const auto& terms = at(i, j, k);
        if (terms.empty()) continue;
        Scalar c = xy * z[k];
        for (const auto& t : terms) out[t.index] += c * t.coeff;
      }
    }
  }
  return out;
}

bool TripleTable::operator==(const TripleTable& o) const {
  if (n_outer_ != o.n_outer_ || n_mid_ != o.n_mid_) return false;
  for (std::size_t i = 0; i < n_outer_; ++i)
    for (std::size_t j = 0; j < n_mid_; ++j)
      for (std::size_t k = 0; k < n_outer_; ++k)
        if (dense(i, j, k) != o.dense(i, j, k)) return false;
  return true;
}

TripleSystem::TripleSystem(AlgebraPtr carrier, TripleKind kind) : carrier_(std::move(carrier)), kind_(kind) {
  const auto& a = *carrier_;
  std::size_t n = a.dim();
  std::vector<SparseVec> e;
  e.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
        e.push_back(sparse_of(kind == TripleKind::Standard ? standard_triple(a, x, y, z) : prime_triple(a, x, y, z)));
      }
  table_ = TripleTable(n, n, std::move(e), a.field().zero());
}

KantorPair KantorPair::hurwitz(AlgebraPtr carrier) {
  KantorPair p = from_triple(TripleSystem(carrier, TripleKind::Standard));
  return p;
}

KantorPair KantorPair::from_triple(const TripleSystem& t) {
  KantorPair p = from_tables(t.table(), t.table(), t.table().proto());
  p.carrier_ = t.carrier();
  return p;
}

KantorPair KantorPair::from_tables(TripleTable plus, TripleTable minus, Scalar proto) {
  if (plus.outer() != minus.mid() || minus.outer() != plus.mid())
    throw Error(Errc::BadDimension, "pair tables have inconsistent dimensions");
  KantorPair p;
  p.plus_ = std::move(plus);
  p.minus_ = std::move(minus);
  p.proto_ = proto.zero_like();
  return p;
}

PairElement KantorPair::triple_pair(Sign s, const PairElement& x, const PairElement& y, const PairElement& z) const {
  if (x.sign != s || z.sign != s || y.sign != opposite(s))
    throw Error(Errc::PreconditionViolated, "pair triple product needs signs (s, -s, s)");
  return {s, triple(s, x.coords, y.coords, z.coords)};
}

Operator v_op(const KantorPair& p, Sign s, const Vector& x, const Vector& y) {
  std::size_t n = p.dim(s);
  Matrix m(n, n, p.proto());
  for (std::size_t k = 0; k < n; ++k) m.set_column(k, p.triple(s, x, y, unit_vector(n, k, p.proto())));
  return {std::move(m), std::string("V") + sign_name(s)};
}

Operator u_op(const KantorPair& p, Sign s, const Vector& x, const Vector& z) {
  std::size_t n = p.dim(s), nm = p.dim(opposite(s));
  Matrix m(n, nm, p.proto());
  for (std::size_t j = 0; j < nm; ++j) m.set_column(j, p.triple(s, x, unit_vector(nm, j, p.proto()), z));
  return {std::move(m), std::string("U") + sign_name(s)};
}

Operator k_op(const KantorPair& p, Sign s, const Vector& x, const Vector& y) {
  std::size_t n = p.dim(s), nm = p.dim(opposite(s));
  Matrix m(n, nm, p.proto());
  for (std::size_t j = 0; j < nm; ++j) {
    Vector z = unit_vector(nm, j, p.proto());
    m.set_column(j, sub(p.triple(s, x, z, y), p.triple(s, y, z, x)));
  }
  return {std::move(m), std::string("K") + sign_name(s)};
}

std::pair<Operator, Operator> d_derivation(const KantorPair& p, const Vector& xm, const Vector& xp) {
  Operator a = v_op(p, Sign::Minus, xm, xp);
  Operator b = v_op(p, Sign::Plus, xp, xm);
  b.matrix = b.matrix.scaled(p.proto().from_int_like(-1));
  a.tag = "D-";
  b.tag = "-D+";
  return {std::move(a), std::move(b)};
}

Operator left_op(const HurwitzAlgebra& a, const Vector& x) { return {a.left_mult(x), "L"}; }

OperatorTables operator_tables(const KantorPair& p) {
  OperatorTables t;
  for (Sign s : {Sign::Plus, Sign::Minus}) t.n[OperatorTables::idx(s)] = p.dim(s);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    int si = OperatorTables::idx(s);
    std::size_t n = p.dim(s), nm = p.dim(opposite(s));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < nm; ++j)
        t.v[si].push_back(v_op(p, s, unit_vector(n, i, p.proto()), unit_vector(nm, j, p.proto())).matrix);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t.k[si].push_back(k_op(p, s, unit_vector(n, i, p.proto()), unit_vector(n, j, p.proto())).matrix);
  }
  return t;
}

namespace {

// [V_{x,y}, V_{z,w}] = V_{V_{x,y}z, w} - V_{z, V^{-s}_{y,x} w}
Report axiom_one(const KantorPair& p, const OperatorTables& t, Sign s, const std::string& name, int jobs) {
  std::size_t n = p.dim(s), m = p.dim(opposite(s));
  const Scalar& proto = p.proto();
  return run_cases(
      name, n * m * n * m,
      [&](std::size_t c) -> std::optional<std::string> {
        std::size_t w = c % m, z = (c / m) % n, y = (c / (m * n)) % m, x = c / (m * n * m);
        Matrix lhs = commutator(t.V(s, x, y), t.V(s, z, w));
        Matrix rhs(n, n, proto);
        for (const auto& term : p.table(s).at(x, y, z)) rhs.add_scaled(term.coeff, t.V(s, term.index, w));
        for (const auto& term : p.table(opposite(s)).at(y, x, w))
          rhs.add_scaled(-term.coeff, t.V(s, z, term.index));
        if (lhs == rhs) return std::nullopt;
        return std::string("sign ") + sign_name(s) + " (x,y,z,w)=(" + std::to_string(x) + "," + std::to_string(y) +
               "," + std::to_string(z) + "," + std::to_string(w) + ")";
      },
      jobs);
}

// K_{K_{x,y}z, w} = K_{x,y} V^{-s}_{z,w} + V_{w,z} K_{x,y}
Report axiom_two(const KantorPair& p, const OperatorTables& t, Sign s, int jobs) {
  std::size_t n = p.dim(s), m = p.dim(opposite(s));
  const Scalar& proto = p.proto();
  return run_cases(
      std::string("kantor_axiom_2") + sign_name(s), n * n * m * n,
      [&](std::size_t c) -> std::optional<std::string> {
        std::size_t w = c % n, z = (c / n) % m, y = (c / (n * m)) % n, x = c / (n * m * n);
        Matrix lhs(n, m, proto);
        for (const auto& term : p.table(s).at(x, z, y)) lhs.add_scaled(term.coeff, t.K(s, term.index, w));
        for (const auto& term : p.table(s).at(y, z, x)) lhs.add_scaled(-term.coeff, t.K(s, term.index, w));
        const Matrix& k = t.K(s, x, y);
        Matrix rhs = k * t.V(opposite(s), z, w) + t.V(s, w, z) * k;
        if (lhs == rhs) return std::nullopt;
        return std::string("sign ") + sign_name(s) + " (x,y,z,w)=(" + std::to_string(x) + "," + std::to_string(y) +
               "," + std::to_string(z) + "," + std::to_string(w) + ")";
      },
      jobs);
}

}  // namespace

Report verify_structurable(const HurwitzAlgebra& a, int jobs) {
  auto ptr = std::shared_ptr<const HurwitzAlgebra>(std::shared_ptr<const HurwitzAlgebra>{}, &a);
  KantorPair p = KantorPair::from_triple(TripleSystem(ptr, TripleKind::Standard));
  OperatorTables t = operator_tables(p);
  return axiom_one(p, t, Sign::Plus, "structurable", jobs);
}

std::vector<Report> verify_kantor_axioms(const KantorPair& p, int jobs) {
  OperatorTables t = operator_tables(p);
  std::vector<Report> out;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    out.push_back(axiom_one(p, t, s, std::string("kantor_axiom_1") + sign_name(s), jobs));
    out.push_back(axiom_two(p, t, s, jobs));
  }
  return out;
}

std::vector<Report> verify_kantor_axioms(const TripleSystem& t, int jobs) {
  KantorPair p = KantorPair::from_triple(t);
  OperatorTables ops = operator_tables(p);
  return {axiom_one(p, ops, Sign::Plus, "kantor_triple_axiom_1", jobs), axiom_two(p, ops, Sign::Plus, jobs)};
}

bool k_identically_zero(const KantorPair& p) {
  OperatorTables t = operator_tables(p);
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (const auto& k : t.k[OperatorTables::idx(s)])
      if (!k.is_zero()) return false;
  return true;
}

bool is_pair_automorphism(const KantorPair& p, const Matrix& phi_minus, const Matrix& phi_plus) {
  auto phi = [&](Sign s) -> const Matrix& { return s == Sign::Plus ? phi_plus : phi_minus; };
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    std::size_t n = p.dim(s), m = p.dim(opposite(s));
    const Matrix& a = phi(s);
    const Matrix& b = phi(opposite(s));
    if (a.rows() != n || a.cols() != n || b.rows() != m || b.cols() != m) return false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vector lhs = a.apply(p.table(s).dense(i, j, k));
          Vector rhs = p.triple(s, a.column(i), b.column(j), a.column(k));
          if (lhs != rhs) return false;
        }
  }
  return rank(phi_minus) == p.dim(Sign::Minus) && rank(phi_plus) == p.dim(Sign::Plus);
}

SolutionSet conjugate_inverse(const KantorPair& p, Sign s, const Vector& x) {
  std::size_t n = p.dim(s), m = p.dim(opposite(s));
  Matrix sys(n * n, m, p.proto());
  for (std::size_t j = 0; j < m; ++j) {
    Matrix v = v_op(p, s, x, unit_vector(m, j, p.proto())).matrix;
    for (std::size_t e = 0; e < n * n; ++e) sys(e, j) = v.data()[e];
  }
  return solve(sys, Matrix::identity(n, p.proto()).flatten());
}

bool ternary_left_identity_check(const HurwitzAlgebra& a, const Vector& x, const Vector& y1, const Vector& y2,
                                 const Vector& y3) {
  if (!a.trace(x).is_zero()) throw Error(Errc::PreconditionViolated, "ternary identity needs t(x) = 0");
  Vector lhs = a.mul(a.mul(a.mul(x, y1), a.conj(a.mul(x, y2))), a.mul(x, y3));
  Vector rhs = scale(a.norm(x), a.mul(x, a.mul(a.mul(y1, a.conj(y2)), y3)));
  return lhs == rhs;
}

}  // namespace kantorlab
