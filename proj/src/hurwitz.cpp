#include "kantorlab/hurwitz.hpp"

#include <array>

namespace kantorlab {

namespace {

constexpr int kSigma[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},     {1, -1, 1, -1, -1, 1, -1, 1},
    {1, -1, -1, 1, -1, 1, 1, -1}, {1, 1, -1, -1, -1, -1, 1, 1},
    {1, 1, 1, 1, -1, -1, -1, -1}, {1, -1, -1, 1, 1, -1, -1, 1},
    {1, 1, -1, -1, 1, 1, -1, -1}, {1, -1, 1, -1, 1, -1, 1, -1},
};

const std::array<const char*, 8> kCdLabels = {"x_0", "x_1", "x_2", "x_12", "x_3", "x_13", "x_23", "x_123"};
const std::array<const char*, 8> kCartan8 = {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"};

// Cartan table over the dim-8 order: {sign, index}, sign 0 means zero.
struct Entry {
  int sign;
  int idx;
};
enum { E1, E2, U1, U2, U3, V1, V2, V3 };
constexpr Entry Z{0, 0};
constexpr Entry P(int i) { return {1, i}; }
constexpr Entry N(int i) { return {-1, i}; }
constexpr Entry kCartan[8][8] = {
    {P(E1), Z, P(U1), P(U2), P(U3), Z, Z, Z},
    {Z, P(E2), Z, Z, Z, P(V1), P(V2), P(V3)},
    {Z, P(U1), Z, P(V3), N(V2), N(E1), Z, Z},
    {Z, P(U2), N(V3), Z, P(V1), Z, N(E1), Z},
    {Z, P(U3), P(V2), N(V1), Z, Z, Z, N(E1)},
    {P(V1), Z, N(E2), Z, Z, Z, P(U3), N(U2)},
    {P(V2), Z, Z, N(E2), Z, N(U3), Z, P(U1)},
    {P(V3), Z, Z, Z, N(E2), P(U2), N(U1), Z},
};

std::vector<int> cartan_subset(int dim) {
  switch (dim) {
    case 1: return {E1};
    case 2: return {E1, E2};
    case 4: return {E1, E2, U1, V1};
    default: return {E1, E2, U1, U2, U3, V1, V2, V3};
  }
}

void check_dim(int dim) {
  if (dim != 1 && dim != 2 && dim != 4 && dim != 8)
    throw Error(Errc::BadDimension, "Hurwitz algebras have dimension 1, 2, 4 or 8, got " + std::to_string(dim));
}

}  // namespace

const char* basis_kind_name(BasisKind k) { return k == BasisKind::CayleyDickson ? "cayley_dickson" : "cartan"; }

int cd_sigma(unsigned g, unsigned h) { return kSigma[g & 7][h & 7]; }

SparseVec sparse_of(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  return s;
}

HurwitzAlgebra::HurwitzAlgebra(int dim, FieldDescriptor field, BasisKind kind)
    : dim_(dim), field_(std::move(field)), kind_(kind) {}

int HurwitzAlgebra::log_dim() const {
  int m = 0;
  while ((1 << m) < dim_) ++m;
  return m;
}

AlgebraPtr HurwitzAlgebra::cayley_dickson(int dim, const FieldDescriptor& field) {
  check_dim(dim);
  auto* a = new HurwitzAlgebra(dim, field, BasisKind::CayleyDickson);
  Scalar z = field.zero();
  for (int g = 0; g < dim; ++g) {
    a->labels_.emplace_back(kCdLabels[g]);
    for (int h = 0; h < dim; ++h) {
      Vector v = zero_vector(dim, z);
      v[g ^ h] = field.from_int(cd_sigma(g, h));
      a->table_.push_back(std::move(v));
    }
  }
  a->unit_ = unit_vector(dim, 0, z);
  a->invol_ = Matrix(dim, dim, z);
  for (int g = 0; g < dim; ++g) a->invol_(g, g) = field.from_int(cd_sigma(g, g));
  a->finish();
  return AlgebraPtr(a);
}

AlgebraPtr HurwitzAlgebra::cartan(int dim, const FieldDescriptor& field) {
  check_dim(dim);
  auto* a = new HurwitzAlgebra(dim, field, BasisKind::Cartan);
  Scalar z = field.zero();
  auto sub = cartan_subset(dim);
  std::array<int, 8> pos{};
  pos.fill(-1);
  for (std::size_t i = 0; i < sub.size(); ++i) pos[sub[i]] = static_cast<int>(i);
  for (int i : sub) {
    a->labels_.emplace_back(kCartan8[i]);
    for (int j : sub) {
      Vector v = zero_vector(dim, z);
      Entry e = kCartan[i][j];
      if (e.sign != 0) {
        if (pos[e.idx] < 0) throw Error(Errc::BadDimension, "Cartan sub-basis not closed");
        v[pos[e.idx]] = field.from_int(e.sign);
      }
      a->table_.push_back(std::move(v));
    }
  }
  if (dim == 1) {
    a->unit_ = unit_vector(1, 0, z);
    a->invol_ = Matrix::identity(1, z);
  } else {
    a->unit_ = add(unit_vector(dim, 0, z), unit_vector(dim, 1, z));
    // x -> t(x)1 - x with t(e1) = t(e2) = 1 and t vanishing on u, v
    a->invol_ = Matrix(dim, dim, z);
    for (int j = 0; j < dim; ++j) {
      Scalar t = j < 2 ? field.one() : field.zero();
      for (int i = 0; i < dim; ++i) {
        Scalar v = t * a->unit_[i];
        if (i == j) v -= field.one();
        a->invol_(i, j) = v;
      }
    }
  }
  a->finish();
  return AlgebraPtr(a);
}

void HurwitzAlgebra::finish() {
  for (const auto& v : table_) sparse_.push_back(sparse_of(v));
  // n(x,y)1 = x ybar + y xbar
  std::size_t unit_pos = 0;
  gram_ = Matrix(dim_, dim_, field_.zero());
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Vector bi = basis(i), bj = basis(j);
      Vector s = add(mul(bi, conj(bj)), mul(bj, conj(bi)));
      Scalar c = s[unit_pos] / unit_[unit_pos];
      if (scale(c, unit_) != s) throw Error(Errc::PreconditionViolated, "x ybar + y xbar is not scalar");
      gram_(i, j) = c;
    }
}

std::size_t HurwitzAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(Errc::PreconditionViolated, "no basis vector '" + label + "' in " + describe());
}

Vector HurwitzAlgebra::random(std::mt19937_64& rng) const {
  Vector v;
  for (int i = 0; i < dim_; ++i) v.push_back(field_.random(rng));
  return v;
}

Vector HurwitzAlgebra::mul(const Vector& x, const Vector& y) const {
  Vector out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = sparse_[i * dim_ + j];
      if (terms.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Vector HurwitzAlgebra::conj(const Vector& x) const { return invol_.apply(x); }

Scalar HurwitzAlgebra::polar(const Vector& x, const Vector& y) const { return dot(x, gram_.apply(y)); }

Scalar HurwitzAlgebra::norm(const Vector& x) const { return polar(x, x) / field_.from_int(2); }

Scalar HurwitzAlgebra::trace(const Vector& x) const { return polar(x, unit_); }

Matrix HurwitzAlgebra::left_mult(const Vector& x) const {
  Matrix m(dim_, dim_, field_.zero());
  for (int j = 0; j < dim_; ++j) m.set_column(j, mul(x, basis(j)));
  return m;
}

Matrix HurwitzAlgebra::right_mult(const Vector& x) const {
  Matrix m(dim_, dim_, field_.zero());
  for (int j = 0; j < dim_; ++j) m.set_column(j, mul(basis(j), x));
  return m;
}

std::string HurwitzAlgebra::describe() const {
  return std::string(basis_kind_name(kind_)) + " dim " + std::to_string(dim_) + " over " + field_.name();
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, Vector coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(alg_->dim()))
    throw Error(Errc::BadDimension, "coordinate length does not match algebra");
}

void AlgebraElement::check(const AlgebraElement& o) const {
  if (alg_ != o.alg_ && !alg_->same(*o.alg_))
    throw Error(Errc::MixedAlgebras, alg_->describe() + " vs " + o.alg_->describe());
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check(o);
  return {alg_, alg_->mul(coords_, o.coords_)};
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check(o);
  return {alg_, add(coords_, o.coords_)};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check(o);
  return {alg_, sub(coords_, o.coords_)};
}

Scalar AlgebraElement::polar(const AlgebraElement& o) const {
  check(o);
  return alg_->polar(coords_, o.coords_);
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  check(o);
  return coords_ == o.coords_;
}

Matrix cartan_to_cd_matrix(int dim, const FieldDescriptor& f) {
  check_dim(dim);
  Scalar z = f.zero();
  if (dim == 1) return Matrix::identity(1, z);
  const Scalar& i = f.sqrt_minus_one();
  Scalar h = f.from_rational(1, 2);
  Scalar hi = h * i;
  Matrix m(dim, dim, z);
  auto col = [&](int c, int x, const Scalar& a, int y, const Scalar& b) {
    m(x, c) = a;
    m(y, c) = b;
  };
  // e1 = (x0 + i x1)/2, e2 = (x0 - i x1)/2
  col(0, 0, h, 1, hi);
  col(1, 0, h, 1, -hi);
  if (dim == 4) {
    // u1 = (x2 + i x12)/2, v1 = (x2 - i x12)/2
    col(2, 2, h, 3, hi);
    col(3, 2, h, 3, -hi);
  } else if (dim == 8) {
    col(U1, 2, h, 3, hi);
    col(V1, 2, h, 3, -hi);
    col(U2, 4, h, 5, -hi);
    col(V2, 4, h, 5, hi);
    col(U3, 6, -h, 7, hi);
    col(V3, 6, -h, 7, -hi);
  }
  return m;
}

Matrix cd_to_cartan_matrix(int dim, const FieldDescriptor& f) {
  check_dim(dim);
  Scalar z = f.zero();
  if (dim == 1) return Matrix::identity(1, z);
  const Scalar& i = f.sqrt_minus_one();
  Scalar one = f.one();
  Matrix m(dim, dim, z);
  auto col = [&](int c, int x, const Scalar& a, int y, const Scalar& b) {
    m(x, c) = a;
    m(y, c) = b;
  };
  // x0 = e1 + e2, x1 = -i(e1 - e2)
  col(0, 0, one, 1, one);
  col(1, 0, -i, 1, i);
  if (dim == 4) {
    col(2, 2, one, 3, one);
    col(3, 2, -i, 3, i);
  } else if (dim == 8) {
    col(2, U1, one, V1, one);
    col(3, U1, -i, V1, i);
    col(4, U2, one, V2, one);
    col(5, U2, i, V2, -i);
    col(6, U3, -one, V3, -one);
    col(7, U3, -i, V3, i);
  }
  return m;
}

Vector cd_from_cartan(const Vector& x, const FieldDescriptor& f) {
  return cartan_to_cd_matrix(static_cast<int>(x.size()), f).apply(x);
}

Vector cartan_from_cd(const Vector& x, const FieldDescriptor& f) {
  return cd_to_cartan_matrix(static_cast<int>(x.size()), f).apply(x);
}

Vector v_basis(int dim, unsigned g, Character alpha, const FieldDescriptor& f) {
  check_dim(dim);
  if (dim < 2) throw Error(Errc::BadDimension, "v-basis needs dim >= 2");
  if ((g & 1u) != 0 || g >= static_cast<unsigned>(dim))
    throw Error(Errc::PreconditionViolated, "g must lie in the subgroup generated by a2, a3");
  Scalar c = f.sqrt_two() / f.from_int(4);
  Vector v = zero_vector(dim, f.zero());
  v[g] = c * f.from_int(cd_sigma(0, g));
  v[g | 1u] = c * f.from_int(char_value(alpha, 1) * cd_sigma(1, g)) * f.sqrt_minus_one();
  return v;
}

std::vector<Vector> commutative_center(const HurwitzAlgebra& a) {
  std::size_t n = a.dim();
  Matrix big(n * n, n, a.field().zero());
  for (std::size_t b = 0; b < n; ++b) {
    Matrix d = a.right_mult(a.basis(b)) - a.left_mult(a.basis(b));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) big(b * n + r, c) = d(r, c);
  }
  return kernel(big);
}

}  // namespace kantorlab
