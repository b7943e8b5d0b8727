#include "kantorlab/linalg.hpp"

namespace kantorlab {

Vector zero_vector(std::size_t n, const Scalar& proto) { return Vector(n, proto.zero_like()); }

Vector unit_vector(std::size_t n, std::size_t i, const Scalar& proto) {
  Vector v = zero_vector(n, proto);
  v[i] = proto.one_like();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r)
    if (!x.is_zero()) x = s * x;
  return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar r = a.at(0).zero_like();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

std::string to_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Scalar& proto)
    : rows_(rows), cols_(cols), zero_(proto.zero_like()), data_(rows * cols, zero_) {}

Matrix Matrix::identity(std::size_t n, const Scalar& proto) {
  Matrix m(n, n, proto);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  Matrix m(cols.at(0).size(), cols.size(), cols[0].at(0));
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size(), rows.at(0).size(), rows[0].at(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, zero_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Vector Matrix::apply(const Vector& v) const {
  Vector out = zero_vector(rows_, zero_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix out(rows_, o.cols_, zero_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  out.add_scaled(zero_.one_like(), o);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix out = *this;
  out.add_scaled(-zero_.one_like(), o);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_)
    if (!x.is_zero()) x = s * x;
  return out;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& o) {
  if (s.is_zero()) return;
  bool unit = s.is_one();
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (o.data_[i].is_zero()) continue;
    data_[i] += unit ? o.data_[i] : s * o.data_[i];
  }
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) s += kantorlab::to_string(row(r)) + "\n";
  return s;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    Scalar inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) = m(r, k) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> kernel(const Matrix& m) {
  Matrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    Vector v = unit_vector(a.cols(), f, a.proto());
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!a(i, f).is_zero()) v[piv[i]] = -a(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::PreconditionViolated, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.proto());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.proto().one_like();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(Errc::DivisionByZero, "singular matrix");
  Matrix inv(n, n, m.proto());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

SolutionSet solve(const Matrix& m, const Vector& b) {
  std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1, m.proto());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto piv = rref(aug);
  SolutionSet out;
  out.kernel = kernel(m);
  if (!piv.empty() && piv.back() == n) return out;
  Vector x = zero_vector(n, m.proto());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, n);
  out.particular = std::move(x);
  return out;
}

Subspace::Subspace(std::size_t ambient, const Scalar& proto, const std::vector<Vector>& span)
    : ambient_(ambient), zero_(proto.zero_like()) {
  if (span.empty()) return;
  Matrix m = Matrix::from_rows(span);
  pivots_ = rref(m);
  for (std::size_t i = 0; i < pivots_.size(); ++i) basis_.push_back(m.row(i));
}

bool Subspace::contains(const Vector& v) const {
  Vector w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar f = w[pivots_[i]];
    if (!f.is_zero()) axpy(w, -f, basis_[i]);
  }
  return kantorlab::is_zero(w);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return Subspace(ambient_, zero_, all);
}

Vector EchelonBuilder::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar f = v[pivots_[i]];
    if (!f.is_zero()) axpy(v, -f, rows_[i]);
  }
  return v;
}

bool EchelonBuilder::add(const Vector& v) {
  Vector w = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && w[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = w[p].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x = x * inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool EchelonBuilder::contains(const Vector& v) const { return kantorlab::is_zero(reduce(v)); }

}  // namespace kantorlab
