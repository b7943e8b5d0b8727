#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kantorlab/field.hpp"

namespace kantorlab {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, const Scalar& proto);
Vector unit_vector(std::size_t n, std::size_t i, const Scalar& proto);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& proto);
  static Matrix identity(std::size_t n, const Scalar& proto);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& proto() const { return zero_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  Matrix transpose() const;
  bool is_zero() const;
  const std::vector<Scalar>& data() const { return data_; }
  // row-major flattening
  Vector flatten() const { return data_; }

  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  // this += s * o
  void add_scaled(const Scalar& s, const Matrix& o);
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Scalar zero_;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// basis of {x : m x = 0}
std::vector<Vector> kernel(const Matrix& m);
Matrix inverse(const Matrix& m);

struct SolutionSet {
  std::optional<Vector> particular;
  std::vector<Vector> kernel;
  bool empty() const { return !particular.has_value(); }
  bool unique() const { return particular.has_value() && kernel.empty(); }
};
// all x with m x = b
SolutionSet solve(const Matrix& m, const Vector& b);

// Subspace given by its reduced echelon basis (canonical).
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const Scalar& proto, const std::vector<Vector>& span);
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool operator==(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;

 private:
  std::size_t ambient_ = 0;
  Scalar zero_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

// Incrementally built echelon basis; rows kept with unit pivots so membership
// tests reduce in one pass.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}
  // returns true when v was independent of the current rows
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t size() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector reduce(Vector v) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace kantorlab
