#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kantorlab/field.hpp"
#include "kantorlab/linalg.hpp"

namespace kantorlab {

enum class BasisKind { CayleyDickson, Cartan };

const char* basis_kind_name(BasisKind k);

// sigma_{g,h} for g,h in Z_2^3 encoded with bit0 = a1, bit1 = a2, bit2 = a3.
int cd_sigma(unsigned g, unsigned h);
// |g| = 0 for g = 0, 1 otherwise
inline int parity(unsigned g) { return g == 0 ? 0 : 1; }

struct Term {
  std::size_t index;
  Scalar coeff;
};
using SparseVec = std::vector<Term>;

SparseVec sparse_of(const Vector& v);

class HurwitzAlgebra;
using AlgebraPtr = std::shared_ptr<const HurwitzAlgebra>;

class HurwitzAlgebra {
 public:
  static AlgebraPtr cayley_dickson(int dim, const FieldDescriptor& field);
  static AlgebraPtr cartan(int dim, const FieldDescriptor& field);

  int dim() const { return dim_; }
  // m with dim = 2^m
  int log_dim() const;
  const FieldDescriptor& field() const { return field_; }
  BasisKind basis_kind() const { return kind_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const SparseVec& product_terms(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }
  const Matrix& norm_gram() const { return gram_; }
  const Matrix& involution_matrix() const { return invol_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;

  Vector zero() const { return zero_vector(dim_, field_.zero()); }
  Vector unit() const { return unit_; }
  Vector basis(std::size_t i) const { return unit_vector(dim_, i, field_.zero()); }
  Vector basis(const std::string& label) const { return basis(index_of(label)); }
  Vector random(std::mt19937_64& rng) const;

  Vector mul(const Vector& x, const Vector& y) const;
  Vector conj(const Vector& x) const;
  Scalar polar(const Vector& x, const Vector& y) const;
  Scalar norm(const Vector& x) const;
  Scalar trace(const Vector& x) const;
  Matrix left_mult(const Vector& x) const;
  Matrix right_mult(const Vector& x) const;

  bool same(const HurwitzAlgebra& o) const { return dim_ == o.dim_ && kind_ == o.kind_ && field_ == o.field_; }
  std::string describe() const;

 private:
  HurwitzAlgebra(int dim, FieldDescriptor field, BasisKind kind);
  void finish();

  int dim_;
  FieldDescriptor field_;
  BasisKind kind_;
  std::vector<Vector> table_;
  std::vector<SparseVec> sparse_;
  Matrix gram_;
  Matrix invol_;
  Vector unit_;
  std::vector<std::string> labels_;
};

// Element bound to its algebra; operations across algebras throw MixedAlgebras.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr alg, Vector coords);
  static AlgebraElement basis(const AlgebraPtr& alg, std::size_t i) { return {alg, alg->basis(i)}; }

  const AlgebraPtr& algebra() const { return alg_; }
  const Vector& coords() const { return coords_; }

  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& s) const { return {alg_, scale(s, coords_)}; }
  AlgebraElement conj() const { return {alg_, alg_->conj(coords_)}; }
  Scalar norm() const { return alg_->norm(coords_); }
  Scalar polar(const AlgebraElement& o) const;
  Scalar trace() const { return alg_->trace(coords_); }
  bool operator==(const AlgebraElement& o) const;

 private:
  void check(const AlgebraElement& o) const;
  AlgebraPtr alg_;
  Vector coords_;
};

// Coordinate change between the two bases of the same dimension.
// Columns of the returned matrix are CD coordinates of the Cartan basis.
Matrix cartan_to_cd_matrix(int dim, const FieldDescriptor& field);
Matrix cd_to_cartan_matrix(int dim, const FieldDescriptor& field);
Vector cd_from_cartan(const Vector& cartan_coords, const FieldDescriptor& field);
Vector cartan_from_cd(const Vector& cd_coords, const FieldDescriptor& field);

// Characters of Z_2: trivial (one) or omega(a) = (-1)^{|a|}.
enum class Character { One, Omega };
inline Character twist(Character a) { return a == Character::One ? Character::Omega : Character::One; }
inline int char_value(Character a, unsigned bit) { return (a == Character::Omega && bit) ? -1 : 1; }

// v_g^alpha in CD coordinates; g is an element of the subgroup generated by
// a2 (and a3), encoded in the full Z_2^m index (bit0 must be 0).
Vector v_basis(int dim, unsigned g, Character alpha, const FieldDescriptor& field);

// Span of {z : zx = xz for all x}.
std::vector<Vector> commutative_center(const HurwitzAlgebra& a);

}  // namespace kantorlab
