#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kantorlab/kantor.hpp"

namespace kantorlab {

enum class Piece { KMinus, VMinus, D, VPlus, KPlus, Abstract };
const char* piece_name(Piece p);
int piece_degree(Piece p);

// Generator a basis vector was extracted from: K(e_i,e_j), e_i, or nu(e_i,e_j).
struct Witness {
  Piece piece = Piece::Abstract;
  std::size_t i = 0;
  std::size_t j = 0;
};

// Element of End(V- + V+) together with a vector of V- + V+.
struct Block {
  Matrix m;
  Vector v;
};

class LieAlgebra;
using LiePtr = std::shared_ptr<const LieAlgebra>;

class LieAlgebra {
 public:
  static LiePtr kantor(const KantorPair& p);
  // table[i * dim + j] = [b_i, b_j]
  static LiePtr from_structure_constants(std::size_t dim, std::vector<SparseVec> table, Scalar proto,
                                         std::optional<std::vector<int>> z_degree = std::nullopt,
                                         std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const Scalar& proto() const { return proto_; }
  const SparseVec& bracket_terms(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis(std::size_t i) const { return unit_vector(dim_, i, proto_); }
  Matrix ad(const Vector& x) const;
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::optional<std::vector<int>>& z_degree() const { return z_degree_; }
  std::vector<std::size_t> component(int degree) const;

  // Only for algebras built by the Kantor construction.
  bool realized() const { return pair_.has_value(); }
  const KantorPair& pair() const;
  const Witness& witness(std::size_t i) const { return witness_[i]; }
  std::size_t n_minus() const { return n_minus_; }
  std::size_t n_plus() const { return n_plus_; }
  const Block& realization(std::size_t i) const { return blocks_[i]; }
  Block realize(const Vector& coords) const;
  // throws PreconditionViolated if b is not in the span
  Vector coords_of(const Block& b) const;
  Block block_bracket(const Block& x, const Block& y) const;

 private:
  LieAlgebra() = default;

  std::size_t dim_ = 0;
  Scalar proto_;
  std::vector<SparseVec> table_;
  std::optional<std::vector<int>> z_degree_;
  std::vector<std::string> labels_;

  std::optional<KantorPair> pair_;
  std::shared_ptr<const OperatorTables> ops_;
  std::size_t n_minus_ = 0;
  std::size_t n_plus_ = 0;
  std::vector<Witness> witness_;
  std::vector<Block> blocks_;
  std::vector<SparseVec> flat_;
  std::vector<std::size_t> pivots_;
  Matrix coord_map_;  // dim x dim, coords = coord_map_ * (flat restricted to pivots)
};

Block vector_bracket(const KantorPair& p, const OperatorTables& ops, const Vector& x, const Vector& y);

// Jacobi on all basis triples i < j < k, plus antisymmetry on basis pairs.
Report verify_jacobi(const LieAlgebra& l, int jobs = 0);
// [L_i, L_j] inside L_{i+j}, and zero outside degrees -2..2.
Report verify_z_grading(const LieAlgebra& l);
Subspace ideal_closure(const LieAlgebra& l, const std::vector<Vector>& generators);
bool is_simple(const LieAlgebra& l, int jobs = 0);

// (L_{-k}, L_k) with {x,y,z} = [[x,y],z]; GradingMissing without a Z-grading.
KantorPair pair_from_graded(const LieAlgebra& l, int level = 1);

Report jordan_pair_iv_k_check(const LieAlgebra& l);

// Extension of (phi-, phi+) to the Kantor algebra, as a matrix in L coordinates.
Matrix extend_automorphism(const LieAlgebra& l, const Matrix& phi_minus, const Matrix& phi_plus);
bool is_lie_automorphism(const LieAlgebra& l, const Matrix& m);

Scalar killing_form(const LieAlgebra& l, const Vector& x, const Vector& y);

using DegreeKey = std::vector<long long>;

struct RootDatum {
  std::vector<std::size_t> cartan;  // basis indices spanning H
  std::vector<Vector> roots;        // values on the H basis
  std::vector<std::vector<std::size_t>> root_spaces;
  Matrix killing_h;
  Matrix killing_h_inverse;
  std::size_t rank_of_roots = 0;
};

// degree[i] is the degree of basis vector i in a grading whose zero component
// is a Cartan subalgebra.
RootDatum cartan_subalgebra_and_roots(const LieAlgebra& l, const std::vector<DegreeKey>& degree);
Scalar root_pairing(const RootDatum& r, const Vector& a, const Vector& b);

}  // namespace kantorlab
