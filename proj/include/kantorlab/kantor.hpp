#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kantorlab/hurwitz.hpp"
#include "kantorlab/linalg.hpp"
#include "kantorlab/report.hpp"

namespace kantorlab {

enum class TripleKind { Standard, Prime };
enum class Sign { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline const char* sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

// {x,y,z} = (x ybar)z + (z ybar)x - (z xbar)y
Vector standard_triple(const HurwitzAlgebra& a, const Vector& x, const Vector& y, const Vector& z);
// {x,y,z}' = (x ybar)z
Vector prime_triple(const HurwitzAlgebra& a, const Vector& x, const Vector& y, const Vector& z);
// x ybar - y xbar
Vector psi(const HurwitzAlgebra& a, const Vector& x, const Vector& y);

// Structure constants of a trilinear map A x B x A -> A.
class TripleTable {
 public:
  TripleTable() = default;
  TripleTable(std::size_t n_outer, std::size_t n_mid, std::vector<SparseVec> entries, Scalar proto);

  std::size_t outer() const { return n_outer_; }
  std::size_t mid() const { return n_mid_; }
  const Scalar& proto() const { return proto_; }
  const SparseVec& at(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * n_mid_ + j) * n_outer_ + k];
  }
  Vector dense(std::size_t i, std::size_t j, std::size_t k) const;
  Vector eval(const Vector& x, const Vector& y, const Vector& z) const;
  bool operator==(const TripleTable& o) const;

 private:
  std::size_t n_outer_ = 0;
  std::size_t n_mid_ = 0;
  std::vector<SparseVec> e_;
  Scalar proto_;
};

class TripleSystem {
 public:
  TripleSystem(AlgebraPtr carrier, TripleKind kind);

  const AlgebraPtr& carrier() const { return carrier_; }
  TripleKind kind() const { return kind_; }
  std::size_t dim() const { return table_.outer(); }
  const TripleTable& table() const { return table_; }
  Vector triple(const Vector& x, const Vector& y, const Vector& z) const { return table_.eval(x, y, z); }

 private:
  AlgebraPtr carrier_;
  TripleKind kind_;
  TripleTable table_;
};

struct PairElement {
  Sign sign;
  Vector coords;
};

class KantorPair {
 public:
  // both products are the standard triple product of the carrier
  static KantorPair hurwitz(AlgebraPtr carrier);
  static KantorPair from_triple(const TripleSystem& t);
  static KantorPair from_tables(TripleTable plus, TripleTable minus, Scalar proto);

  std::size_t dim(Sign s) const { return table(s).outer(); }
  const TripleTable& table(Sign s) const { return s == Sign::Plus ? plus_ : minus_; }
  const Scalar& proto() const { return proto_; }
  // may be null for pairs read off a graded Lie algebra
  const AlgebraPtr& carrier() const { return carrier_; }

  Vector triple(Sign s, const Vector& x, const Vector& y, const Vector& z) const { return table(s).eval(x, y, z); }
  PairElement triple_pair(Sign s, const PairElement& x, const PairElement& y, const PairElement& z) const;

 private:
  TripleTable plus_;
  TripleTable minus_;
  Scalar proto_;
  AlgebraPtr carrier_;
};

struct Operator {
  Matrix matrix;
  std::string tag;
};

// V^s_{x,y}: z -> {x,y,z}^s on V^s
Operator v_op(const KantorPair& p, Sign s, const Vector& x, const Vector& y);
// U^s_{x,z}: y -> {x,y,z}^s from V^{-s} to V^s
Operator u_op(const KantorPair& p, Sign s, const Vector& x, const Vector& z);
// K^s(x,y): z -> {x,z,y}^s - {y,z,x}^s from V^{-s} to V^s
Operator k_op(const KantorPair& p, Sign s, const Vector& x, const Vector& y);
// nu(x-, x+) = (D_{x-,x+}, -D_{x+,x-}) acting on (V-, V+)
std::pair<Operator, Operator> d_derivation(const KantorPair& p, const Vector& xm, const Vector& xp);
Operator left_op(const HurwitzAlgebra& a, const Vector& x);

// Basis operator tables V^s[i][j], K^s[i][j].
struct OperatorTables {
  std::vector<Matrix> v[2];
  std::vector<Matrix> k[2];
  std::size_t n[2];
  const Matrix& V(Sign s, std::size_t i, std::size_t j) const { return v[idx(s)][i * n[idx(opposite(s))] + j]; }
  const Matrix& K(Sign s, std::size_t i, std::size_t j) const { return k[idx(s)][i * n[idx(s)] + j]; }
  static int idx(Sign s) { return s == Sign::Plus ? 0 : 1; }
};
OperatorTables operator_tables(const KantorPair& p);

Report verify_structurable(const HurwitzAlgebra& a, int jobs = 0);
// Both axioms for both signs, as operator identities on basis tuples.
std::vector<Report> verify_kantor_axioms(const KantorPair& p, int jobs = 0);
std::vector<Report> verify_kantor_axioms(const TripleSystem& t, int jobs = 0);
bool k_identically_zero(const KantorPair& p);

// phi^s {x,y,z}^s = {phi^s x, phi^-s y, phi^s z}^s on basis triples
bool is_pair_automorphism(const KantorPair& p, const Matrix& phi_minus, const Matrix& phi_plus);

// All y with V_{x,y} = id.
SolutionSet conjugate_inverse(const KantorPair& p, Sign s, const Vector& x);

bool ternary_left_identity_check(const HurwitzAlgebra& a, const Vector& x, const Vector& y1, const Vector& y2,
                                 const Vector& y3);

}  // namespace kantorlab
