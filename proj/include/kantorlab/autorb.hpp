#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kantorlab/grading.hpp"
#include "kantorlab/kantor.hpp"

namespace kantorlab {

enum class SystemKind { Pair, Triple };
enum class GradingKind { CayleyDickson, Cartan };

const char* system_kind_name(SystemKind k);
const char* grading_kind_name(GradingKind k);

struct TripleAutomorphism {
  Matrix matrix;
  std::string provenance;
};

struct PairAutomorphism {
  Matrix phi_plus;
  Matrix phi_minus;
  std::string provenance;
};

bool is_triple_automorphism(const TripleSystem& t, const Matrix& phi);

// NotAnAutomorphism unless the map preserves the product on basis triples.
TripleAutomorphism make_triple_automorphism(const TripleSystem& t, Matrix phi, std::string provenance);
PairAutomorphism make_pair_automorphism(const KantorPair& p, Matrix phi_minus, Matrix phi_plus,
                                        std::string provenance);

PairAutomorphism make_c_lambda(const KantorPair& p, const Scalar& lambda);
// only lambda = +-1 survives verification
TripleAutomorphism make_c_lambda(const TripleSystem& t, const Scalar& lambda);
// dimension 2, Cartan basis: e1 -> lambda e1, e2 -> lambda^-1 e2
TripleAutomorphism make_f_lambda(const TripleSystem& t, const Scalar& lambda);
// dimension 2, Cartan basis: e1 <-> e2
TripleAutomorphism make_swap(const TripleSystem& t);
// dimension 2 pairs on the Cartan basis
PairAutomorphism make_T(const KantorPair& p, const Scalar& alpha, const Scalar& beta);
PairAutomorphism make_A_lambda(const KantorPair& p, const Scalar& lambda);
// x in carrier coordinates with t(x) = 0, n(x) = 1
TripleAutomorphism make_left_mult(const TripleSystem& t, const Vector& x);
// x_g -> omega(g) x_g, omega the sign character of the a1 coordinate
TripleAutomorphism make_f_omega(const TripleSystem& t);

PairAutomorphism lift(const KantorPair& p, const TripleAutomorphism& a);
TripleAutomorphism compose(const TripleSystem& t, const TripleAutomorphism& a, const TripleAutomorphism& b);
PairAutomorphism compose(const KantorPair& p, const PairAutomorphism& a, const PairAutomorphism& b);

// Orbit classes; dimension 1 has only O0 and O1.
int rank(const HurwitzAlgebra& a, const Vector& x, SystemKind k);
std::string orbit_invariant(const HurwitzAlgebra& a, const Vector& x, SystemKind k);

struct OrbitInfo {
  Vector representative;
  std::size_t size = 0;
  std::vector<std::string> labels;  // distinct invariant labels met inside the orbit
};

struct OrbitPartition {
  std::string field;
  std::size_t dim = 0;
  std::vector<OrbitInfo> orbits;  // sorted by size, then representative index
  std::size_t total() const;
};

using OrbitLabeler = std::function<std::string(const Vector&)>;

// BFS over all of F^dim; TooLarge above 10^5 vectors.
OrbitPartition orbit_enumerate(const FieldDescriptor& f, std::size_t dim, const std::vector<Matrix>& generators,
                               const OrbitLabeler& label = {});
// every orbit carries one label and distinct orbits carry distinct labels
Report orbit_label_consistency(const OrbitPartition& p);

// Default generators on the Cartan basis of dimension 1 or 2:
// pair char 3 dim 2: tau, T_{theta,1}, T_{1,theta}, A_lambda over an F_p basis;
// pair otherwise: c_theta with lifted f_theta and swap; triple: f_theta, swap, c_-1.
std::vector<PairAutomorphism> default_pair_generators(const KantorPair& p);
std::vector<TripleAutomorphism> default_triple_generators(const TripleSystem& t);
OrbitPartition standard_orbits(const FieldDescriptor& f, SystemKind k, int dim);

// Closure of a finite matrix group; TooLarge beyond limit elements.
std::vector<Matrix> matrix_group_closure(const std::vector<Matrix>& generators, std::size_t limit = 100000);

Report isometry_and_trace_checks(const AlgebraPtr& a, const std::vector<TripleAutomorphism>& autos);
Report isometry_and_trace_checks(const AlgebraPtr& a, const std::vector<PairAutomorphism>& autos);

// basis_i -> lambda_i basis_{rho(i)}; lambdas drawn from the 8th roots of unity
// in the field, the rest propagated through the multiplicative equations.
std::optional<TripleAutomorphism> solve_monomial_automorphism(const TripleSystem& t,
                                                              const std::vector<std::size_t>& rho);

struct SupportLabel {
  Sign sign = Sign::Plus;
  GroupElement degree;
  std::vector<std::size_t> basis;  // basis indices of the component
};

using SupportPermutation = std::vector<std::size_t>;

struct WeylResult {
  std::vector<SupportLabel> support;
  std::vector<SupportPermutation> generators;
  std::vector<SupportPermutation> elements;
  std::size_t order = 0;
  std::size_t predicted_order = 0;
};

// GeneratorNotHomogeneous unless every generator permutes the components.
WeylResult weyl_group(const DegreeMap& g, const std::vector<PairAutomorphism>& gens);
WeylResult weyl_group(const DegreeMap& g, const std::vector<TripleAutomorphism>& gens);

// CD: L_{x_g} for g != 0 plus monomial lifts of generators of GL_m(Z_2).
// Cartan: L_{x_g} for g in <a2, a3>, f_omega, monomial permutations of u1, u2, u3.
std::vector<TripleAutomorphism> weyl_generators(const TripleSystem& t, GradingKind k);
std::size_t predicted_weyl_order(GradingKind k, int dim);
// dims 2, 4, 8 over Q(zeta8)
WeylResult compute_weyl(GradingKind k, SystemKind s, int dim);

// CD: fixes the first coordinate, affine on Z_2^m, same map on both signs.
Report weyl_block_form_check(const WeylResult& w, int dim);
// Cartan: acts on labels (g, alpha) as rho x tau.
Report weyl_product_form_check(const WeylResult& w, int dim);

std::vector<std::vector<std::size_t>> cycles(const SupportPermutation& p);

nlohmann::json weyl_json(GradingKind k, SystemKind s, int dim, const WeylResult& w);
nlohmann::json orbits_json(SystemKind k, const OrbitPartition& p);

}  // namespace kantorlab
