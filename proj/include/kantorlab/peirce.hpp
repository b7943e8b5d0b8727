#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kantorlab/autorb.hpp"
#include "kantorlab/grading.hpp"
#include "kantorlab/liealg.hpp"

namespace kantorlab {

struct Idempotent {
  Vector plus;
  Vector minus;
  std::string name;
  const Vector& at(Sign s) const { return s == Sign::Plus ? plus : minus; }
};

bool is_idempotent(const KantorPair& p, const Idempotent& e);
bool is_tripotent(const TripleSystem& t, const Vector& e);

// L(e)x = {e^s, e^-s, x}, R(e)x = {x, e^-s, e^s}
Matrix peirce_left(const KantorPair& p, Sign s, const Idempotent& e);
Matrix peirce_right(const KantorPair& p, Sign s, const Idempotent& e);

struct PeirceComponent {
  Scalar lambda;
  Scalar mu;
  std::string label;  // "(lambda,mu)" with rational names
  Subspace plus;
  Subspace minus;  // empty ambient for triple systems
};

struct PeirceDecomposition {
  std::string idempotent;
  std::vector<PeirceComponent> components;
  const PeirceComponent* find(const std::string& label) const;
};

// Candidate constants 0, +-1/2, 1, 3/2, 2, 3; NotDiagonalizable when the
// eigenspaces do not exhaust the space.
PeirceDecomposition peirce_decompose(const KantorPair& p, const Idempotent& e);
// ExcludedCase in characteristic 2, 3 or 5
PeirceDecomposition peirce_decompose(const TripleSystem& t, const Vector& e);

// Components allowed by the tripotent display:
// (0,0) (1/2,1/2) (1,1) (3/2,3/2) (-1/2,0) (0,1) (1/2,2) (1,3).
Report tripotent_display_agreement(const PeirceDecomposition& d);

// e_g^alpha = (v_g^alpha, v_g^{omega alpha}) on the Cartan basis; g in the
// Z_2^m encoding with bit0 = 0.
Idempotent cartan_idempotent(int dim, const FieldDescriptor& f, unsigned g, Character alpha);
std::vector<Idempotent> cartan_idempotents(int dim, const FieldDescriptor& f);

Report verify_cartan_peirce_table(int dim, const FieldDescriptor& f);

// deg x = sigma 2 lambda on the sigma part; NotAGrading if the basis is not
// adapted or the assignment fails.
DegreeMap peirce_z_grading(const KantorPair& p, const Idempotent& e);

// Root of a root vector x given the Cartan subalgebra of r.
Vector root_of(const LieAlgebra& l, const RootDatum& r, const Vector& x);
// L coordinates of x in V^s
Vector embed(const LieAlgebra& l, Sign s, const Vector& x);

struct RootPeirceResult {
  Report report;
  std::vector<std::string> values;  // distinct left constants met
  Report lengths;                   // equal lengths of the roots of V^+ and V^-
};

// Over a char 0 field with i and sqrt 2.
RootPeirceResult root_peirce_constant_check(int dim, const FieldDescriptor& f);

nlohmann::json peirce_json(const PeirceDecomposition& d);

}  // namespace kantorlab
