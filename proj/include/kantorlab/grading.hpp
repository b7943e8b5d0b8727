#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "kantorlab/liealg.hpp"

namespace kantorlab {

// free coordinates first, then one residue per invariant factor
using GroupElement = std::vector<long long>;

// Z^rank x Z_{d1} x ... x Z_{ds}, d1 | d2 | ... | ds, each di >= 2.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  FGAbelianGroup(int rank, std::vector<long long> torsion);
  // any positive moduli; brought to invariant factor form
  static FGAbelianGroup canonical(int rank, const std::vector<long long>& moduli);
  static FGAbelianGroup product(const FGAbelianGroup& a, const FGAbelianGroup& b);

  int rank() const { return rank_; }
  const std::vector<long long>& torsion() const { return torsion_; }
  std::size_t size() const { return rank_ + torsion_.size(); }

  GroupElement zero() const { return GroupElement(size(), 0); }
  GroupElement reduce(GroupElement g) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement times(long long k, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;
  // 0 for elements of infinite order
  long long order(const GroupElement& a) const;

  std::string to_string() const;
  bool operator==(const FGAbelianGroup& o) const { return rank_ == o.rank_ && torsion_ == o.torsion_; }

 private:
  int rank_ = 0;
  std::vector<long long> torsion_;
};

std::string to_string(const GroupElement& g);

struct GroupHom {
  FGAbelianGroup source;
  FGAbelianGroup target;
  std::vector<GroupElement> images;  // of the standard generators of source
  GroupElement apply(const GroupElement& x) const;
};

// For algebras and triple systems only `plus` is used.
struct DegreeMap {
  FGAbelianGroup group;
  std::vector<GroupElement> plus;
  std::vector<GroupElement> minus;
  bool is_pair() const { return !minus.empty(); }
};

// Degrees on an arbitrary homogeneous basis (coordinate vectors) of a Lie algebra.
struct LieGrading {
  FGAbelianGroup group;
  std::vector<GroupElement> degree;
  std::vector<Vector> basis;
};

Report is_grading(const HurwitzAlgebra& a, const DegreeMap& g);
Report is_grading(const KantorPair& p, const DegreeMap& g);
Report is_grading(const TripleSystem& t, const DegreeMap& g);
Report is_grading(const LieAlgebra& l, const LieGrading& g);

// Z_2^m on the Cayley-Dickson basis of C
DegreeMap cd_algebra_grading(int dim);
// (s1, g) over Z x Z_2^m; ExcludedCase in characteristic 3, dimension 2
DegreeMap cd_pair_grading(int dim, const FieldDescriptor& f);
// (1, g) over Z_2^{m+1}
DegreeMap cd_triple_grading(int dim);
// on the Cartan basis; dimension 1 uses the Cayley-Dickson degrees
DegreeMap cartan_pair_grading(int dim);
DegreeMap cartan_triple_grading(int dim);

DegreeMap shift_pair(const DegreeMap& g, const GroupElement& s);
// OrderViolation unless 2s = 0
DegreeMap shift_triple(const DegreeMap& g, const GroupElement& s);

DegreeMap coarsen(const DegreeMap& g, const GroupHom& h);
LieGrading coarsen(const LieGrading& g, const GroupHom& h);

LieGrading extend_to_lie(const LieAlgebra& l, const DegreeMap& pair_grading);
// NotKantorCompatible unless L_{-1} and L_1 are graded subspaces
DegreeMap restrict_from_lie(const LieAlgebra& l, const LieGrading& g);

using IntMatrix = std::vector<std::vector<mpz_class>>;
struct SmithForm {
  IntMatrix u, s, v;  // u * m * v = s
};
SmithForm smith_normal_form(const IntMatrix& m);

struct UniversalGroup {
  FGAbelianGroup group;
  std::vector<GroupElement> support;    // distinct input degrees
  std::vector<GroupElement> canonical;  // their images in the universal group
  std::size_t relations = 0;
  GroupElement canonical_of(const GroupElement& input) const;
};

UniversalGroup universal_group(const HurwitzAlgebra& a, const DegreeMap& g);
UniversalGroup universal_group(const KantorPair& p, const DegreeMap& g);
UniversalGroup universal_group(const TripleSystem& t, const DegreeMap& g);
UniversalGroup universal_group(const LieAlgebra& l, const LieGrading& g);

// n_i = number of components of dimension i; pairs count V+_g + V-_g together
using GradingType = std::vector<std::size_t>;
GradingType grading_type(const DegreeMap& g);
GradingType grading_type(const LieGrading& g);
std::string to_string(const GradingType& t);

struct SupportEntry {
  GroupElement degree;
  std::size_t dimension;
};
std::vector<SupportEntry> support(const DegreeMap& g);
std::vector<SupportEntry> support(const LieGrading& g);

// pi: Univ -> Z with pi = s1 on supp V^s, disjoint supports, and for
// Cayley-Dickson gradings Univ = Univ(algebra grading) x Z.
Report structural_checks(const KantorPair& p, const DegreeMap& g, const std::optional<DegreeMap>& algebra = {});
// Univ = Univ(algebra grading) x Z_2
Report structural_checks(const TripleSystem& t, const DegreeMap& g, const std::optional<DegreeMap>& algebra = {});

// n(x^+, y^-) != 0 on homogeneous basis vectors forces deg x + deg y = 0.
Report trace_homogeneity(const KantorPair& p, const DegreeMap& g);

nlohmann::json grading_json(const std::string& system, int dim, const std::string& field, const std::string& name,
                            const UniversalGroup& u, const GradingType& type, const std::vector<SupportEntry>& supp);

}  // namespace kantorlab
