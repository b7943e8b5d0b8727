#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kantorlab/autorb.hpp"
#include "kantorlab/grading.hpp"
#include "kantorlab/liealg.hpp"
#include "kantorlab/report.hpp"

namespace kantorlab {

inline constexpr int kSchemaVersion = 1;
const char* tool_version();

struct SuiteConfig {
  std::string suite;
  int dim = 0;                       // 0 runs every dimension the suite supports
  std::optional<std::string> field;  // unset: the suite's default fields
  std::string system;                // pair, triple or empty for the suite default
  std::string grading;               // weyl suite only: cd, cartan or empty for both
  int jobs = 0;
  std::uint64_t seed = 1;
  bool slow = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<std::string> fields;
  std::vector<Report> reports;
  nlohmann::json data = nlohmann::json::object();
  bool pass() const;
};

const std::vector<std::string>& suite_names();

// UnknownSuite for names outside suite_names(), InvalidCombination for
// dim/field/system choices the suite does not cover.
SuiteResult run_suite(const SuiteConfig& c);

// {schema_version, tool_version, suite, status, fields, cases_checked, reports, data}
nlohmann::json suite_json(const SuiteResult& r);
std::string suite_markdown(const SuiteResult& r);

// Jacobi on random linear combinations of basis vectors.
Report jacobi_random(const LieAlgebra& l, std::size_t samples, std::uint64_t seed);

Report lie_dimension_check(const FieldDescriptor& f, int dim);

// U_x, the ternary identity, L_psi = K, the v-basis product rule and trace
// homogeneity, each on basis tuples plus `samples` random tuples.
std::vector<Report> identity_battery(const FieldDescriptor& f, std::size_t samples, std::uint64_t seed);

// basis change CD <-> Cartan, E o R and R o E on the fine gradings, and
// pair_from_graded o kantor on Hurwitz pairs and triple systems.
std::vector<Report> round_trips(const FieldDescriptor& f);

// Orbits of the char-3 generators on V^+ and the trace pairing identity on
// every element of the group they generate.
struct CharThreeResult {
  OrbitPartition orbits;
  std::size_t group_order = 0;
  Report transitivity;
  Report dual_inverse;
};
CharThreeResult char_three_check(const FieldDescriptor& f);

GradingType main_grading_type(const FieldDescriptor& f, int dim);

struct SummaryRow {
  int dim = 0;
  std::size_t lie_dim = 0;
  std::string univ_z;
  GradingType type_z;
  std::optional<std::string> univ_cd;
  std::optional<GradingType> type_cd;
};

std::vector<SummaryRow> compute_summary(const FieldDescriptor& f);
// fixture compiled into the library
const nlohmann::json& expected_summary();
// one failure per cell that differs
Report compare_summary(const std::vector<SummaryRow>& rows, const nlohmann::json& expected);
nlohmann::json summary_json(const std::vector<SummaryRow>& rows);
std::string summary_markdown(const std::vector<SummaryRow>& rows);

}  // namespace kantorlab
