#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kantorlab {

struct Report {
  std::string identity;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // first few witnesses only
  std::vector<std::string> notes;

  bool pass() const { return failure_count == 0; }
  void fail(std::string witness);
  void merge(const Report& other);
  nlohmann::json to_json() const;
};

// KANTORLAB_JOBS if set, otherwise hardware concurrency.
int default_jobs();
void set_default_jobs(int jobs);

// Runs check(i) for i in [0, n) over a worker pool; failures are collected
// in index order so reports do not depend on scheduling.
Report run_cases(const std::string& identity, std::size_t n,
                 const std::function<std::optional<std::string>(std::size_t)>& check, int jobs = 0);

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int jobs = 0);

}  // namespace kantorlab
