#include "kantorlab/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace kantorlab {

namespace {
constexpr std::size_t kMaxWitnesses = 16;
int g_jobs = 0;
}  // namespace

void Report::fail(std::string witness) {
  ++failure_count;
  if (failures.size() < kMaxWitnesses) failures.push_back(std::move(witness));
}

void Report::merge(const Report& other) {
  cases += other.cases;
  failure_count += other.failure_count;
  for (const auto& f : other.failures)
    if (failures.size() < kMaxWitnesses) failures.push_back(f);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["cases_checked"] = cases;
  j["status"] = pass() ? "pass" : "fail";
  j["failure_count"] = failure_count;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) j["failures"].push_back({{"witness", f}});
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

int default_jobs() {
  if (g_jobs > 0) return g_jobs;
  if (const char* env = std::getenv("KANTORLAB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_jobs(int jobs) { g_jobs = jobs; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Report run_cases(const std::string& identity, std::size_t n,
                 const std::function<std::optional<std::string>(std::size_t)>& check, int jobs) {
  std::vector<std::optional<std::string>> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = check(i); }, jobs);
  Report r;
  r.identity = identity;
  r.cases = n;
  for (auto& w : out)
    if (w) r.fail(std::move(*w));
  return r;
}

}  // namespace kantorlab
