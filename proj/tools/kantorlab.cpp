#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kantorlab/errors.hpp"
#include "kantorlab/suites.hpp"

using namespace kantorlab;

namespace {

struct Common {
  std::string emit = "json";
  std::string out;
  int jobs = 0;
  std::uint64_t seed = 1;
  bool timing = false;
  bool slow = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--emit", c.emit, "Output format")->check(CLI::IsMember({"json", "md"}));
  app->add_option("--out", c.out, "Write the report to this file instead of stdout");
  app->add_option("--jobs", c.jobs, "Worker threads (default KANTORLAB_JOBS or all cores)")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "Seed for randomized checks");
  app->add_flag("--timing", c.timing, "Include wall time in the report");
  app->add_flag("--slow", c.slow, "Run exhaustive checks that are sampled by default");
}

int emit(const Common& c, const SuiteResult& r, double seconds) {
  std::string text;
  if (c.emit == "md") {
    text = suite_markdown(r);
    if (c.timing) text += "time: " + std::to_string(seconds) + " s\n";
  } else {
    nlohmann::json j = suite_json(r);
    if (c.timing) j["timing_seconds"] = seconds;
    text = j.dump(2) + "\n";
  }
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "cannot write " << c.out << "\n";
      return 2;
    }
    f << text;
  }
  return r.pass() ? 0 : 1;
}

int run(const Common& c, SuiteConfig cfg) {
  cfg.jobs = c.jobs;
  cfg.seed = c.seed;
  cfg.slow = c.slow;
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r = run_suite(cfg);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (cfg.suite == "summary" && !r.pass()) {
    nlohmann::json j{{"schema_version", kSchemaVersion},
                     {"error", errc_name(Errc::MismatchAgainstPaper)},
                     {"message", "computed table differs from the fixture"}};
    std::cerr << j.dump() << "\n";
  }
  return emit(c, r, s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Kantor pairs and triple systems of Hurwitz type"};
  app.require_subcommand(1);
  Common common;
  SuiteConfig cfg;
  std::string field;

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string names;
  for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
  verify->add_option("--suite", cfg.suite, "One of: " + names)->required();
  verify->add_option("--dim", cfg.dim, "Dimension of C (default: every dimension of the suite)");
  verify->add_option("--field", field, "q | qzeta8 | gf:<p> | gf2:<p>[:<d>]");
  verify->add_option("--system", cfg.system, "pair or triple");
  add_common(verify, common);

  auto* table = app.add_subcommand("table", "Recompute a summary table and compare it with the fixture");
  std::string figure;
  table->add_option("--figure", figure, "Table to emit")->required()->check(CLI::IsMember({"kantor-summary"}));
  table->add_option("--field", field, "Field to compute over (default qzeta8)");
  add_common(table, common);

  auto* weyl = app.add_subcommand("weyl", "Weyl group of a fine grading");
  weyl->add_option("--grading", cfg.grading, "cd or cartan")->required()->check(CLI::IsMember({"cd", "cartan"}));
  weyl->add_option("--system", cfg.system, "pair or triple")->required()->check(CLI::IsMember({"pair", "triple"}));
  weyl->add_option("--dim", cfg.dim, "2, 4 or 8")->required();
  add_common(weyl, common);

  auto* orbits = app.add_subcommand("orbits", "Automorphism orbits over a finite field");
  orbits->add_option("--field", field, "Finite field (default gf2:3 for pairs, gf:17 for triples)");
  orbits->add_option("--system", cfg.system, "pair or triple")->check(CLI::IsMember({"pair", "triple"}));
  orbits->add_option("--dim", cfg.dim, "1 or 2");
  add_common(orbits, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!field.empty()) cfg.field = field;
  if (table->parsed()) cfg.suite = "summary";
  if (weyl->parsed()) cfg.suite = "weyl";
  if (orbits->parsed()) cfg.suite = "orbits";

  try {
    return run(common, cfg);
  } catch (const Error& e) {
    nlohmann::json j{{"schema_version", kSchemaVersion}, {"error", errc_name(e.code())}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    switch (e.code()) {
      case Errc::UnknownSuite:
      case Errc::InvalidCombination:
      case Errc::ParseError:
        return 2;
      default:
        return 1;
    }
  }
}
