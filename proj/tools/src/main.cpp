#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kdirac/report.hpp"

namespace {

int compare_golden(kdirac::Report& report, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read golden file " << path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = report.to_json_text();
  report.check("golden:" + path, true, buf.str() == text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan-Kahler involutivity checks for k-Dirac operators"};
  kdirac::RunConfig config;
  std::string op = "euclidean";
  std::string golden;
  bool json = false;
  bool write_golden = false;
  bool verify_all = false;
  unsigned degree = 0;

  app.add_option("--operator", op, "euclidean or parabolic")->check(CLI::IsMember({"euclidean", "parabolic"}));
  app.add_option("--n", config.n, "number of rows (n >= 3)");
  app.add_option("--k", config.k, "number of columns (k >= 2)");
  app.add_option("--level", config.level, "prolongation level 0, 1 or 2");
  app.add_option("--ordering", config.ordering, "paper, greedy, random or random:<seed>");
  auto* degree_opt = app.add_option("--degree", degree, "also compute the degree-d solution space");
  auto* seed_opt = app.add_option("--seed", config.seed, "seed for --ordering random");
  app.add_flag("--json", json, "emit canonical JSON");
  app.add_flag("--timing", config.include_timing, "include stage timings in JSON output");
  app.add_option("--golden", golden, "golden JSON file to compare against");
  app.add_flag("--write-golden", write_golden, "write the JSON report to the --golden path");
  app.add_flag("--verify-all", verify_all, "run the full verification matrix");
  (void)seed_opt;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (write_golden && golden.empty()) {
    std::cerr << "--write-golden needs --golden <path>\n";
    return 2;
  }
  if (degree_opt->count() > 0) config.degree = degree;
  config.op = op == "parabolic" ? kdirac::RunConfig::Operator::parabolic : kdirac::RunConfig::Operator::euclidean;

  kdirac::Report report;
  try {
    if (verify_all) {
      report = kdirac::verify_paper_matrix(config.include_timing);
    } else {
      report = kdirac::run(config);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  }

  if (write_golden) {
    std::ofstream out(golden, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write golden file " << golden << "\n";
      return 2;
    }
    out << report.to_json_text();
  } else if (!golden.empty()) {
    if (const int rc = compare_golden(report, golden); rc != 0) return rc;
  }

  if (json) {
    std::cout << report.to_json_text();
  } else {
    std::cout << report.to_text();
  }
  return report.all_pass() ? 0 : 1;
}
