#ifndef KDIRAC_REPORT_HPP
#define KDIRAC_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kdirac/tableau.hpp"

namespace kdirac {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  enum class Operator { euclidean, parabolic };
  Operator op = Operator::euclidean;
  std::size_t n = 3;
  std::size_t k = 2;
  std::size_t level = 0;
  std::string ordering = "paper";  // paper | greedy | random[:<seed>]
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> degree;
  bool include_timing = false;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
};

struct NamedCartan {
  std::string label;
  CartanReport report;
};

struct Report {
  nlohmann::json config;
  std::vector<NamedCartan> cartan;
  std::map<std::string, std::uint64_t> dims;
  std::map<std::string, std::vector<std::uint64_t>> component_dims;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timing_ms;
  bool include_timing = false;

  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] std::string to_json_text() const;
  [[nodiscard]] std::string to_text() const;

  void check(std::string name, const nlohmann::json& expected, const nlohmann::json& actual);
};

nlohmann::json cartan_json(const CartanReport& r);

Report run(const RunConfig& config);

/// Every claim of the verification matrix, one check per instance.
Report verify_paper_matrix(bool include_timing = false);

}  // namespace kdirac

#endif  // KDIRAC_REPORT_HPP
