#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stpsw/description.hpp"

namespace stpsw {

inline constexpr const char* kToolVersion = "0.1.0";

/// Process exit statuses of the command-line tool.
enum ExitCode : int { kHolds = 0, kNegative = 1, kInputError = 2, kBudgetExceeded = 3 };

/// One command invocation; only the fields of the selected command are read.
struct RunRequest {
  std::string command;     ///< analyze | attractors | setreach | realize | track | graph | oracle
  std::string subcommand;  ///< property or "all"; fot | dwell; kalman | paths | sequences

  std::optional<std::size_t> t_max;
  bool strict = false;
  std::size_t max_sequences = 1000000;

  std::size_t ell = 1;
  std::string omega0;
  std::string omegad;
  bool quantitative = false;

  std::vector<std::size_t> durations;  ///< FotSpec::infinity for unbounded
  std::vector<std::size_t> min_dwell;

  std::size_t theta0 = 1;
  std::vector<std::size_t> reference;

  std::string out_path;

  std::size_t alpha = 1;
  std::size_t horizon = 1;
  std::string from;
  std::string to;

  bool timestamp = true;
};

struct AnalysisReport {
  nlohmann::ordered_json data;
  std::string text;
  int exit_code = kHolds;
};

enum class ReportFormat { Text, Json };

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// "4,6|1,2" → {{4,6},{1,2}}.
std::vector<std::vector<std::size_t>> parse_subset_class(const std::string& spec);
/// "1,2,2" or "1 2 2" → {1,2,2}; "inf" maps to `infinity_value` when given.
std::vector<std::size_t> parse_index_list(const std::string& spec,
                                          std::optional<std::size_t> infinity_value = std::nullopt);

/// Dispatches one command. Input problems throw (std::invalid_argument, std::out_of_range,
/// ParseError); enumeration overruns throw BudgetExceeded.
AnalysisReport run(const RunRequest& request, const SystemDescription& description);

std::string render(const AnalysisReport& report, ReportFormat format);

}  // namespace stpsw
