#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcpcert/bnekrasov.hpp"
#include "lcpcert/lcp.hpp"
#include "lcpcert/matrix.hpp"
#include "lcpcert/nekrasov.hpp"
#include "lcpcert/oracle.hpp"

namespace lcpcert {

enum class Command { Classify, Bound, Sweep, Verify, Lcp };
enum class OutputFormat { Json, Csv, Text };

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoBound = 2;

struct RunConfig {
  Command command = Command::Bound;
  std::string matrix_path;
  std::optional<std::string> q_path;
  std::optional<double> epsilon;
  std::size_t grid = 101;
  std::size_t samples = kDefaultOracleSamples;
  std::uint64_t seed = 42;
  std::optional<OutputFormat> format;
  // "all", "gp-nekrasov", "new-nekrasov", "gp-bnekrasov", "new-bnekrasov".
  std::string theorem = "all";
  // Lemma-suite trials for verify (default 1000), trial points for lcp (default 100).
  std::optional<std::size_t> trials;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // stdout
  std::string error;   // stderr
};

/// One row of an epsilon sweep. gp_bound is empty when the epsilon-parameterized
/// bound does not apply at that epsilon (rendered "n/a").
struct SweepRow {
  double epsilon = 0.0;
  std::optional<double> gp_bound;
  double new_bound = 0.0;
};

struct Sweep {
  Theorem gp_theorem;
  Theorem new_theorem;
  EpsilonInterval interval;
  std::vector<SweepRow> rows;
};

/// Strictly interior grid eps_k = L + k (U - L)/(grid + 1), k = 1..grid, over the
/// admissible interval of `gp` (GpNekrasov or GpBNekrasov).
/// Throws InapplicableBound when the theorem does not apply to M, DomainError
/// when grid < 2.
Sweep epsilon_sweep(const Matrix& m, Theorem gp, std::size_t grid);

/// Picks GpNekrasov when it applies at the interval midpoint, otherwise
/// GpBNekrasov; nullopt when neither does.
std::optional<Theorem> choose_sweep_theorem(const Matrix& m);

std::string format_sweep_csv(const Sweep& sweep);

nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const OracleEstimate& e);
nlohmann::json to_json(const LemmaReport& r);
nlohmann::json to_json(const ErrorCertificate& c);

/// The gp bound at `epsilon`, or at the interval midpoint when epsilon is unset.
BoundReport gp_bound_at(const Matrix& m, Theorem gp, std::optional<double> epsilon);

/// gp_nekrasov, new_nekrasov, gp_bnekrasov, new_bnekrasov in that order.
std::vector<BoundReport> all_lcp_bounds(const Matrix& m, std::optional<double> epsilon);

/// Applicable report with the smallest value, if any.
std::optional<BoundReport> best_bound(const std::vector<BoundReport>& bounds);

CommandResult cmd_classify(const RunConfig& cfg);
CommandResult cmd_bound(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_lcp(const RunConfig& cfg);

/// Dispatches on cfg.command; library errors become exit code 1 with the
/// message in `error`.
CommandResult run_command(const RunConfig& cfg);

}  // namespace lcpcert
