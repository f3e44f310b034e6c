#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "casnuc/lifshitz.hpp"
#include "casnuc/plasma.hpp"

namespace casnuc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Bad flag, value, config file or output path.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { constants, state, table, sweep, equilibrium, meson, linewidth, plot };

// Merged parameter set. Lengths are kept in fm as given on the command line.
struct Params {
  double L_fm = 1.0;
  double L_min_fm = 1.0;
  double L_max_fm = 3.0;
  int points = 200;
  double R_fm = 0.84;
  std::string mu_model = "spin";
  double H = 0.0;
  double omega_mu = 1e10;
  std::string convention = "table";
  std::string mode = "coupled";
  double L0_fm = 0.0;  // 0: use L_min
  std::string method = "asymptote";
  int which = 2;
  int figure = 1;
  double q_ratio = -1.0;  // required for linewidth
  std::string density = "per-species";
};

struct RunConfig {
  Subcommand subcommand = Subcommand::constants;
  Params params;
  std::string format;  // csv | json | svg; empty picks the subcommand default
  std::string output;  // empty: stdout
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> process_env(const std::string& name);

// Precedence: command-line flag > CASNUC_<NAME> environment variable >
// --config key=value file > built-in default. Throws UsageError.
RunConfig parse_run_config(const std::vector<std::string>& args, const EnvLookup& env);

PermeabilityModel permeability_model(const Params& p);

// Renders the document for a parsed configuration. Validity warnings, if
// any, are appended to `warnings`.
std::string execute(const RunConfig& config, std::vector<std::string>* warnings = nullptr);

// Writes via a temporary file in the same directory and renames it over
// `path`. Throws UsageError when the path is not writable.
void write_atomic(const std::string& path, const std::string& content);

// Full front end: argv without the program name. Returns the process exit
// code (0 ok, 2 usage, 3 numerical).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env);

}  // namespace casnuc::cli
