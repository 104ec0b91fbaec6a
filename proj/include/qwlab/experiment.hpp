#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwlab/weak_limit.hpp"

namespace qwlab {

inline constexpr const char* kToolVersion = "qwlab 0.1.0";
inline constexpr int kConfigSchemaVersion = 1;

// Exit codes of the experiment driver.
inline constexpr int kExitPass = 0;
inline constexpr int kExitInvalidConfig = 1;
inline constexpr int kExitNumericalFail = 2;
inline constexpr int kExitInternalError = 3;

/// Raised for malformed configurations; maps to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
  Evolve,
  Spectrum,
  Assumption,
  Waveop,
  WeakLimit,
  Sweep,
  Validate,
};

ExperimentKind experiment_kind_from_string(const std::string& s);
std::string to_string(ExperimentKind kind);

/// Angles are accepted as plain radians or as rational multiples of pi
/// in string form ("pi/4", "-3pi/4", "0.5pi", "2*pi/3").
double parse_angle(const nlohmann::json& v);

struct InitialStateSpec {
  enum class Kind { Delta, Gaussian };
  Kind kind = Kind::Delta;
  Site site = 0;          // delta
  Site center = 0;        // gaussian
  double width = 10.0;    // gaussian
  int band = 0;           // gaussian: 0 = none, 1/2 = project onto band j
  Spin spin = (Spin() << 1.0, 0.0).finished();

  LatticeState build(const CoinParams& coin) const;
};

struct Tolerances {
  double kolmogorov = 0.05;
  double cf_gap = 0.05;
  double waveop_final = 0.01;
  double point_mass = 0.02;
};

/// Parsed and validated experiment description.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Validate;
  WalkModel model{CoinParams::hadamard()};
  InitialStateSpec initial_state;
  std::filesystem::path out_dir = "results";
  int kgrid = 4096;
  std::int64_t T = 2000;
  std::vector<std::int64_t> T_list;
  std::vector<std::int64_t> checkpoints;
  Site radius = 20;
  std::int64_t T_avg = 1000;
  std::int64_t T_wave = 0;  // 0: use last certified checkpoint
  Site assumption_radius = 10000;
  Tolerances tolerances;
  int threads = 1;
  nlohmann::json raw;  // canonical source document (after overrides)

  std::string config_hash() const;  // sha256 of the canonical document
};

/// Schema and cross-field diagnostics; empty result means valid.
std::vector<std::string> validate_config(const nlohmann::json& doc);

/// Parses a validated document.  Throws ConfigError on any diagnostic.
ExperimentConfig parse_config(const nlohmann::json& doc);

/// Scalar overrides applied before validation (CLI flags).
struct ConfigOverrides {
  std::optional<std::string> experiment;
  std::optional<std::string> out_dir;
  std::optional<int> kgrid;
  std::optional<int> threads;
  std::map<std::string, double> tolerances;
};
nlohmann::json apply_overrides(nlohmann::json doc, const ConfigOverrides& ov);

/// Runs one experiment; writes <out>/<kind>/<hash>/{report.json,MANIFEST,data/*}
/// and returns an exit code.  Outputs are deterministic: identical
/// configs produce identical bytes.
int run_experiment(const ExperimentConfig& config);

/// Expands the sweep grid into per-point configs, runs them in a worker
/// pool, and writes a collated table.  Per-row failures are recorded
/// and do not abort the sweep.
int run_sweep(const ExperimentConfig& config);

/// SHA-256 digest (lowercase hex) of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace qwlab
