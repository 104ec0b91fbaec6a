#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qwlab/lattice_state.hpp"
#include "qwlab/momentum.hpp"
#include "qwlab/scattering.hpp"
#include "qwlab/weak_limit.hpp"

namespace qwlab {

/// Shortest decimal that round-trips a double bit-exactly (17
/// significant digits at most).
std::string format_double(double v);

// State serialization.  CSV rows are
//   x,re1,im1,re2,im2
// and the JSON form is {"offset": o, "amplitudes": [[re1,im1,re2,im2], ...]}.
// Both round-trip bit-exactly at double precision.
std::string state_to_csv(const LatticeState& psi);
LatticeState state_from_csv(const std::string& text);
nlohmann::json state_to_json(const LatticeState& psi);
LatticeState state_from_json(const nlohmann::json& j);

// Tabular exports.
std::string band_to_csv(const BandDecomposition& band);              // k, bands, velocities
std::string cdf_to_csv(const StepCdf& cdf);                          // v, F(v)
std::string cdf_pair_to_csv(const StepCdf& empirical, const StepCdf& predicted);
std::string distribution_to_csv(const EmpiricalScaledLaw& law);      // x, prob
std::string assumption_to_csv(const AssumptionReport& report);       // x, residuals, bound
std::string telemetry_to_csv(const ConvergenceTelemetry& telemetry); // t, increment, tail

}  // namespace qwlab
