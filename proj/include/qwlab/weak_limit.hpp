#pragma once

#include <string>
#include <vector>

#include "qwlab/momentum.hpp"
#include "qwlab/scattering.hpp"

namespace qwlab {

/// Exact position law of the walker at a fixed time, with the scaled
/// coordinate v = x/T.  Deterministic: probabilities are computed from
/// the evolved amplitudes, never sampled.
struct EmpiricalScaledLaw {
  std::int64_t T = 0;
  std::vector<std::pair<Site, double>> samples;  // (x, P(X_T = x)), x ascending
  StepCdf cdf_of_v;

  double total_mass() const;
};

/// Requires ||psi0|| = 1 within 1e-10 and T >= 1.
EmpiricalScaledLaw evolve_distribution(const WalkModel& model,
                                       const LatticeState& psi0,
                                       std::int64_t T);

/// Predicted limiting law of X_t/t: point mass at v = 0 (bound-state
/// weight) plus the absolutely continuous velocity CDF obtained by
/// transporting the initial state with the adjoint wave-operator
/// approximant.
struct LimitLaw {
  double point_mass = 0.0;
  StepCdf ac_cdf;                   // total mass 1 - point_mass
  double point_mass_estimate = 0.0; // raw time-average estimate (diagnostic)
  bool convergence_certified = false;
  std::string warning;              // nonempty when not certified

  StepCdf folded_cdf() const;       // point mass folded in as a jump at 0
  double total_mass() const { return point_mass + ac_cdf.total(); }
};

Complex characteristic_function(const EmpiricalScaledLaw& law, double xi);
Complex characteristic_function(const LimitLaw& law, double xi);

/// Time-averaged probability of staying within |x| <= R:
///   P(R, T_avg) = (1/T_avg) sum_{t=1..T_avg} sum_{|x|<=R} ||(U^t psi0)(x)||^2,
/// together with the (2R, 2T_avg) stabilization diagnostic.  Converges
/// to the bound-state weight of psi0 when the dynamics has no singular
/// continuous component.
struct PointMassEstimate {
  double value = 0.0;
  double doubled = 0.0;  // at (2R, 2T_avg)
};

PointMassEstimate estimate_point_mass(const WalkModel& model,
                                      const LatticeState& psi0, Site radius,
                                      std::int64_t T_avg);

/// Builds the predicted law.  The scattering transport runs at time
/// T_wave; `certificate`, when given, should come from a convergence
/// study of the same model (a failed or missing certificate only
/// attaches a warning).  When the point-mass estimate exceeds 0.02 the
/// initial state is split into localized + escaping parts by time
/// averaging; below that threshold psi0 is used as-is and the estimate
/// is folded into the comparison tolerance.
LimitLaw predicted_limit_law(const WalkModel& model, const LatticeState& psi0,
                             std::int64_t T_wave, const KGrid& grid,
                             const ConvergenceTelemetry* certificate = nullptr,
                             Site pm_radius = 20, std::int64_t pm_T_avg = 1000);

/// Distribution comparison along a time ladder.
struct WeakLimitReport {
  struct Row {
    std::int64_t T;
    double kolmogorov;
    double cf_gap_max;
    double empirical_mass;  // should be 1 within 1e-10
  };
  std::vector<Row> rows;
  double point_mass = 0.0;
  double tol_kolmogorov = 0.0;
  double tol_cf_gap = 0.0;
  bool decreasing = false;  // both metrics nonincreasing along T_list
  bool pass = false;
};

/// Default characteristic-function grid: -5 to 5 in steps of 0.5.
std::vector<double> default_cf_grid();

WeakLimitReport weak_limit_comparison(const WalkModel& model,
                                      const LatticeState& psi0,
                                      const std::vector<std::int64_t>& T_list,
                                      const LimitLaw& law,
                                      double tol_kolmogorov = 0.05,
                                      double tol_cf_gap = 0.05,
                                      const std::vector<double>& cf_grid =
                                          default_cf_grid());

}  // namespace qwlab
