#pragma once

#include <vector>

#include "qwlab/lattice_state.hpp"
#include "qwlab/walk_operators.hpp"

namespace qwlab {

enum class Direction { Forward, Backward };  // t -> +inf / t -> -inf

/// Finite-time modified wave operator approximant
///   W_T psi = U^{-T} J U0^{T} psi        (Forward)
///   W_T psi = U^{+T} J U0^{-T} psi       (Backward)
/// an exact isometry for every T (composition of unitaries).
LatticeState apply_waveop(const WalkModel& model, std::int64_t T,
                          const LatticeState& psi,
                          Direction dir = Direction::Forward);

/// Adjoint approximant  U0^{-T} J^{-1} U^{T} psi  (Forward; signs flip
/// for Backward).
LatticeState apply_waveop_adjoint(const WalkModel& model, std::int64_t T,
                                  const LatticeState& psi,
                                  Direction dir = Direction::Forward);

/// Cauchy-sequence telemetry for the approximants.
struct ConvergenceTelemetry {
  struct Row {
    std::int64_t t;        // checkpoint time
    double increment;      // ||W_t psi - W_prev psi|| (prev = 0 for first row)
    double tail_proxy;     // sum_{|x| > a t - R0} ||C(x) - C~0(x)||
  };
  std::vector<Row> rows;
  double final_increment = 0.0;
  bool decreasing = false;  // increments strictly decreasing
  double tolerance = 0.0;
  bool pass = false;        // decreasing and final increment <= tolerance
};

/// Runs the approximant at the given increasing checkpoints and records
/// consecutive increments plus the trace-norm tail proxy.  For the
/// homogeneous model every increment is identically zero.
ConvergenceTelemetry convergence_study(const WalkModel& model,
                                       const LatticeState& psi,
                                       const std::vector<std::int64_t>& checkpoints,
                                       double tolerance = 0.01,
                                       Direction dir = Direction::Forward);

/// || W_T (U0 psi) - U (W_{T+1} psi) ||: an algebraic identity of the
/// finite products, zero up to floating-point rounding.
double intertwining_check(const WalkModel& model, std::int64_t T,
                          const LatticeState& psi);

}  // namespace qwlab
