#pragma once

#include <map>
#include <stdexcept>

#include "qwlab/types.hpp"

namespace qwlab {

/// Finitely supported two-component wavefunction on the integer lattice.
///
/// Amplitudes are stored on a contiguous window [offset, offset+size);
/// sites outside the window are implicitly zero.  States are immutable
/// after construction; every operation returns a new value.  Evolution
/// operators grow the window mechanically (one site per side per step)
/// and never truncate, so dynamics are exact in double precision.
class LatticeState {
 public:
  LatticeState() = default;

  LatticeState(Site offset, Eigen::Matrix2Xcd amplitudes)
      : offset_(offset), amps_(std::move(amplitudes)) {}

  Site offset() const { return offset_; }
  Eigen::Index size() const { return amps_.cols(); }
  bool empty() const { return amps_.cols() == 0; }
  const Eigen::Matrix2Xcd& amplitudes() const { return amps_; }

  /// Amplitude at site x (zero outside the stored window).
  Spin at(Site x) const {
    if (x < offset_ || x >= offset_ + size()) return Spin::Zero();
    return amps_.col(static_cast<Eigen::Index>(x - offset_));
  }

  double squared_norm() const { return amps_.squaredNorm(); }
  double norm() const { return amps_.norm(); }

  /// Drops window edges whose amplitudes are below 1e-300 in magnitude
  /// (subnormal hygiene only; interior values are never touched).
  /// Afterwards the leading and trailing stored sites are nonzero.
  LatticeState trimmed() const;

  LatticeState scaled(Complex factor) const {
    return LatticeState(offset_, factor * amps_);
  }

 private:
  Site offset_ = 0;
  Eigen::Matrix2Xcd amps_;  // column j = amplitude at site offset_+j
};

/// Point state: amplitude `spin` at site x0, zero elsewhere.
/// Throws std::invalid_argument for a zero spin vector.
LatticeState make_delta_state(Site x0, const Spin& spin);

/// Normalized Gaussian envelope exp(-(x-center)^2 / (4 width^2)) * spin,
/// stored on |x-center| <= 8*width (truncated tail mass < 1e-13).
LatticeState make_gaussian_state(Site center, double width, const Spin& spin);

/// Sum of two states (window = union of windows).
LatticeState add(const LatticeState& a, const LatticeState& b);

/// l^2 inner product; conjugate-linear in `phi`, linear in `psi`.
Complex inner(const LatticeState& phi, const LatticeState& psi);

double norm(const LatticeState& psi);

/// Measurement probabilities {x -> ||psi(x)||^2} over the support
/// (exact-zero sites are skipped).  Requires ||psi|| = 1 within 1e-10;
/// otherwise throws std::invalid_argument reporting the actual norm.
std::map<Site, double> position_distribution(const LatticeState& psi);

}  // namespace qwlab
