#pragma once

#include <utility>
#include <vector>

#include "qwlab/lattice_state.hpp"
#include "qwlab/walk_operators.hpp"

namespace qwlab {

/// Uniform momentum grid k_m = 2 pi m / n, m = 0..n-1.
class KGrid {
 public:
  /// Throws std::invalid_argument unless n is a power of two >= 64.
  explicit KGrid(int n);

  int size() const { return n_; }
  double node(int m) const { return 2.0 * kPi * m / n_; }

 private:
  int n_;
};

/// Two-component function sampled on a KGrid; column m = value at k_m.
using SampledWave = Eigen::Matrix2Xcd;

/// psi_hat(k_m) = sum_x psi(x) e^{-i k_m x}.
/// Requires grid.size() >= 2 * stored window width; throws
/// std::invalid_argument naming the required grid size otherwise.
SampledWave fourier(const LatticeState& psi, const KGrid& grid);

/// Grid quadrature inner product (1/n) sum_m <f(k_m), g(k_m)>.
Complex grid_inner(const SampledWave& f, const SampledWave& g);
double grid_norm(const SampledWave& f);

/// Right-continuous nondecreasing step function.
struct StepCdf {
  std::vector<double> points;  // strictly increasing jump locations
  std::vector<double> cum;     // cumulative value at and after points[i]

  double value(double v) const;      // F(v)
  double total() const { return cum.empty() ? 0.0 : cum.back(); }

  static StepCdf from_jumps(std::vector<std::pair<double, double>> jumps);
};

/// sup_v |F(v) - G(v)|, evaluated exactly for step CDFs.
double kolmogorov_distance(const StepCdf& f, const StepCdf& g);

/// Eigen-decomposition of the momentum symbol of the free walk,
/// U0_hat(k) = diag(e^{ik}, e^{-ik}) C0, sampled on a grid.
///
/// Closed forms: for 0 < a < 1 the eigenvalues are
/// e^{i delta/2} (tau(k) +- i eta(k)) with tau = a cos(k+alpha-delta/2),
/// eta = sqrt(1-tau^2); band 1 carries the + branch.  For a = 1 the
/// symbol is diagonal.  Eigenvector sections are smooth and periodic
/// with the leading component held real nonnegative (the second
/// component where the first vanishes), so d/dk of the section is
/// available analytically.  Group velocities are the transport speeds
/// of band wave packets, v_j = -d(arg lambda_j)/dk, bounded by a.
struct BandDecomposition {
  KGrid grid;
  CoinParams coin;
  Eigen::ArrayXcd lambda1, lambda2;  // unimodular eigenvalues per node
  SampledWave u1, u2;                // orthonormal eigenvector sections
  SampledWave du1, du2;              // analytic k-derivatives of u1, u2
  Eigen::ArrayXd v1, v2;             // group velocities per node
};

/// Rejects a = 0 (flat coin with pure point symbol spectrum).
BandDecomposition band_decompose(const CoinParams& coin, const KGrid& grid);

/// Closed spectral arcs of the free walk on the unit circle, as angle
/// intervals [lo, hi] with hi possibly exceeding 2 pi, plus the
/// threshold set (arc boundary angles, at most 4, reduced mod 2 pi).
struct SpectrumArcs {
  std::vector<std::pair<double, double>> arcs;
  std::vector<double> thresholds;

  bool contains_angle(double t, double tol = 1e-10) const;
  double total_length() const;
};

SpectrumArcs spectrum_arcs(const CoinParams& coin);

/// Spectral CDF of the asymptotic velocity in state psi:
/// F(v) = sum_j (1/n) sum_{k: v_j(k) <= v} |<u_j(k), psi_hat(k)>|^2.
/// Requires ||psi|| = 1 within 1e-10 and a grid resolving the support.
StepCdf velocity_distribution(const BandDecomposition& band,
                              const LatticeState& psi);

/// Multiplies the band-j component by v_j(k).
SampledWave apply_V0(const BandDecomposition& band, const SampledWave& f);

/// Band-adapted position operator
///   X f = -sum_j ( |u_j><u_j| P f  -  i <u_j', f> u_j ),   P = -i d/dk,
/// with P realized by spectral differentiation (exact on resolved
/// trigonometric polynomials) and u_j' analytic.  Input must be
/// resolved with margin: relative coefficient mass above degree n/4
/// over 1e-8 is rejected as aliased (std::invalid_argument).
SampledWave apply_X(const BandDecomposition& band, const SampledWave& f);

/// Applies the symbol U0_hat(k_m) (or its adjoint) nodewise.
SampledWave apply_U0_symbol(const BandDecomposition& band,
                            const SampledWave& f, bool inverse = false);

/// Residual of the commutator identity U0^{-1}[A0,U0] = V0^2 with
/// A0 = (X V0 + V0 X)/2, maximized over the trigonometric basis
/// e^{imk} e_c, |m| <= degree, c = 1,2.  Requires degree <= n/8.
double commutator_identity_check(const BandDecomposition& band, int degree);

}  // namespace qwlab
