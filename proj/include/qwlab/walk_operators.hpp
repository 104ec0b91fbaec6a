#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qwlab/lattice_state.hpp"
#include "qwlab/types.hpp"

namespace qwlab {

/// Parameters of the homogeneous coin
///   C0 = [[a e^{i alpha}, b e^{i beta}], [-b e^{-i beta + i delta}, a e^{-i alpha + i delta}]]
/// with a^2 + b^2 = 1 and det C0 = e^{i delta}.
struct CoinParams {
  double a = 1.0;
  double b = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;

  CoinMatrix matrix() const;

  /// Throws std::invalid_argument unless a,b in [0,1] and a^2+b^2 = 1
  /// within 1e-12.
  void validate() const;

  static CoinParams hadamard();
  static CoinParams diagonal(double alpha = 0.0, double delta = 0.0);  // a = 1
};

/// Site-dependent phase data for the long-range coin: the decaying phase
/// xi and a companion theta whose increments track xi, with the stated
/// decay constants (kappa, eps0) declared by the caller.
class PhaseProfile {
 public:
  enum class Kind { Power, Log, CumSum, Custom };

  /// xi(x) = (1+|x|)^{-p}, theta(x) = +-(1-p)^{-1}(1+-x)^{1-p}, 0 < p < 1.
  static PhaseProfile power_law(double p, double kappa = 0.0);

  /// xi(x) = (1+|x|)^{-1}, theta(x) = +-log(1+-x).
  static PhaseProfile log_decay(double kappa = 1.0);

  /// xi(x) = (1+|x|)^{-p}, theta built by cumulative summation of xi so
  /// the forward residual vanishes identically; 0 < p <= 1.
  static PhaseProfile cumulative(double p, double kappa = 4.0);

  static PhaseProfile custom(std::function<double(Site)> xi,
                             std::function<double(Site)> theta, double kappa,
                             double eps0);

  double xi(Site x) const;
  double theta(Site x) const;
  double kappa() const { return kappa_; }
  double eps0() const { return eps0_; }
  Kind kind() const { return kind_; }
  double p() const { return p_; }

 private:
  PhaseProfile() = default;

  Kind kind_ = Kind::Custom;
  double p_ = 0.0;
  double kappa_ = 0.0;
  double eps0_ = 0.0;
  std::function<double(Site)> xi_fn_;
  std::function<double(Site)> theta_fn_;
  std::shared_ptr<class CumulativeTheta> cumsum_;  // CumSum kind only
};

/// A walk instance: coin parameters plus an optional phase profile.
/// No profile means the homogeneous walk (xi = theta = 0, U = U0).
struct WalkModel {
  CoinParams coin;
  std::optional<PhaseProfile> profile;

  WalkModel(CoinParams c, std::optional<PhaseProfile> prof = std::nullopt);

  bool homogeneous() const { return !profile.has_value(); }
};

/// Which one-step unitary to apply.
enum class WalkKind {
  Perturbed,     // U  = S C
  Free,          // U0 = S C0
  ModifiedFree,  // S C~0, the conjugated free walk J U0 J^{-1}
};

/// (S psi)(x) = [psi1(x+1), psi2(x-1)]; inverse reverses the reads.
LatticeState apply_shift(const LatticeState& psi, bool inverse = false);

/// Pointwise multiplication by C(x) = diag(e^{-i xi(x)}, e^{i xi(x)}) C0.
LatticeState apply_coin(const WalkModel& model, const LatticeState& psi);

/// The local coin of the selected operator at site x.
CoinMatrix coin_at(const WalkModel& model, Site x, WalkKind kind);

/// C~0(x) = diag(e^{-i(theta(x)-theta(x-1))}, e^{i(theta(x+1)-theta(x))}) C0.
/// Requires a phase profile.
CoinMatrix modified_coin(const WalkModel& model, Site x);

/// Pointwise scalar phase e^{+-i theta(x)}.  Requires a phase profile.
LatticeState apply_modifier(const WalkModel& model, const LatticeState& psi,
                            bool inverse = false);

/// One application of the selected unitary (or its inverse, computed as
/// C* S^{-1}).  ModifiedFree requires a phase profile.
LatticeState step(const WalkModel& model, const LatticeState& psi,
                  WalkKind kind, bool inverse = false);

/// `steps` applications of the selected unitary, with per-site coin
/// phases cached across the full final window.
LatticeState evolve(const WalkModel& model, const LatticeState& psi,
                    WalkKind kind, std::int64_t steps, bool inverse = false);

/// Operator-norm gap ||C(x) - C~0(x)||.  Independent of C0 (the common
/// unitary factor cancels): max of the two diagonal phase gaps.
double coin_gap(const PhaseProfile& profile, Site x);

/// Decay-bound report for a profile over |x| <= radius.
struct AssumptionReport {
  struct Row {
    Site x;
    double residual_fwd;  // |xi(x) - (theta(x+1) - theta(x))|
    double residual_bwd;  // |xi(x) - (theta(x) - theta(x-1))|
    double bound;         // kappa (1+|x|)^{-1-eps0} with declared kappa
  };

  double kappa_fwd = 0.0;   // max residual_fwd * (1+|x|)^{1+eps0}
  double kappa_bwd = 0.0;   // max residual_bwd * (1+|x|)^{1+eps0}
  double kappa_min = 0.0;   // max of the two: smallest admissible kappa
  double kappa_declared = 0.0;
  bool pass = false;        // both maxima <= declared kappa
  double coin_gap_ratio = 0.0;  // max ||C-C~0|| / (2 kappa_min (1+|x|)^{-1-eps0})
  bool coin_gap_pass = false;   // ratio <= 1
  std::vector<Row> rows;
};

/// Evaluates both displayed residuals of the decay assumption over
/// |x| <= radius, reports the smallest empirical kappa, and checks the
/// derived coin gap bound ||C(x)-C~0(x)|| <= 2 kappa (1+|x|)^{-1-eps0}.
AssumptionReport verify_assumption(const PhaseProfile& profile, Site radius);

}  // namespace qwlab
