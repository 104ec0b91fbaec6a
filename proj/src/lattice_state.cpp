#include "qwlab/lattice_state.hpp"

#include <cmath>
#include <sstream>

namespace qwlab {

namespace {
constexpr double kTrimThreshold = 1e-300;

bool column_trimmable(const Eigen::Matrix2Xcd& a, Eigen::Index j) {
  return std::abs(a(0, j)) <= kTrimThreshold && std::abs(a(1, j)) <= kTrimThreshold;
}
}  // namespace

LatticeState LatticeState::trimmed() const {
  Eigen::Index lo = 0;
  Eigen::Index hi = size();
  while (lo < hi && column_trimmable(amps_, lo)) ++lo;
  while (hi > lo && column_trimmable(amps_, hi - 1)) --hi;
  if (lo == 0 && hi == size()) return *this;
  return LatticeState(offset_ + lo, amps_.middleCols(lo, hi - lo));
}

LatticeState make_delta_state(Site x0, const Spin& spin) {
  if (spin.norm() == 0.0) {
    throw std::invalid_argument("make_delta_state: zero spin vector is degenerate");
  }
  Eigen::Matrix2Xcd amps(2, 1);
  amps.col(0) = spin;
  return LatticeState(x0, std::move(amps));
}

LatticeState make_gaussian_state(Site center, double width, const Spin& spin) {
  if (spin.norm() == 0.0) {
    throw std::invalid_argument("make_gaussian_state: zero spin vector is degenerate");
  }
  if (!(width > 0.0)) {
    throw std::invalid_argument("make_gaussian_state: width must be positive");
  }
  const Site radius = static_cast<Site>(std::ceil(8.0 * width));
  const Eigen::Index w = static_cast<Eigen::Index>(2 * radius + 1);
  Eigen::Matrix2Xcd amps(2, w);
  for (Eigen::Index j = 0; j < w; ++j) {
    const double dx = static_cast<double>(j - radius);
    amps.col(j) = spin * std::exp(-dx * dx / (4.0 * width * width));
  }
  amps /= amps.norm();
  return LatticeState(center - radius, std::move(amps));
}

LatticeState add(const LatticeState& a, const LatticeState& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const Site lo = std::min(a.offset(), b.offset());
  const Site hi = std::max(a.offset() + a.size(), b.offset() + b.size());
  Eigen::Matrix2Xcd amps = Eigen::Matrix2Xcd::Zero(2, hi - lo);
  amps.middleCols(a.offset() - lo, a.size()) = a.amplitudes();
  amps.middleCols(b.offset() - lo, b.size()) += b.amplitudes();
  return LatticeState(lo, std::move(amps));
}

Complex inner(const LatticeState& phi, const LatticeState& psi) {
  const Site lo = std::max(phi.offset(), psi.offset());
  const Site hi = std::min(phi.offset() + phi.size(), psi.offset() + psi.size());
  if (hi <= lo) return Complex(0.0, 0.0);
  const Eigen::Index w = hi - lo;
  const auto a = phi.amplitudes().middleCols(lo - phi.offset(), w);
  const auto b = psi.amplitudes().middleCols(lo - psi.offset(), w);
  return (a.conjugate().cwiseProduct(b)).sum();
}

double norm(const LatticeState& psi) { return psi.norm(); }

std::map<Site, double> position_distribution(const LatticeState& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "position_distribution: state is not normalized (norm = " << n << ")";
    throw std::invalid_argument(msg.str());
  }
  std::map<Site, double> dist;
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    const double p = psi.amplitudes().col(j).squaredNorm();
    if (p > 0.0) dist[psi.offset() + j] = p;
  }
  return dist;
}

}  // namespace qwlab
