#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace qwlab {

using Complex = std::complex<double>;
using Spin = Eigen::Vector2cd;        // internal two-level amplitude at one site
using CoinMatrix = Eigen::Matrix2cd;
using Site = std::int64_t;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

}  // namespace qwlab
