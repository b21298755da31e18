#pragma once

#include <Eigen/Core>

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cmap {

using Real = double;
using Complex = std::complex<Real>;

using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr Real pi = std::numbers::pi_v<Real>;
inline constexpr Real two_pi = 2 * std::numbers::pi_v<Real>;
inline constexpr Complex I{0, 1};

/// Bad input: malformed region, invalid parameters, points outside the domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The numerics broke down: singular system, non-finite values.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cmap
