#pragma once

#include "cmap/geometry.hpp"

#include <Eigen/LU>

#include <memory>
#include <optional>

namespace cmap {

/// Generalized Neumann kernel formed with A = eta, evaluated at s = node i,
/// t = node j:
///
///   N(s,t) = (1/pi) Im[ (eta(s)/eta(t)) * eta'(t) / (eta(t) - eta(s)) ],
///
/// with the continuous limit (1/pi) Im[ eta''/(2 eta') - eta'/eta ] on the
/// diagonal.
Real kernel_N(const Discretization& disc, Eigen::Index i, Eigen::Index j);

/// Dense Nyström matrix of I + N* + J together with its LU factorization.
/// Row i, column j holds delta_ij + w N(t_j, t_i) + w J(t_i, t_j) with the
/// trapezoidal weight w = 2 pi / n.
class SystemMatrix {
public:
    SystemMatrix(std::shared_ptr<const Discretization> disc, RealMatrix matrix);

    const RealMatrix& matrix() const { return matrix_; }
    const Discretization& discretization() const { return *disc_; }
    std::shared_ptr<const Discretization> discretization_ptr() const { return disc_; }
    Eigen::Index size() const { return matrix_.rows(); }

    bool factorized() const { return lu_.has_value(); }
    /// Computes the LU factorization once; throws if the matrix is numerically singular.
    void factorize();
    const Eigen::PartialPivLU<RealMatrix>& lu() const;

private:
    std::shared_ptr<const Discretization> disc_;
    RealMatrix matrix_;
    std::optional<Eigen::PartialPivLU<RealMatrix>> lu_;
};

/// Largest (m+1) n accepted by assemble_system.
inline constexpr Eigen::Index max_system_size = 16384;

SystemMatrix assemble_system(std::shared_ptr<const Discretization> disc, bool factorize = true);
SystemMatrix assemble_system(const Discretization& disc, bool factorize = true);

} // namespace cmap
