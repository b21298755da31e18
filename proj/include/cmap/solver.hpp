#pragma once

#include "cmap/kernel.hpp"

#include <vector>

namespace cmap {

/// Real samples over all global nodes, curve-major.
using Density = RealVector;

struct SolveResult {
    RealMatrix x;        ///< one column per right-hand side
    Real residual = 0;   ///< max over columns of |A x - b|_inf / |b|_inf (absolute when b = 0)
};

/// Solves (I + N* + J) x = b for every column of b with the stored LU.
/// Throws when the relative residual exceeds 1e-10.
SolveResult solve_system(const SystemMatrix& system, const RealMatrix& rhs);
Density solve_system(const SystemMatrix& system, const Density& rhs);

/// phi^[k] solving (I + N* + J) phi^[k] = -chi^[k], k = 0..m.
std::vector<Density> chi_densities(const SystemMatrix& system);

/// Indicator of curve k on the global node set.
Density chi(const Discretization& disc, int k);

/// Normalized pairing (u, v) = (1/2pi) \int_J u v dt, trapezoidal: (1/n) sum u v.
Real functional(const Density& u, const Density& phi, const Discretization& disc);

/// Antiderivative of a per-curve periodic density via its interpolating
/// trigonometric polynomial.
struct AntiderivativeResult {
    int n = 0;
    RealVector rho;          ///< rho_k(t_i) on every global node
    RealVector mean;         ///< a_0^[k], one per curve
    RealMatrix cos_coeffs;   ///< a_j^[k] in column k, rows j = 0..n/2
    RealMatrix sin_coeffs;   ///< b_j^[k] in column k, rows j = 0..n/2
};

/// rho_k(t) = a_0 t + sum_{1 <= j < n/2} (a_j sin jt - b_j cos jt) / j.  The
/// Nyquist cosine term integrates to a multiple of sin((n/2) t), which
/// vanishes on the nodes.
AntiderivativeResult trig_antiderivative(const RealVector& samples, int n);

/// d/dt of the trigonometric interpolant of periodic samples (one curve per
/// block of n).  The Nyquist mode is dropped.
ComplexVector spectral_derivative(const ComplexVector& samples, int n);
RealVector spectral_derivative(const RealVector& samples, int n);

/// Evaluates the trigonometric interpolant of each n-block at factor * n
/// equidistant points.
ComplexVector trig_upsample(const ComplexVector& samples, int n, int factor);

} // namespace cmap
