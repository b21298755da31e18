#include "cmap/solver.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <vector>

namespace cmap {

namespace {

using Spectrum = std::vector<Complex>;

Spectrum forward(const ComplexVector& block) {
    Eigen::FFT<Real> fft;
    std::vector<Complex> in(block.data(), block.data() + block.size());
    Spectrum out;
    fft.fwd(out, in);
    return out;
}

std::vector<Complex> inverse(const Spectrum& spec) {
    Eigen::FFT<Real> fft;
    std::vector<Complex> out;
    fft.inv(out, spec);
    return out;
}

void check_blocks(Eigen::Index size, int n) {
    if (n < 2 || n % 2 != 0 || size % n != 0) throw InvalidInput("samples do not match the discretization");
}

} // namespace

SolveResult solve_system(const SystemMatrix& system, const RealMatrix& rhs) {
    if (rhs.rows() != system.size()) throw InvalidInput("incompatible densities");
    SolveResult out;
    out.x = system.lu().solve(rhs);
    if (!out.x.allFinite()) throw NumericalFailure("discretization too coarse or invalid region");

    const RealMatrix r = system.matrix() * out.x - rhs;
    for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
        const Real b = rhs.col(c).lpNorm<Eigen::Infinity>();
        out.residual = std::max(out.residual, r.col(c).lpNorm<Eigen::Infinity>() / (b > 0 ? b : 1));
    }
    if (!(out.residual <= 1e-10)) throw NumericalFailure("discretization too coarse or invalid region");
    return out;
}

Density solve_system(const SystemMatrix& system, const Density& rhs) {
    return solve_system(system, RealMatrix(rhs)).x.col(0);
}

Density chi(const Discretization& disc, int k) {
    Density v = Density::Zero(disc.size());
    disc.on_curve(v, k).setOnes();
    return v;
}

std::vector<Density> chi_densities(const SystemMatrix& system) {
    const auto& disc = system.discretization();
    RealMatrix rhs = RealMatrix::Zero(disc.size(), disc.curves);
    for (int k = 0; k < disc.curves; ++k) rhs.col(k) = -chi(disc, k);
    const RealMatrix x = solve_system(system, rhs).x;
    std::vector<Density> phis;
    for (int k = 0; k < disc.curves; ++k) phis.emplace_back(x.col(k));
    return phis;
}

Real functional(const Density& u, const Density& phi, const Discretization& disc) {
    if (u.size() != phi.size() || u.size() != disc.size()) throw InvalidInput("incompatible densities");
    return u.dot(phi) / disc.n;
}

AntiderivativeResult trig_antiderivative(const RealVector& samples, int n) {
    check_blocks(samples.size(), n);
    const int curves = static_cast<int>(samples.size() / n);
    const int half = n / 2;

    AntiderivativeResult out;
    out.n = n;
    out.rho.resize(samples.size());
    out.mean.resize(curves);
    out.cos_coeffs = RealMatrix::Zero(half + 1, curves);
    out.sin_coeffs = RealMatrix::Zero(half + 1, curves);

    for (int k = 0; k < curves; ++k) {
        const Spectrum f = forward(samples.segment(static_cast<Eigen::Index>(k) * n, n).cast<Complex>());
        const Real a0 = f[0].real() / n;
        out.mean[k] = a0;
        out.cos_coeffs(0, k) = a0;
        for (int j = 1; j < half; ++j) {
            out.cos_coeffs(j, k) = 2 * f[j].real() / n;
            out.sin_coeffs(j, k) = -2 * f[j].imag() / n;
        }
        out.cos_coeffs(half, k) = f[half].real() / n;

        Spectrum g(static_cast<std::size_t>(n), Complex(0));
        for (int j = 1; j < half; ++j) {
            g[j] = f[j] / (I * Real(j));
            g[n - j] = f[n - j] / (-I * Real(j));
        }
        const auto periodic = inverse(g);
        for (int i = 0; i < n; ++i)
            out.rho[static_cast<Eigen::Index>(k) * n + i] = a0 * (two_pi * i / n) + periodic[i].real();
    }
    return out;
}

ComplexVector spectral_derivative(const ComplexVector& samples, int n) {
    check_blocks(samples.size(), n);
    ComplexVector out(samples.size());
    const int half = n / 2;
    for (Eigen::Index k = 0; k < samples.size() / n; ++k) {
        Spectrum f = forward(samples.segment(k * n, n));
        for (int j = 0; j < n; ++j) {
            if (j < half) f[j] *= I * Real(j);
            else if (j == half) f[j] = 0;
            else f[j] *= I * Real(j - n);
        }
        const auto d = inverse(f);
        for (int i = 0; i < n; ++i) out[k * n + i] = d[i];
    }
    return out;
}

RealVector spectral_derivative(const RealVector& samples, int n) {
    return spectral_derivative(ComplexVector(samples.cast<Complex>()), n).real();
}

ComplexVector trig_upsample(const ComplexVector& samples, int n, int factor) {
    check_blocks(samples.size(), n);
    if (factor < 1) throw InvalidInput("upsampling factor must be positive");
    const int big = n * factor;
    const int half = n / 2;
    const Eigen::Index curves = samples.size() / n;
    ComplexVector out(curves * big);
    for (Eigen::Index k = 0; k < curves; ++k) {
        const Spectrum f = forward(samples.segment(k * n, n));
        Spectrum g(static_cast<std::size_t>(big), Complex(0));
        const Real s = factor;
        for (int j = 0; j < half; ++j) g[j] = s * f[j];
        for (int j = 1; j < half; ++j) g[big - j] = s * f[n - j];
        if (factor == 1) {
            g[half] = f[half];
        } else {
            g[half] = 0.5 * s * f[half];
            g[big - half] = 0.5 * s * f[half];
        }
        const auto v = inverse(g);
        for (int i = 0; i < big; ++i) out[k * big + i] = v[i];
    }
    return out;
}

} // namespace cmap
