#include "cmap/kernel.hpp"

#include <cmath>
#include <new>

namespace cmap {

Real kernel_N(const Discretization& disc, Eigen::Index i, Eigen::Index j) {
    const auto total = disc.size();
    if (i < 0 || j < 0 || i >= total || j >= total) throw InvalidInput("node index out of range");
    if (i == j) {
        const Complex d1 = disc.deta[i];
        return (disc.ddeta[i] / (Real(2) * d1) - d1 / disc.eta[i]).imag() / pi;
    }
    const Complex diff = disc.eta[j] - disc.eta[i];
    if (diff == Complex(0)) throw NumericalFailure("degenerate geometry");
    return ((disc.eta[i] / disc.eta[j]) * disc.deta[j] / diff).imag() / pi;
}

SystemMatrix::SystemMatrix(std::shared_ptr<const Discretization> disc, RealMatrix matrix)
    : disc_(std::move(disc)), matrix_(std::move(matrix)) {}

void SystemMatrix::factorize() {
    if (lu_) return;
    lu_.emplace(matrix_);
    const Real rc = lu_->rcond();
    if (!std::isfinite(rc) || rc < 1e-14) {
        lu_.reset();
        throw NumericalFailure("discretization too coarse or invalid region");
    }
}

const Eigen::PartialPivLU<RealMatrix>& SystemMatrix::lu() const {
    if (!lu_) throw std::logic_error("system matrix not factorized");
    return *lu_;
}

SystemMatrix assemble_system(std::shared_ptr<const Discretization> disc, bool factorize) {
    const Eigen::Index size = disc->size();
    if (size > max_system_size) throw NumericalFailure("system too large");
    RealMatrix a;
    try {
        a.resize(size, size);
    } catch (const std::bad_alloc&) {
        throw NumericalFailure("system too large");
    }

    const int n = disc->n;
    const Real w = two_pi / n;
    const Real jw = Real(1) / n; // (1/2pi) * w within a curve block

    // Row i needs N(t_j, s_i) for all j: the adjoint kernel.
    bool degenerate = false;
#pragma omp parallel for schedule(static) reduction(|| : degenerate)
    for (Eigen::Index i = 0; i < size; ++i) {
        const int ci = disc->curve_of(i);
        for (Eigen::Index j = 0; j < size; ++j) {
            if (i != j && disc->eta[i] == disc->eta[j]) {
                degenerate = true;
                continue;
            }
            Real v = w * kernel_N(*disc, j, i);
            if (disc->curve_of(j) == ci) v += jw;
            if (i == j) v += 1;
            a(i, j) = v;
        }
    }
    if (degenerate) throw NumericalFailure("degenerate geometry");

    SystemMatrix sys(std::move(disc), std::move(a));
    if (factorize) sys.factorize();
    return sys;
}

SystemMatrix assemble_system(const Discretization& disc, bool factorize) {
    return assemble_system(std::make_shared<const Discretization>(disc), factorize);
}

} // namespace cmap
