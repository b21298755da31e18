#pragma once

#include "cmap/canonical.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cmap {

/// Closed-form map used as ground truth.  Every oracle has checked its own
/// normalization and boundary shape (to 1e-12) before it is returned.
struct Oracle {
    CanonicalKind kind;
    std::function<Complex(Complex)> map;
    std::function<Complex(Complex)> derivative;
    RealVector R;
    std::optional<Real> c;
};

/// Disk of the given radius centred at 0 (counterclockwise circle).
Region disk_region(Real radius = 1);

/// Unit disk minus the disk |z - c_h| <= rho_h.
Region eccentric_annulus_region(Real hole_center, Real hole_radius);

/// Simply connected oracles:
///   DiskSlits on |z| < r:          z / r
///   CircularSlits on |z| < 1:      -(z - a) / (a z (1 - conj(a) z)),   R0 = 1/|a|
///   RadialSlits on |z| < 1:        -(z - a)(1 - conj(a) z) / (a z),    R0 = arg(-1/a)
///   ParallelSlits on |z| < 1:      1/z - e^{-2i(pi/2 - delta)} z,      R0 = 0
Oracle oracle_disk(const CanonicalKind& kind, Real radius = 1);

/// Möbius map (a - z)/(1 - a z) of the eccentric annulus onto 1 > |w| > R1,
/// with a the real point making the hole's image concentric.
Oracle oracle_eccentric_annulus(Real hole_center, Real hole_radius);

struct ConvergenceRow {
    SlitKind kind;
    int n = 0;
    Real sup_error = 0;
    Real wall_time_ms = 0;
};

/// E_n = max over the nodes of step n of |omega_n(eta) - omega_ref(eta)| for
/// every requested kind.  n values must be ascending, below ref_n and nested
/// (ref_n / n a power of two).  wall_time_ms covers assembly, factorization
/// and the kind's own solve.
std::vector<ConvergenceRow> convergence_table(const Region& region, const std::vector<CanonicalKind>& kinds,
                                              const std::vector<int>& n_list, int ref_n);

/// Sup-norm boundary mismatch between two solutions whose node sets nest.
Real boundary_sup_difference(const MapSolution& coarse, const MapSolution& fine);

/// Square lattice of the given spacing, restricted to points of G whose
/// distance to the boundary is at least `clearance`.  The origin is skipped.
std::vector<Complex> interior_lattice(const Region& region, Real spacing, Real clearance);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Oracle suite behind `cmap selftest`: closed-form disk maps, the eccentric
/// annulus and the identity pipeline.
std::vector<CheckResult> run_selftest();

} // namespace cmap
