#pragma once

#include "cmap/solver.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cmap {

enum class SlitKind { AnnulusSlits, DiskSlits, CircularSlits, RadialSlits, ParallelSlits };

inline constexpr SlitKind all_kinds[] = {SlitKind::AnnulusSlits, SlitKind::DiskSlits, SlitKind::CircularSlits,
                                         SlitKind::RadialSlits, SlitKind::ParallelSlits};

/// CLI name: annulus, disk, circular, radial, parallel.
std::string to_string(SlitKind kind);
SlitKind parse_kind(const std::string& name);

/// Target domain plus its auxiliary data.  z1 (a point in the first hole) is
/// used by AnnulusSlits, alpha (a nonzero point of G, mapped to 0) by the
/// circular and radial slit maps, delta (slit angle) by ParallelSlits.
struct CanonicalKind {
    SlitKind tag = SlitKind::DiskSlits;
    Complex z1{0, 0};
    Complex alpha{0, 0};
    Real delta = pi / 4;

    static CanonicalKind annulus(Complex z1) { return {SlitKind::AnnulusSlits, z1, {}, pi / 4}; }
    static CanonicalKind disk() { return {SlitKind::DiskSlits, {}, {}, pi / 4}; }
    static CanonicalKind circular(Complex alpha) { return {SlitKind::CircularSlits, {}, alpha, pi / 4}; }
    static CanonicalKind radial(Complex alpha) { return {SlitKind::RadialSlits, {}, alpha, pi / 4}; }
    static CanonicalKind parallel(Real delta = pi / 4) { return {SlitKind::ParallelSlits, {}, {}, delta}; }

    /// Circular, radial and parallel slit maps have a simple pole at 0.
    bool has_pole() const {
        return tag == SlitKind::CircularSlits || tag == SlitKind::RadialSlits || tag == SlitKind::ParallelSlits;
    }
    /// e^{i(pi/2 - delta)}, the rotation taking parallel slits to vertical lines.
    Complex slit_rotation() const { return std::polar(Real(1), pi / 2 - delta); }
};

/// Checks 0 in G and the kind's auxiliary points against the region.
void validate_kind(const Region& region, const CanonicalKind& kind);

/// Prescribed per-curve values of J theta' (winding of each image curve / 2 pi).
RealVector prescribed_winding(SlitKind kind, int curves);

/// Right-hand side of (I + N* + J) theta' = rhs.
Density build_rhs(const CanonicalKind& kind, const Discretization& disc);

struct GammaMu {
    ComplexVector values;  ///< gamma + i mu on every node, logarithms continued along each curve
    ComplexVector jump;    ///< increment of gamma + i mu over one period, per curve
};

GammaMu gamma_mu(const CanonicalKind& kind, const Discretization& disc);

struct Parameters {
    RealVector R;                ///< radii, ray angles or line offsets per curve
    std::optional<Real> c;       ///< omega(0) (annulus) or omega'(0) (disk)
    RealVector ck;               ///< integration constants of theta
    Real periodicity_residual = 0;
};

Parameters recover_parameters(const CanonicalKind& kind, const GammaMu& gm, const AntiderivativeResult& rho,
                              const std::vector<Density>& phis, const Discretization& disc);

struct BoundaryValues {
    ComplexVector omega;   ///< omega(eta(t_i))
    ComplexVector domega;  ///< omega'(eta(t_i))
};

BoundaryValues boundary_values(const CanonicalKind& kind, const Discretization& disc, const RealVector& theta,
                               const RealVector& theta_prime, const RealVector& R);

struct Diagnostics {
    Real linear_system = 0;  ///< relative residual of the theta' solve
    Real winding = 0;        ///< max_k |(1/n) sum_{curve k} theta' - prescribed_k|
    Real periodicity = 0;    ///< how far s rho + mu misses being periodic
};

/// Everything needed to evaluate omega, omega' and the inverse map.
struct MapSolution {
    CanonicalKind kind;
    std::shared_ptr<const Discretization> disc;
    RealVector theta;
    RealVector theta_prime;
    RealVector R;
    std::optional<Real> c;
    RealVector ck;
    BoundaryValues boundary;
    ComplexVector image_outline;  ///< boundary image refined by trig interpolation
    Diagnostics diagnostics;

    static constexpr int outline_factor = 8;

    int n() const { return disc->n; }
    const Region& region() const { return *disc->region; }
};

/// Discretization, factorized matrix and the m+1 densities phi^[k]; shared by
/// every kind on the same region and n.
struct PreparedSystem {
    std::shared_ptr<const Discretization> disc;
    std::shared_ptr<const SystemMatrix> system;
    std::vector<Density> phis;
};

PreparedSystem prepare_system(std::shared_ptr<const Region> region, int n);

MapSolution solve_map(const PreparedSystem& prepared, const CanonicalKind& kind);
MapSolution solve_map(const Region& region, const CanonicalKind& kind, int n);

/// Reassembles a solution from stored theta, theta', R (e.g. loaded from disk).
MapSolution assemble_solution(const CanonicalKind& kind, std::shared_ptr<const Discretization> disc, RealVector theta,
                              RealVector theta_prime, RealVector R, std::optional<Real> c, RealVector ck,
                              Diagnostics diagnostics = {});

/// Centre of the bounding box of hole 1.
Complex default_z1(const Region& region);
/// Centroid of the samples of the outer curve; throws if it is not in G.
Complex default_alpha(const Region& region);

} // namespace cmap
