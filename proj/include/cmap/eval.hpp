#pragma once

#include "cmap/canonical.hpp"

#include <string>
#include <vector>

namespace cmap {

/// omega(z) for z in G from the trapezoidal Cauchy sum over the boundary
/// samples, normalized by the same sum for the constant 1.  Kinds with a pole
/// at the origin apply it to omega - 1/z and add 1/z back.  Accuracy still
/// degrades within a few node spacings of the boundary.
Complex map_point(const MapSolution& sol, Complex z);

/// omega'(z), same quadrature applied to the boundary values of omega'.
Complex map_derivative(const MapSolution& sol, Complex z);

struct InverseResult {
    Complex z;
    bool reliable = true;      ///< false when z did not land inside G
    Real image_distance = 0;   ///< distance from w to the sampled image boundary
};

/// Distance from w to the (spectrally refined) image of the boundary.
Real image_boundary_distance(const MapSolution& sol, Complex w);

/// omega^{-1}(w) = (1/2 pi i) \int_J eta(t) xi'(t) / (xi(t) - w) dt with
/// xi(t) = omega(eta(t)); normalized like map_point when the canonical domain
/// is bounded.  Throws when w lies outside the canonical domain or closer to
/// the image boundary than the local image node spacing.
InverseResult inverse_point(const MapSolution& sol, Complex w);

struct PointEvaluation {
    Complex z;
    Complex w;
    Complex dw;
    Real distance = 0;        ///< distance from z to the boundary of G
    std::string status = "ok"; ///< error message when the point was rejected
};

/// Batch forward evaluation.  Rejected points get NaN values and a status
/// message instead of aborting the batch.
std::vector<PointEvaluation> evaluate_points(const MapSolution& sol, const std::vector<Complex>& points);

struct InverseEvaluation {
    Complex w;
    Complex z;
    Real image_distance = 0;
    std::string status = "ok"; ///< "inverse evaluation unreliable" or the rejection message
};

std::vector<InverseEvaluation> invert_points(const MapSolution& sol, const std::vector<Complex>& points);

struct GridSpec {
    enum class Layout { Cartesian, Polar };
    Layout layout = Layout::Cartesian;
    int lines = 20;                 ///< lines per family
    int samples = 200;              ///< points per line
    Complex center{0, 0};           ///< polar grids only
    Real radius = 0;                ///< polar grids only; 0 = reach the outer curve
    Real clearance = 0;             ///< min distance to the boundary; 0 = 1e-3 diameter
};

struct Polyline {
    std::vector<Complex> points;
    bool boundary = false;  ///< image of a boundary curve rather than a grid line
    int curve = -1;
};

/// Images of grid lines clipped to G, followed by the images of every
/// boundary curve.
std::vector<Polyline> image_grid(const MapSolution& sol, const GridSpec& spec);

} // namespace cmap
