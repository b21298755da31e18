#pragma once

#include "cmap/types.hpp"

#include <functional>
#include <memory>
#include <variant>
#include <vector>

namespace cmap {

/// eta(t) = center + e^{i rotation} (a cos t + i b sin t).  A negative b
/// reverses the traversal, which is how inner curves get clockwise orientation.
struct Ellipse {
    Complex center{0, 0};
    Real a = 1;
    Real b = 1;
    Real rotation = 0;
};

/// Caller-supplied parametrization.  All three samplers are required; the
/// second derivative feeds the kernel diagonal.
struct ParametricCurve {
    std::function<Complex(Real)> eta;
    std::function<Complex(Real)> deta;
    std::function<Complex(Real)> ddeta;
};

class CurveSpec {
public:
    explicit CurveSpec(Ellipse e) : shape_(e) {}
    explicit CurveSpec(ParametricCurve c) : shape_(std::move(c)) {}

    static CurveSpec ellipse(Complex center, Real a, Real b, Real rotation = 0) {
        return CurveSpec(Ellipse{center, a, b, rotation});
    }
    static CurveSpec circle(Complex center, Real radius, bool clockwise = false) {
        return ellipse(center, radius, clockwise ? -radius : radius, 0);
    }

    Complex eta(Real t) const;
    Complex deta(Real t) const;
    Complex ddeta(Real t) const;

    bool is_ellipse() const { return std::holds_alternative<Ellipse>(shape_); }
    /// Throws if the curve is not an ellipse.
    const Ellipse& as_ellipse() const;

private:
    std::variant<Ellipse, ParametricCurve> shape_;
};

enum class PointClass { Interior, Exterior, OnBoundary };

struct Location {
    PointClass where = PointClass::Interior;
    /// Complement component for exterior points (0 = unbounded part), else
    /// the index of the nearest curve.
    int component = 0;
    Real distance = 0; ///< distance to the nearest boundary curve
};

/// Bounded region of connectivity m+1.  Curve 0 is the outer boundary
/// (counterclockwise), curves 1..m bound the holes (clockwise).  The
/// constructor validates orientation and disjointness; a Region is immutable.
class Region {
public:
    explicit Region(std::vector<CurveSpec> curves);

    int curve_count() const { return static_cast<int>(curves_.size()); }
    int hole_count() const { return curve_count() - 1; }
    const CurveSpec& curve(int j) const { return curves_.at(static_cast<std::size_t>(j)); }
    const std::vector<CurveSpec>& curves() const { return curves_; }

    /// Bounding-box diagonal of the whole boundary.
    Real diameter() const { return diameter_; }
    /// Dense polygonal samples of curve j (used for locating points).
    const ComplexVector& outline(int j) const { return outlines_.at(static_cast<std::size_t>(j)); }

private:
    std::vector<CurveSpec> curves_;
    std::vector<ComplexVector> outlines_;
    Real diameter_ = 0;
};

Region build_region(std::vector<CurveSpec> curves);

/// Signed area enclosed by a closed curve (positive when counterclockwise).
Real signed_area(const CurveSpec& curve, int samples = 512);

/// Nyström collocation grid: n equidistant nodes t_i = 2 pi i / n on every
/// curve, stored curve-major (global index = curve * n + local).
struct Discretization {
    std::shared_ptr<const Region> region;
    int n = 0;
    int curves = 0;
    RealVector t;       ///< local parameter of every global node
    ComplexVector eta;
    ComplexVector deta;
    ComplexVector ddeta;

    Eigen::Index size() const { return eta.size(); }
    int curve_of(Eigen::Index node) const { return static_cast<int>(node / n); }

    template <class Vec>
    auto on_curve(Vec& v, int k) const {
        return v.segment(static_cast<Eigen::Index>(k) * n, n);
    }
};

Discretization sample_boundary(const Region& region, int n);
Discretization sample_boundary(std::shared_ptr<const Region> region, int n);

/// Winding number of the closed boundary about z, with the outer curve counterclockwise and the holes clockwise
/// (1 inside G, 0 in a hole or outside).  Meaningless for points on Γ.
int winding_number(const Region& region, Complex z);

/// Closest boundary point of curve j to z: returns (parameter, distance).
std::pair<Real, Real> nearest_on_curve(const Region& region, int j, Complex z);

Location locate_point(const Region& region, Complex z);

inline bool is_interior(const Region& region, Complex z) {
    return locate_point(region, z).where == PointClass::Interior;
}

} // namespace cmap
