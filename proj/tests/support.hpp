#pragma once

#include "cmap/canonical.hpp"

#include <memory>

namespace cmap::fixtures {

// Seven-ellipse test region (outer ellipse plus six holes).
inline Region ellipses_region() {
    return build_region({
        CurveSpec::ellipse({-0.5, -0.3}, 4.0, 3.0, 1.0),
        CurveSpec::ellipse({1.5, 1.0}, 0.7, -0.3, 0.6),
        CurveSpec::ellipse({1.5, -0.4}, 0.3, -0.6, 1.6),
        CurveSpec::ellipse({0.5, -1.8}, 0.5, -0.7, 2.6),
        CurveSpec::ellipse({-2.0, 0.8}, 0.6, -0.4, 2.8),
        CurveSpec::ellipse({-0.8, 1.8}, 0.3, -0.7, 0.3),
        CurveSpec::ellipse({0.5, 2.3}, 0.3, -0.5, 0.5),
    });
}

inline const Complex ellipses_z1{1.5, 1.0};

inline CanonicalKind ellipses_kind(SlitKind tag) {
    CanonicalKind k;
    k.tag = tag;
    k.z1 = ellipses_z1;
    k.alpha = default_alpha(ellipses_region());
    return k;
}

// Max over curves of (max - min) of f on the curve's samples.
template <class F>
Real per_curve_spread(const Discretization& disc, const ComplexVector& omega, F f) {
    Real spread = 0;
    for (int k = 0; k < disc.curves; ++k) {
        Real lo = 1e300, hi = -1e300;
        for (int i = 0; i < disc.n; ++i) {
            const Real v = f(omega[static_cast<Eigen::Index>(k) * disc.n + i]);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        spread = std::max(spread, hi - lo);
    }
    return spread;
}

} // namespace cmap::fixtures
