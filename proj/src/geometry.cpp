#include "cmap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cmap {

namespace {

constexpr int outline_samples = 512;

Complex rotate(Real angle) { return std::polar(Real(1), angle); }

ComplexVector sample_curve(const CurveSpec& c, int m) {
    ComplexVector p(m);
    for (int i = 0; i < m; ++i) p[i] = c.eta(two_pi * i / m);
    return p;
}

int polygon_winding(const ComplexVector& poly, Complex z) {
    Real total = 0;
    const auto m = poly.size();
    for (Eigen::Index i = 0; i < m; ++i) {
        const Complex a = poly[i] - z;
        const Complex b = poly[(i + 1) % m] - z;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / two_pi));
}

Real cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_cross(Complex p1, Complex p2, Complex q1, Complex q2) {
    const Real d1 = cross(p2 - p1, q1 - p1);
    const Real d2 = cross(p2 - p1, q2 - p1);
    const Real d3 = cross(q2 - q1, p1 - q1);
    const Real d4 = cross(q2 - q1, p2 - q1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

bool outlines_intersect(const ComplexVector& p, const ComplexVector& q) {
    const auto np = p.size();
    const auto nq = q.size();
    for (Eigen::Index i = 0; i < np; ++i) {
        const Complex p1 = p[i], p2 = p[(i + 1) % np];
        const Real pxlo = std::min(p1.real(), p2.real()), pxhi = std::max(p1.real(), p2.real());
        for (Eigen::Index j = 0; j < nq; ++j) {
            const Complex q1 = q[j], q2 = q[(j + 1) % nq];
            if (std::max(q1.real(), q2.real()) < pxlo || std::min(q1.real(), q2.real()) > pxhi) continue;
            if (segments_cross(p1, p2, q1, q2)) return true;
        }
    }
    return false;
}

Real max_segment(const ComplexVector& poly) {
    Real h = 0;
    for (Eigen::Index i = 0; i < poly.size(); ++i)
        h = std::max(h, std::abs(poly[(i + 1) % poly.size()] - poly[i]));
    return h;
}

} // namespace

Complex CurveSpec::eta(Real t) const {
    if (const auto* e = std::get_if<Ellipse>(&shape_))
        return e->center + rotate(e->rotation) * Complex(e->a * std::cos(t), e->b * std::sin(t));
    return std::get<ParametricCurve>(shape_).eta(t);
}

Complex CurveSpec::deta(Real t) const {
    if (const auto* e = std::get_if<Ellipse>(&shape_))
        return rotate(e->rotation) * Complex(-e->a * std::sin(t), e->b * std::cos(t));
    return std::get<ParametricCurve>(shape_).deta(t);
}

Complex CurveSpec::ddeta(Real t) const {
    if (const auto* e = std::get_if<Ellipse>(&shape_))
        return rotate(e->rotation) * Complex(-e->a * std::cos(t), -e->b * std::sin(t));
    return std::get<ParametricCurve>(shape_).ddeta(t);
}

const Ellipse& CurveSpec::as_ellipse() const {
    if (const auto* e = std::get_if<Ellipse>(&shape_)) return *e;
    throw InvalidInput("curve is not an ellipse");
}

Real signed_area(const CurveSpec& curve, int samples) {
    // (1/2) \oint (x dy - y dx), trapezoidal in t
    Real sum = 0;
    for (int i = 0; i < samples; ++i) {
        const Real t = two_pi * i / samples;
        sum += cross(curve.eta(t), curve.deta(t));
    }
    return 0.5 * sum * two_pi / samples;
}

Region::Region(std::vector<CurveSpec> curves) : curves_(std::move(curves)) {
    if (curves_.empty()) throw InvalidInput("no boundary");

    for (std::size_t j = 0; j < curves_.size(); ++j) {
        const auto& c = curves_[j];
        const std::string tag = "curve " + std::to_string(j);
        if (c.is_ellipse()) {
            const auto& e = c.as_ellipse();
            if (!std::isfinite(e.a) || !std::isfinite(e.b) || !std::isfinite(e.rotation) ||
                !std::isfinite(e.center.real()) || !std::isfinite(e.center.imag()))
                throw InvalidInput(tag + " has non-finite parameters");
            if (e.a == 0 || e.b == 0) throw InvalidInput(tag + " has a zero semi-axis");
        }
        const Complex start = c.eta(0), end = c.eta(two_pi);
        const Real scale = std::max<Real>(1, std::abs(start));
        if (!(std::abs(start - end) <= 1e-12 * scale)) throw InvalidInput(tag + " is not closed");
        for (int i = 0; i < outline_samples; ++i)
            if (std::abs(c.deta(two_pi * i / outline_samples)) == 0)
                throw InvalidInput(tag + " has a vanishing derivative");

        const Real area = signed_area(c);
        if ((j == 0 && !(area > 0)) || (j > 0 && !(area < 0)))
            throw InvalidInput(tag + " wrongly oriented");
    }

    for (const auto& c : curves_) outlines_.push_back(sample_curve(c, outline_samples));

    Real xlo = std::numeric_limits<Real>::max(), xhi = -xlo, ylo = xlo, yhi = -xlo;
    for (const auto& p : outlines_) {
        xlo = std::min(xlo, p.real().minCoeff());
        xhi = std::max(xhi, p.real().maxCoeff());
        ylo = std::min(ylo, p.imag().minCoeff());
        yhi = std::max(yhi, p.imag().maxCoeff());
    }
    diameter_ = std::hypot(xhi - xlo, yhi - ylo);

    for (std::size_t j = 1; j < outlines_.size(); ++j) {
        if (polygon_winding(outlines_[0], outlines_[j][0]) != 1) throw InvalidInput("curves intersect");
        for (std::size_t k = 0; k < j; ++k) {
            if (outlines_intersect(outlines_[j], outlines_[k])) throw InvalidInput("curves intersect");
            if (k > 0 && (polygon_winding(outlines_[k], outlines_[j][0]) != 0 ||
                          polygon_winding(outlines_[j], outlines_[k][0]) != 0))
                throw InvalidInput("curves intersect");
        }
    }
}

Region build_region(std::vector<CurveSpec> curves) { return Region(std::move(curves)); }

Discretization sample_boundary(std::shared_ptr<const Region> region, int n) {
    if (n < 4 || n % 2 != 0) throw InvalidInput("invalid discretization size");
    Discretization d;
    d.n = n;
    d.curves = region->curve_count();
    const Eigen::Index total = static_cast<Eigen::Index>(d.curves) * n;
    d.t.resize(total);
    d.eta.resize(total);
    d.deta.resize(total);
    d.ddeta.resize(total);
    for (int k = 0; k < d.curves; ++k) {
        const auto& c = region->curve(k);
        for (int i = 0; i < n; ++i) {
            const Eigen::Index g = static_cast<Eigen::Index>(k) * n + i;
            const Real t = two_pi * i / n;
            d.t[g] = t;
            d.eta[g] = c.eta(t);
            d.deta[g] = c.deta(t);
            d.ddeta[g] = c.ddeta(t);
            if (std::abs(d.deta[g]) == 0)
                throw InvalidInput("curve " + std::to_string(k) + " has a vanishing derivative");
        }
    }
    d.region = std::move(region);
    return d;
}

Discretization sample_boundary(const Region& region, int n) {
    return sample_boundary(std::make_shared<const Region>(region), n);
}

int winding_number(const Region& region, Complex z) {
    int total = 0;
    for (int j = 0; j < region.curve_count(); ++j) total += polygon_winding(region.outline(j), z);
    return total;
}

std::pair<Real, Real> nearest_on_curve(const Region& region, int j, Complex z) {
    const auto& poly = region.outline(j);
    const auto& c = region.curve(j);
    const auto m = poly.size();
    Eigen::Index best = 0;
    (poly.array() - z).abs().minCoeff(&best);

    // Safeguarded Newton on d/dt |eta - z|^2 / 2 inside the neighbouring sample interval.
    const Real h = two_pi / static_cast<Real>(m);
    const Real t0 = h * static_cast<Real>(best);
    auto grad = [&](Real t) { return (std::conj(c.eta(t) - z) * c.deta(t)).real(); };
    Real lo = t0 - h, hi = t0 + h;
    Real glo = grad(lo), ghi = grad(hi);
    Real t = t0;
    if (glo <= 0 && ghi >= 0) {
        for (int it = 0; it < 60; ++it) {
            const Complex r = c.eta(t) - z;
            const Complex d1 = c.deta(t);
            const Real g = (std::conj(r) * d1).real();
            const Real gp = std::norm(d1) + (std::conj(r) * c.ddeta(t)).real();
            if (g < 0) lo = t; else hi = t;
            Real next = (gp > 0) ? t - g / gp : 0.5 * (lo + hi);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - t) <= 1e-15 * (1 + std::abs(t))) { t = next; break; }
            t = next;
        }
    }
    Real dist = std::abs(c.eta(t) - z);
    const Real sample_dist = std::abs(poly[best] - z);
    if (sample_dist < dist) { t = t0; dist = sample_dist; }
    return {t, dist};
}

Location locate_point(const Region& region, Complex z) {
    Location loc;
    Real best = std::numeric_limits<Real>::infinity();
    Real best_t = 0;
    for (int j = 0; j < region.curve_count(); ++j) {
        const auto [t, dist] = nearest_on_curve(region, j, z);
        if (dist < best) {
            best = dist;
            best_t = t;
            loc.component = j;
        }
    }
    loc.distance = best;
    if (best <= 1e-12 * region.diameter()) {
        loc.where = PointClass::OnBoundary;
        return loc;
    }

    const int j = loc.component;
    if (best < 4 * max_segment(region.outline(j))) {
        // G lies to the left of every boundary curve.
        const auto& c = region.curve(j);
        const bool left = cross(c.deta(best_t), z - c.eta(best_t)) > 0;
        loc.where = left ? PointClass::Interior : PointClass::Exterior;
        return loc;
    }

    if (polygon_winding(region.outline(0), z) == 0) {
        loc.where = PointClass::Exterior;
        loc.component = 0;
        return loc;
    }
    for (int k = 1; k < region.curve_count(); ++k) {
        if (polygon_winding(region.outline(k), z) != 0) {
            loc.where = PointClass::Exterior;
            loc.component = k;
            return loc;
        }
    }
    loc.where = PointClass::Interior;
    return loc;
}

} // namespace cmap
