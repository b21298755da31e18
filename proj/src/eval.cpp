#include "cmap/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cmap {

namespace {

void require_interior(const MapSolution& sol, Complex z) {
    if (sol.kind.has_pole() && z == Complex(0)) throw InvalidInput("pole of the map");
    if (!is_interior(sol.region(), z)) throw InvalidInput("point outside domain");
}

// (1/2 pi i) \int_J f(t) eta'(t) / (eta(t) - z) dt by the trapezoidal rule,
// divided by the same rule applied to f = 1 (whose exact value is 1 for z in
// G).  The quotient stays accurate much closer to the boundary.
Complex cauchy_quotient(const ComplexVector& nodes, const ComplexVector& weights, const ComplexVector& f, Complex z) {
    Complex num = 0, den = 0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
        const Complex c = weights[i] / (nodes[i] - z);
        num += f[i] * c;
        den += c;
    }
    return num / den;
}

// Index of the nearest refined image point and its distance.
std::pair<Eigen::Index, Real> nearest_image(const MapSolution& sol, Complex w) {
    Eigen::Index idx = 0;
    const Real d = (sol.image_outline.array() - w).abs().minCoeff(&idx);
    return {idx, d};
}

} // namespace

// For the kinds with a pole the quadrature acts on omega - 1/z, which is
// analytic in G.
Complex map_point(const MapSolution& sol, Complex z) {
    require_interior(sol, z);
    const auto& disc = *sol.disc;
    if (!sol.kind.has_pole()) return cauchy_quotient(disc.eta, disc.deta, sol.boundary.omega, z);
    const ComplexVector g = sol.boundary.omega - disc.eta.cwiseInverse();
    return cauchy_quotient(disc.eta, disc.deta, g, z) + Real(1) / z;
}

Complex map_derivative(const MapSolution& sol, Complex z) {
    require_interior(sol, z);
    const auto& disc = *sol.disc;
    if (!sol.kind.has_pole()) return cauchy_quotient(disc.eta, disc.deta, sol.boundary.domega, z);
    const ComplexVector g = sol.boundary.domega + disc.eta.cwiseProduct(disc.eta).cwiseInverse();
    return cauchy_quotient(disc.eta, disc.deta, g, z) - Real(1) / (z * z);
}

Real image_boundary_distance(const MapSolution& sol, Complex w) { return nearest_image(sol, w).second; }

InverseResult inverse_point(const MapSolution& sol, Complex w) {
    const auto& disc = *sol.disc;
    const Real modulus = std::abs(w);
    if (!std::isfinite(modulus)) throw InvalidInput("point outside canonical domain");
    if (sol.kind.tag == SlitKind::DiskSlits && modulus >= 1) throw InvalidInput("point outside canonical domain");
    if (sol.kind.tag == SlitKind::AnnulusSlits && (modulus >= 1 || modulus <= sol.R[1]))
        throw InvalidInput("point outside canonical domain");

    const auto [idx, dist] = nearest_image(sol, w);
    const auto& fine = sol.image_outline;
    const Eigen::Index per_curve = static_cast<Eigen::Index>(disc.n) * MapSolution::outline_factor;
    const Eigen::Index base = (idx / per_curve) * per_curve;
    const Eigen::Index local = idx - base;
    const Complex next = fine[base + (local + 1) % per_curve];
    const Complex prev = fine[base + (local + per_curve - 1) % per_curve];
    const Real spacing =
        MapSolution::outline_factor * std::max(std::abs(next - fine[idx]), std::abs(fine[idx] - prev));
    if (dist < spacing) throw InvalidInput("too close to slits");

    // xi'(t) = eta'(t) omega'(eta(t)).  When omega has a pole the image
    // curves do not wind around w and the plain sum is used.
    const ComplexVector dxi = disc.deta.cwiseProduct(sol.boundary.domega);
    InverseResult r;
    if (sol.kind.has_pole()) {
        Complex sum = 0;
        for (Eigen::Index i = 0; i < disc.size(); ++i) sum += disc.eta[i] * dxi[i] / (sol.boundary.omega[i] - w);
        r.z = sum / (I * Real(disc.n));
    } else {
        r.z = cauchy_quotient(sol.boundary.omega, dxi, disc.eta, w);
    }
    r.image_distance = dist;
    r.reliable = std::isfinite(r.z.real()) && std::isfinite(r.z.imag()) && is_interior(sol.region(), r.z);
    return r;
}

std::vector<PointEvaluation> evaluate_points(const MapSolution& sol, const std::vector<Complex>& points) {
    std::vector<PointEvaluation> out(points.size());
    const Real nan = std::numeric_limits<Real>::quiet_NaN();
    const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        auto& e = out[static_cast<std::size_t>(k)];
        e.z = points[static_cast<std::size_t>(k)];
        e.distance = locate_point(sol.region(), e.z).distance;
        try {
            e.w = map_point(sol, e.z);
            e.dw = map_derivative(sol, e.z);
        } catch (const InvalidInput& err) {
            e.w = e.dw = Complex(nan, nan);
            e.status = err.what();
        }
    }
    return out;
}

std::vector<InverseEvaluation> invert_points(const MapSolution& sol, const std::vector<Complex>& points) {
    std::vector<InverseEvaluation> out(points.size());
    const Real nan = std::numeric_limits<Real>::quiet_NaN();
    const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        auto& e = out[static_cast<std::size_t>(k)];
        e.w = points[static_cast<std::size_t>(k)];
        e.image_distance = image_boundary_distance(sol, e.w);
        try {
            const auto r = inverse_point(sol, e.w);
            e.z = r.z;
            if (!r.reliable) e.status = "inverse evaluation unreliable";
        } catch (const InvalidInput& err) {
            e.z = Complex(nan, nan);
            e.status = err.what();
        }
    }
    return out;
}

std::vector<Polyline> image_grid(const MapSolution& sol, const GridSpec& spec) {
    const Region& region = sol.region();
    const Real clearance = spec.clearance > 0 ? spec.clearance : 1e-3 * region.diameter();
    const auto& outer = region.outline(0);
    const Real xlo = outer.real().minCoeff(), xhi = outer.real().maxCoeff();
    const Real ylo = outer.imag().minCoeff(), yhi = outer.imag().maxCoeff();

    std::vector<std::vector<Complex>> lines;
    const int count = std::max(spec.lines, 1);
    const int samples = std::max(spec.samples, 2);
    if (spec.layout == GridSpec::Layout::Cartesian) {
        for (int k = 1; k <= count; ++k) {
            const Real fx = xlo + (xhi - xlo) * k / (count + 1);
            const Real fy = ylo + (yhi - ylo) * k / (count + 1);
            std::vector<Complex> v, h;
            for (int s = 0; s < samples; ++s) {
                v.emplace_back(fx, ylo + (yhi - ylo) * s / (samples - 1));
                h.emplace_back(xlo + (xhi - xlo) * s / (samples - 1), fy);
            }
            lines.push_back(std::move(v));
            lines.push_back(std::move(h));
        }
    } else {
        Real radius = spec.radius;
        if (radius <= 0)
            radius = (outer.array() - spec.center).abs().maxCoeff();
        for (int k = 1; k <= count; ++k) {
            const Real r = radius * k / count;
            std::vector<Complex> circle;
            for (int s = 0; s < samples; ++s) circle.push_back(spec.center + std::polar(r, two_pi * s / (samples - 1)));
            lines.push_back(std::move(circle));
        }
        for (int k = 0; k < count; ++k) {
            const Real a = two_pi * k / count;
            std::vector<Complex> ray;
            for (int s = 0; s < samples; ++s) ray.push_back(spec.center + std::polar(radius * s / (samples - 1), a));
            lines.push_back(std::move(ray));
        }
    }

    std::vector<Polyline> out;
    for (const auto& line : lines) {
        Polyline run;
        auto flush = [&] {
            if (run.points.size() >= 2) out.push_back(std::move(run));
            run = Polyline{};
        };
        for (const Complex z : line) {
            const auto loc = locate_point(region, z);
            const bool near_pole = sol.kind.has_pole() && std::abs(z) < clearance;
            if (loc.where != PointClass::Interior || loc.distance < clearance || near_pole) {
                flush();
                continue;
            }
            run.points.push_back(map_point(sol, z));
        }
        flush();
    }

    const auto& disc = *sol.disc;
    for (int k = 0; k < disc.curves; ++k) {
        Polyline b;
        b.boundary = true;
        b.curve = k;
        for (int i = 0; i < disc.n; ++i) b.points.push_back(sol.boundary.omega[static_cast<Eigen::Index>(k) * disc.n + i]);
        b.points.push_back(b.points.front());
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace cmap
