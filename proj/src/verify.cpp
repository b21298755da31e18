#include "cmap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

namespace cmap {

namespace {

constexpr int check_points = 64;
constexpr Real check_tol = 1e-12;

// (1/2 pi i) \oint f(z) z^{-power} dz over |z - center| = radius, trapezoidal.
Complex contour_coefficient(const std::function<Complex(Complex)>& f, Complex center, Real radius, int power) {
    Complex sum = 0;
    for (int k = 0; k < check_points; ++k) {
        const Complex u = std::polar(radius, two_pi * k / check_points);
        sum += f(center + u) * std::pow(u, Real(1 - power));
    }
    return sum / Real(check_points);
}

void expect(bool ok, const char* what) {
    if (!ok) throw NumericalFailure(std::string("oracle self-check failed: ") + what);
}

void check_derivative(const Oracle& o, std::initializer_list<Complex> points) {
    for (const Complex z : points) {
        // Taylor coefficient of (z - z0)^1 via a small contour
        const Complex numeric = contour_coefficient(o.map, z, 0.05 * std::max<Real>(std::abs(z), 0.1), 2);
        const Complex exact = o.derivative(z);
        expect(std::abs(numeric - exact) <= check_tol * std::max<Real>(1, std::abs(exact)), "derivative");
    }
}

Real wrap_angle(Real a) {
    Real r = std::fmod(a, two_pi);
    return r < 0 ? r + two_pi : r;
}

} // namespace

Region disk_region(Real radius) { return build_region({CurveSpec::circle(0, radius)}); }

Region eccentric_annulus_region(Real hole_center, Real hole_radius) {
    return build_region({CurveSpec::circle(0, 1), CurveSpec::circle(hole_center, hole_radius, true)});
}

Oracle oracle_disk(const CanonicalKind& kind, Real radius) {
    if (kind.tag == SlitKind::AnnulusSlits || !(radius > 0) || (kind.tag != SlitKind::DiskSlits && radius != 1))
        throw InvalidInput("no closed form available");

    Oracle o;
    o.kind = kind;
    o.R.resize(1);
    const Complex a = kind.alpha;
    const Complex rot2 = std::polar(Real(1), -2 * (pi / 2 - kind.delta)); // e^{-2i(pi/2 - delta)}

    switch (kind.tag) {
    case SlitKind::DiskSlits:
        o.map = [radius](Complex z) { return z / radius; };
        o.derivative = [radius](Complex) { return Complex(1 / radius); };
        o.R[0] = 1;
        o.c = 1 / radius;
        break;
    case SlitKind::CircularSlits:
        if (a == Complex(0) || std::abs(a) >= 1) throw InvalidInput("invalid auxiliary point");
        o.map = [a](Complex z) { return -(z - a) / (a * z * (Real(1) - std::conj(a) * z)); };
        o.derivative = [a](Complex z) {
            // d/dz of -(z - a) / (a z - |a|^2 z^2)
            const Complex den = a * z - std::norm(a) * z * z;
            const Complex dden = a - Real(2) * std::norm(a) * z;
            return -(den - (z - a) * dden) / (den * den);
        };
        o.R[0] = 1 / std::abs(a);
        break;
    case SlitKind::RadialSlits:
        if (a == Complex(0) || std::abs(a) >= 1) throw InvalidInput("invalid auxiliary point");
        o.map = [a](Complex z) { return -(z - a) * (Real(1) - std::conj(a) * z) / (a * z); };
        o.derivative = [a](Complex z) {
            // -(1/a) * (z - a)(1 - conj(a) z) / z = -(1/a) (1 + |a|^2 - conj(a) z - a / z)
            return -(-std::conj(a) + a / (z * z)) / a;
        };
        o.R[0] = wrap_angle(std::arg(-Real(1) / a));
        break;
    case SlitKind::ParallelSlits:
        o.map = [rot2](Complex z) { return Real(1) / z - rot2 * z; };
        o.derivative = [rot2](Complex z) { return -Real(1) / (z * z) - rot2; };
        o.R[0] = 0;
        break;
    default: break;
    }

    // boundary shape on |z| = radius
    const Complex rot = kind.slit_rotation();
    for (int k = 0; k < check_points; ++k) {
        const Complex w = o.map(std::polar(radius, two_pi * k / check_points));
        switch (kind.tag) {
        case SlitKind::DiskSlits:
        case SlitKind::CircularSlits: expect(std::abs(std::abs(w) - o.R[0]) <= check_tol * o.R[0], "constant modulus"); break;
        case SlitKind::RadialSlits: expect(std::abs(std::arg(w * std::polar(Real(1), -o.R[0]))) <= check_tol, "constant argument"); break;
        default: expect(std::abs((rot * w).real() - o.R[0]) <= check_tol, "constant offset"); break;
        }
    }

    // normalization
    if (kind.tag == SlitKind::DiskSlits) {
        expect(std::abs(o.map(0)) <= check_tol, "omega(0) = 0");
        const Complex slope = contour_coefficient(o.map, 0, 0.5 * radius, 2);
        expect(std::abs(slope - *o.c) <= check_tol && *o.c > 0, "omega'(0) > 0");
        check_derivative(o, {Complex(0.3 * radius, 0), Complex(-0.2 * radius, 0.4 * radius)});
    } else {
        const Real eps = kind.tag == SlitKind::ParallelSlits ? 0.25 : 0.5 * std::abs(a);
        expect(std::abs(contour_coefficient(o.map, 0, eps, 0) - Real(1)) <= check_tol, "residue 1 at 0");
        if (kind.tag == SlitKind::ParallelSlits)
            expect(std::abs(contour_coefficient(o.map, 0, eps, 1)) <= check_tol, "omega(z) - 1/z -> 0");
        else
            expect(std::abs(o.map(a)) <= check_tol, "omega(alpha) = 0");
        check_derivative(o, {Complex(0.6, 0.1), Complex(-0.3, -0.5)});
    }
    return o;
}

Oracle oracle_eccentric_annulus(Real hole_center, Real hole_radius) {
    const Real ch = hole_center, rh = hole_radius;
    if (!(rh > 0) || !(ch > 0) || !(ch + rh < 1)) throw InvalidInput("hole must lie strictly inside the unit disk");
    if (!(ch - rh > 0)) throw InvalidInput("origin not in G");

    const Real p = 1 + ch * ch - rh * rh;
    const Real a = (p - std::sqrt(p * p - 4 * ch * ch)) / (2 * ch);

    Oracle o;
    o.kind = CanonicalKind::annulus(ch);
    o.map = [a](Complex z) { return (a - z) / (Real(1) - a * z); };
    o.derivative = [a](Complex z) {
        const Complex d = Real(1) - a * z;
        return (a * a - Real(1)) / (d * d);
    };
    const Real near = ch - rh;
    o.R.resize(2);
    o.R << 1, (a - near) / (1 - a * near);
    o.c = a;

    expect(a > 0 && a < 1, "0 < a < 1");
    for (int k = 0; k < check_points; ++k) {
        const Real t = two_pi * k / check_points;
        expect(std::abs(std::abs(o.map(std::polar(Real(1), t))) - 1) <= check_tol, "unit circle preserved");
        expect(std::abs(std::abs(o.map(ch + std::polar(rh, t))) - o.R[1]) <= check_tol, "hole image concentric");
    }
    expect(std::abs(o.map(0) - a) <= check_tol, "omega(0) = a");
    check_derivative(o, {Complex(-0.5, 0.2), Complex(0.1, -0.6)});
    return o;
}

Real boundary_sup_difference(const MapSolution& coarse, const MapSolution& fine) {
    const int nc = coarse.n(), nf = fine.n();
    if (nf % nc != 0 || coarse.disc->curves != fine.disc->curves) throw InvalidInput("node sets incomparable");
    const int step = nf / nc;
    Real err = 0;
    for (int k = 0; k < coarse.disc->curves; ++k)
        for (int i = 0; i < nc; ++i) {
            const Complex a = coarse.boundary.omega[static_cast<Eigen::Index>(k) * nc + i];
            const Complex b = fine.boundary.omega[static_cast<Eigen::Index>(k) * nf + i * step];
            err = std::max(err, std::abs(a - b));
        }
    return err;
}

std::vector<ConvergenceRow> convergence_table(const Region& region, const std::vector<CanonicalKind>& kinds,
                                              const std::vector<int>& n_list, int ref_n) {
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const int n = n_list[i];
        if (n <= 0 || n >= ref_n || ref_n % n != 0) throw InvalidInput("node sets incomparable");
        const int ratio = ref_n / n;
        if ((ratio & (ratio - 1)) != 0) throw InvalidInput("node sets incomparable");
        if (i > 0 && n <= n_list[i - 1]) throw InvalidInput("node sets incomparable");
    }
    for (const auto& k : kinds) validate_kind(region, k);

    using clock = std::chrono::steady_clock;
    auto shared = std::make_shared<const Region>(region);
    auto run = [&](int n, std::vector<MapSolution>& sols, std::vector<Real>& times) {
        const auto t0 = clock::now();
        const auto prepared = prepare_system(shared, n);
        const Real setup = std::chrono::duration<Real, std::milli>(clock::now() - t0).count();
        for (const auto& kind : kinds) {
            const auto t1 = clock::now();
            sols.push_back(solve_map(prepared, kind));
            times.push_back(setup + std::chrono::duration<Real, std::milli>(clock::now() - t1).count());
        }
    };

    std::vector<MapSolution> ref;
    std::vector<Real> ref_times;
    run(ref_n, ref, ref_times);

    std::map<std::pair<std::size_t, int>, ConvergenceRow> cells;
    for (const int n : n_list) {
        std::vector<MapSolution> sols;
        std::vector<Real> times;
        run(n, sols, times);
        for (std::size_t k = 0; k < kinds.size(); ++k)
            cells[{k, n}] = ConvergenceRow{kinds[k].tag, n, boundary_sup_difference(sols[k], ref[k]), times[k]};
    }

    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 0; k < kinds.size(); ++k)
        for (const int n : n_list) rows.push_back(cells.at({k, n}));
    return rows;
}

} // namespace cmap
