#include "cmap/eval.hpp"
#include "cmap/verify.hpp"

#include <cmath>
#include <cstdio>

namespace cmap {

std::vector<Complex> interior_lattice(const Region& region, Real spacing, Real clearance) {
    const auto& outer = region.outline(0);
    const Real xlo = std::floor(outer.real().minCoeff() / spacing), xhi = std::ceil(outer.real().maxCoeff() / spacing);
    const Real ylo = std::floor(outer.imag().minCoeff() / spacing), yhi = std::ceil(outer.imag().maxCoeff() / spacing);
    std::vector<Complex> pts;
    for (Real i = xlo; i <= xhi; ++i)
        for (Real j = ylo; j <= yhi; ++j) {
            if (i == 0 && j == 0) continue;
            const Complex z(i * spacing, j * spacing);
            const auto loc = locate_point(region, z);
            if (loc.where == PointClass::Interior && loc.distance >= clearance) pts.push_back(z);
        }
    return pts;
}

namespace {

std::string sci(Real x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

CheckResult oracle_check(const std::string& name, const Region& region, const CanonicalKind& kind, Real radius) {
    const Oracle o = oracle_disk(kind, radius);
    const MapSolution sol = solve_map(region, kind, 128);
    Real err = std::abs(sol.R[0] - o.R[0]);
    if (o.c) err = std::max(err, std::abs(*sol.c - *o.c));
    for (const Complex z : interior_lattice(region, 0.1 * radius, 0.2 * radius))
        err = std::max(err, std::abs(map_point(sol, z) - o.map(z)));
    return {name, err <= 1e-10, "sup error " + sci(err)};
}

} // namespace

std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> out;
    auto guard = [&](const std::string& name, auto&& body) {
        try {
            out.push_back(body());
        } catch (const std::exception& e) {
            out.push_back({name, false, e.what()});
        }
    };

    guard("identity pipeline", [] {
        const MapSolution sol = solve_map(disk_region(), CanonicalKind::disk(), 16);
        Real err = 0;
        for (Eigen::Index i = 0; i < sol.theta.size(); ++i) err = std::max(err, std::abs(sol.theta[i] - sol.disc->t[i]));
        return CheckResult{"identity pipeline", err <= 1e-12, "max |theta - t| " + sci(err)};
    });
    const Region unit = disk_region();
    guard("disk r=2", [] { return oracle_check("disk r=2", disk_region(2), CanonicalKind::disk(), 2); });
    guard("circular alpha=0.5", [&] { return oracle_check("circular alpha=0.5", unit, CanonicalKind::circular(0.5), 1); });
    guard("radial alpha=0.5", [&] { return oracle_check("radial alpha=0.5", unit, CanonicalKind::radial(0.5), 1); });
    guard("parallel delta=pi/4", [&] { return oracle_check("parallel delta=pi/4", unit, CanonicalKind::parallel(), 1); });
    guard("eccentric annulus", [] {
        const Oracle o = oracle_eccentric_annulus(0.5, 0.2);
        const MapSolution sol = solve_map(eccentric_annulus_region(0.5, 0.2), CanonicalKind::annulus(0.5), 256);
        Real err = std::abs(sol.R[1] - o.R[1]);
        // the numerical map is normalized by omega(0) > 0, the Moebius map by omega(0) = a > 0
        for (Eigen::Index i = 0; i < sol.disc->size(); ++i)
            err = std::max(err, std::abs(sol.boundary.omega[i] - o.map(sol.disc->eta[i])));
        return CheckResult{"eccentric annulus", err <= 1e-8, "sup error " + sci(err)};
    });
    return out;
}

} // namespace cmap
