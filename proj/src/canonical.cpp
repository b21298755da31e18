#include "cmap/canonical.hpp"

#include <cmath>

namespace cmap {

std::string to_string(SlitKind kind) {
    switch (kind) {
    case SlitKind::AnnulusSlits: return "annulus";
    case SlitKind::DiskSlits: return "disk";
    case SlitKind::CircularSlits: return "circular";
    case SlitKind::RadialSlits: return "radial";
    case SlitKind::ParallelSlits: return "parallel";
    }
    return "unknown";
}

SlitKind parse_kind(const std::string& name) {
    for (auto k : all_kinds)
        if (to_string(k) == name) return k;
    throw InvalidInput("unknown canonical kind '" + name + "'");
}

void validate_kind(const Region& region, const CanonicalKind& kind) {
    if (!is_interior(region, Complex(0))) throw InvalidInput("origin not in G");
    switch (kind.tag) {
    case SlitKind::AnnulusSlits: {
        if (region.hole_count() < 1) throw InvalidInput("needs at least one hole");
        const auto loc = locate_point(region, kind.z1);
        if (loc.where != PointClass::Exterior || loc.component != 1) throw InvalidInput("invalid auxiliary point");
        break;
    }
    case SlitKind::CircularSlits:
    case SlitKind::RadialSlits:
        if (kind.alpha == Complex(0) || !is_interior(region, kind.alpha)) throw InvalidInput("invalid auxiliary point");
        break;
    case SlitKind::ParallelSlits:
        if (!std::isfinite(kind.delta)) throw InvalidInput("invalid slit angle");
        break;
    case SlitKind::DiskSlits: break;
    }
}

RealVector prescribed_winding(SlitKind kind, int curves) {
    RealVector h = RealVector::Zero(curves);
    if (kind == SlitKind::AnnulusSlits || kind == SlitKind::DiskSlits) h[0] = 1;
    if (kind == SlitKind::AnnulusSlits && curves > 1) h[1] = -1;
    return h;
}

Density build_rhs(const CanonicalKind& kind, const Discretization& disc) {
    validate_kind(*disc.region, kind);
    Density rhs(disc.size());
    if (kind.tag == SlitKind::AnnulusSlits || kind.tag == SlitKind::DiskSlits) {
        const RealVector h = prescribed_winding(kind.tag, disc.curves);
        for (int k = 0; k < disc.curves; ++k) disc.on_curve(rhs, k).setConstant(h[k]);
        return rhs;
    }
    // 2 Im[(eta'/eta) g(eta)] with g analytic in the complement, g(inf) = 0.
    for (Eigen::Index i = 0; i < disc.size(); ++i) {
        const Complex eta = disc.eta[i];
        const Complex adj = disc.deta[i] / eta;
        Complex g;
        switch (kind.tag) {
        case SlitKind::CircularSlits: g = kind.alpha / (eta - kind.alpha); break;
        case SlitKind::RadialSlits: g = I * kind.alpha / (eta - kind.alpha); break;
        default: g = -kind.slit_rotation() / eta; break;
        }
        rhs[i] = 2 * (adj * g).imag();
    }
    return rhs;
}

GammaMu gamma_mu(const CanonicalKind& kind, const Discretization& disc) {
    GammaMu out;
    out.values.resize(disc.size());
    out.jump = ComplexVector::Zero(disc.curves);

    if (kind.tag == SlitKind::ParallelSlits) {
        out.values = -kind.slit_rotation() * disc.eta.cwiseInverse();
        return out;
    }

    Complex factor = -1;
    if (kind.tag == SlitKind::RadialSlits) factor = I;
    auto argument = [&](Complex eta) -> Complex {
        switch (kind.tag) {
        case SlitKind::AnnulusSlits: return Real(1) - eta / kind.z1;
        case SlitKind::DiskSlits: return eta;
        default: return Real(1) / eta - Real(1) / kind.alpha;
        }
    };

    for (int k = 0; k < disc.curves; ++k) {
        const Eigen::Index base = static_cast<Eigen::Index>(k) * disc.n;
        Complex prev = argument(disc.eta[base]);
        if (prev == Complex(0)) throw InvalidInput("auxiliary point on boundary");
        Complex log_value = std::log(prev);
        out.values[base] = factor * log_value;
        for (int i = 1; i <= disc.n; ++i) {
            const Complex cur = argument(disc.eta[base + (i % disc.n)]);
            if (cur == Complex(0)) throw InvalidInput("auxiliary point on boundary");
            // continue the branch: consecutive phase steps stay in (-pi, pi]
            log_value = Complex(std::log(std::abs(cur)), log_value.imag() + std::arg(cur / prev));
            prev = cur;
            if (i < disc.n) out.values[base + i] = factor * log_value;
        }
        const Real winding = std::round((log_value.imag() - std::arg(argument(disc.eta[base]))) / two_pi);
        out.jump[k] = factor * Complex(0, two_pi * winding);
    }
    return out;
}

Parameters recover_parameters(const CanonicalKind& kind, const GammaMu& gm, const AntiderivativeResult& rho,
                              const std::vector<Density>& phis, const Discretization& disc) {
    const int curves = disc.curves;
    if (static_cast<int>(phis.size()) != curves || gm.values.size() != disc.size() || rho.rho.size() != disc.size())
        throw InvalidInput("incompatible densities");

    const Real sign = kind.tag == SlitKind::RadialSlits ? -1 : 1;
    const Density gamma = gm.values.real();
    const Density imag_part = sign * rho.rho + gm.values.imag();

    Parameters p;
    for (int k = 0; k < curves; ++k) {
        const Complex period_step = gm.jump[k] + Complex(0, sign * two_pi * rho.mean[k]);
        p.periodicity_residual = std::max(p.periodicity_residual, std::abs(period_step));
    }
    // A mismatch of a whole turn means the log branch and theta' disagree.
    if (!(p.periodicity_residual < pi)) throw NumericalFailure("parameter recovery failed: branch mismatch");

    RealVector h(curves), nu(curves);
    for (int k = 0; k < curves; ++k) {
        h[k] = functional(gamma, phis[k], disc);
        nu[k] = functional(imag_part, phis[k], disc);
    }
    if (!h.allFinite() || !nu.allFinite()) throw NumericalFailure("parameter recovery failed");

    p.R.resize(curves);
    p.ck = nu;
    switch (kind.tag) {
    case SlitKind::AnnulusSlits:
    case SlitKind::DiskSlits:
        p.c = std::exp(-h[0]);
        p.R[0] = 1;
        for (int k = 1; k < curves; ++k) p.R[k] = std::exp(h[k] - h[0]);
        break;
    case SlitKind::CircularSlits: p.R = h.array().exp(); break;
    case SlitKind::RadialSlits:
        for (int k = 0; k < curves; ++k) {
            Real angle = std::fmod(h[k], two_pi);
            if (angle < 0) angle += two_pi;
            p.R[k] = angle;
        }
        p.ck = -nu;
        break;
    case SlitKind::ParallelSlits: p.R = h; break;
    }
    if (!p.R.allFinite()) throw NumericalFailure("parameter recovery failed");
    return p;
}

BoundaryValues boundary_values(const CanonicalKind& kind, const Discretization& disc, const RealVector& theta,
                               const RealVector& theta_prime, const RealVector& R) {
    BoundaryValues bv;
    bv.omega.resize(disc.size());
    bv.domega.resize(disc.size());
    const Complex back = std::conj(kind.slit_rotation());
    for (Eigen::Index i = 0; i < disc.size(); ++i) {
        const Real r = R[disc.curve_of(i)];
        const Real th = theta[i];
        const Real dth = theta_prime[i];
        const Complex deta = disc.deta[i];
        switch (kind.tag) {
        case SlitKind::RadialSlits: {
            const Complex w = std::exp(th) * std::polar(Real(1), r);
            bv.omega[i] = w;
            bv.domega[i] = dth * w / deta;
            break;
        }
        case SlitKind::ParallelSlits:
            bv.omega[i] = back * Complex(r, th);
            bv.domega[i] = back * I * dth / deta;
            break;
        default: {
            const Complex w = std::polar(r, th);
            bv.omega[i] = w;
            bv.domega[i] = I * dth * w / deta;
            break;
        }
        }
    }
    return bv;
}

PreparedSystem prepare_system(std::shared_ptr<const Region> region, int n) {
    PreparedSystem p;
    p.disc = std::make_shared<const Discretization>(sample_boundary(region, n));
    p.system = std::make_shared<const SystemMatrix>(assemble_system(p.disc, true));
    p.phis = chi_densities(*p.system);
    return p;
}

MapSolution assemble_solution(const CanonicalKind& kind, std::shared_ptr<const Discretization> disc, RealVector theta,
                              RealVector theta_prime, RealVector R, std::optional<Real> c, RealVector ck,
                              Diagnostics diagnostics) {
    if (theta.size() != disc->size() || theta_prime.size() != disc->size() || R.size() != disc->curves ||
        ck.size() != disc->curves)
        throw InvalidInput("solution arrays do not match the discretization");
    MapSolution sol;
    sol.kind = kind;
    sol.boundary = boundary_values(kind, *disc, theta, theta_prime, R);
    sol.image_outline = trig_upsample(sol.boundary.omega, disc->n, MapSolution::outline_factor);
    sol.disc = std::move(disc);
    sol.theta = std::move(theta);
    sol.theta_prime = std::move(theta_prime);
    sol.R = std::move(R);
    sol.c = c;
    sol.ck = std::move(ck);
    sol.diagnostics = diagnostics;
    return sol;
}

MapSolution solve_map(const PreparedSystem& prepared, const CanonicalKind& kind) {
    const auto& disc = *prepared.disc;
    const Density rhs = build_rhs(kind, disc);
    const SolveResult solved = solve_system(*prepared.system, RealMatrix(rhs));
    const Density theta_prime = solved.x.col(0);

    Diagnostics diag;
    diag.linear_system = solved.residual;
    const RealVector expected = prescribed_winding(kind.tag, disc.curves);
    for (int k = 0; k < disc.curves; ++k)
        diag.winding = std::max(diag.winding, std::abs(disc.on_curve(theta_prime, k).mean() - expected[k]));

    const auto rho = trig_antiderivative(theta_prime, disc.n);
    const auto gm = gamma_mu(kind, disc);
    const auto params = recover_parameters(kind, gm, rho, prepared.phis, disc);
    diag.periodicity = params.periodicity_residual;

    RealVector theta = rho.rho;
    for (int k = 0; k < disc.curves; ++k) disc.on_curve(theta, k).array() += params.ck[k];

    return assemble_solution(kind, prepared.disc, std::move(theta), theta_prime, params.R, params.c, params.ck, diag);
}

MapSolution solve_map(const Region& region, const CanonicalKind& kind, int n) {
    validate_kind(region, kind);
    return solve_map(prepare_system(std::make_shared<const Region>(region), n), kind);
}

Complex default_z1(const Region& region) {
    if (region.hole_count() < 1) throw InvalidInput("needs at least one hole");
    const auto& p = region.outline(1);
    return {0.5 * (p.real().minCoeff() + p.real().maxCoeff()), 0.5 * (p.imag().minCoeff() + p.imag().maxCoeff())};
}

Complex default_alpha(const Region& region) {
    const Complex centroid = region.outline(0).mean();
    if (centroid == Complex(0) || !is_interior(region, centroid)) throw InvalidInput("invalid auxiliary point");
    return centroid;
}

} // namespace cmap
