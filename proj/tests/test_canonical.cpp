#include "cmap/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cmap;
using fixtures::ellipses_kind;
using fixtures::ellipses_region;

TEST(Kinds, NamesRoundTrip) {
    for (SlitKind k : all_kinds) EXPECT_EQ(parse_kind(to_string(k)), k);
    EXPECT_THROW(parse_kind("spiral"), InvalidInput);
}

TEST(Kinds, PrescribedWinding) {
    EXPECT_EQ(prescribed_winding(SlitKind::AnnulusSlits, 3), (RealVector(3) << 1, -1, 0).finished());
    EXPECT_EQ(prescribed_winding(SlitKind::DiskSlits, 3), (RealVector(3) << 1, 0, 0).finished());
    for (SlitKind k : {SlitKind::CircularSlits, SlitKind::RadialSlits, SlitKind::ParallelSlits})
        EXPECT_EQ(prescribed_winding(k, 3), RealVector::Zero(3));
}

TEST(Kinds, Validation) {
    const Region r = ellipses_region();
    const Region unit = disk_region();
    const Region shifted({CurveSpec::circle(3.0, 1)});
    EXPECT_THROW(validate_kind(shifted, CanonicalKind::disk()), InvalidInput);
    EXPECT_THROW(validate_kind(unit, CanonicalKind::annulus(0.5)), InvalidInput);
    EXPECT_THROW(validate_kind(r, CanonicalKind::annulus(0.0)), InvalidInput);          // z1 in G
    EXPECT_THROW(validate_kind(r, CanonicalKind::annulus({1.5, -0.4})), InvalidInput);  // z1 in hole 2
    EXPECT_THROW(validate_kind(r, CanonicalKind::circular(0.0)), InvalidInput);
    EXPECT_THROW(validate_kind(r, CanonicalKind::radial({1.5, 1.0})), InvalidInput);
    EXPECT_THROW(validate_kind(r, CanonicalKind::parallel(std::nan(""))), InvalidInput);
    EXPECT_NO_THROW(validate_kind(r, CanonicalKind::annulus({1.5, 1.0})));
    EXPECT_NO_THROW(validate_kind(r, CanonicalKind::parallel(0.3)));
}

TEST(Kinds, Defaults) {
    const Region r = ellipses_region();
    EXPECT_EQ(locate_point(r, default_z1(r)).component, 1);
    EXPECT_TRUE(is_interior(r, default_alpha(r)));
    EXPECT_THROW(default_z1(disk_region()), InvalidInput);
}

TEST(Pipeline, IdentityMap) {
    const auto sol = solve_map(disk_region(), CanonicalKind::disk(), 16);
    EXPECT_LT((sol.theta_prime.array() - 1).abs().maxCoeff(), 1e-14);
    EXPECT_LT((sol.theta - sol.disc->t).cwiseAbs().maxCoeff(), 1e-12);
    ASSERT_TRUE(sol.c.has_value());
    EXPECT_NEAR(*sol.c, 1, 1e-14);
    EXPECT_LT((sol.boundary.omega - sol.disc->eta).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Pipeline, ScaledDiskFixesTheNormalization) {
    const auto sol = solve_map(disk_region(2), CanonicalKind::disk(), 32);
    EXPECT_NEAR(*sol.c, 0.5, 1e-13);
    EXPECT_LT((sol.boundary.omega - sol.disc->eta / 2.0).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Pipeline, EccentricAnnulusRadius) {
    const auto sol = solve_map(eccentric_annulus_region(0.5, 0.2), CanonicalKind::annulus(0.5), 128);
    EXPECT_NEAR(sol.R[0], 1, 1e-14);
    EXPECT_NEAR(sol.R[1], oracle_eccentric_annulus(0.5, 0.2).R[1], 1e-8);
}

TEST(Pipeline, ShapeInvariantsOnEllipses) {
    const auto prepared = prepare_system(std::make_shared<const Region>(ellipses_region()), 128);
    for (SlitKind tag : all_kinds) {
        const auto kind = ellipses_kind(tag);
        const auto sol = solve_map(prepared, kind);
        const auto& d = *sol.disc;
        const auto& w = sol.boundary.omega;
        Real spread = 0;
        switch (tag) {
        case SlitKind::RadialSlits:
            spread = fixtures::per_curve_spread(d, w, [&](Complex z) {
                return std::arg(z * std::polar(1.0, -sol.R[0]));
            });
            break;
        case SlitKind::ParallelSlits:
            spread = fixtures::per_curve_spread(d, w, [&](Complex z) { return (kind.slit_rotation() * z).real(); });
            break;
        default: spread = fixtures::per_curve_spread(d, w, [](Complex z) { return std::abs(z); }); break;
        }
        EXPECT_LT(spread, 1e-6) << to_string(tag);
    }
}

TEST(Pipeline, RecoveredParametersDescribeTheBoundary) {
    const auto prepared = prepare_system(std::make_shared<const Region>(ellipses_region()), 128);
    for (SlitKind tag : all_kinds) {
        const auto kind = ellipses_kind(tag);
        const auto sol = solve_map(prepared, kind);
        const auto& d = *sol.disc;
        for (int k = 0; k < d.curves; ++k) {
            const Complex w = sol.boundary.omega[k * d.n + 5];
            switch (tag) {
            case SlitKind::RadialSlits:
                EXPECT_NEAR(std::remainder(std::arg(w) - sol.R[k], two_pi), 0, 1e-6);
                EXPECT_GE(sol.R[k], 0);
                EXPECT_LT(sol.R[k], two_pi);
                break;
            case SlitKind::ParallelSlits: EXPECT_NEAR((kind.slit_rotation() * w).real(), sol.R[k], 1e-6); break;
            default: EXPECT_NEAR(std::abs(w), sol.R[k], 1e-6); break;
            }
        }
        if (tag == SlitKind::AnnulusSlits || tag == SlitKind::DiskSlits) {
            EXPECT_DOUBLE_EQ(sol.R[0], 1);
            for (int k = 1; k < d.curves; ++k) EXPECT_LT(sol.R[k], 1);
        }
    }
}

TEST(Pipeline, SlitCurvesClose) {
    const auto prepared = prepare_system(std::make_shared<const Region>(ellipses_region()), 256);
    for (SlitKind tag : all_kinds) {
        const auto sol = solve_map(prepared, ellipses_kind(tag));
        const auto& d = *sol.disc;
        const RealVector wind = prescribed_winding(tag, d.curves);
        for (int k = 0; k < d.curves; ++k) {
            if (wind[k] != 0) continue;
            // theta' changes sign exactly at the two slit tips
            int changes = 0;
            for (int i = 0; i < d.n; ++i) {
                const Real a = sol.theta_prime[k * d.n + i], b = sol.theta_prime[k * d.n + (i + 1) % d.n];
                if ((a < 0) != (b < 0)) ++changes;
            }
            EXPECT_EQ(changes, 2) << to_string(tag) << " curve " << k;
            // theta is periodic and takes its mid value once on each slit side
            const RealVector th = d.on_curve(sol.theta, k);
            const Real mid = 0.5 * (th.minCoeff() + th.maxCoeff());
            int crossings = 0;
            for (int i = 0; i < d.n; ++i)
                if ((th[i] < mid) != (th[(i + 1) % d.n] < mid)) ++crossings;
            EXPECT_EQ(crossings, 2) << to_string(tag) << " curve " << k;
        }
    }
}

TEST(Pipeline, SystemMatrixSharedAcrossKinds) {
    auto region = std::make_shared<const Region>(ellipses_region());
    const auto prepared = prepare_system(region, 32);
    const RealMatrix before = prepared.system->matrix();
    for (SlitKind tag : all_kinds) solve_map(prepared, ellipses_kind(tag));
    EXPECT_TRUE((prepared.system->matrix().array() == before.array()).all());
    const auto again = prepare_system(region, 32);
    EXPECT_TRUE((again.system->matrix().array() == before.array()).all());
}

TEST(Pipeline, SpectralConvergence) {
    auto region = std::make_shared<const Region>(ellipses_region());
    const auto kind = ellipses_kind(SlitKind::CircularSlits);
    const auto s32 = solve_map(prepare_system(region, 32), kind);
    const auto s64 = solve_map(prepare_system(region, 64), kind);
    const auto s128 = solve_map(prepare_system(region, 128), kind);
    const auto s256 = solve_map(prepare_system(region, 256), kind);
    const Real e32 = boundary_sup_difference(s32, s256);
    const Real e64 = boundary_sup_difference(s64, s256);
    const Real e128 = boundary_sup_difference(s128, s256);
    // geometric decay: each doubling gains more than the previous one
    EXPECT_GT(e32 / e64, 10);
    EXPECT_GT(e64 / e128, e32 / e64);
}

TEST(Pipeline, RotationEquivariance) {
    const Real beta = 0.8;
    const Complex rot = std::polar(1.0, beta);
    std::vector<CurveSpec> rotated;
    const Region r = ellipses_region();
    for (const auto& c : r.curves()) {
        const auto& e = c.as_ellipse();
        rotated.push_back(CurveSpec::ellipse(rot * e.center, e.a, e.b, e.rotation + beta));
    }
    const auto a = solve_map(r, CanonicalKind::disk(), 128);
    const auto b = solve_map(Region(rotated), CanonicalKind::disk(), 128);
    // omega_rot(e^{i beta} z) = e^{i beta} omega(z); the integration constants
    // see the rotation through the quadrature, so agreement is to discretization accuracy
    EXPECT_LT((b.boundary.omega - rot * a.boundary.omega).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((b.R - a.R).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((b.theta_prime - a.theta_prime).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(*a.c, *b.c, 1e-12);
}

TEST(Pipeline, AnnulusRadiiScaleInvariant) {
    const Real s = 2.5;
    std::vector<CurveSpec> scaled;
    const Region r = ellipses_region();
    for (const auto& c : r.curves()) {
        const auto& e = c.as_ellipse();
        scaled.push_back(CurveSpec::ellipse(s * e.center, s * e.a, s * e.b, e.rotation));
    }
    const auto a = solve_map(r, CanonicalKind::annulus(fixtures::ellipses_z1), 64);
    const auto b = solve_map(Region(scaled), CanonicalKind::annulus(s * fixtures::ellipses_z1), 64);
    EXPECT_LT((a.R - b.R).cwiseAbs().maxCoeff(), 1e-11);
    EXPECT_LT((a.boundary.omega - b.boundary.omega).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(Pipeline, GammaMuIsContinuousAlongEachCurve) {
    const auto d = sample_boundary(ellipses_region(), 64);
    for (SlitKind tag : all_kinds) {
        const auto gm = gamma_mu(ellipses_kind(tag), d);
        for (int k = 0; k < d.curves; ++k)
            for (int i = 0; i + 1 < d.n; ++i)
                EXPECT_LT(std::abs(gm.values[k * d.n + i + 1] - gm.values[k * d.n + i]), 1.0) << to_string(tag);
    }
}

TEST(Pipeline, AssembleRejectsMismatchedArrays) {
    auto d = std::make_shared<const Discretization>(sample_boundary(disk_region(), 16));
    EXPECT_THROW(assemble_solution(CanonicalKind::disk(), d, RealVector::Zero(15), RealVector::Zero(16),
                                   RealVector::Ones(1), std::nullopt, RealVector::Zero(1)),
                 InvalidInput);
}

TEST(Rhs, SpecExamples) {
    const Region three({CurveSpec::circle(0, 1), CurveSpec::circle(0.5, 0.2, true), CurveSpec::circle(-0.5, 0.2, true)});
    const auto d = sample_boundary(three, 4);
    RealVector expected(12);
    expected << 1, 1, 1, 1, -1, -1, -1, -1, 0, 0, 0, 0;
    EXPECT_EQ(build_rhs(CanonicalKind::annulus(0.5), d), expected);

    const auto u = sample_boundary(disk_region(), 8);
    EXPECT_NEAR(build_rhs(CanonicalKind::circular(0.5), u)[4], -2.0 / 3, 1e-15);  // t = pi

    const RealVector par = build_rhs(CanonicalKind::parallel(pi / 2), u);
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(par[i], -2 * std::cos(u.t[i]), 1e-15);

    EXPECT_THROW(build_rhs(CanonicalKind::annulus(0.5), u), InvalidInput);
    EXPECT_THROW(build_rhs(CanonicalKind::circular(2.0), u), InvalidInput);
}

TEST(GammaMu, SpecExamples) {
    for (Real r : {1.0, 2.5}) {
        const auto d = sample_boundary(disk_region(r), 16);
        const auto gm = gamma_mu(CanonicalKind::disk(), d);
        for (int i = 0; i < 16; ++i) {
            EXPECT_NEAR(gm.values[i].real(), -std::log(r), 1e-15);
            EXPECT_NEAR(gm.values[i].imag(), -d.t[i], 1e-14);
        }
        EXPECT_NEAR(gm.jump[0].imag(), -two_pi, 1e-15);
    }
    const auto d = sample_boundary(disk_region(), 16);
    const auto gm = gamma_mu(CanonicalKind::parallel(pi / 2), d);
    for (int i = 0; i < 16; ++i) {
        EXPECT_NEAR(gm.values[i].real(), -std::cos(d.t[i]), 1e-15);
        EXPECT_NEAR(gm.values[i].imag(), std::sin(d.t[i]), 1e-15);
    }
    EXPECT_EQ(gm.jump[0], Complex(0));
}

TEST(Pipeline, RadialBoundaryOnTheUnitDisk) {
    const Complex a = 0.5;
    const auto sol = solve_map(disk_region(), CanonicalKind::radial(a), 128);
    EXPECT_NEAR(sol.R[0], pi, 1e-12);
    for (Eigen::Index i = 0; i < sol.disc->size(); i += 9) {
        const Complex z = sol.disc->eta[i];
        EXPECT_NEAR(std::abs(sol.boundary.omega[i]), std::norm(z - a) / std::abs(a), 1e-12);
    }
}

TEST(Pipeline, IdentityBoundaryDerivative) {
    const auto sol = solve_map(disk_region(), CanonicalKind::disk(), 16);
    EXPECT_LT((sol.boundary.domega.array() - Complex(1)).abs().maxCoeff(), 1e-13);
    EXPECT_NEAR(sol.ck[0], 0, 1e-15);
}
