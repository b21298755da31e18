#include "cmap/eval.hpp"
#include "cmap/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cmap;

TEST(Eval, MatchesCircularOracle) {
    const auto kind = CanonicalKind::circular(0.5);
    const Oracle o = oracle_disk(kind);
    const auto sol = solve_map(disk_region(), kind, 128);
    for (Complex z : {Complex(0.1, 0.2), Complex(-0.6, 0.1), Complex(0.3, -0.5)}) {
        EXPECT_LT(std::abs(map_point(sol, z) - o.map(z)), 1e-10);
        EXPECT_LT(std::abs(map_derivative(sol, z) - o.derivative(z)), 1e-9);
    }
}

TEST(Eval, DerivativeAgreesWithDifferenceQuotient) {
    const auto sol = solve_map(fixtures::ellipses_region(), fixtures::ellipses_kind(SlitKind::RadialSlits), 128);
    const Real h = 1e-4;
    for (Complex z : {Complex(0.4, -0.3), Complex(-1.0, -1.0), Complex(2.0, 0.3)}) {
        const Complex fd = (map_point(sol, z + h) - map_point(sol, z - h) - I * (map_point(sol, z + I * h) - map_point(sol, z - I * h))) / (4 * h);
        EXPECT_LT(std::abs(fd - map_derivative(sol, z)), 1e-6 * std::max(1.0, std::abs(fd)));
    }
}

TEST(Eval, Errors) {
    const auto sol = solve_map(disk_region(), CanonicalKind::parallel(), 32);
    EXPECT_THROW(map_point(sol, 0), InvalidInput);
    EXPECT_THROW(map_point(sol, 2), InvalidInput);
    EXPECT_THROW(map_derivative(sol, Complex(0, 1)), InvalidInput);

    const auto disk = solve_map(disk_region(), CanonicalKind::disk(), 32);
    EXPECT_THROW(inverse_point(disk, 1.5), InvalidInput);
    EXPECT_THROW(inverse_point(disk, Complex(0, 0.99999)), InvalidInput);
    EXPECT_THROW(inverse_point(disk, Complex(std::nan(""), 0)), InvalidInput);
}

TEST(Eval, AnnulusInverseRejectsTheHole) {
    const auto sol = solve_map(eccentric_annulus_region(0.5, 0.2), CanonicalKind::annulus(0.5), 64);
    EXPECT_THROW(inverse_point(sol, 0.1), InvalidInput);
    const auto r = inverse_point(sol, Complex(0, 0.7));
    EXPECT_TRUE(r.reliable);
    EXPECT_LT(std::abs(map_point(sol, r.z) - Complex(0, 0.7)), 1e-10);
}

TEST(Eval, RoundTripOnEllipses) {
    const auto sol = solve_map(fixtures::ellipses_region(), fixtures::ellipses_kind(SlitKind::CircularSlits), 128);
    int used = 0;
    for (Complex z : {Complex(0.5, 0.5), Complex(-1.5, -1.0), Complex(2.5, 0.2), Complex(-2.5, -1.0)}) {
        const Complex w = map_point(sol, z);
        if (image_boundary_distance(sol, w) < 0.1) continue;
        ++used;
        const auto back = inverse_point(sol, w);
        EXPECT_TRUE(back.reliable);
        EXPECT_LT(std::abs(back.z - z), 1e-6);
    }
    EXPECT_GE(used, 2);
}

TEST(Eval, BatchReportsStatusPerPoint) {
    const auto sol = solve_map(disk_region(), CanonicalKind::radial(0.5), 32);
    const auto rows = evaluate_points(sol, {Complex(0.2, 0.1), 0, 3});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].status, "ok");
    EXPECT_EQ(rows[1].status, "pole of the map");
    EXPECT_EQ(rows[2].status, "point outside domain");
    EXPECT_TRUE(std::isnan(rows[2].w.real()));
    EXPECT_NEAR(rows[2].distance, 2, 1e-12);

    const auto disk = solve_map(disk_region(), CanonicalKind::disk(), 32);
    const auto inv = invert_points(disk, {Complex(0.3, 0), 2});
    EXPECT_EQ(inv[0].status, "ok");
    EXPECT_NEAR(std::abs(inv[0].z - 0.3), 0, 1e-12);
    EXPECT_EQ(inv[1].status, "point outside canonical domain");
}

TEST(Eval, GridImagesStayInTheCanonicalDomain) {
    const auto sol = solve_map(fixtures::ellipses_region(), fixtures::ellipses_kind(SlitKind::DiskSlits), 64);
    GridSpec spec;
    spec.lines = 6;
    spec.samples = 40;
    const auto lines = image_grid(sol, spec);
    int boundary = 0;
    for (const auto& l : lines) {
        if (l.boundary) {
            ++boundary;
            EXPECT_EQ(l.points.front(), l.points.back());
            continue;
        }
        for (Complex w : l.points) EXPECT_LT(std::abs(w), 1 + 1e-9);
    }
    EXPECT_EQ(boundary, 7);

    spec.layout = GridSpec::Layout::Polar;
    EXPECT_GT(image_grid(sol, spec).size(), 7u);
}

TEST(Eval, SpecExamples) {
    const auto id = solve_map(disk_region(), CanonicalKind::disk(), 64);
    EXPECT_LT(std::abs(map_point(id, 0.3) - 0.3), 1e-12);
    EXPECT_LT(std::abs(map_derivative(id, Complex(0.2, -0.5)) - 1.0), 1e-12);
    EXPECT_LT(std::abs(inverse_point(id, Complex(0, 0.4)).z - Complex(0, 0.4)), 1e-12);

    const auto circ = solve_map(disk_region(), CanonicalKind::circular(0.5), 128);
    EXPECT_NEAR(map_point(circ, 0.25).real(), 16.0 / 7, 1e-10);

    const auto scaled = solve_map(disk_region(2), CanonicalKind::disk(), 64);
    EXPECT_LT(std::abs(map_point(scaled, 1) - 0.5), 1e-12);
    EXPECT_LT(std::abs(map_derivative(scaled, Complex(0.7, 0.4)) - 0.5), 1e-12);
    EXPECT_LT(std::abs(inverse_point(scaled, 0.25).z - 0.5), 1e-12);

    const Real delta = 0.4;
    const auto par = solve_map(disk_region(), CanonicalKind::parallel(delta), 128);
    const Complex expected = -100.0 - std::polar(1.0, -2 * (pi / 2 - delta));
    EXPECT_LT(std::abs(map_derivative(par, 0.1) - expected), 1e-9);
}

TEST(Eval, ResidueAtTheOrigin) {
    const auto sol = solve_map(fixtures::ellipses_region(), fixtures::ellipses_kind(SlitKind::ParallelSlits), 128);
    for (Real r : {1e-2, 1e-4, 1e-6}) EXPECT_NEAR(std::abs(map_point(sol, Complex(r, r)) * Complex(r, r) - 1.0), 0, 3 * r);
}
