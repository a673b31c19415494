// SPDX-License-Identifier: Apache-2.0
//
// coexist: radar / cellular spectrum-coexistence simulation library
// Copyright (C) 2026 The coexist authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch2/catch_amalgamated.hpp>

#include "coexist/beampattern.hpp"

#include <random>

using namespace coexist;

namespace
{
    BeampatternConfig<double> config(Eigen::Index m, double steer, NormalizationRule rule = NormalizationRule::unity)
    {
        BeampatternConfig<double> c;
        c.geometry = ArrayGeometry<double>(m, 0.5);
        c.steer_azimuth = AzimuthAngle<double>(steer);
        c.normalization = rule;
        return c;
    }

    CMatrix<double> eye(Eigen::Index m) { return CMatrix<double>::Identity(m, m); }

    // Classical array factor |a^H(theta) a(theta_D)|^2 / M evaluated with an explicit element sum
    double array_factor(Eigen::Index m, double spacing, double theta_deg, double steer_deg)
    {
        const double d = 2.0 * pi<double> * spacing * (std::sin(deg_to_rad(steer_deg)) - std::sin(deg_to_rad(theta_deg)));
        std::complex<double> sum = 0.0;
        for (Eigen::Index k = 0; k < m; ++k)
            sum += std::polar(1.0, -d * double(k));
        return std::norm(sum) / double(m);
    }
}

TEST_CASE("gain - hand-evaluated cases")
{
    // R = I, theta = theta_D, Gamma = 1: |a^H a|^2 / a^H a = M
    for (Eigen::Index m : {1, 4, 17, 100})
    {
        const auto c = config(m, 12.0);
        CHECK(std::abs(gain(eye(m), c, c.steer_azimuth) - double(m)) <= 1e-9 * double(m));
    }

    // M = 2, half wavelength, steer 0, evaluate 90: |1 + e^{j pi}|^2 / 2 = 0
    const auto c2 = config(2, 0.0);
    CHECK(gain(eye(2), c2, AzimuthAngle<double>(90.0)) <= 1e-30);

    // zero correlation: denominator vanishes
    CHECK_THROWS_AS(gain(CMatrix<double>(CMatrix<double>::Zero(3, 3)), config(3, 0.0), AzimuthAngle<double>(0.0)),
                    NumericalError);
}

TEST_CASE("gain - steer direction inside the nulled subspace is reported")
{
    const ArrayGeometry<double> radar(16, 0.5), bs(2, 0.5);
    const auto p = null_projector(sector_channel(radar, bs, 20.0, 20.0, 1.0));
    auto c = config(16, 20.0);
    CHECK_THROWS_AS(gain(p.matrix, c, AzimuthAngle<double>(0.0)), NumericalError);
}

TEST_CASE("gain - R = I reduces to the array factor")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-90.0, 90.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        const Eigen::Index m = 1 + trial % 40;
        const double steer = angle(rng), theta = angle(rng);
        const auto c = config(m, steer);
        CHECK(std::abs(gain(eye(m), c, AzimuthAngle<double>(theta)) - array_factor(m, 0.5, theta, steer)) <= 1e-9);
    }
}

TEST_CASE("gain - scaling R scales the gain linearly")
{
    // |c x|^2 / (c y) = c x^2 / y for real c > 0
    std::mt19937_64 rng(4);
    const auto bank = generate_orthogonal<double>(8, 8, 5);
    CMatrix<double> r = correlation(CMatrix<double>(bank.samples.leftCols(5)));
    const auto c = config(8, 10.0);
    for (double s : {0.25, 3.0, 1e4})
    {
        const AzimuthAngle<double> theta(-33.0);
        const double g = gain(r, c, theta), gs = gain(CMatrix<double>(s * r), c, theta);
        CHECK(std::abs(gs - s * g) <= 1e-12 * s * g);
    }
}

TEST_CASE("normalisation rules")
{
    auto c = config(10, 0.0, NormalizationRule::unit_reference_peak);
    CHECK(std::abs(gain(eye(10), c, c.steer_azimuth) - 1.0) <= 1e-12);
    c.normalization = NormalizationRule::custom;
    c.custom_gamma = 3.0;
    CHECK(std::abs(gain(eye(10), c, c.steer_azimuth) - 30.0) <= 1e-12);
    c.custom_gamma = -1.0;
    CHECK_THROWS_AS(gain(eye(10), c, c.steer_azimuth), ValidationError);
}

TEST_CASE("sweep - reference normalisation and symmetry")
{
    auto c = config(12, 0.0, NormalizationRule::unit_reference_peak);
    c.grid = azimuth_grid(-90.0, 90.0, 0.5);
    const auto s = sweep(eye(12), c);
    REQUIRE(s.samples.size() == c.grid.size());
    CHECK(s.reference_peak_db == 0.0);

    const auto mid = s.samples.size() / 2;
    CHECK(s.samples[mid].azimuth_deg == 0.0);
    CHECK(std::abs(s.samples[mid].gain_db) <= 1e-12);
    for (std::size_t i = 0; i < s.samples.size(); ++i)
    {
        CHECK(s.samples[i].gain_db <= 1e-12);
        CHECK(std::abs(s.samples[i].gain_db - s.samples[s.samples.size() - 1 - i].gain_db) <= 1e-9);
    }

    // single grid angle at the steer direction
    c.grid = {AzimuthAngle<double>(0.0)};
    CHECK(std::abs(sweep(eye(12), c).samples.at(0).gain_db) <= 1e-12);
}

TEST_CASE("sweep - independent of Gamma and of worker count")
{
    const auto p = null_projector(sector_channel(ArrayGeometry<double>(24, 0.5), ArrayGeometry<double>(5, 0.5), 30.0, 35.0, 1.0));
    auto a = config(24, 0.0, NormalizationRule::unit_reference_peak);
    a.grid = azimuth_grid(-90.0, 90.0, 0.25);
    auto b = a;
    b.normalization = NormalizationRule::custom;
    b.custom_gamma = 17.0;

    const auto sa = sweep(p.matrix, a, 1);
    const auto sb = sweep(p.matrix, b, 1);
    const auto sc = sweep(p.matrix, a, 4);
    for (std::size_t i = 0; i < sa.samples.size(); ++i)
    {
        CHECK(std::abs(sa.samples[i].gain_db - sb.samples[i].gain_db) <= 1e-9);
        CHECK(sa.samples[i].gain_db == sc.samples[i].gain_db); // bit-identical
    }
}

TEST_CASE("sweep - rejects empty or non-increasing grids")
{
    auto c = config(4, 0.0);
    CHECK_THROWS_AS(sweep(eye(4), c), ValidationError);
    c.grid = {AzimuthAngle<double>(1.0), AzimuthAngle<double>(1.0)};
    CHECK_THROWS_AS(sweep(eye(4), c), ValidationError);
}

TEST_CASE("sweep - projected nulls sit below -150 dB at every sector angle")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> start(-80, 60), width(0, 6), count(16, 80);
    for (int trial = 0; trial < 25; ++trial)
    {
        const double s0 = start(rng), s1 = s0 + width(rng);
        const Eigen::Index m = count(rng);
        const auto p = null_projector(sector_channel(ArrayGeometry<double>(m, 0.5), ArrayGeometry<double>(5, 0.5), s0, s1, 1.0));

        // steer well away from the sector
        auto c = config(m, s0 > 0 ? s0 - 25.0 : s1 + 25.0, NormalizationRule::unit_reference_peak);
        c.grid = azimuth_grid(s0, s1, 1.0);
        const auto sw = sweep(p.matrix, c);
        std::vector<double> nulled;
        for (const auto &az : c.grid)
            nulled.push_back(az.degrees());
        INFO("sector " << s0 << ".." << s1 << " M=" << m);
        CHECK(null_depth(sw, nulled) <= -150.0);
    }
}

TEST_CASE("sweep - numerical zeros are clamped and flagged")
{
    // R^T a(30 deg) = [1 - z, z - 1], so the broadside numerator cancels exactly
    CMatrix<double> r(2, 2);
    r << 1.0, -1.0, -1.0, 1.0;
    auto c = config(2, 30.0);
    c.grid = {AzimuthAngle<double>(0.0), AzimuthAngle<double>(30.0)};
    const auto s = sweep(r, c);
    CHECK(s.samples[0].clamped);
    CHECK(s.samples[0].gain_db == db_floor<double>);
    CHECK_FALSE(s.samples[1].clamped);
}

TEST_CASE("null_depth - worst value over the nulled set")
{
    BeampatternSweep<double> s;
    s.samples = {{29.0, -3.0, false}, {30.0, -250.0, false}, {31.0, -180.0, false}};
    CHECK(null_depth(s, std::vector<double>{30.0}) == -250.0);
    CHECK(null_depth(s, std::vector<double>{30.0, 31.0}) == -180.0);
    CHECK_THROWS_AS(null_depth(s, std::vector<double>{32.0}), ValidationError);
    CHECK_THROWS_AS(null_depth(s, std::vector<double>{}), ValidationError);
}

TEST_CASE("mainlobe_reduction - trends")
{
    const Sector<double> sector{20.0, 25.0, 1.0};

    // single-angle sector at 20 deg, target at 70 deg, M = 100: negligible
    CHECK(mainlobe_reduction<double>(100, 5, Sector<double>{20.0, 20.0, 1.0}, 50.0) <= 1.0);

    const double small_near = mainlobe_reduction<double>(10, 5, sector, 1.0);
    const double large_near = mainlobe_reduction<double>(100, 5, sector, 1.0);
    CHECK(small_near > large_near);
    CHECK(mainlobe_reduction<double>(30, 5, sector, 50.0) < mainlobe_reduction<double>(30, 5, sector, 1.0));

    for (double sep : {1.0, 5.0, 20.0})
        CHECK(mainlobe_reduction<double>(40, 5, sector, sep) >= 0.0);
}

TEST_CASE("mainlobe_reduction - Gamma cancels")
{
    const Sector<double> sector{20.0, 25.0, 1.0};
    ReductionOptions<double> a, b;
    b.normalization = NormalizationRule::unity;
    for (double sep : {1.0, 2.0, 10.0})
        CHECK(std::abs(mainlobe_reduction<double>(30, 5, sector, sep, a) - mainlobe_reduction<double>(30, 5, sector, sep, b)) <= 1e-9);
}

TEST_CASE("mainlobe_reduction - error paths")
{
    CHECK_THROWS_AS(mainlobe_reduction<double>(100, 5, Sector<double>{60.0, 65.0, 1.0}, 30.0), ValidationError);
    CHECK_THROWS_AS(mainlobe_reduction<double>(4, 5, Sector<double>{20.0, 25.0, 1.0}, 10.0), InfeasibleProjection);
}

TEST_CASE("simulate_echo - trivial cases")
{
    const auto bank = generate_orthogonal<double>(3, 16, 2);
    EchoModel<double> zero;
    zero.path_gain = 0.0;
    CHECK(max_abs(simulate_echo(bank, zero, ArrayGeometry<double>(3, 0.5))) == 0.0);

    const auto scalar_bank = generate_orthogonal<double>(1, 10, 4);
    EchoModel<double> m;
    m.path_gain = {0.3, -0.7};
    m.target_azimuth = AzimuthAngle<double>(40.0);
    const auto y = simulate_echo(scalar_bank, m, ArrayGeometry<double>(1, 0.5));
    CHECK(max_abs(y - m.path_gain * scalar_bank.samples) <= 1e-15);

    CHECK_THROWS_AS(simulate_echo(bank, m, ArrayGeometry<double>(4, 0.5)), ValidationError);
}

TEST_CASE("simulate_echo - uses a a^T, not a a^H")
{
    const ArrayGeometry<double> g(4, 0.5);
    const auto bank = generate_orthogonal<double>(4, 8, 6);
    EchoModel<double> m;
    m.target_azimuth = AzimuthAngle<double>(27.0);
    const CVector<double> a = steering_vector(g, m.target_azimuth);
    const CMatrix<double> expected = (a * a.transpose()) * bank.samples;
    CHECK(max_abs(simulate_echo(bank, m, g) - expected) <= 1e-13);
}

TEST_CASE("simulate_echo - seeded noise statistics")
{
    const ArrayGeometry<double> g(4, 0.5);
    const auto bank = generate_orthogonal<double>(4, 4096, 6);
    EchoModel<double> clean, noisy;
    noisy.noise_variance = 0.5;
    noisy.seed = 77;
    const CMatrix<double> w = simulate_echo(bank, noisy, g) - simulate_echo(bank, clean, g);
    const double variance = w.squaredNorm() / double(w.size());
    CHECK(std::abs(variance - 0.5) <= 0.02);
    CHECK(simulate_echo(bank, noisy, g) == simulate_echo(bank, noisy, g));
    noisy.noise_variance = -1.0;
    CHECK_THROWS_AS(simulate_echo(bank, noisy, g), ValidationError);
}

TEST_CASE("simulate_echo - mean echo power follows the gain toward the target")
{
    const ArrayGeometry<double> g(16, 0.5);
    const auto p = null_projector(sector_channel(g, ArrayGeometry<double>(5, 0.5), 30.0, 35.0, 1.0));
    const auto bank = project_bank(generate_orthogonal<double>(16, 256, 12), p);
    const CMatrix<double> r = correlation(bank);

    std::vector<double> ratios;
    for (double theta : {-60.0, -41.0, -20.0, -5.0, 0.0, 12.0, 22.5, 27.0, 45.0, 70.0})
    {
        EchoModel<double> m;
        m.path_gain = {0.8, 0.1};
        m.target_azimuth = AzimuthAngle<double>(theta);
        const auto y = simulate_echo(bank, m, g);
        const double power = y.squaredNorm() / double(y.cols());

        BeampatternConfig<double> c;
        c.geometry = g;
        c.steer_azimuth = m.target_azimuth;
        c.normalization = NormalizationRule::unity;
        ratios.push_back(power / gain(r, c, m.target_azimuth));
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    CHECK(*hi / *lo - 1.0 <= 0.01);
    CHECK(std::abs(ratios.front() - std::norm(std::complex<double>(0.8, 0.1)) * 16.0) <= 1e-9 * ratios.front());
}
