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

#include "coexist/array_model.hpp"

#include <random>

using namespace coexist;
using Catch::Matchers::WithinAbs;

TEST_CASE("steering_vector - broadside is all ones")
{
    const auto a = steering_vector(ArrayGeometry<double>(4, 0.5), AzimuthAngle<double>(0.0));
    REQUIRE(a.size() == 4);
    for (Eigen::Index m = 0; m < 4; ++m)
    {
        CHECK_THAT(a(m).real(), WithinAbs(1.0, 1e-15));
        CHECK_THAT(a(m).imag(), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("steering_vector - endfire and 30 degree phase progression")
{
    // M=2, azimuth 90: Omega = 1, phase step -pi
    const auto end = steering_vector(ArrayGeometry<double>(2, 0.5), AzimuthAngle<double>(90.0));
    CHECK_THAT(std::abs(end(0) - std::complex<double>(1, 0)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(end(1) - std::complex<double>(-1, 0)), WithinAbs(0.0, 1e-15));

    // M=3, azimuth 30: Omega = 0.5, phase step -pi/2
    const auto a = steering_vector(ArrayGeometry<double>(3, 0.5), AzimuthAngle<double>(30.0));
    CHECK_THAT(std::abs(a(0) - std::complex<double>(1, 0)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(a(1) - std::complex<double>(0, -1)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(a(2) - std::complex<double>(-1, 0)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("unit_signature - hand-evaluated cases")
{
    const auto e4 = unit_signature(4, 0.5, 0.0);
    for (Eigen::Index k = 0; k < 4; ++k)
        CHECK_THAT(std::abs(e4(k) - std::complex<double>(0.5, 0)), WithinAbs(0.0, 1e-15));

    const auto e1 = unit_signature(1, 0.37, -0.8);
    REQUIRE(e1.size() == 1);
    CHECK_THAT(std::abs(e1(0) - std::complex<double>(1, 0)), WithinAbs(0.0, 1e-15));

    const auto e2 = unit_signature(2, 0.5, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK_THAT(std::abs(e2(0) - std::complex<double>(r, 0)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(e2(1) - std::complex<double>(-r, 0)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("unit_signature - rejects empty length and non-positive spacing")
{
    CHECK_THROWS_AS(unit_signature<double>(0, 0.5, 0.0), ValidationError);
    CHECK_THROWS_AS(unit_signature<double>(3, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(unit_signature<double>(3, -0.5, 0.0), ValidationError);
}

TEST_CASE("geometry and azimuth invariants are enforced")
{
    CHECK_THROWS_AS(ArrayGeometry<double>(0, 0.5), ValidationError);
    CHECK_THROWS_AS(ArrayGeometry<double>(4, 0.0), ValidationError);
    CHECK(ArrayGeometry<double>().spacing == 0.5);
    CHECK_THROWS_AS(AzimuthAngle<double>(90.5), ValidationError);
    CHECK_THROWS_AS(AzimuthAngle<double>(-91.0), ValidationError);
    CHECK_THROWS_AS(AzimuthAngle<double>(std::nan("")), ValidationError);
    CHECK_NOTHROW(AzimuthAngle<double>(-90.0));
    CHECK_THAT(AzimuthAngle<double>(30.0).omega(), WithinAbs(0.5, 1e-15));
}

TEST_CASE("array_model properties over random geometries")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> count(1, 128);
    std::uniform_real_distribution<double> spacing(0.05, 2.0), angle(-90.0, 90.0), omega(-1.0, 1.0);

    for (int trial = 0; trial < 300; ++trial)
    {
        const ArrayGeometry<double> g(count(rng), spacing(rng));
        const AzimuthAngle<double> theta(angle(rng)), neg(-theta.degrees());

        const auto a = steering_vector(g, theta);
        const auto e = unit_signature(g.element_count, g.spacing, theta.omega());
        const double root_m = std::sqrt(double(g.element_count));

        // a = sqrt(M) e, unit modulus, first entry 1
        CHECK(max_abs(a - root_m * e) <= 1e-12);
        CHECK(max_abs((a.cwiseAbs().array() - 1.0).matrix()) <= 1e-12);
        CHECK(std::abs(a(0) - std::complex<double>(1, 0)) == 0.0);

        // conjugate symmetry in azimuth
        CHECK(max_abs(steering_vector(g, neg) - a.conjugate()) <= 1e-12);

        // broadside is all ones for any spacing
        CHECK(max_abs(steering_vector(g, AzimuthAngle<double>(0.0)) - CVector<double>::Ones(g.element_count)) <= 1e-15);

        // unit norm for arbitrary (l, spacing, Omega)
        CHECK_THAT(unit_signature(count(rng), spacing(rng), omega(rng)).norm(), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("steering_vector - single precision instantiation")
{
    const auto a = steering_vector(ArrayGeometry<float>(8, 0.5f), AzimuthAngle<float>(30.0f));
    const auto b = steering_vector(ArrayGeometry<double>(8, 0.5), AzimuthAngle<double>(30.0));
    CHECK(max_abs(a.cast<std::complex<double>>() - b) <= 1e-5);
}
