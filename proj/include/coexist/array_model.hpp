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

#ifndef COEXIST_ARRAY_MODEL_HPP
#define COEXIST_ARRAY_MODEL_HPP

#include "coexist/types.hpp"

#include <cmath>
#include <string>

namespace coexist
{
    // Uniform linear array: element count and inter-element spacing in carrier wavelengths
    template <typename Real = double>
    struct ArrayGeometry
    {
        Eigen::Index element_count = 1;
        Real spacing = Real(0.5);

        ArrayGeometry() = default;
        ArrayGeometry(Eigen::Index count, Real spacing_wavelengths = Real(0.5))
            : element_count(count), spacing(spacing_wavelengths)
        {
            if (element_count < 1)
                throw ValidationError("ArrayGeometry: element_count must be >= 1, got " + std::to_string(element_count));
            if (!(spacing > Real(0)))
                throw ValidationError("ArrayGeometry: spacing must be > 0 wavelengths, got " + std::to_string(spacing));
        }
    };

    // Azimuth in degrees measured from array broadside, restricted to [-90, 90].
    //
    // The directional cosine used in the phase progression is Omega = sin(azimuth),
    // i.e. cos(phi) for phi measured from the array axis (phi = 90 deg - azimuth).
    // Out-of-range angles are rejected, not wrapped.
    template <typename Real = double>
    class AzimuthAngle
    {
    public:
        AzimuthAngle() = default;
        explicit AzimuthAngle(Real degrees) : deg_(degrees)
        {
            if (!(degrees >= Real(-90) && degrees <= Real(90)))
                throw ValidationError("AzimuthAngle: " + std::to_string(degrees) + " deg outside [-90, 90]");
        }

        Real degrees() const { return deg_; }
        Real radians() const { return deg_to_rad(deg_); }
        Real omega() const { return std::sin(radians()); }

        friend bool operator==(const AzimuthAngle &, const AzimuthAngle &) = default;

    private:
        Real deg_ = Real(0);
    };

    // Unit spatial signature e_l(Omega): entry k = exp(-j 2 pi k spacing Omega) / sqrt(l)
    template <typename Real = double>
    CVector<Real> unit_signature(Eigen::Index length, Real spacing, Real omega)
    {
        if (length < 1)
            throw ValidationError("unit_signature: length must be >= 1");
        if (!(spacing > Real(0)))
            throw ValidationError("unit_signature: spacing must be > 0");

        const Real scale = Real(1) / std::sqrt(Real(length));
        CVector<Real> e(length);
        for (Eigen::Index k = 0; k < length; ++k)
        {
            const Real phase = -Real(2) * pi<Real> * Real(k) * spacing * omega;
            e(k) = std::polar(scale, phase);
        }
        return e;
    }

    // Transmit/receive steering vector a(theta) with unit-modulus entries and zero phase on element 0
    template <typename Real = double>
    CVector<Real> steering_vector(const ArrayGeometry<Real> &geometry, const AzimuthAngle<Real> &azimuth)
    {
        const Real omega = azimuth.omega();
        CVector<Real> a(geometry.element_count);
        for (Eigen::Index m = 0; m < geometry.element_count; ++m)
            a(m) = std::polar(Real(1), -Real(2) * pi<Real> * Real(m) * geometry.spacing * omega);
        return a;
    }
}

#endif
