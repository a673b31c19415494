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

#ifndef COEXIST_SEA_KINEMATICS_HPP
#define COEXIST_SEA_KINEMATICS_HPP

#include "coexist/types.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace coexist
{
    namespace units
    {
        inline constexpr double knot_mps = 0.514444; // fixed conversion constant
        inline constexpr double foot_m = 0.3048;
        inline constexpr double nautical_mile_m = 1852.0;
        inline constexpr double speed_of_light_mps = 299792458.0;

        template <typename Real>
        constexpr Real knots_to_mps(Real kn) { return kn * Real(knot_mps); }
        template <typename Real>
        constexpr Real mps_to_knots(Real mps) { return mps / Real(knot_mps); }
        template <typename Real>
        constexpr Real feet_to_m(Real ft) { return ft * Real(foot_m); }
        template <typename Real>
        constexpr Real nmi_to_m(Real nmi) { return nmi * Real(nautical_mile_m); }

        template <typename Real>
        Real wavelength(Real carrier_frequency_hz)
        {
            if (!(carrier_frequency_hz > Real(0)))
                throw ValidationError("wavelength: carrier frequency must be > 0");
            return Real(speed_of_light_mps) / carrier_frequency_hz;
        }
    }

    // Sea surface: wave geometry drives bobbing; wind and fetch are carried for reporting only
    template <typename Real = double>
    struct SeaState
    {
        Real wave_height = Real(0.3048); // [m]
        Real wave_length = Real(30.48);  // [m]
        Real wind_speed = Real(0);       // [m/s]
        Real fetch = Real(200);          // [nmi]

        Real steepness() const { return wave_height / wave_length; }

        void validate() const
        {
            if (!(wave_height > Real(0)) || !(wave_length > Real(0)))
                throw ValidationError("SeaState: wave height and length must be > 0");
            const Real s = steepness();
            if (!(s > Real(0) && s < Real(1)))
                throw ValidationError("SeaState: steepness " + std::to_string(s) + " outside (0, 1)");
            if (!(wind_speed >= Real(0)) || !(fetch >= Real(0)))
                throw ValidationError("SeaState: wind speed and fetch must be >= 0");
        }
    };

    template <typename Real = double>
    struct ShipKinematics
    {
        Real v_s = Real(0);   // horizontal speed [m/s]
        Real v_bob = Real(0); // sea-induced vertical speed [m/s]
        Real theta = Real(0); // resultant direction atan2(v_bob, v_s) [rad]
        Real v_r = Real(0);   // resultant speed [m/s]
    };

    template <typename Real = double>
    struct CoherenceResult
    {
        Real carrier_wavelength = Real(0); // [m]
        Real max_doppler_hz = Real(0);
        Real coherence_time_s = Real(0);
        std::optional<Real> pri_s;
        std::optional<Real> margin; // coherence time / PRI
    };

    // v_bob = 2 v_s (wave height / wave length)
    template <typename Real>
    Real bob_velocity(Real v_s, const SeaState<Real> &sea)
    {
        sea.validate();
        if (!(v_s >= Real(0)))
            throw ValidationError("bob_velocity: ship speed must be >= 0");
        return Real(2) * v_s * sea.steepness();
    }

    // Resultant speed v_R = v_s cos(theta) + v_bob cos(pi/2 - theta), theta = atan(v_bob / v_s)
    template <typename Real>
    ShipKinematics<Real> resultant_speed(Real v_s, Real v_bob)
    {
        if (!(v_s >= Real(0)) || !(v_bob >= Real(0)))
            throw ValidationError("resultant_speed: speeds must be finite and >= 0");
        ShipKinematics<Real> k;
        k.v_s = v_s;
        k.v_bob = v_bob;
        k.theta = (v_s == Real(0) && v_bob == Real(0)) ? Real(0) : std::atan2(v_bob, v_s);
        k.v_r = v_s * std::cos(k.theta) + v_bob * std::cos(pi<Real> / Real(2) - k.theta);
        return k;
    }

    // f_d = (v_R / lambda) cos(phi)
    template <typename Real>
    Real doppler_shift(Real v_r, Real wavelength, Real phi)
    {
        if (!(wavelength > Real(0)))
            throw ValidationError("doppler_shift: wavelength must be > 0");
        return v_r / wavelength * std::cos(phi);
    }

    // T_c f_m = sqrt(9 / (16 pi)) ~= 0.4231
    template <typename Real>
    inline const Real coherence_constant = std::sqrt(Real(9) / (Real(16) * pi<Real>));

    // Worst-case (phi = 0) Doppler spread and the coherence time T_c = sqrt(9 / (16 pi f_m^2))
    template <typename Real>
    CoherenceResult<Real> coherence_time(Real v_r, Real wavelength)
    {
        if (!(wavelength > Real(0)))
            throw ValidationError("coherence_time: wavelength must be > 0");
        if (!(v_r >= Real(0)))
            throw ValidationError("coherence_time: resultant speed must be >= 0");
        if (v_r == Real(0))
            throw NumericalError("coherence_time: v_R = 0 gives infinite coherence time (static channel)");

        CoherenceResult<Real> c;
        c.carrier_wavelength = wavelength;
        c.max_doppler_hz = doppler_shift(v_r, wavelength, Real(0));
        c.coherence_time_s = std::sqrt(Real(9) / (Real(16) * pi<Real> * c.max_doppler_hz * c.max_doppler_hz));
        return c;
    }

    template <typename Real = double>
    struct PriCheck
    {
        Real margin = Real(0);
        bool csi_valid = false; // strict: coherence time > PRI
    };

    // Validity margin of CSI acquired once per PRI
    template <typename Real>
    PriCheck<Real> pri_margin(const CoherenceResult<Real> &result, Real pri_s)
    {
        if (!(pri_s > Real(0)))
            throw ValidationError("pri_margin: PRI must be > 0");
        PriCheck<Real> check;
        check.margin = result.coherence_time_s / pri_s;
        check.csi_valid = check.margin > Real(1);
        return check;
    }

    // v_bob over the Cartesian grid speeds x seas, row-major (speed outer, sea inner)
    template <typename Real>
    std::vector<Real> bob_table(std::span<const Real> speeds, std::span<const SeaState<Real>> seas)
    {
        if (speeds.empty() || seas.empty())
            throw ValidationError("bob_table: speed and sea-state lists must be nonempty");
        std::vector<Real> table;
        table.reserve(speeds.size() * seas.size());
        for (Real v : speeds)
            for (const auto &sea : seas)
                table.push_back(bob_velocity(v, sea));
        return table;
    }

    template <typename Real>
    std::vector<Real> bob_table(const std::vector<Real> &speeds, const std::vector<SeaState<Real>> &seas)
    {
        return bob_table(std::span<const Real>(speeds), std::span<const SeaState<Real>>(seas));
    }
}

#endif
