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

#ifndef COEXIST_CONFIG_HPP
#define COEXIST_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coexist
{
    // Scenario configuration. All quantities are stored in SI units (angles in degrees);
    // the document form also accepts knots, feet and nautical miles (see parse_config).
    struct ScenarioConfig
    {
        struct Radar
        {
            long elements = 100;
            double spacing = 0.5; // wavelengths
            double steer_azimuth_deg = 0.0;
        } radar;

        struct Bs
        {
            long elements = 5;
            double spacing = 0.5;
            double sector_start_deg = 30.0;
            double sector_end_deg = 35.0;
            double sector_step_deg = 1.0;
            double azimuth_deg = 0.0; // arrival angle at the BS array
        } bs;

        // Optional override of the beampattern steer direction: an absolute azimuth or a
        // separation from the sector end (at most one of the two)
        struct Target
        {
            std::optional<double> azimuth_deg;
            std::optional<double> separation_deg;
        } target;

        struct Channel
        {
            double attenuation = 1.0;
            double distance_m = 0.0;
            double carrier_frequency_hz = 3.55e9;
        } channel;

        struct Waveform
        {
            long sample_count = 1024; // L
            std::uint64_t seed = 0;
        } waveform;

        struct Projection
        {
            double rel_tolerance = 1e-10;
            bool renormalize = false;
        } projection;

        struct Sweep
        {
            double start_deg = -90.0;
            double end_deg = 90.0;
            double step_deg = 0.1;
        } sweep;

        struct Reduction
        {
            std::vector<long> element_counts{10, 30, 50, 70, 100};
            std::vector<double> separations_deg{1, 2, 5, 10, 15, 20, 30, 50};
        } reduction;

        struct SeaStateEntry
        {
            std::string name;
            double wave_height_m = 0.0;
            double wave_length_m = 0.0;
            double wind_speed_mps = 0.0;
            double fetch_nmi = 200.0;
            friend bool operator==(const SeaStateEntry &, const SeaStateEntry &) = default;
        };

        struct Sea
        {
            std::vector<double> ship_speeds_mps;
            std::vector<SeaStateEntry> states;
        } sea = default_sea();

        struct RadarSystem
        {
            double pri_s = 1e-3;
            double required_margin = 1.0; // csi_valid requires T_c / PRI > required_margin
        } radarsys;

        double carrier_wavelength_m() const;

        // Beampattern steer direction after applying the target override
        double steer_azimuth_deg() const;

        void validate() const; // throws ValidationError naming the violated invariant

        static Sea default_sea();
    };

    bool operator==(const ScenarioConfig &a, const ScenarioConfig &b);

    // Reads the JSON key tree, fills defaults, validates. Empty or whitespace-only text
    // yields the all-defaults configuration. Unknown keys are rejected.
    //
    // Throws ParseError (syntax, wrong value type, unknown key or unit) and
    // ValidationError (invariant violations).
    ScenarioConfig parse_config(std::string_view text);

    ScenarioConfig load_config(const std::string &path);

    // Canonical document with every resolved value, in SI units; parse_config(serialize_config(c)) == c
    std::string serialize_config(const ScenarioConfig &config);
}

#endif
