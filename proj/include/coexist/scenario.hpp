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

#ifndef COEXIST_SCENARIO_HPP
#define COEXIST_SCENARIO_HPP

#include "coexist/config.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace coexist
{
    inline constexpr const char *tool_name = "coexist";
    std::string tool_version();

    // Fixed CSV number format: scientific, 9 significant digits
    std::string format_number(double value);

    struct RunOptions
    {
        std::filesystem::path out_dir = ".";
        std::size_t workers = 1;
    };

    // What a subcommand produced; written to manifest.json by write_manifest
    struct RunManifest
    {
        std::string subcommand;
        ScenarioConfig config;
        std::vector<std::string> outputs;
        std::vector<std::pair<std::string, std::string>> summary; // key -> formatted value
        std::size_t workers = 1;
        double duration_s = 0.0;
    };

    // beampattern.csv: azimuth_deg,gain_db_unprojected,gain_db_projected,clamped_flag
    RunManifest run_beampattern(const ScenarioConfig &config, const RunOptions &options);

    // reduction.csv: M,separation_deg,reduction_db,status
    RunManifest run_reduction(const ScenarioConfig &config, const RunOptions &options);

    // coherence.csv: sea_index,v_s_mps,v_bob_mps,v_R_mps,f_m_hz,T_c_s,margin,csi_valid,status
    // bob_table.csv: speed_index,sea_index,v_s_mps,v_s_kn,wave_height_m,wave_length_m,steepness,wind_speed_mps,fetch_nmi,v_bob_mps
    RunManifest run_coherence(const ScenarioConfig &config, const RunOptions &options);

    void write_manifest(const RunManifest &manifest, const std::filesystem::path &out_dir);
}

#endif
