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

#include "coexist/scenario.hpp"
#include "coexist/beampattern.hpp"
#include "coexist/sea_kinematics.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#ifndef COEXIST_VERSION
#define COEXIST_VERSION "0.0.0"
#endif

namespace coexist
{
    namespace fs = std::filesystem;

    std::string tool_version() { return COEXIST_VERSION; }

    std::string format_number(double value)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.8e", value);
        return buf;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        // UTF-8, LF line endings, written in binary mode so nothing is translated
        void write_text(const fs::path &path, const std::string &text)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write '" + path.string() + "'");
            out << text;
            if (!out)
                throw std::runtime_error("write failed for '" + path.string() + "'");
        }

        void prepare(const RunOptions &options)
        {
            std::error_code ec;
            fs::create_directories(options.out_dir, ec);
            if (ec)
                throw std::runtime_error("cannot create output directory '" + options.out_dir.string() + "': " + ec.message());
        }

        std::string flag(bool b) { return b ? "1" : "0"; }

        double elapsed(Clock::time_point start)
        {
            return std::chrono::duration<double>(Clock::now() - start).count();
        }
    }

    RunManifest run_beampattern(const ScenarioConfig &config, const RunOptions &options)
    {
        const auto start = Clock::now();
        config.validate();
        prepare(options);

        const ArrayGeometry<double> radar(config.radar.elements, config.radar.spacing);
        const ArrayGeometry<double> bs(config.bs.elements, config.bs.spacing);
        const auto h = sector_channel(radar, bs, config.bs.sector_start_deg, config.bs.sector_end_deg,
                                      config.bs.sector_step_deg, config.channel.attenuation, config.channel.distance_m,
                                      config.carrier_wavelength_m(), config.bs.azimuth_deg);
        const auto p = null_projector(h, config.projection.rel_tolerance);
        const CMatrix<double> projected = config.projection.renormalize ? renormalized_correlation(p) : p.matrix;
        const CMatrix<double> identity = CMatrix<double>::Identity(radar.element_count, radar.element_count);

        BeampatternConfig<double> bp;
        bp.geometry = radar;
        bp.steer_azimuth = AzimuthAngle<double>(config.steer_azimuth_deg());
        bp.grid = azimuth_grid(config.sweep.start_deg, config.sweep.end_deg, config.sweep.step_deg);

        const auto reference = sweep(identity, bp, options.workers);
        const auto nulled = sweep(projected, bp, options.workers);

        std::string csv = "azimuth_deg,gain_db_unprojected,gain_db_projected,clamped_flag\n";
        for (std::size_t i = 0; i < bp.grid.size(); ++i)
        {
            const auto &u = reference.samples[i];
            const auto &q = nulled.samples[i];
            csv += format_number(u.azimuth_deg) + ',' + format_number(u.gain_db) + ',' + format_number(q.gain_db) + ',' +
                   flag(u.clamped || q.clamped) + '\n';
        }
        write_text(options.out_dir / "beampattern.csv", csv);

        // Null depth over the sector angles themselves, independent of whether they sit on the sweep grid
        BeampatternConfig<double> sector_cfg = bp;
        sector_cfg.grid = azimuth_grid(config.bs.sector_start_deg, config.bs.sector_end_deg, config.bs.sector_step_deg);
        const auto sector_sweep = sweep(projected, sector_cfg, 1);
        std::vector<double> sector_deg;
        for (const auto &s : sector_sweep.samples)
            sector_deg.push_back(s.azimuth_deg);
        const double depth = null_depth(sector_sweep, sector_deg);

        // Sample-domain cross-check of the closed-form projected correlation
        const auto bank = generate_orthogonal<double>(radar.element_count, config.waveform.sample_count, config.waveform.seed);
        const auto projected_bank = project_bank(bank, p, config.projection.renormalize);
        const double sample_deviation = max_abs(correlation(projected_bank) - projected);

        const double peak_ratio = gain(projected, bp, bp.steer_azimuth) / gain(identity, bp, bp.steer_azimuth);
        const double projected_peak_db = to_db(peak_ratio);

        RunManifest m;
        m.subcommand = "beampattern";
        m.config = config;
        m.outputs = {"beampattern.csv"};
        m.workers = options.workers;
        m.summary = {{"null_depth_db", format_number(depth)},
                     {"channel_rank", std::to_string(p.channel_rank)},
                     {"null_space_dimension", std::to_string(p.null_dimension())},
                     {"projected_peak_db", format_number(projected_peak_db)},
                     {"sample_correlation_max_deviation", format_number(sample_deviation)},
                     {"waveform_algorithm", bank.algorithm},
                     {"grid_points", std::to_string(bp.grid.size())}};
        m.duration_s = elapsed(start);
        return m;
    }

    RunManifest run_reduction(const ScenarioConfig &config, const RunOptions &options)
    {
        const auto start = Clock::now();
        config.validate();
        prepare(options);

        struct Row
        {
            long elements;
            double separation;
            double reduction_db = 0.0;
            std::string status = "ok";
        };

        std::vector<Row> rows;
        for (long m : config.reduction.element_counts)
            for (double s : config.reduction.separations_deg)
                rows.push_back({m, s});

        const Sector<double> sector{config.bs.sector_start_deg, config.bs.sector_end_deg, config.bs.sector_step_deg};
        ReductionOptions<double> opt;
        opt.radar_spacing = config.radar.spacing;
        opt.bs_spacing = config.bs.spacing;
        opt.rel_tolerance = config.projection.rel_tolerance;
        opt.renormalize = config.projection.renormalize;

        parallel_for(rows.size(), options.workers, [&](std::size_t i)
                     {
                         Row &row = rows[i];
                         try
                         {
                             row.reduction_db = mainlobe_reduction<double>(row.elements, config.bs.elements, sector, row.separation, opt);
                         }
                         catch (const InfeasibleProjection &)
                         {
                             row.status = "infeasible";
                         }
                         catch (const NumericalError &)
                         {
                             row.status = "degenerate";
                         }
                         catch (const ValidationError &)
                         {
                             row.status = "out_of_range";
                         } });

        std::string csv = "M,separation_deg,reduction_db,status\n";
        std::size_t failed = 0;
        for (const auto &row : rows)
        {
            csv += std::to_string(row.elements) + ',' + format_number(row.separation) + ',' +
                   (row.status == "ok" ? format_number(row.reduction_db) : std::string()) + ',' + row.status + '\n';
            failed += row.status != "ok";
        }
        write_text(options.out_dir / "reduction.csv", csv);

        RunManifest m;
        m.subcommand = "reduction";
        m.config = config;
        m.outputs = {"reduction.csv"};
        m.workers = options.workers;
        m.summary = {{"rows", std::to_string(rows.size())}, {"error_rows", std::to_string(failed)}};
        m.duration_s = elapsed(start);
        return m;
    }

    RunManifest run_coherence(const ScenarioConfig &config, const RunOptions &options)
    {
        const auto start = Clock::now();
        config.validate();
        prepare(options);

        const double wavelength = config.carrier_wavelength_m();
        std::vector<SeaState<double>> seas;
        for (const auto &s : config.sea.states)
            seas.push_back({s.wave_height_m, s.wave_length_m, s.wind_speed_mps, s.fetch_nmi});

        std::string csv = "sea_index,v_s_mps,v_bob_mps,v_R_mps,f_m_hz,T_c_s,margin,csi_valid,status\n";
        std::optional<double> min_tc;
        for (std::size_t k = 0; k < seas.size(); ++k)
            for (double v_s : config.sea.ship_speeds_mps)
            {
                const auto kin = resultant_speed(v_s, bob_velocity(v_s, seas[k]));
                csv += std::to_string(k) + ',' + format_number(kin.v_s) + ',' + format_number(kin.v_bob) + ',' +
                       format_number(kin.v_r) + ',';
                if (kin.v_r == 0.0)
                {
                    csv += format_number(0.0) + ",,,,static channel\n";
                    continue;
                }
                const auto coh = coherence_time(kin.v_r, wavelength);
                const auto check = pri_margin(coh, config.radarsys.pri_s);
                const bool valid = check.margin > config.radarsys.required_margin;
                csv += format_number(coh.max_doppler_hz) + ',' + format_number(coh.coherence_time_s) + ',' +
                       format_number(check.margin) + ',' + flag(valid) + ",ok\n";
                min_tc = min_tc ? std::min(*min_tc, coh.coherence_time_s) : coh.coherence_time_s;
            }
        write_text(options.out_dir / "coherence.csv", csv);

        const auto table = bob_table<double>(config.sea.ship_speeds_mps, seas);
        std::string bob = "speed_index,sea_index,v_s_mps,v_s_kn,wave_height_m,wave_length_m,steepness,wind_speed_mps,fetch_nmi,v_bob_mps\n";
        std::size_t cell = 0;
        for (std::size_t i = 0; i < config.sea.ship_speeds_mps.size(); ++i)
            for (std::size_t k = 0; k < seas.size(); ++k, ++cell)
            {
                const double v = config.sea.ship_speeds_mps[i];
                bob += std::to_string(i) + ',' + std::to_string(k) + ',' + format_number(v) + ',' +
                       format_number(units::mps_to_knots(v)) + ',' + format_number(seas[k].wave_height) + ',' +
                       format_number(seas[k].wave_length) + ',' + format_number(seas[k].steepness()) + ',' +
                       format_number(seas[k].wind_speed) + ',' + format_number(seas[k].fetch) + ',' +
                       format_number(table[cell]) + '\n';
            }
        write_text(options.out_dir / "bob_table.csv", bob);

        RunManifest m;
        m.subcommand = "coherence";
        m.config = config;
        m.outputs = {"coherence.csv", "bob_table.csv"};
        m.workers = options.workers;
        m.summary = {{"carrier_wavelength_m", format_number(wavelength)},
                     {"coherence_constant", format_number(coherence_constant<double>)},
                     {"min_coherence_time_s", min_tc ? format_number(*min_tc) : std::string("inf")}};
        m.duration_s = elapsed(start);
        return m;
    }

    void write_manifest(const RunManifest &manifest, const fs::path &out_dir)
    {
        nlohmann::ordered_json doc;
        doc["tool"] = tool_name;
        doc["version"] = tool_version();
        doc["subcommand"] = manifest.subcommand;
        doc["seed"] = manifest.config.waveform.seed;
        doc["waveform_algorithm"] = waveform_algorithm_id;
        doc["workers"] = manifest.workers;
        doc["config"] = nlohmann::ordered_json::parse(serialize_config(manifest.config));
        doc["outputs"] = manifest.outputs;
        nlohmann::ordered_json summary = nlohmann::ordered_json::object();
        for (const auto &[k, v] : manifest.summary)
            summary[k] = v;
        doc["summary"] = summary;
        doc["csv_number_format"] = "%.8e";
        doc["duration_s"] = manifest.duration_s;
        write_text(out_dir / "manifest.json", doc.dump(2) + "\n");
    }
}
