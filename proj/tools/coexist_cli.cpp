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

// coexist command line: reproduces the beampattern, mainlobe-reduction and
// coherence-time studies as CSV files plus a manifest.json per run.
//
//   coexist <beampattern|reduction|coherence|validate> [--config <path>] [--out-dir <path>]
//           [--seed <u64>] [--workers <n>]
//
// Exit codes: 0 success, 1 I/O failure, 2 configuration syntax or usage error,
// 3 validation error, 4 infeasible projection, 5 numerical error.

#include "coexist/scenario.hpp"
#include "coexist/types.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

namespace
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_io = 1,
        exit_parse = 2,
        exit_validation = 3,
        exit_infeasible = 4,
        exit_numerical = 5,
    };
}

int main(int argc, char **argv)
{
    CLI::App app{"Radar / cellular spectrum-coexistence simulator"};
    app.set_version_flag("--version", coexist::tool_version());
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::size_t workers = 1;

    auto add_common = [&](CLI::App *sub, bool writes_output)
    {
        sub->add_option("--config", config_path, "Scenario configuration (JSON key tree); defaults apply when omitted")
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "Override waveform.seed");
        if (writes_output)
        {
            sub->add_option("--out-dir", out_dir, "Output directory (default: $COEXIST_OUT_DIR, else .)");
            sub->add_option("--workers", workers, "Worker threads; outputs do not depend on this")->check(CLI::Range(1, 1024));
        }
    };

    auto *beampattern = app.add_subcommand("beampattern", "Projected vs unprojected transmit beampattern (beampattern.csv)");
    auto *reduction = app.add_subcommand("reduction", "Mainlobe power reduction over M x separation (reduction.csv)");
    auto *coherence = app.add_subcommand("coherence", "Coherence time and bobbing table (coherence.csv, bob_table.csv)");
    auto *validate = app.add_subcommand("validate", "Check a configuration and print it with defaults resolved");
    add_common(beampattern, true);
    add_common(reduction, true);
    add_common(coherence, true);
    add_common(validate, false);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_parse;
    }

    try
    {
        coexist::ScenarioConfig config = config_path.empty() ? coexist::parse_config("") : coexist::load_config(config_path);
        if (seed)
            config.waveform.seed = *seed;

        if (validate->parsed())
        {
            std::cout << coexist::serialize_config(config);
            return exit_ok;
        }

        coexist::RunOptions options;
        if (!out_dir.empty())
            options.out_dir = out_dir;
        else if (const char *env = std::getenv("COEXIST_OUT_DIR"); env && *env)
            options.out_dir = env;
        options.workers = workers;

        coexist::RunManifest manifest;
        if (beampattern->parsed())
            manifest = coexist::run_beampattern(config, options);
        else if (reduction->parsed())
            manifest = coexist::run_reduction(config, options);
        else
            manifest = coexist::run_coherence(config, options);
        coexist::write_manifest(manifest, options.out_dir);

        for (const auto &file : manifest.outputs)
            std::cout << (options.out_dir / file).string() << '\n';
        for (const auto &[key, value] : manifest.summary)
            std::cout << "  " << key << " = " << value << '\n';
        return exit_ok;
    }
    catch (const coexist::ParseError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
    catch (const coexist::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    catch (const coexist::InfeasibleProjection &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_infeasible;
    }
    catch (const coexist::NumericalError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numerical;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
}
