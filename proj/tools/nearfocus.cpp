// SPDX-License-Identifier: Apache-2.0
//
// nearfocus - near-field focusing analysis for sparse linear antenna arrays
// Copyright (C) 2026 The nearfocus Authors
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

// nearfocus <experiment> --config <path> [--output <dir>] [--format csv|json] [--seed N]
//
// Exit status: 0 success, 1 configuration error, 2 numerical/domain error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nearfocus/experiment.hpp"

namespace
{

int report_error(const std::string &kind, const std::string &message, int status)
{
    nlohmann::ordered_json j;
    j["status"] = "error";
    j["kind"] = kind;
    j["message"] = message;
    j["exit_code"] = status;
    std::cerr << j.dump() << "\n";
    return status;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Near-field focusing analysis for sparse linear arrays"};
    app.set_version_flag("--version", nearfocus::tool_version());

    std::string experiment_name;
    std::string config_path;
    std::optional<std::string> output_dir;
    std::optional<std::string> format_name;
    std::optional<std::uint64_t> seed;

    app.add_option("experiment", experiment_name, "dof-sweep | gain-profile | scan | axial | optimal-spacing")
        ->required();
    app.add_option("-c,--config", config_path, "YAML configuration file")->required();
    app.add_option("-o,--output", output_dir, "Output directory (overrides output.directory)");
    app.add_option("-f,--format", format_name, "csv or json (overrides output.format)");
    app.add_option("--seed", seed, "Seed for the random-phase comparison in scan runs");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        return report_error("usage", e.what(), 1);
    }

    nearfocus::ExperimentConfig config;
    try
    {
        const auto experiment = nearfocus::experiment_from_string(experiment_name);
        if (!experiment)
            throw nearfocus::ConfigError("experiment", 0, "unknown experiment '" + experiment_name + "'");
        config = nearfocus::load_config(config_path, experiment);
        if (output_dir)
            config.output.directory = *output_dir;
        if (format_name)
        {
            const auto fmt = nearfocus::format_from_string(*format_name);
            if (!fmt)
                throw nearfocus::ConfigError("format", 0, "format must be csv or json");
            config.output.format = *fmt;
        }
        if (seed)
            config.seed = *seed;
    }
    catch (const nearfocus::ConfigError &e)
    {
        return report_error("config", e.what(), 1);
    }

    try
    {
        const auto result = nearfocus::run_experiment(config);
        nearfocus::write_outputs(result, config.output.directory, config.output.format);
        std::cout << nearfocus::summary_json(result);
    }
    catch (const nearfocus::ConfigError &e)
    {
        return report_error("config", e.what(), 1);
    }
    catch (const nearfocus::IoError &e)
    {
        return report_error("io", e.what(), 2);
    }
    catch (const std::exception &e)
    {
        return report_error("numerical", e.what(), 2);
    }
    return 0;
}
