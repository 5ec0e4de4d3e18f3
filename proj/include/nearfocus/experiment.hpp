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

#ifndef NEARFOCUS_EXPERIMENT_HPP
#define NEARFOCUS_EXPERIMENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "nearfocus/config.hpp"
#include "nearfocus/table.hpp"

namespace nearfocus
{

std::string tool_version();

struct ExperimentResult
{
    Experiment experiment = Experiment::OptimalSpacing;
    std::vector<ResultTable> tables; // first entry is the primary table
    std::vector<std::pair<std::string, double>> headline;
    std::vector<std::pair<std::string, std::string>> metadata;

    const ResultTable &table(const std::string &name) const;
    double headline_value(const std::string &key) const;
};

/// Runs the experiment named in the config.
///
/// Tables per experiment (all dB columns are 10 log10 of a power-like quantity,
/// i.e. 20 log10 of a field magnitude; "_norm" columns are peak-normalised):
///   dof-sweep        dof_sweep
///   gain-profile     gain_profile, gain_profile_normalized, gain_nulls
///   scan             scan, scan_profiles, scan_lobes
///   axial            axial
///   optimal-spacing  optimal_spacing
/// Module errors propagate unchanged.
ExperimentResult run_experiment(const ExperimentConfig &config);

// Summary sidecar: experiment name, headline scalars and run metadata.
std::string summary_json(const ExperimentResult &result);

// Writes every table as <directory>/<name>.<csv|json> plus <directory>/summary.json.
void write_outputs(const ExperimentResult &result, const std::string &directory, OutputFormat format);

} // namespace nearfocus

#endif
