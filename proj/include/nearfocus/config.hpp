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

#ifndef NEARFOCUS_CONFIG_HPP
#define NEARFOCUS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nearfocus/model.hpp"

namespace nearfocus
{

// Invalid or incomplete configuration document. Maps to CLI exit status 1.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(const std::string &key, int line, const std::string &message);

    const std::string &key() const noexcept { return key_; }
    int line() const noexcept { return line_; } // 1-based, 0 when unknown

private:
    std::string key_;
    int line_;
};

enum class Experiment
{
    DofSweep,
    GainProfile,
    Scan,
    Axial,
    OptimalSpacing
};

std::string_view to_string(Experiment e);
std::optional<Experiment> experiment_from_string(std::string_view name);

enum class OutputFormat
{
    Csv,
    Json
};

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> format_from_string(std::string_view name);

// All lengths in metres and the frequency in hertz; wavelength units in the
// document are resolved while parsing.
struct ExperimentConfig
{
    Experiment experiment = Experiment::OptimalSpacing;
    double frequency = 0.0;
    int num_elements = 0;
    std::optional<double> spacing;
    double focal_distance = 0.0;
    ElementPattern pattern = ElementPattern::Isotropic;
    std::uint64_t seed = 1;

    struct Sweep
    {
        double start = 0.0;
        double stop = 0.0;
        double step = 0.0;
        bool operator==(const Sweep &) const = default;
    } sweep;

    struct Gain
    {
        double half_width = 0.0;
        int points = 1201;
        bool operator==(const Gain &) const = default;
    } gain;

    struct Scan
    {
        std::vector<double> targets;
        double strip_resolution = 16.0;
        bool operator==(const Scan &) const = default;
    } scan;

    struct Axial
    {
        double z_min = 0.0;
        double z_max = 0.0;
        int samples = 3801;
        bool operator==(const Axial &) const = default;
    } axial;

    struct Optimal
    {
        int null_count = 4;
        bool operator==(const Optimal &) const = default;
    } optimal;

    struct Output
    {
        std::string directory = ".";
        OutputFormat format = OutputFormat::Csv;
        bool operator==(const Output &) const = default;
    } output;

    Wave wave() const { return wave_from_frequency(frequency); }
    ArraySpec array() const; // requires spacing

    bool operator==(const ExperimentConfig &) const = default;
};

/// Parses a YAML configuration document.
///
/// `experiment` overrides a missing `experiment:` key; a conflicting value is an
/// error. Throws ConfigError naming the offending key and line.
ExperimentConfig parse_config(std::string_view text, std::optional<Experiment> experiment = std::nullopt);

ExperimentConfig load_config(const std::string &path, std::optional<Experiment> experiment = std::nullopt);

// Canonical document with every value explicit, in metres and hertz.
std::string serialize_config(const ExperimentConfig &config);

// FNV-1a 64-bit of the canonical document, as 16 hex digits.
// FNV-1a of the canonical document with the output section reset, so the
// hash identifies the computation rather than where it was written.
std::string config_hash(const ExperimentConfig &config);

} // namespace nearfocus

#endif
