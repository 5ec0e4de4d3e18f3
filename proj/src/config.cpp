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

#include "nearfocus/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "nearfocus/focusing.hpp"
#include "nearfocus/table.hpp"

namespace nearfocus
{

ConfigError::ConfigError(const std::string &key, int line, const std::string &message)
    : std::runtime_error("config" + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                         (key.empty() ? std::string() : ": '" + key + "'") + ": " + message),
      key_(key), line_(line)
{
}

std::string_view to_string(Experiment e)
{
    switch (e)
    {
    case Experiment::DofSweep:
        return "dof-sweep";
    case Experiment::GainProfile:
        return "gain-profile";
    case Experiment::Scan:
        return "scan";
    case Experiment::Axial:
        return "axial";
    case Experiment::OptimalSpacing:
        return "optimal-spacing";
    }
    return "unknown";
}

std::optional<Experiment> experiment_from_string(std::string_view name)
{
    for (auto e : {Experiment::DofSweep, Experiment::GainProfile, Experiment::Scan, Experiment::Axial,
                   Experiment::OptimalSpacing})
        if (name == to_string(e))
            return e;
    return std::nullopt;
}

std::string_view to_string(OutputFormat f)
{
    return f == OutputFormat::Json ? "json" : "csv";
}

std::optional<OutputFormat> format_from_string(std::string_view name)
{
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    return std::nullopt;
}

ArraySpec ExperimentConfig::array() const
{
    if (!spacing)
        throw ConfigError("spacing", 0, "required for experiment " + std::string(to_string(experiment)));
    ArraySpec a;
    a.wave = wave();
    a.num_elements = num_elements;
    a.spacing = *spacing;
    a.pattern = pattern;
    return a;
}

namespace
{

// Key path plus source line of a YAML node, for error messages.
struct Field
{
    std::string key;
    YAML::Node node;

    int line() const { return node.Mark().is_null() ? 0 : node.Mark().line + 1; }

    [[noreturn]] void fail(const std::string &message) const { throw ConfigError(key, line(), message); }

    std::string scalar() const
    {
        if (!node.IsScalar())
            fail("expected a scalar value");
        return node.Scalar();
    }
};

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

// Splits "<number> [unit]" into its parts.
std::pair<double, std::string> split_quantity(const Field &f)
{
    const std::string text = trim(f.scalar());
    double value = 0.0;
    const char *begin = text.data();
    const char *end = text.data() + text.size();
    if (!text.empty() && *begin == '+')
        ++begin;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || !std::isfinite(value))
        f.fail("'" + text + "' is not a number");
    return {value, trim(std::string_view(res.ptr, static_cast<size_t>(end - res.ptr)))};
}

double positive(const Field &f, double v)
{
    if (!(v > 0.0))
        f.fail("value must be positive");
    return v;
}

double parse_frequency(const Field &f)
{
    auto [v, unit] = split_quantity(f);
    double scale = 0.0;
    if (unit.empty() || unit == "Hz")
        scale = 1.0;
    else if (unit == "kHz")
        scale = 1e3;
    else if (unit == "MHz")
        scale = 1e6;
    else if (unit == "GHz")
        scale = 1e9;
    else
        f.fail("unknown frequency unit '" + unit + "' (Hz, kHz, MHz, GHz)");
    return positive(f, v * scale);
}

double parse_length(const Field &f, double wavelength, bool allow_negative = false)
{
    auto [v, unit] = split_quantity(f);
    double out = 0.0;
    if (unit.empty() || unit == "m")
        out = v;
    else if (unit == "cm")
        out = v * 1e-2;
    else if (unit == "mm")
        out = v * 1e-3;
    else if (unit == "lambda" || unit == "wavelength" || unit == "wavelengths")
        out = v * wavelength;
    else
        f.fail("unknown length unit '" + unit + "' (m, cm, mm, lambda)");
    if (!allow_negative)
        positive(f, out);
    return out;
}

long parse_integer(const Field &f, long min_value)
{
    const std::string text = trim(f.scalar());
    long v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        f.fail("'" + text + "' is not an integer");
    if (v < min_value)
        f.fail("value must be >= " + std::to_string(min_value));
    return v;
}

double parse_plain_positive(const Field &f)
{
    auto [v, unit] = split_quantity(f);
    if (!unit.empty())
        f.fail("unexpected unit '" + unit + "'");
    return positive(f, v);
}

// Map accessor that rejects unknown keys.
class Section
{
public:
    Section(std::string prefix, YAML::Node node, std::set<std::string> allowed)
        : prefix_(std::move(prefix)), node_(std::move(node))
    {
        if (!node_.IsMap())
            throw ConfigError(prefix_.empty() ? std::string("<document>") : prefix_,
                              node_.Mark().is_null() ? 0 : node_.Mark().line + 1, "expected a mapping");
        for (auto it = node_.begin(); it != node_.end(); ++it)
        {
            const std::string k = it->first.as<std::string>();
            if (!allowed.count(k))
                throw ConfigError(path(k), it->first.Mark().line + 1, "unknown key");
        }
    }

    std::optional<Field> get(const std::string &k) const
    {
        for (auto it = node_.begin(); it != node_.end(); ++it)
            if (it->first.as<std::string>() == k)
                return Field{path(k), it->second};
        return std::nullopt;
    }

    Field require(const std::string &k) const
    {
        if (auto f = get(k))
            return *f;
        throw ConfigError(path(k), node_.Mark().is_null() ? 0 : node_.Mark().line + 1, "missing required key");
    }

    std::optional<Section> section(const std::string &k, std::set<std::string> allowed) const
    {
        auto f = get(k);
        if (!f)
            return std::nullopt;
        return Section(path(k), f->node, std::move(allowed));
    }

private:
    std::string path(const std::string &k) const { return prefix_.empty() ? k : prefix_ + "." + k; }

    std::string prefix_;
    YAML::Node node_;
};

} // namespace

ExperimentConfig parse_config(std::string_view text, std::optional<Experiment> experiment)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(std::string(text));
    }
    catch (const YAML::ParserException &e)
    {
        throw ConfigError("", e.mark.line + 1, e.msg);
    }
    if (!root || root.IsNull())
        throw ConfigError("", 0, "empty configuration document");

    const Section top("", root,
                      {"experiment", "frequency", "num_elements", "spacing", "focal_distance", "pattern", "seed",
                       "sweep", "gain_profile", "scan", "axial", "optimal", "output"});

    ExperimentConfig cfg;
    if (auto f = top.get("experiment"))
    {
        auto e = experiment_from_string(trim(f->scalar()));
        if (!e)
            f->fail("unknown experiment '" + f->scalar() + "'");
        if (experiment && *experiment != *e)
            f->fail("document declares '" + std::string(to_string(*e)) + "' but '" +
                    std::string(to_string(*experiment)) + "' was requested");
        cfg.experiment = *e;
    }
    else if (experiment)
        cfg.experiment = *experiment;
    else
        top.require("experiment");

    cfg.frequency = parse_frequency(top.require("frequency"));
    const double lambda = speed_of_light / cfg.frequency;
    {
        const Field f = top.require("num_elements");
        const long n = parse_integer(f, 1);
        if (n > 100000)
            f.fail("value too large");
        cfg.num_elements = static_cast<int>(n);
    }
    cfg.focal_distance = parse_length(top.require("focal_distance"), lambda);
    if (auto f = top.get("spacing"))
        cfg.spacing = parse_length(*f, lambda);
    if (auto f = top.get("pattern"))
    {
        auto p = pattern_from_string(trim(f->scalar()));
        if (!p)
            f->fail("unknown pattern '" + f->scalar() + "' (isotropic, vertical-dipole, horizontal-dipole, patch)");
        cfg.pattern = *p;
    }
    if (auto f = top.get("seed"))
        cfg.seed = static_cast<std::uint64_t>(parse_integer(*f, 0));

    const bool needs_spacing = cfg.experiment == Experiment::GainProfile || cfg.experiment == Experiment::Scan ||
                               cfg.experiment == Experiment::Axial;
    if (needs_spacing && !cfg.spacing)
        top.require("spacing");

    cfg.sweep = {0.1 * lambda, 4.0 * lambda, 0.01 * lambda};
    if (auto s = top.section("sweep", {"start", "stop", "step"}))
    {
        if (auto f = s->get("start"))
            cfg.sweep.start = parse_length(*f, lambda);
        if (auto f = s->get("stop"))
            cfg.sweep.stop = parse_length(*f, lambda);
        if (auto f = s->get("step"))
            cfg.sweep.step = parse_length(*f, lambda);
        if (cfg.sweep.stop < cfg.sweep.start)
            throw ConfigError("sweep.stop", s->require("stop").line(), "stop must not be below start");
    }

    cfg.gain.half_width = cfg.spacing ? 3.0 * *cfg.spacing : 0.0;
    if (auto s = top.section("gain_profile", {"half_width", "points"}))
    {
        if (auto f = s->get("half_width"))
            cfg.gain.half_width = parse_length(*f, lambda);
        if (auto f = s->get("points"))
            cfg.gain.points = static_cast<int>(parse_integer(*f, 3));
    }

    cfg.scan.targets = cfg.spacing ? default_scan_targets(*cfg.spacing) : std::vector<double>{};
    if (auto s = top.section("scan", {"targets", "strip_resolution"}))
    {
        if (auto f = s->get("targets"))
        {
            if (f->node.IsSequence())
            {
                cfg.scan.targets.clear();
                for (size_t i = 0; i < f->node.size(); ++i)
                    cfg.scan.targets.push_back(
                        parse_length(Field{f->key + "[" + std::to_string(i) + "]", f->node[i]}, lambda, true));
                if (cfg.scan.targets.empty())
                    f->fail("target list is empty");
            }
            else if (trim(f->scalar()) == "paper-default")
            {
                if (!cfg.spacing)
                    f->fail("'paper-default' targets need 'spacing'");
                cfg.scan.targets = default_scan_targets(*cfg.spacing);
            }
            else
                f->fail("expected a list of lengths or 'paper-default'");
        }
        if (auto f = s->get("strip_resolution"))
        {
            cfg.scan.strip_resolution = parse_plain_positive(*f);
            if (cfg.scan.strip_resolution < min_strip_resolution)
                f->fail("must be at least 8 points per wavelength");
        }
    }

    cfg.axial = {0.1 * cfg.focal_distance, 2.0 * cfg.focal_distance, 3801};
    if (auto s = top.section("axial", {"z_min", "z_max", "samples"}))
    {
        if (auto f = s->get("z_min"))
            cfg.axial.z_min = parse_length(*f, lambda);
        if (auto f = s->get("z_max"))
            cfg.axial.z_max = parse_length(*f, lambda);
        if (auto f = s->get("samples"))
            cfg.axial.samples = static_cast<int>(parse_integer(*f, 3));
        if (!(cfg.axial.z_min < cfg.focal_distance && cfg.focal_distance < cfg.axial.z_max))
            throw ConfigError("axial", 0, "range must contain focal_distance");
    }

    if (auto s = top.section("optimal", {"null_count"}))
        if (auto f = s->get("null_count"))
            cfg.optimal.null_count = static_cast<int>(parse_integer(*f, 1));

    if (auto s = top.section("output", {"directory", "format"}))
    {
        if (auto f = s->get("directory"))
            cfg.output.directory = f->scalar();
        if (auto f = s->get("format"))
        {
            auto fmt = format_from_string(trim(f->scalar()));
            if (!fmt)
                f->fail("format must be csv or json");
            cfg.output.format = *fmt;
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path, std::optional<Experiment> experiment)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("", 0, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), experiment);
}

namespace
{

std::string metres(double v)
{
    return format_number(v) + " m";
}

std::string quoted(const std::string &s)
{
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string serialize_config(const ExperimentConfig &c)
{
    std::ostringstream o;
    o << "experiment: " << to_string(c.experiment) << "\n";
    o << "frequency: " << format_number(c.frequency) << " Hz\n";
    o << "num_elements: " << c.num_elements << "\n";
    if (c.spacing)
        o << "spacing: " << metres(*c.spacing) << "\n";
    o << "focal_distance: " << metres(c.focal_distance) << "\n";
    o << "pattern: " << to_string(c.pattern) << "\n";
    o << "seed: " << c.seed << "\n";
    o << "sweep:\n  start: " << metres(c.sweep.start) << "\n  stop: " << metres(c.sweep.stop)
      << "\n  step: " << metres(c.sweep.step) << "\n";
    if (c.gain.half_width > 0.0)
        o << "gain_profile:\n  half_width: " << metres(c.gain.half_width) << "\n";
    else
        o << "gain_profile:\n";
    o << "  points: " << c.gain.points << "\n";
    o << "scan:\n";
    if (!c.scan.targets.empty())
    {
        o << "  targets: [";
        for (size_t i = 0; i < c.scan.targets.size(); ++i)
            o << (i ? ", " : "") << metres(c.scan.targets[i]);
        o << "]\n";
    }
    o << "  strip_resolution: " << format_number(c.scan.strip_resolution) << "\n";
    o << "axial:\n  z_min: " << metres(c.axial.z_min) << "\n  z_max: " << metres(c.axial.z_max)
      << "\n  samples: " << c.axial.samples << "\n";
    o << "optimal:\n  null_count: " << c.optimal.null_count << "\n";
    o << "output:\n  directory: " << quoted(c.output.directory) << "\n  format: " << to_string(c.output.format)
      << "\n";
    return o.str();
}

std::string config_hash(const ExperimentConfig &config)
{
    ExperimentConfig physics = config;
    physics.output = {};
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : serialize_config(physics))
    {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace nearfocus
