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

#include "nearfocus/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "nearfocus/dof.hpp"
#include "nearfocus/focusing.hpp"
#include "nearfocus/peaks.hpp"

#ifndef NEARFOCUS_VERSION
#define NEARFOCUS_VERSION "0.0.0"
#endif

namespace nearfocus
{

std::string tool_version()
{
    return NEARFOCUS_VERSION;
}

const ResultTable &ExperimentResult::table(const std::string &name) const
{
    for (const auto &t : tables)
        if (t.name == name)
            return t;
    throw ArgumentError("no table named '" + name + "'");
}

double ExperimentResult::headline_value(const std::string &key) const
{
    for (const auto &[k, v] : headline)
        if (k == key)
            return v;
    throw ArgumentError("no headline value '" + key + "'");
}

namespace
{

constexpr int random_trials = 100;
constexpr double rms_floor_db = -20.0;

std::vector<std::pair<std::string, std::string>> run_metadata(const ExperimentConfig &cfg)
{
    const Wave w = cfg.wave();
    std::vector<std::pair<std::string, std::string>> m{
        {"tool", "nearfocus"},
        {"tool_version", tool_version()},
        {"experiment", std::string(to_string(cfg.experiment))},
        {"config_hash", config_hash(cfg)},
        {"frequency_hz", format_number(cfg.frequency)},
        {"wavelength_m", format_number(w.wavelength)},
        {"num_elements", std::to_string(cfg.num_elements)},
        {"focal_distance_m", format_number(cfg.focal_distance)},
        {"pattern", std::string(to_string(cfg.pattern))},
    };
    if (cfg.spacing)
        m.emplace_back("spacing_m", format_number(*cfg.spacing));
    m.emplace_back("db_convention", "10*log10(power) == 20*log10(|field|)");
    m.emplace_back("config", serialize_config(cfg));
    return m;
}

ResultTable make_table(const std::string &name, std::vector<std::string> columns,
                       const std::vector<std::pair<std::string, std::string>> &meta)
{
    ResultTable t;
    t.name = name;
    t.columns = std::move(columns);
    t.metadata = meta;
    t.set_meta("table", name);
    return t;
}

// Uniform phase in [0, 2 pi) from the top 53 bits, independent of the
// standard library's distribution implementation.
double random_phase(std::mt19937_64 &rng)
{
    return 2.0 * pi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void run_dof_sweep(const ExperimentConfig &cfg, ExperimentResult &out)
{
    const Wave w = cfg.wave();
    ArraySpec tx;
    tx.wave = w;
    tx.num_elements = cfg.num_elements;
    tx.spacing = cfg.spacing.value_or(cfg.sweep.start);
    tx.pattern = cfg.pattern;
    const FocusScenario scenario = make_scenario(tx, cfg.focal_distance);
    const auto grid = spacing_grid(cfg.sweep.start, cfg.sweep.stop, cfg.sweep.step);
    const SpacingSweep sweep = dof_sweep(scenario, grid);

    auto t = make_table("dof_sweep", {"spacing_m", "spacing_over_lambda", "effective_dof", "is_best"}, out.metadata);
    for (size_t i = 0; i < sweep.spacings.size(); ++i)
        t.add_row({sweep.spacings[i], sweep.spacings[i] / w.wavelength, sweep.dof_curve[i],
                   i == sweep.best_index ? 1.0 : 0.0});
    out.tables.push_back(std::move(t));

    const double closed = optimal_spacing(cfg.num_elements, cfg.focal_distance, w, 1);
    FocusScenario at_closed = scenario;
    at_closed.tx.spacing = closed;
    at_closed.rx_spacing = closed;
    out.headline = {
        {"best_spacing_m", sweep.best_spacing},
        {"best_spacing_over_lambda", sweep.best_spacing / w.wavelength},
        {"best_dof", sweep.best_dof},
        {"closed_form_spacing_m", closed},
        {"closed_form_spacing_over_lambda", closed / w.wavelength},
        {"dof_at_closed_form", effective_dof(channel_matrix(at_closed)).effective_dof},
    };
}

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

double first_positive(const std::vector<double> &xs)
{
    for (double x : xs)
        if (x > 0.0)
            return x;
    return std::nan("");
}

void run_gain_profile(const ExperimentConfig &cfg, ExperimentResult &out)
{
    const ArraySpec tx = cfg.array();
    const Wave &w = tx.wave;
    const auto offsets = linspace(-cfg.gain.half_width, cfg.gain.half_width, cfg.gain.points);
    const GainProfile exact = gain_exact(tx, cfg.focal_distance, offsets);
    const GainProfile parax = gain_paraxial(tx.num_elements, tx.spacing, cfg.focal_distance, w, offsets);

    const std::vector<std::string> cols{"offset_m", "offset_over_lambda", "gain_exact_db", "gain_paraxial_db"};
    auto t = make_table("gain_profile", cols, out.metadata);
    auto tn = make_table("gain_profile_normalized", cols, out.metadata);
    double sq = 0.0;
    for (size_t i = 0; i < offsets.size(); ++i)
    {
        const double e = power_db(exact.gain[i]), p = power_db(parax.gain[i]);
        const double en = power_db(exact.gain[i] / exact.peak_gain), pn = power_db(parax.gain[i] / parax.peak_gain);
        t.add_row({offsets[i], offsets[i] / w.wavelength, e, p});
        tn.add_row({offsets[i], offsets[i] / w.wavelength, en, pn});
        const double diff = std::max(en, rms_floor_db) - std::max(pn, rms_floor_db);
        sq += diff * diff;
    }
    out.tables.push_back(std::move(t));
    out.tables.push_back(std::move(tn));

    const auto analytic = null_offsets_analytic(tx.num_elements, tx.spacing, cfg.focal_distance, w, 8);
    auto nulls = make_table("gain_nulls", {"source", "null_m", "null_over_lambda"}, out.metadata);
    nulls.set_meta("source_codes", "0 = exact grid, 1 = paraxial grid, 2 = analytic");
    for (double x : exact.null_offsets)
        nulls.add_row({0.0, x, x / w.wavelength});
    for (double x : parax.null_offsets)
        nulls.add_row({1.0, x, x / w.wavelength});
    for (double x : analytic)
        if (x <= cfg.gain.half_width)
            nulls.add_row({2.0, x, x / w.wavelength});
    out.tables.push_back(std::move(nulls));

    out.headline = {
        {"peak_offset_exact_m", exact.peak_offset},
        {"peak_offset_paraxial_m", parax.peak_offset},
        {"first_null_exact_m", first_positive(exact.null_offsets)},
        {"first_null_paraxial_m", first_positive(parax.null_offsets)},
        {"first_null_analytic_m", analytic.empty() ? std::nan("") : analytic.front()},
        {"normalized_rms_difference_db", std::sqrt(sq / static_cast<double>(offsets.size()))},
    };
}

void run_scan(const ExperimentConfig &cfg, ExperimentResult &out)
{
    const ArraySpec tx = cfg.array();
    const Wave &w = tx.wave;
    const FocusScenario scenario = make_scenario(tx, cfg.focal_distance);
    const ScanReport report = scan_focal_points(scenario, cfg.scan.targets, cfg.scan.strip_resolution);

    double best_db = -1e300;
    for (const auto &s : report.scans)
        best_db = std::max(best_db, s.peak_db);

    const auto tx_x = element_positions(tx);
    std::mt19937_64 rng(cfg.seed);

    auto t = make_table("scan",
                        {"target_x_m", "peak_x_m", "position_error_m", "peak_db", "peak_norm_db", "lobe_count",
                         "max_lobe_db", "focal_z_m", "axial_shift_m", "random_phase_best_db"},
                        out.metadata);
    t.set_meta("seed", std::to_string(cfg.seed));
    t.set_meta("random_trials", std::to_string(random_trials));
    for (const auto &s : report.scans)
    {
        double max_lobe = -1e300;
        for (const auto &l : s.lobes)
            max_lobe = std::max(max_lobe, l.level_db);
        const double conj = std::abs(field_at(tx, tx_x, conjugate_excitation(tx, s.target, cfg.focal_distance),
                                              s.target, cfg.focal_distance));
        double best_random = 0.0;
        ExcitationVector a;
        a.weights.resize(tx_x.size());
        for (int trial = 0; trial < random_trials; ++trial)
        {
            for (auto &wgt : a.weights)
                wgt = std::polar(1.0, random_phase(rng));
            best_random = std::max(best_random, std::abs(field_at(tx, tx_x, a, s.target, cfg.focal_distance)));
        }
        t.add_row({s.target, s.peak_x, s.position_error, s.peak_db, s.peak_db - best_db,
                   static_cast<double>(s.lobes.size()), s.lobes.empty() ? std::nan("") : max_lobe, s.focal_height,
                   cfg.focal_distance - s.focal_height, magnitude_db(best_random / conj)});
    }
    out.tables.push_back(std::move(t));

    std::vector<std::string> cols{"x_m", "x_over_lambda"};
    for (size_t i = 0; i < report.scans.size(); ++i)
        cols.push_back("norm_db_t" + std::to_string(i));
    auto profiles = make_table("scan_profiles", cols, out.metadata);
    for (size_t i = 0; i < report.scans.size(); ++i)
        profiles.set_meta("target_t" + std::to_string(i) + "_m", format_number(report.scans[i].target));
    for (size_t j = 0; j < report.strip.size(); ++j)
    {
        std::vector<double> row{report.strip[j], report.strip[j] / w.wavelength};
        for (const auto &s : report.scans)
            row.push_back(magnitude_db(s.magnitude[j]) - best_db);
        profiles.add_row(std::move(row));
    }
    out.tables.push_back(std::move(profiles));

    auto lobes = make_table("scan_lobes", {"target_x_m", "lobe_x_m", "level_db", "at_strip_edge"}, out.metadata);
    for (const auto &s : report.scans)
        for (const auto &l : s.lobes)
            lobes.add_row({s.target, l.x, l.level_db, l.at_strip_edge ? 1.0 : 0.0});
    out.tables.push_back(std::move(lobes));

    out.headline = {
        {"max_position_error_m", report.max_position_error()},
        {"max_position_error_over_lambda", report.max_position_error() / w.wavelength},
        {"peak_spread_db", report.peak_spread_db},
        {"lobe_count", static_cast<double>(report.lobe_count())},
    };
}

void run_axial(const ExperimentConfig &cfg, ExperimentResult &out)
{
    const ArraySpec tx = cfg.array();
    const Wave &w = tx.wave;
    const AxialProfile p = axial_profile(make_scenario(tx, cfg.focal_distance), cfg.axial.z_min, cfg.axial.z_max,
                                         cfg.axial.samples);
    const double top = *std::max_element(p.magnitude.begin(), p.magnitude.end());
    auto t = make_table("axial", {"z_m", "z_over_lambda", "magnitude", "magnitude_db", "norm_db"}, out.metadata);
    for (size_t i = 0; i < p.z_samples.size(); ++i)
        t.add_row({p.z_samples[i], p.z_samples[i] / w.wavelength, p.magnitude[i], magnitude_db(p.magnitude[i]),
                   magnitude_db(p.magnitude[i] / top)});
    out.tables.push_back(std::move(t));
    out.headline = {
        {"z_peak_m", p.z_peak},
        {"z_peak_over_lambda", p.z_peak / w.wavelength},
        {"focal_shift_m", p.focal_shift},
        {"focal_shift_over_lambda", p.focal_shift / w.wavelength},
        {"global_peak_z_m", p.global_peak_z},
    };
}

void run_optimal(const ExperimentConfig &cfg, ExperimentResult &out)
{
    const Wave w = cfg.wave();
    auto t = make_table("optimal_spacing", {"null_index", "spacing_m", "spacing_over_lambda"}, out.metadata);
    for (int n = 1; n <= cfg.optimal.null_count; ++n)
    {
        const double d = optimal_spacing(cfg.num_elements, cfg.focal_distance, w, n);
        t.add_row({static_cast<double>(n), d, d / w.wavelength});
    }
    out.tables.push_back(std::move(t));
    const double d1 = optimal_spacing(cfg.num_elements, cfg.focal_distance, w, 1);
    out.headline = {{"optimal_spacing_m", d1}, {"optimal_spacing_over_lambda", d1 / w.wavelength}};
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig &config)
{
    ExperimentResult out;
    out.experiment = config.experiment;
    out.metadata = run_metadata(config);
    switch (config.experiment)
    {
    case Experiment::DofSweep:
        run_dof_sweep(config, out);
        break;
    case Experiment::GainProfile:
        run_gain_profile(config, out);
        break;
    case Experiment::Scan:
        run_scan(config, out);
        break;
    case Experiment::Axial:
        run_axial(config, out);
        break;
    case Experiment::OptimalSpacing:
        run_optimal(config, out);
        break;
    }
    return out;
}

std::string summary_json(const ExperimentResult &result)
{
    nlohmann::ordered_json j;
    j["status"] = "ok";
    j["experiment"] = std::string(to_string(result.experiment));
    auto h = nlohmann::ordered_json::object();
    for (const auto &[k, v] : result.headline)
    {
        if (std::isfinite(v))
            h[k] = v;
        else
            h[k] = nullptr;
    }
    j["headline"] = std::move(h);
    auto tables = nlohmann::ordered_json::array();
    for (const auto &t : result.tables)
        tables.push_back(t.name);
    j["tables"] = std::move(tables);
    auto meta = nlohmann::ordered_json::object();
    for (const auto &[k, v] : result.metadata)
        meta[k] = v;
    j["metadata"] = std::move(meta);
    return j.dump(2) + "\n";
}

void write_outputs(const ExperimentResult &result, const std::string &directory, OutputFormat format)
{
    const std::filesystem::path dir(directory);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError(directory, ec.message());
    const std::string ext = format == OutputFormat::Json ? ".json" : ".csv";
    for (const auto &t : result.tables)
        write_table(t, format, (dir / (t.name + ext)).string());

    const auto summary_path = (dir / "summary.json").string();
    std::ofstream f(summary_path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError(summary_path, "cannot open for writing");
    f << summary_json(result);
    if (!f)
        throw IoError(summary_path, "write failed");
}

} // namespace nearfocus
