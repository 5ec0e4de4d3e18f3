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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>

#include <json.hpp>

#include "nearfocus/experiment.hpp"

using namespace nearfocus;
using Catch::Approx;

namespace
{

ExperimentConfig reference_config(Experiment e, const std::string &spacing = "")
{
    std::string doc = "experiment: " + std::string(to_string(e)) +
                      "\nfrequency: 6 GHz\nnum_elements: 40\nfocal_distance: 200 lambda\n";
    if (!spacing.empty())
        doc += "spacing: " + spacing + "\n";
    return parse_config(doc);
}

size_t column(const ResultTable &t, const std::string &name)
{
    for (size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name)
            return i;
    FAIL("missing column " << name);
    return 0;
}

} // namespace

TEST_CASE("optimal-spacing experiment")
{
    const ExperimentResult r = run_experiment(reference_config(Experiment::OptimalSpacing));
    const double lambda = speed_of_light / 6e9;
    CHECK(r.headline_value("optimal_spacing_over_lambda") == Approx(2.2360679775).epsilon(1e-10));
    CHECK(r.headline_value("optimal_spacing_m") == Approx(std::sqrt(5.0) * lambda).epsilon(1e-14));
    CHECK(r.headline_value("optimal_spacing_m") == Approx(0.111726).margin(1e-6));
    const ResultTable &t = r.table("optimal_spacing");
    CHECK(t.rows.size() == 4);
    CHECK(t.rows[3][1] == Approx(2.0 * t.rows[0][1]).epsilon(1e-15));
    REQUIRE(t.meta("wavelength_m") != nullptr);
    CHECK(*t.meta("wavelength_m") == format_number(lambda));
    CHECK(t.meta("config_hash") != nullptr);
    CHECK(t.meta("tool_version") != nullptr);
    CHECK(parse_config(*t.meta("config")) == reference_config(Experiment::OptimalSpacing));
}

TEST_CASE("dof-sweep experiment")
{
    const ExperimentResult r = run_experiment(reference_config(Experiment::DofSweep));
    const ResultTable &t = r.table("dof_sweep");
    CHECK(t.rows.size() == 391);
    const size_t best = column(t, "is_best");
    int flagged = 0;
    for (const auto &row : t.rows)
        flagged += row[best] == 1.0;
    CHECK(flagged == 1);
    CHECK(r.headline_value("best_spacing_over_lambda") == Approx(2.28).epsilon(1e-9));
    CHECK(r.headline_value("closed_form_spacing_over_lambda") == Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(r.headline_value("best_dof") >= r.headline_value("dof_at_closed_form"));
}

TEST_CASE("gain-profile experiment")
{
    const ExperimentResult r = run_experiment(reference_config(Experiment::GainProfile, "2.2360679774997897 lambda"));
    const ResultTable &t = r.table("gain_profile");
    CHECK(t.columns == std::vector<std::string>{"offset_m", "offset_over_lambda", "gain_exact_db", "gain_paraxial_db"});
    CHECK(t.rows.size() == 1201);
    const ResultTable &tn = r.table("gain_profile_normalized");
    CHECK(tn.rows[600][2] == Approx(0.0).margin(1e-12));
    CHECK(tn.rows[600][3] == Approx(0.0).margin(1e-12));
    const double d = r.headline_value("first_null_analytic_m");
    CHECK(std::abs(r.headline_value("first_null_exact_m") - d) / d < 0.02);
    CHECK(std::abs(r.headline_value("first_null_paraxial_m") - d) / d < 1e-3);
}

TEST_CASE("scan experiment")
{
    ExperimentConfig sparse = reference_config(Experiment::Scan, "2.2360679774997897 lambda");
    ExperimentConfig dense = reference_config(Experiment::Scan, "0.5 lambda");
    const ExperimentResult rs = run_experiment(sparse);
    const ExperimentResult rd = run_experiment(dense);
    const ResultTable &t = rs.table("scan");
    for (const auto *name : {"target_x_m", "peak_x_m", "position_error_m", "peak_db", "lobe_count"})
        column(t, name);
    CHECK(t.rows.size() == 5);
    // Conjugate matching beats every random-phase trial at the target.
    const size_t rnd = column(t, "random_phase_best_db");
    for (const auto &row : t.rows)
        CHECK(row[rnd] < 0.0);
    CHECK(rd.headline_value("max_position_error_m") > rs.headline_value("max_position_error_m"));
    CHECK(rs.table("scan_profiles").columns.size() == 7);
}

TEST_CASE("axial experiment")
{
    const ExperimentResult r = run_experiment(reference_config(Experiment::Axial, "0.5 lambda"));
    CHECK(r.headline_value("focal_shift_over_lambda") > 100.0);
    CHECK(r.table("axial").rows.size() == 3801);
}

TEST_CASE("module errors propagate")
{
    ExperimentConfig c = reference_config(Experiment::Scan, "1 lambda");
    c.scan.targets = {1000.0};
    CHECK_THROWS_AS(run_experiment(c), ArgumentError);
}

TEST_CASE("write_outputs")
{
    auto dir = std::filesystem::temp_directory_path() / "nearfocus_test_outputs";
    std::filesystem::remove_all(dir);
    const ExperimentResult r = run_experiment(reference_config(Experiment::OptimalSpacing));
    write_outputs(r, dir.string(), OutputFormat::Json);
    CHECK(std::filesystem::exists(dir / "optimal_spacing.json"));
    CHECK(std::filesystem::exists(dir / "summary.json"));
    const auto j = nlohmann::json::parse(summary_json(r));
    CHECK(j["status"] == "ok");
    CHECK(j["headline"]["optimal_spacing_over_lambda"].get<double>() == Approx(2.2360679775));
}
