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

#ifndef NEARFOCUS_FOCUSING_HPP
#define NEARFOCUS_FOCUSING_HPP

#include <span>
#include <vector>

#include "nearfocus/field.hpp"

namespace nearfocus
{

inline constexpr double default_strip_resolution = 16.0; // samples per wavelength
inline constexpr double min_strip_resolution = 8.0;
inline constexpr double lobe_threshold_db = 13.0; // below the main peak

// Focusing gain G(offset) for a focus at (0, z0), sampled on an offset grid.
struct GainProfile
{
    std::vector<double> offsets; // m, ascending
    std::vector<double> gain;    // linear, >= 0
    double peak_offset = 0.0;    // refined
    double peak_gain = 0.0;      // max(gain)
    std::vector<double> null_offsets;
};

/// G(delta) = |sum_n A_n pattern_n greens(r_n(delta))|^2 / N with conjugate
/// weights A_n for the focus (0, z0). Full distances, no paraxial expansion.
GainProfile gain_exact(const ArraySpec &tx, double z0, std::span<const double> offsets);

/// Fresnel closed form G(delta) = [sin(N u) / sin(u)]^2 / N with
/// u = k d delta / (2 z0); the removable singularity sin(u) = 0 evaluates to N.
GainProfile gain_paraxial(int num_elements, double spacing, double z0, const Wave &wave,
                          std::span<const double> offsets);

// First `count` paraxial nulls m lambda z0 / (N d), skipping multiples of N.
// A single element has no nulls and yields an empty sequence.
std::vector<double> null_offsets_analytic(int num_elements, double spacing, double z0,
                                          const Wave &wave, int count);

// Symmetric grid over [-half_width, half_width] that contains 0 and both ends,
// with at least `points_per_wavelength` samples per wavelength.
std::vector<double> symmetric_grid(double half_width, double wavelength, double points_per_wavelength);

// {-10d, -5d, 0, 5d, 10d}
std::vector<double> default_scan_targets(double spacing);

struct Lobe
{
    double x = 0.0;        // m
    double level_db = 0.0; // relative to the main peak of the same scan
    bool at_strip_edge = false;
};

struct TargetScan
{
    double target = 0.0;         // intended x at z0
    double peak_x = 0.0;         // refined strip maximum
    double peak_magnitude = 0.0; // |E| at the refined maximum
    double peak_db = 0.0;        // 20 log10 peak_magnitude
    double position_error = 0.0; // |peak_x - target|
    std::vector<Lobe> lobes;     // secondary maxima above the lobe threshold
    std::vector<double> magnitude; // |E| on ScanReport::strip
    double focal_height = 0.0;   // z of the focal lobe along x = peak_x
};

struct ScanReport
{
    double z0 = 0.0;
    std::vector<double> strip; // sample positions, m
    std::vector<TargetScan> scans;
    double peak_spread_db = 0.0;

    double max_position_error() const;
    size_t lobe_count() const;
};

/// Steers a conjugate-phase focus to each target on the strip at z0 and
/// records where the field actually peaks along the strip.
///
/// The strip spans the transmit aperture N d centred on x = 0. Secondary local
/// maxima (strip end points included) within lobe_threshold_db of the main peak
/// are reported as lobes. Targets outside the strip, an empty target list or a
/// resolution below min_strip_resolution raise ArgumentError.
ScanReport scan_focal_points(const FocusScenario &scenario, std::span<const double> targets,
                             double strip_resolution = default_strip_resolution);

// On-axis |E(0, z)| for a focus at (0, z0).
struct AxialProfile
{
    std::vector<double> z_samples;
    std::vector<double> magnitude;
    double z_peak = 0.0;       // refined maximum of the focal lobe containing z0
    double peak_magnitude = 0.0;
    double focal_shift = 0.0;  // z0 - z_peak, positive toward the array
    double global_peak_z = 0.0; // largest sample anywhere in the range
};

/// Samples the boresight field on [z_min, z_max]. The focal peak is found by
/// climbing from the sample nearest z0 to the top of its lobe, so near-zone
/// maxima close to the array do not masquerade as the focus.
AxialProfile axial_profile(const FocusScenario &scenario, double z_min, double z_max, int samples);

} // namespace nearfocus

#endif
