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

#ifndef NEARFOCUS_MODEL_HPP
#define NEARFOCUS_MODEL_HPP

#include <complex>
#include <string_view>
#include <optional>
#include <vector>

#include "nearfocus/errors.hpp"

namespace nearfocus
{

using Complex = std::complex<double>;

inline constexpr double speed_of_light = 299792458.0; // m/s, exact
inline constexpr double pi = 3.14159265358979323846;

// Monochromatic free-space wave. Build with wave_from_frequency().
struct Wave
{
    double frequency = 0.0;  // Hz
    double wavelength = 0.0; // m
    double wavenumber = 0.0; // rad/m
};

Wave wave_from_frequency(double frequency);

// Element directivity in the scan plane (x-z).
enum class ElementPattern
{
    Isotropic,
    VerticalDipole,
    HorizontalDipole,
    Patch
};

std::string_view to_string(ElementPattern pattern);
std::optional<ElementPattern> pattern_from_string(std::string_view name);

// Uniform linear array on the x-axis, centered on the origin.
struct ArraySpec
{
    Wave wave;
    int num_elements = 1;
    double spacing = 0.0; // m
    ElementPattern pattern = ElementPattern::Isotropic;

    // Aperture length N*d.
    double aperture() const { return num_elements * spacing; }
};

// Throws DomainError if N < 1, d <= 0 or the wave is not populated.
void validate(const ArraySpec &spec);

// Transmit array plus a parallel receive strip at height focal_distance.
struct FocusScenario
{
    ArraySpec tx;
    double focal_distance = 0.0; // z0, m
    int rx_num = 1;              // M
    double rx_spacing = 0.0;     // m
};

// Scenario with the receive strip mirroring the transmit array (M = N, same spacing).
FocusScenario make_scenario(const ArraySpec &tx, double focal_distance);

void validate(const FocusScenario &scenario);

// x_n = (n - (N+1)/2) d for n = 1..N, ascending.
std::vector<double> element_positions(int num_elements, double spacing);
std::vector<double> element_positions(const ArraySpec &spec);

/// Real amplitude multiplier applied on top of the scalar Green's function.
///
/// Isotropic and VerticalDipole have no in-plane angular dependence (factor 1).
/// HorizontalDipole and Patch both reduce to cos^2(theta) = z^2 / (z^2 + dx^2),
/// where dx is the transverse offset between source and field point.
double pattern_factor(ElementPattern pattern, double x_source, double x_field, double z,
                      const Wave &wave);

} // namespace nearfocus

#endif
