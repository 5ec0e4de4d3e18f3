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

#include "nearfocus/model.hpp"

#include <cmath>
#include <string>

namespace nearfocus
{

Wave wave_from_frequency(double frequency)
{
    if (!(frequency > 0.0) || !std::isfinite(frequency))
        throw DomainError("wave_from_frequency: frequency must be positive and finite, got " +
                          std::to_string(frequency));
    Wave w;
    w.frequency = frequency;
    w.wavelength = speed_of_light / frequency;
    w.wavenumber = 2.0 * pi / w.wavelength;
    return w;
}

std::string_view to_string(ElementPattern pattern)
{
    switch (pattern)
    {
    case ElementPattern::Isotropic:
        return "isotropic";
    case ElementPattern::VerticalDipole:
        return "vertical-dipole";
    case ElementPattern::HorizontalDipole:
        return "horizontal-dipole";
    case ElementPattern::Patch:
        return "patch";
    }
    return "unknown";
}

std::optional<ElementPattern> pattern_from_string(std::string_view name)
{
    for (auto p : {ElementPattern::Isotropic, ElementPattern::VerticalDipole,
                   ElementPattern::HorizontalDipole, ElementPattern::Patch})
        if (name == to_string(p))
            return p;
    return std::nullopt;
}

void validate(const ArraySpec &spec)
{
    if (spec.num_elements < 1)
        throw DomainError("ArraySpec: num_elements must be >= 1");
    if (!(spec.spacing > 0.0) || !std::isfinite(spec.spacing))
        throw DomainError("ArraySpec: spacing must be positive and finite");
    if (!(spec.wave.wavenumber > 0.0))
        throw DomainError("ArraySpec: wave not initialised");
}

FocusScenario make_scenario(const ArraySpec &tx, double focal_distance)
{
    FocusScenario s;
    s.tx = tx;
    s.focal_distance = focal_distance;
    s.rx_num = tx.num_elements;
    s.rx_spacing = tx.spacing;
    validate(s);
    return s;
}

void validate(const FocusScenario &scenario)
{
    validate(scenario.tx);
    if (!(scenario.focal_distance > 0.0) || !std::isfinite(scenario.focal_distance))
        throw DomainError("FocusScenario: focal_distance must be positive");
    if (scenario.rx_num < 1)
        throw DomainError("FocusScenario: rx_num must be >= 1");
    if (!(scenario.rx_spacing > 0.0) || !std::isfinite(scenario.rx_spacing))
        throw DomainError("FocusScenario: rx_spacing must be positive");
}

std::vector<double> element_positions(int num_elements, double spacing)
{
    if (num_elements < 1 || !(spacing > 0.0))
        throw DomainError("element_positions: need N >= 1 and d > 0");
    std::vector<double> x(static_cast<size_t>(num_elements));
    // (2n - N - 1) is an exact integer, so x_n = -x_{N+1-n} holds bit-for-bit.
    for (int n = 1; n <= num_elements; ++n)
        x[static_cast<size_t>(n - 1)] = 0.5 * static_cast<double>(2 * n - num_elements - 1) * spacing;
    return x;
}

std::vector<double> element_positions(const ArraySpec &spec)
{
    validate(spec);
    return element_positions(spec.num_elements, spec.spacing);
}

double pattern_factor(ElementPattern pattern, double x_source, double x_field, double z,
                      const Wave & /*wave*/)
{
    if (!(z > 0.0))
        throw DomainError("pattern_factor: z must be positive");
    switch (pattern)
    {
    case ElementPattern::Isotropic:
    case ElementPattern::VerticalDipole:
        return 1.0;
    case ElementPattern::HorizontalDipole:
    case ElementPattern::Patch:
    {
        const double dx = x_field - x_source;
        const double z2 = z * z;
        return z2 / (z2 + dx * dx);
    }
    }
    return 1.0;
}

} // namespace nearfocus
