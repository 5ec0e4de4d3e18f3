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

#include "nearfocus/field.hpp"

#include <cmath>
#include <sstream>

namespace nearfocus
{

double min_distance(const Wave &wave)
{
    return min_distance_fraction * wave.wavelength;
}

Complex greens(double r, const Wave &wave)
{
    if (!(r >= min_distance(wave)) || !std::isfinite(r))
    {
        std::ostringstream msg;
        msg << "greens: distance " << r << " m below guard " << min_distance(wave) << " m";
        throw SingularityError(msg.str(), r);
    }
    const double phase = -wave.wavenumber * r;
    return std::polar(1.0 / (4.0 * pi * r), phase);
}

namespace
{

Complex element_term(const ArraySpec &tx, double xn, double x, double z, size_t n)
{
    const double dx = x - xn;
    const double r = std::sqrt(dx * dx + z * z);
    try
    {
        return pattern_factor(tx.pattern, xn, x, z, tx.wave) * greens(r, tx.wave);
    }
    catch (const SingularityError &e)
    {
        std::ostringstream msg;
        msg << "field point (" << x << ", " << z << ") too close to transmit element " << n + 1
            << ": " << e.what();
        throw SingularityError(msg.str(), r);
    }
}

} // namespace

Complex field_at(const ArraySpec &tx, std::span<const double> tx_positions,
                 const ExcitationVector &excitation, double x, double z)
{
    if (!(z > 0.0))
        throw DomainError("field_at: z must be positive");
    if (excitation.size() != tx_positions.size())
        throw ArgumentError("field_at: excitation length " + std::to_string(excitation.size()) +
                            " does not match " + std::to_string(tx_positions.size()) + " elements");
    Complex sum{0.0, 0.0};
    for (size_t n = 0; n < tx_positions.size(); ++n)
        sum += excitation.weights[n] * element_term(tx, tx_positions[n], x, z, n);
    return sum;
}

Complex field_at(const ArraySpec &tx, const ExcitationVector &excitation, double x, double z)
{
    const auto xs = element_positions(tx);
    return field_at(tx, xs, excitation, x, z);
}

ExcitationVector conjugate_excitation(const ArraySpec &tx, double focus_x, double focus_z)
{
    if (!(focus_z > 0.0))
        throw DomainError("conjugate_excitation: focus_z must be positive");
    const auto xs = element_positions(tx);
    ExcitationVector a;
    a.weights.reserve(xs.size());
    for (double xn : xs)
    {
        const double dx = focus_x - xn;
        a.weights.push_back(std::polar(1.0, tx.wave.wavenumber * std::sqrt(dx * dx + focus_z * focus_z)));
    }
    return a;
}

ChannelMatrix channel_matrix(const FocusScenario &scenario)
{
    validate(scenario);
    ChannelMatrix h;
    h.z0 = scenario.focal_distance;
    h.tx_positions = element_positions(scenario.tx);
    h.rx_positions = element_positions(scenario.rx_num, scenario.rx_spacing);
    const auto rows = static_cast<Eigen::Index>(h.rx_positions.size());
    const auto cols = static_cast<Eigen::Index>(h.tx_positions.size());
    h.entries.resize(rows, cols);
    for (Eigen::Index m = 0; m < rows; ++m)
    {
        const double xm = h.rx_positions[static_cast<size_t>(m)];
        for (Eigen::Index n = 0; n < cols; ++n)
        {
            const double xn = h.tx_positions[static_cast<size_t>(n)];
            const double dx = xm - xn;
            const double r = std::sqrt(dx * dx + h.z0 * h.z0);
            if (r < min_distance(scenario.tx.wave))
            {
                std::ostringstream msg;
                msg << "channel_matrix: rx " << m + 1 << " / tx " << n + 1 << " distance " << r
                    << " m below guard";
                throw SingularityError(msg.str(), r);
            }
            h.entries(m, n) = pattern_factor(scenario.tx.pattern, xn, xm, h.z0, scenario.tx.wave) *
                              greens(r, scenario.tx.wave);
        }
    }
    return h;
}

} // namespace nearfocus
