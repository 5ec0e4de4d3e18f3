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

#ifndef NEARFOCUS_FIELD_HPP
#define NEARFOCUS_FIELD_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nearfocus/model.hpp"

namespace nearfocus
{

// Distances below wavelength / 100 are rejected as singular.
inline constexpr double min_distance_fraction = 0.01;

double min_distance(const Wave &wave);

/// Scalar free-space Green's function exp(-j k r) / (4 pi r).
/// Throws SingularityError for r below the minimum-distance guard.
Complex greens(double r, const Wave &wave);

// Complex element weights, one per transmit element.
struct ExcitationVector
{
    std::vector<Complex> weights;

    size_t size() const { return weights.size(); }
};

/// Exact superposition sum_n A_n * pattern * greens(r_n) at the point (x, z).
/// Elements are summed in ascending order so results are reproducible bit-for-bit.
Complex field_at(const ArraySpec &tx, const ExcitationVector &excitation, double x, double z);

// Same as field_at but reuses precomputed element positions.
Complex field_at(const ArraySpec &tx, std::span<const double> tx_positions,
                 const ExcitationVector &excitation, double x, double z);

/// Unit-magnitude phase-conjugate weights A_n = exp(+j k r_n) for a focus at
/// (focus_x, focus_z).
ExcitationVector conjugate_excitation(const ArraySpec &tx, double focus_x, double focus_z);

struct ChannelMatrix
{
    Eigen::MatrixXcd entries; // M x N, row = receive element, column = transmit element
    std::vector<double> rx_positions;
    std::vector<double> tx_positions;
    double z0 = 0.0;

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
};

// Green's-function couplings between the transmit array and the receive strip at z0.
ChannelMatrix channel_matrix(const FocusScenario &scenario);

} // namespace nearfocus

#endif
