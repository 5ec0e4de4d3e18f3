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

#ifndef NEARFOCUS_DOF_HPP
#define NEARFOCUS_DOF_HPP

#include <span>
#include <vector>

#include "nearfocus/field.hpp"

namespace nearfocus
{

struct DofResult
{
    double effective_dof = 0.0;
    std::vector<double> eigenvalues; // of H H^H, descending, clamped to >= 0
    int numerical_rank = 0;          // eigenvalues >= 1e-14 * largest

    // (sum sigma)^2 / sum sigma^2 from the stored eigenvalues.
    double recompute() const;
};

/// Effective degrees of freedom of a channel: the participation ratio
/// (sum sigma_i)^2 / sum sigma_i^2 of the Gram eigenvalues sigma_i of H H^H.
///
/// Small negative eigenvalues from round-off are clamped to zero. Throws
/// DegenerateChannelError for an empty or all-zero matrix.
DofResult effective_dof(const Eigen::MatrixXcd &h);
DofResult effective_dof(const ChannelMatrix &h);

struct SpacingSweep
{
    std::vector<double> spacings; // m, ascending
    std::vector<double> dof_curve;
    double best_spacing = 0.0;
    double best_dof = 0.0;
    size_t best_index = 0;
};

// Rebuilds the scenario at every spacing (tx and rx spacing both set) and
// evaluates effective_dof. Ties resolve to the smaller spacing.
SpacingSweep dof_sweep(const FocusScenario &scenario, std::span<const double> spacings);

// Evenly spaced spacings lo, lo+step, ..., hi (inclusive within half a step).
std::vector<double> spacing_grid(double lo, double hi, double step);

// sqrt(n * lambda * z0 / N): spacing that puts the neighbouring element on the
// n-th paraxial gain null of a focus at z0.
double optimal_spacing(int num_elements, double z0, const Wave &wave, int null_index = 1);

} // namespace nearfocus

#endif
