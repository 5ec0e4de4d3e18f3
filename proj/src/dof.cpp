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

#include "nearfocus/dof.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nearfocus
{

double DofResult::recompute() const
{
    double s1 = 0.0, s2 = 0.0;
    for (double s : eigenvalues)
    {
        s1 += s;
        s2 += s * s;
    }
    return s1 * s1 / s2;
}

DofResult effective_dof(const Eigen::MatrixXcd &h)
{
    if (h.size() == 0)
        throw DegenerateChannelError("effective_dof: empty channel matrix");
    const double norm = h.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw DegenerateChannelError("effective_dof: channel matrix has no energy");

    // Scaling by 1/||H||_F leaves the ratio unchanged and keeps the Gram
    // entries O(1) regardless of the 1/(4 pi r) magnitudes.
    const Eigen::MatrixXcd hs = h / norm;
    const Eigen::MatrixXcd gram = hs * hs.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw DegenerateChannelError("effective_dof: eigen decomposition failed");

    const Eigen::VectorXd &ev = solver.eigenvalues(); // ascending
    DofResult out;
    out.eigenvalues.reserve(static_cast<size_t>(ev.size()));
    for (Eigen::Index i = ev.size() - 1; i >= 0; --i)
        out.eigenvalues.push_back(std::max(ev(i), 0.0) * norm * norm);

    const double largest = out.eigenvalues.front();
    out.numerical_rank = static_cast<int>(std::count_if(
        out.eigenvalues.begin(), out.eigenvalues.end(), [&](double s) { return s >= 1e-14 * largest; }));

    const double bound = static_cast<double>(std::min(h.rows(), h.cols()));
    // The ratio lies in [1, min(M, N)] mathematically; clamp away round-off.
    out.effective_dof = std::clamp(out.recompute(), 1.0, bound);
    return out;
}

DofResult effective_dof(const ChannelMatrix &h)
{
    return effective_dof(h.entries);
}

SpacingSweep dof_sweep(const FocusScenario &scenario, std::span<const double> spacings)
{
    validate(scenario);
    if (spacings.empty())
        throw ArgumentError("dof_sweep: no spacings given");
    for (size_t i = 0; i < spacings.size(); ++i)
    {
        if (!(spacings[i] > 0.0))
            throw ArgumentError("dof_sweep: spacings must be positive");
        if (i > 0 && !(spacings[i] > spacings[i - 1]))
            throw ArgumentError("dof_sweep: spacings must be strictly ascending");
    }

    SpacingSweep sweep;
    sweep.spacings.assign(spacings.begin(), spacings.end());
    sweep.dof_curve.reserve(spacings.size());
    for (double d : spacings)
    {
        FocusScenario s = scenario;
        s.tx.spacing = d;
        s.rx_spacing = d;
        try
        {
            sweep.dof_curve.push_back(effective_dof(channel_matrix(s)).effective_dof);
        }
        catch (const SingularityError &e)
        {
            std::ostringstream msg;
            msg << "dof_sweep: spacing " << d << " m: " << e.what();
            throw SingularityError(msg.str(), e.distance());
        }
        catch (const DegenerateChannelError &e)
        {
            std::ostringstream msg;
            msg << "dof_sweep: spacing " << d << " m: " << e.what();
            throw DegenerateChannelError(msg.str());
        }
    }

    sweep.best_index = 0;
    for (size_t i = 1; i < sweep.dof_curve.size(); ++i)
        if (sweep.dof_curve[i] > sweep.dof_curve[sweep.best_index])
            sweep.best_index = i;
    sweep.best_spacing = sweep.spacings[sweep.best_index];
    sweep.best_dof = sweep.dof_curve[sweep.best_index];
    return sweep;
}

std::vector<double> spacing_grid(double lo, double hi, double step)
{
    if (!(lo > 0.0) || !(hi >= lo) || !(step > 0.0))
        throw ArgumentError("spacing_grid: need 0 < lo <= hi and step > 0");
    const auto count = static_cast<size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
    std::vector<double> grid(count);
    for (size_t i = 0; i < count; ++i)
        grid[i] = lo + static_cast<double>(i) * step;
    return grid;
}

double optimal_spacing(int num_elements, double z0, const Wave &wave, int null_index)
{
    if (num_elements < 1 || !(z0 > 0.0) || null_index < 1 || !(wave.wavelength > 0.0))
        throw DomainError("optimal_spacing: all arguments must be positive");
    return std::sqrt(null_index * wave.wavelength * z0 / num_elements);
}

} // namespace nearfocus
