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

#ifndef NEARFOCUS_PEAKS_HPP
#define NEARFOCUS_PEAKS_HPP

#include <span>
#include <vector>

namespace nearfocus
{

// Location and value of a sampled extremum after sub-grid refinement.
struct Extremum
{
    size_t index = 0; // grid sample the refinement started from
    double x = 0.0;
    double value = 0.0;
};

/// Vertex of the parabola through samples i-1, i, i+1 (abscissae need not be
/// uniform). Falls back to the raw sample at the grid ends or when the three
/// points are collinear. The vertex is kept inside [x[i-1], x[i+1]].
Extremum refine_parabolic(std::span<const double> x, std::span<const double> y, size_t i);

// Interior strict local maxima; a flat top is reported at its first sample.
std::vector<size_t> local_maxima(std::span<const double> y);
std::vector<size_t> local_minima(std::span<const double> y);

// Index of the largest sample (first on ties).
size_t argmax(std::span<const double> y);

// Follows the steeper rising neighbour from `start` until no neighbour is higher.
size_t climb(std::span<const double> y, size_t start);

// Index of the sample closest to x0 in an ascending grid.
size_t nearest_index(std::span<const double> x, double x0);

// 10 log10 of a power-like value, floored at 1e-300 to stay finite.
double power_db(double power);
// 20 log10 of a field magnitude (same floor).
double magnitude_db(double magnitude);

} // namespace nearfocus

#endif
