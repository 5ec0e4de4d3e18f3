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

#include "nearfocus/peaks.hpp"

#include <algorithm>
#include <cmath>

namespace nearfocus
{

Extremum refine_parabolic(std::span<const double> x, std::span<const double> y, size_t i)
{
    Extremum e{i, x[i], y[i]};
    if (i == 0 || i + 1 >= y.size())
        return e;

    const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
    const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
    // Divided differences of the interpolating quadratic.
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double a = (d12 - d01) / (x2 - x0);
    if (a == 0.0 || !std::isfinite(a))
        return e;
    const double b = d01 - a * (x0 + x1);
    const double c = y0 - x0 * (d01 - a * x1);
    double xv = -b / (2.0 * a);
    xv = std::clamp(xv, x0, x2);
    e.x = xv;
    e.value = (a * xv + b) * xv + c;
    return e;
}

std::vector<size_t> local_maxima(std::span<const double> y)
{
    std::vector<size_t> out;
    for (size_t i = 1; i + 1 < y.size(); ++i)
    {
        if (!(y[i] > y[i - 1]))
            continue;
        size_t j = i;
        while (j + 1 < y.size() && y[j + 1] == y[i])
            ++j;
        if (j + 1 < y.size() && y[j + 1] < y[i])
            out.push_back(i);
        i = j;
    }
    return out;
}

std::vector<size_t> local_minima(std::span<const double> y)
{
    std::vector<double> neg(y.size());
    std::transform(y.begin(), y.end(), neg.begin(), [](double v) { return -v; });
    return local_maxima(neg);
}

size_t argmax(std::span<const double> y)
{
    return static_cast<size_t>(std::distance(y.begin(), std::max_element(y.begin(), y.end())));
}

size_t climb(std::span<const double> y, size_t start)
{
    size_t i = start;
    for (;;)
    {
        size_t next = i;
        if (i + 1 < y.size() && y[i + 1] > y[next])
            next = i + 1;
        if (i > 0 && y[i - 1] > y[next])
            next = i - 1;
        if (next == i)
            return i;
        i = next;
    }
}

size_t nearest_index(std::span<const double> x, double x0)
{
    auto it = std::lower_bound(x.begin(), x.end(), x0);
    if (it == x.begin())
        return 0;
    if (it == x.end())
        return x.size() - 1;
    const auto hi = static_cast<size_t>(std::distance(x.begin(), it));
    return (x[hi] - x0 < x0 - x[hi - 1]) ? hi : hi - 1;
}

double power_db(double power)
{
    return 10.0 * std::log10(std::max(power, 1e-300));
}

double magnitude_db(double magnitude)
{
    return 20.0 * std::log10(std::max(magnitude, 1e-300));
}

} // namespace nearfocus
