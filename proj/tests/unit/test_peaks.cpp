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

#include "nearfocus/peaks.hpp"

using namespace nearfocus;
using Catch::Approx;

TEST_CASE("refine_parabolic recovers a sampled quadratic")
{
    const std::vector<double> x{0.0, 0.5, 1.25, 2.0};
    std::vector<double> y;
    for (double v : x)
        y.push_back(3.0 - 2.0 * (v - 0.7) * (v - 0.7));
    const Extremum e = refine_parabolic(x, y, 1);
    CHECK(e.x == Approx(0.7).epsilon(1e-12));
    CHECK(e.value == Approx(3.0).epsilon(1e-12));
}

TEST_CASE("refine_parabolic edge cases")
{
    const std::vector<double> x{0.0, 1.0, 2.0};
    const std::vector<double> flat{1.0, 1.0, 1.0};
    CHECK(refine_parabolic(x, flat, 1).x == 1.0);
    const std::vector<double> y{5.0, 1.0, 0.0};
    CHECK(refine_parabolic(x, y, 0).x == 0.0);
    CHECK(refine_parabolic(x, y, 2).x == 2.0);
}

TEST_CASE("local extrema")
{
    const std::vector<double> y{0, 2, 1, 3, 3, 0, 1, 1};
    CHECK(local_maxima(y) == std::vector<size_t>{1, 3});
    CHECK(local_minima(y) == std::vector<size_t>{2, 5});
    CHECK(argmax(y) == 3);
}

TEST_CASE("climb stops at the top of the current lobe")
{
    const std::vector<double> y{9, 1, 2, 4, 3, 2, 5};
    CHECK(climb(y, 4) == 3);
    CHECK(climb(y, 1) == 0);
    CHECK(climb(y, 5) == 6);
}

TEST_CASE("nearest_index")
{
    const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
    CHECK(nearest_index(x, -5.0) == 0);
    CHECK(nearest_index(x, 1.4) == 1);
    CHECK(nearest_index(x, 1.6) == 2);
    CHECK(nearest_index(x, 9.0) == 3);
}

TEST_CASE("decibels")
{
    CHECK(power_db(100.0) == Approx(20.0));
    CHECK(magnitude_db(10.0) == Approx(20.0));
    CHECK(std::isfinite(power_db(0.0)));
}
