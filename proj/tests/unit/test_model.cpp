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

#include "nearfocus/model.hpp"

using namespace nearfocus;
using Catch::Approx;

TEST_CASE("wave_from_frequency")
{
    const Wave w = wave_from_frequency(6e9);
    CHECK(w.wavelength == Approx(0.0499654).epsilon(1e-6));
    CHECK(w.wavelength == 299792458.0 / 6e9);
    CHECK(w.wavenumber == Approx(2.0 * pi / w.wavelength).epsilon(1e-15));

    const Wave unit = wave_from_frequency(299792458.0);
    CHECK(unit.wavelength == 1.0);

    CHECK_THROWS_AS(wave_from_frequency(0.0), DomainError);
    CHECK_THROWS_AS(wave_from_frequency(-1e9), DomainError);
}

TEST_CASE("element_positions")
{
    CHECK(element_positions(3, 1.0) == std::vector<double>{-1.0, 0.0, 1.0});

    const auto x40 = element_positions(40, 1.0);
    REQUIRE(x40.size() == 40);
    CHECK(x40.front() == -19.5);
    CHECK(x40.back() == 19.5);

    CHECK(element_positions(1, 0.37) == std::vector<double>{0.0});
    CHECK(element_positions(2, 1.0) == std::vector<double>{-0.5, 0.5});

    CHECK_THROWS_AS(element_positions(0, 1.0), DomainError);
    CHECK_THROWS_AS(element_positions(3, 0.0), DomainError);
}

TEST_CASE("pattern_factor")
{
    const Wave w = wave_from_frequency(6e9);
    const double lambda = w.wavelength;

    for (auto p : {ElementPattern::Isotropic, ElementPattern::VerticalDipole, ElementPattern::HorizontalDipole,
                   ElementPattern::Patch})
        CHECK(pattern_factor(p, 0.3, 0.3, 2.0, w) == 1.0);

    CHECK(pattern_factor(ElementPattern::Patch, 0.0, 1.5, 1.5, w) == Approx(0.5).epsilon(1e-15));
    CHECK(pattern_factor(ElementPattern::Patch, 1.0, -0.5, 1.5, w) == Approx(0.5).epsilon(1e-15));

    // 200^2 / (200^2 + 20^2)
    CHECK(pattern_factor(ElementPattern::HorizontalDipole, 0.0, 20 * lambda, 200 * lambda, w) ==
          Approx(0.9900990099009901).epsilon(1e-14));

    CHECK(pattern_factor(ElementPattern::VerticalDipole, 0.0, 20 * lambda, 200 * lambda, w) == 1.0);
    CHECK(pattern_factor(ElementPattern::Isotropic, 0.0, 20 * lambda, 200 * lambda, w) == 1.0);

    CHECK_THROWS_AS(pattern_factor(ElementPattern::Patch, 0.0, 0.0, 0.0, w), DomainError);
    CHECK_THROWS_AS(pattern_factor(ElementPattern::Isotropic, 0.0, 0.0, -1.0, w), DomainError);
}

TEST_CASE("pattern names")
{
    for (auto p : {ElementPattern::Isotropic, ElementPattern::VerticalDipole, ElementPattern::HorizontalDipole,
                   ElementPattern::Patch})
        CHECK(pattern_from_string(to_string(p)) == p);
    CHECK_FALSE(pattern_from_string("helix").has_value());
}

TEST_CASE("scenario defaults mirror the transmit array")
{
    ArraySpec tx;
    tx.wave = wave_from_frequency(6e9);
    tx.num_elements = 40;
    tx.spacing = 0.5 * tx.wave.wavelength;
    const FocusScenario s = make_scenario(tx, 200 * tx.wave.wavelength);
    CHECK(s.rx_num == 40);
    CHECK(s.rx_spacing == tx.spacing);
    CHECK(tx.aperture() == 40 * tx.spacing);

    CHECK_THROWS_AS(make_scenario(tx, 0.0), DomainError);
    tx.num_elements = 0;
    CHECK_THROWS_AS(make_scenario(tx, 1.0), DomainError);
}
