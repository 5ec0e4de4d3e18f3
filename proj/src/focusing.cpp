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

#include "nearfocus/focusing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nearfocus/peaks.hpp"

namespace nearfocus
{

namespace
{

void check_offsets(std::span<const double> offsets, const char *who)
{
    if (offsets.empty())
        throw ArgumentError(std::string(who) + ": empty offset grid");
    for (size_t i = 1; i < offsets.size(); ++i)
        if (!(offsets[i] > offsets[i - 1]))
            throw ArgumentError(std::string(who) + ": offsets must be strictly ascending");
}

// Peak refined on the dB curve, nulls refined on the linear (locally quadratic) gain.
void locate_features(GainProfile &p)
{
    const size_t imax = argmax(p.gain);
    p.peak_gain = p.gain[imax];
    std::vector<double> db(p.gain.size());
    std::transform(p.gain.begin(), p.gain.end(), db.begin(), power_db);
    p.peak_offset = refine_parabolic(p.offsets, db, imax).x;

    for (size_t i : local_minima(p.gain))
        p.null_offsets.push_back(refine_parabolic(p.offsets, p.gain, i).x);
}

std::vector<double> magnitudes_along_x(const ArraySpec &tx, std::span<const double> tx_x,
                                       const ExcitationVector &a, std::span<const double> xs, double z)
{
    std::vector<double> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        out[i] = std::abs(field_at(tx, tx_x, a, xs[i], z));
    return out;
}

std::vector<double> magnitudes_along_z(const ArraySpec &tx, std::span<const double> tx_x,
                                       const ExcitationVector &a, double x, std::span<const double> zs)
{
    std::vector<double> out(zs.size());
    for (size_t i = 0; i < zs.size(); ++i)
        out[i] = std::abs(field_at(tx, tx_x, a, x, zs[i]));
    return out;
}

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> v(static_cast<size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = lo + i * step;
    v.back() = hi;
    return v;
}

// Peak of the lobe containing `start`, refined on the dB curve.
Extremum lobe_peak(std::span<const double> x, std::span<const double> magnitude, size_t start)
{
    const size_t i = climb(magnitude, start);
    std::vector<double> db(magnitude.size());
    std::transform(magnitude.begin(), magnitude.end(), db.begin(), magnitude_db);
    return refine_parabolic(x, db, i);
}

} // namespace

GainProfile gain_exact(const ArraySpec &tx, double z0, std::span<const double> offsets)
{
    validate(tx);
    if (!(z0 > 0.0))
        throw DomainError("gain_exact: z0 must be positive");
    check_offsets(offsets, "gain_exact");

    const auto xs = element_positions(tx);
    const auto a = conjugate_excitation(tx, 0.0, z0);
    GainProfile p;
    p.offsets.assign(offsets.begin(), offsets.end());
    p.gain.reserve(offsets.size());
    for (double delta : offsets)
        p.gain.push_back(std::norm(field_at(tx, xs, a, delta, z0)) / tx.num_elements);
    locate_features(p);
    return p;
}

GainProfile gain_paraxial(int num_elements, double spacing, double z0, const Wave &wave,
                          std::span<const double> offsets)
{
    if (num_elements < 1 || !(spacing > 0.0) || !(z0 > 0.0) || !(wave.wavenumber > 0.0))
        throw DomainError("gain_paraxial: all parameters must be positive");
    check_offsets(offsets, "gain_paraxial");

    const double n = num_elements;
    GainProfile p;
    p.offsets.assign(offsets.begin(), offsets.end());
    p.gain.reserve(offsets.size());
    for (double delta : offsets)
    {
        const double u = wave.wavenumber * spacing * delta / (2.0 * z0);
        const double den = std::sin(u);
        double g;
        if (std::abs(den) < 1e-12)
            g = n; // |sin(N u) / sin(u)| -> N at u = m pi
        else
        {
            const double ratio = std::sin(n * u) / den;
            g = ratio * ratio / n;
        }
        p.gain.push_back(g);
    }
    locate_features(p);
    return p;
}

std::vector<double> null_offsets_analytic(int num_elements, double spacing, double z0,
                                          const Wave &wave, int count)
{
    if (num_elements < 1 || !(spacing > 0.0) || !(z0 > 0.0) || count < 1 || !(wave.wavelength > 0.0))
        throw DomainError("null_offsets_analytic: all parameters must be positive");
    std::vector<double> nulls;
    if (num_elements == 1)
        return nulls;
    const double unit = wave.wavelength * z0 / (num_elements * spacing);
    for (int m = 1; static_cast<int>(nulls.size()) < count; ++m)
        if (m % num_elements != 0)
            nulls.push_back(m * unit);
    return nulls;
}

std::vector<double> symmetric_grid(double half_width, double wavelength, double points_per_wavelength)
{
    if (!(half_width > 0.0) || !(wavelength > 0.0) || !(points_per_wavelength > 0.0))
        throw ArgumentError("symmetric_grid: arguments must be positive");
    const auto half = static_cast<long>(std::ceil(half_width / wavelength * points_per_wavelength - 1e-9));
    const long n_half = std::max(half, 1L);
    const double step = half_width / static_cast<double>(n_half);
    std::vector<double> grid(static_cast<size_t>(2 * n_half + 1));
    for (long i = -n_half; i <= n_half; ++i)
        grid[static_cast<size_t>(i + n_half)] = static_cast<double>(i) * step;
    grid.front() = -half_width;
    grid.back() = half_width;
    return grid;
}

std::vector<double> default_scan_targets(double spacing)
{
    return {-10.0 * spacing, -5.0 * spacing, 0.0, 5.0 * spacing, 10.0 * spacing};
}

double ScanReport::max_position_error() const
{
    double e = 0.0;
    for (const auto &s : scans)
        e = std::max(e, s.position_error);
    return e;
}

size_t ScanReport::lobe_count() const
{
    size_t n = 0;
    for (const auto &s : scans)
        n += s.lobes.size();
    return n;
}

ScanReport scan_focal_points(const FocusScenario &scenario, std::span<const double> targets,
                             double strip_resolution)
{
    validate(scenario);
    if (targets.empty())
        throw ArgumentError("scan_focal_points: no targets");
    if (!(strip_resolution >= min_strip_resolution))
        throw ArgumentError("scan_focal_points: strip resolution must be >= 8 points per wavelength");

    const ArraySpec &tx = scenario.tx;
    const double z0 = scenario.focal_distance;
    const double half = 0.5 * tx.aperture();
    for (double t : targets)
        if (!(std::abs(t) <= half * (1.0 + 1e-12)))
        {
            std::ostringstream msg;
            msg << "scan_focal_points: target " << t << " m outside strip [" << -half << ", " << half << "]";
            throw ArgumentError(msg.str());
        }

    ScanReport report;
    report.z0 = z0;
    report.strip = symmetric_grid(half, tx.wave.wavelength, strip_resolution);
    const auto tx_x = element_positions(tx);
    const auto zs = linspace(0.1 * z0, 2.0 * z0, 2001);

    for (double t : targets)
    {
        TargetScan s;
        s.target = t;
        const auto a = conjugate_excitation(tx, t, z0);
        s.magnitude = magnitudes_along_x(tx, tx_x, a, report.strip, z0);

        std::vector<double> db(s.magnitude.size());
        std::transform(s.magnitude.begin(), s.magnitude.end(), db.begin(), magnitude_db);
        const size_t imax = argmax(s.magnitude);
        const Extremum peak = refine_parabolic(report.strip, db, imax);
        s.peak_x = peak.x;
        s.peak_db = peak.value;
        s.peak_magnitude = std::pow(10.0, peak.value / 20.0);
        s.position_error = std::abs(s.peak_x - t);

        auto candidates = local_maxima(s.magnitude);
        const size_t last = s.magnitude.size() - 1;
        if (s.magnitude.size() > 1 && s.magnitude[0] > s.magnitude[1])
            candidates.insert(candidates.begin(), 0);
        if (s.magnitude.size() > 1 && s.magnitude[last] > s.magnitude[last - 1])
            candidates.push_back(last);
        for (size_t i : candidates)
        {
            if (i == imax)
                continue;
            const Extremum lobe = refine_parabolic(report.strip, db, i);
            const double level = lobe.value - s.peak_db;
            if (level > -lobe_threshold_db)
                s.lobes.push_back({lobe.x, level, i == 0 || i == last});
        }

        const auto axial = magnitudes_along_z(tx, tx_x, a, s.peak_x, zs);
        s.focal_height = lobe_peak(zs, axial, nearest_index(zs, z0)).x;
        report.scans.push_back(std::move(s));
    }

    double hi = report.scans.front().peak_db, lo = hi;
    for (const auto &s : report.scans)
    {
        hi = std::max(hi, s.peak_db);
        lo = std::min(lo, s.peak_db);
    }
    report.peak_spread_db = hi - lo;
    return report;
}

AxialProfile axial_profile(const FocusScenario &scenario, double z_min, double z_max, int samples)
{
    validate(scenario);
    const double z0 = scenario.focal_distance;
    if (!(z_min > 0.0) || !(z_max > z_min))
        throw ArgumentError("axial_profile: need 0 < z_min < z_max");
    if (z0 < z_min || z0 > z_max)
        throw ArgumentError("axial_profile: range must contain the focal distance");
    if (samples < 3)
        throw ArgumentError("axial_profile: need at least 3 samples");

    AxialProfile p;
    p.z_samples = linspace(z_min, z_max, samples);
    const auto tx_x = element_positions(scenario.tx);
    const auto a = conjugate_excitation(scenario.tx, 0.0, z0);
    p.magnitude = magnitudes_along_z(scenario.tx, tx_x, a, 0.0, p.z_samples);

    const Extremum peak = lobe_peak(p.z_samples, p.magnitude, nearest_index(p.z_samples, z0));
    p.z_peak = peak.x;
    p.peak_magnitude = std::pow(10.0, peak.value / 20.0);
    p.focal_shift = z0 - p.z_peak;
    p.global_peak_z = p.z_samples[argmax(p.magnitude)];
    return p;
}

} // namespace nearfocus
