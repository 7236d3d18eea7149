// SPDX-License-Identifier: Apache-2.0
//
// thzsound: THz channel-sounding analysis and stochastic channel modeling
// Copyright (C) 2026 the thzsound authors
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

#include "thzsound/sounding.hpp"

#include <algorithm>
#include <cmath>

#include "thzsound/units.hpp"

namespace thzsound
{

void frequency_axis::validate() const
{
    if (!(f_stop_hz > f_start_hz))
        throw std::invalid_argument("frequency_axis: f_stop must exceed f_start");
    if (n_points < 2)
        throw std::invalid_argument("frequency_axis: need at least 2 points");
}

angle_grid angle_grid::full_circle(double step_deg)
{
    if (!(step_deg > 0.0) || std::fmod(360.0, step_deg) != 0.0)
        throw std::invalid_argument("angle_grid: step must divide 360");
    angle_grid g;
    g.step_deg = step_deg;
    std::size_t n = static_cast<std::size_t>(std::llround(360.0 / step_deg));
    g.tx_deg.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        g.tx_deg.push_back(static_cast<double>(i) * step_deg);
    g.rx_deg = g.tx_deg;
    return g;
}

namespace
{
void validate_axis_angles(const std::vector<double> &az, double step, const char *side)
{
    if (az.empty())
        throw std::invalid_argument(std::string("angle_grid: empty ") + side + " axis");
    for (std::size_t i = 0; i < az.size(); ++i)
    {
        if (az[i] < 0.0 || az[i] >= 360.0)
            throw std::invalid_argument(std::string("angle_grid: ") + side +
                                        " azimuth outside [0, 360)");
        if (i > 0 && std::abs(az[i] - az[i - 1] - step) > 1e-9)
            throw std::invalid_argument(std::string("angle_grid: ") + side +
                                        " azimuths must increase by the uniform step");
    }
}
} // namespace

void angle_grid::validate() const
{
    if (!(step_deg > 0.0))
        throw std::invalid_argument("angle_grid: step must be positive");
    validate_axis_angles(tx_deg, step_deg, "tx");
    validate_axis_angles(rx_deg, step_deg, "rx");
}

void sweep_grid::validate() const
{
    axis.validate();
    angles.validate();
    if (samples.size() != axis.n_points * angles.n_tx() * angles.n_rx())
        throw std::invalid_argument("sweep_grid: tensor size does not match axis and angle grids");
    for (const auto &s : samples)
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw std::invalid_argument("sweep_grid: non-finite sample");
    if (!(meta.distance_m > 0.0))
        throw std::invalid_argument("sweep_grid: distance must be positive");
}

void calibration_trace::validate() const
{
    axis.validate();
    if (samples.size() != axis.n_points)
        throw std::invalid_argument("calibration_trace: sample count does not match axis");
    for (const auto &s : samples)
    {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw std::invalid_argument("calibration_trace: non-finite sample");
        if (s == cdouble(0.0, 0.0))
            throw std::invalid_argument("calibration_trace: zero sample (division unsafe)");
    }
}

double power_delay_profile::total_power() const
{
    double sum = 0.0;
    for (double p : powers)
        sum += p;
    return sum;
}

double power_delay_profile::bin_width_s() const
{
    if (delays_s.size() < 2)
        throw std::invalid_argument("power_delay_profile: bin width undefined for < 2 bins");
    return delays_s[1] - delays_s[0];
}

sweep_grid calibrate(const sweep_grid &raw, const calibration_trace &cal)
{
    raw.validate();
    cal.validate();
    if (!(raw.axis == cal.axis))
        throw std::invalid_argument("calibrate: calibration axis does not match sweep axis");

    sweep_grid out = raw;
    const std::size_t n = raw.axis.n_points;
    const std::size_t n_dirs = raw.angles.n_tx() * raw.angles.n_rx();
    for (std::size_t dir = 0; dir < n_dirs; ++dir)
    {
        cdouble *block = out.samples.data() + dir * n;
        for (std::size_t f = 0; f < n; ++f)
            block[f] /= cal.samples[f];
    }
    return out;
}

namespace
{
power_delay_profile pdp_from_time(const std::vector<cdouble> &h_time, const frequency_axis &axis)
{
    power_delay_profile pdp;
    pdp.delays_s.resize(h_time.size());
    pdp.powers.resize(h_time.size());
    for (std::size_t k = 0; k < h_time.size(); ++k)
    {
        pdp.delays_s[k] = static_cast<double>(k) * axis.delay_bin_s();
        pdp.powers[k] = std::norm(h_time[k]);
    }
    return pdp;
}

void check_pdp_input(std::span<const cdouble> h, const frequency_axis &axis)
{
    axis.validate();
    if (h.size() != axis.n_points)
        throw std::invalid_argument("compute_pdp: vector length does not match axis");
    for (const auto &s : h)
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw std::invalid_argument("compute_pdp: non-finite input");
}
} // namespace

power_delay_profile compute_pdp(std::span<const cdouble> h, const frequency_axis &axis)
{
    check_pdp_input(h, axis);
    inverse_dft_plan plan(h.size());
    std::vector<cdouble> t(h.size());
    plan.run(h, t);
    return pdp_from_time(t, axis);
}

power_delay_profile compute_pdp_reference(std::span<const cdouble> h, const frequency_axis &axis)
{
    check_pdp_input(h, axis);
    return pdp_from_time(idft_direct(h), axis);
}

pdp_grid compute_pdp_grid(const sweep_grid &grid)
{
    grid.validate();
    const std::size_t n = grid.axis.n_points;
    const std::size_t n_dirs = grid.angles.n_tx() * grid.angles.n_rx();

    pdp_grid out;
    out.angles = grid.angles;
    out.pdps.resize(n_dirs);

    inverse_dft_plan plan(n);

#pragma omp parallel
    {
        std::vector<cdouble> t(n);
#pragma omp for schedule(static)
        for (long long dir = 0; dir < static_cast<long long>(n_dirs); ++dir)
        {
            std::span<const cdouble> h(grid.samples.data() + dir * n, n);
            plan.run(h, t);
            out.pdps[dir] = pdp_from_time(t, grid.axis);
        }
    }
    return out;
}

pdp_grid compute_pdp_grid_reference(const sweep_grid &grid)
{
    grid.validate();
    const std::size_t n = grid.axis.n_points;
    const std::size_t n_dirs = grid.angles.n_tx() * grid.angles.n_rx();

    pdp_grid out;
    out.angles = grid.angles;
    out.pdps.reserve(n_dirs);
    for (std::size_t dir = 0; dir < n_dirs; ++dir)
    {
        std::span<const cdouble> h(grid.samples.data() + dir * n, n);
        out.pdps.push_back(compute_pdp_reference(h, grid.axis));
    }
    return out;
}

double estimate_noise_floor(const power_delay_profile &pdp, double t_lo_s, double t_hi_s)
{
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < pdp.n_bins(); ++k)
    {
        if (pdp.delays_s[k] >= t_lo_s && pdp.delays_s[k] <= t_hi_s)
        {
            sum += pdp.powers[k];
            ++count;
        }
    }
    if (count == 0)
        throw std::invalid_argument("estimate_noise_floor: empty noise region");
    return sum / static_cast<double>(count);
}

double estimate_default_noise_floor(const power_delay_profile &pdp)
{
    const std::size_t n = pdp.n_bins();
    if (n == 0)
        throw std::invalid_argument("estimate_noise_floor: empty PDP");
    std::size_t count = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(n))));
    double sum = 0.0;
    for (std::size_t k = n - count; k < n; ++k)
        sum += pdp.powers[k];
    return sum / static_cast<double>(count);
}

power_delay_profile apply_gating(const power_delay_profile &pdp, double tau_gate_s, double margin_db)
{
    if (!pdp.noise_floor.has_value())
        throw std::invalid_argument("apply_gating: noise floor not set");
    if (!(tau_gate_s > 0.0))
        throw std::invalid_argument("apply_gating: tau_gate must be positive");

    power_delay_profile out = pdp;
    out.gated = true;
    out.tau_gate_s = tau_gate_s;
    out.threshold = *pdp.noise_floor * db_to_linear(margin_db);
    for (std::size_t k = 0; k < out.n_bins(); ++k)
    {
        bool keep = (out.delays_s[k] <= tau_gate_s) && (out.powers[k] >= out.threshold);
        if (!keep)
            out.powers[k] = 0.0;
    }
    return out;
}

void gate_grid(pdp_grid &grid, double tau_gate_s, double margin_db)
{
    const long long n_dirs = static_cast<long long>(grid.pdps.size());
#pragma omp parallel for schedule(static)
    for (long long dir = 0; dir < n_dirs; ++dir)
    {
        auto &pdp = grid.pdps[dir];
        pdp.noise_floor = estimate_default_noise_floor(pdp);
        pdp = apply_gating(pdp, tau_gate_s, margin_db);
    }
}

namespace
{
void check_common_axis(std::span<const power_delay_profile> pdps)
{
    if (pdps.empty())
        throw std::invalid_argument("reconstruct_omni: empty PDP set");
    const auto &ref = pdps.front().delays_s;
    for (const auto &p : pdps)
    {
        if (!p.gated)
            throw std::invalid_argument("reconstruct_omni: all PDPs must be gated");
        if (p.delays_s != ref)
            throw std::invalid_argument("reconstruct_omni: delay axis mismatch");
    }
}
} // namespace

power_delay_profile reconstruct_omni(std::span<const power_delay_profile> pdps)
{
    check_common_axis(pdps);

    power_delay_profile out = pdps.front();
    double nf = pdps.front().noise_floor.value_or(0.0);
    for (std::size_t i = 1; i < pdps.size(); ++i)
    {
        for (std::size_t k = 0; k < out.n_bins(); ++k)
            out.powers[k] = std::max(out.powers[k], pdps[i].powers[k]);
        if (pdps[i].noise_floor)
            nf = std::max(nf, *pdps[i].noise_floor);
        out.threshold = std::max(out.threshold, pdps[i].threshold);
    }
    out.noise_floor = nf;
    return out;
}

power_delay_profile reconstruct_omni(const pdp_grid &grid)
{
    return reconstruct_omni(std::span<const power_delay_profile>(grid.pdps));
}

max_dir_selection select_max_dir(const pdp_grid &grid)
{
    if (grid.pdps.empty())
        throw std::invalid_argument("select_max_dir: empty PDP set");

    double best = -1.0;
    std::size_t best_itx = 0, best_irx = 0;
    // iterate in (phi_tx, phi_rx) lexicographic order; strict > keeps the
    // smallest pair on ties
    for (std::size_t itx = 0; itx < grid.angles.n_tx(); ++itx)
        for (std::size_t irx = 0; irx < grid.angles.n_rx(); ++irx)
        {
            double s = grid.at(itx, irx).total_power();
            if (s > best)
            {
                best = s;
                best_itx = itx;
                best_irx = irx;
            }
        }

    if (!(best > 0.0))
        throw unusable_link_error("select_max_dir: all directions fully gated");

    max_dir_selection sel;
    sel.itx = best_itx;
    sel.irx = best_irx;
    sel.az_tx_deg = grid.angles.tx_deg[best_itx];
    sel.az_rx_deg = grid.angles.rx_deg[best_irx];
    sel.pdp = grid.at(best_itx, best_irx);
    return sel;
}

power_delay_profile correct_wraparound(const power_delay_profile &pdp, double first_arrival_s)
{
    if (pdp.n_bins() < 2)
        throw std::invalid_argument("correct_wraparound: PDP too short");
    const double bin = pdp.bin_width_s();
    const double span = static_cast<double>(pdp.n_bins()) * bin;
    if (first_arrival_s < 0.0 || first_arrival_s >= span)
        throw std::invalid_argument("correct_wraparound: first arrival outside delay span");

    const double guard = 5.0 * bin;
    power_delay_profile out = pdp;
    for (std::size_t k = 0; k < out.n_bins(); ++k)
        if (out.delays_s[k] < first_arrival_s - guard)
            out.delays_s[k] += span;
    return out;
}

} // namespace thzsound
