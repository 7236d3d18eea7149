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

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "thzsound/fft.hpp"

namespace thzsound
{

// Raised when a link carries no usable signal (e.g. everything gated away).
struct unusable_link_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Frequency sweep axis. Samples sit at f_start + i * bandwidth / n_points,
// which makes delay bin k correspond to exactly k / bandwidth and the
// unambiguous delay span to n_points / bandwidth.
struct frequency_axis
{
    double f_start_hz = 145e9;
    double f_stop_hz = 146e9;
    std::size_t n_points = 1001;

    double bandwidth_hz() const { return f_stop_hz - f_start_hz; }
    double frequency_hz(std::size_t i) const
    {
        return f_start_hz + static_cast<double>(i) * bandwidth_hz() / static_cast<double>(n_points);
    }
    double delay_bin_s() const { return 1.0 / bandwidth_hz(); }
    double delay_span_s() const { return static_cast<double>(n_points) / bandwidth_hz(); }

    bool operator==(const frequency_axis &) const = default;
    void validate() const;
};

// Azimuth scan grid for both link ends, degrees in [0, 360).
struct angle_grid
{
    std::vector<double> tx_deg;
    std::vector<double> rx_deg;
    double step_deg = 10.0;

    std::size_t n_tx() const { return tx_deg.size(); }
    std::size_t n_rx() const { return rx_deg.size(); }

    static angle_grid full_circle(double step_deg = 10.0);
    bool operator==(const angle_grid &) const = default;
    void validate() const;
};

struct link_meta
{
    std::string id;
    double distance_m = 0.0;
    bool los = false;
    double height_m = 1.6;
};

// Measured (or rendered) transfer-function tensor H(f, phi_tx, phi_rx).
// Storage order: f fastest, then phi_tx, then phi_rx.
struct sweep_grid
{
    frequency_axis axis;
    angle_grid angles;
    link_meta meta;
    std::vector<cdouble> samples;

    std::size_t index(std::size_t f, std::size_t itx, std::size_t irx) const
    {
        return f + axis.n_points * (itx + angles.n_tx() * irx);
    }
    cdouble &at(std::size_t f, std::size_t itx, std::size_t irx) { return samples[index(f, itx, irx)]; }
    const cdouble &at(std::size_t f, std::size_t itx, std::size_t irx) const
    {
        return samples[index(f, itx, irx)];
    }

    void validate() const;
};

// One over-the-air calibration sweep H_OTA(f).
struct calibration_trace
{
    frequency_axis axis;
    std::vector<cdouble> samples;

    void validate() const;
};

// Power versus delay for one antenna-orientation pair (or the omni
// reconstruction). Delay values are per bin so wrap-around correction can
// relocate individual bins.
struct power_delay_profile
{
    std::vector<double> delays_s;
    std::vector<double> powers;
    std::optional<double> noise_floor; // linear, mean noise power
    bool gated = false;
    double tau_gate_s = 0.0;  // valid when gated
    double threshold = 0.0;   // P_lambda, valid when gated

    std::size_t n_bins() const { return powers.size(); }
    double total_power() const;
    double bin_width_s() const;
};

// Per-direction PDPs for a full double-directional capture,
// indexed itx + n_tx * irx.
struct pdp_grid
{
    angle_grid angles;
    std::vector<power_delay_profile> pdps;

    power_delay_profile &at(std::size_t itx, std::size_t irx)
    {
        return pdps[itx + angles.n_tx() * irx];
    }
    const power_delay_profile &at(std::size_t itx, std::size_t irx) const
    {
        return pdps[itx + angles.n_tx() * irx];
    }
};

// Delay gate default: 833.33 ns, i.e. 250 m excess runlength.
constexpr double default_tau_gate_s = 833.33e-9;
constexpr double default_noise_margin_db = 6.0;

// Remove the system response: out(f,i,j) = raw(f,i,j) / cal(f).
sweep_grid calibrate(const sweep_grid &raw, const calibration_trace &cal);

// |IDFT|^2 of one transfer function. Bin k maps to delay k / bandwidth.
power_delay_profile compute_pdp(std::span<const cdouble> h, const frequency_axis &axis);

// Same contract via direct DFT summation. Serial reference for tests and
// benchmarks.
power_delay_profile compute_pdp_reference(std::span<const cdouble> h, const frequency_axis &axis);

// All directional PDPs of a sweep grid. Parallel over beam pairs.
pdp_grid compute_pdp_grid(const sweep_grid &grid);
pdp_grid compute_pdp_grid_reference(const sweep_grid &grid);

// Mean power over the delay interval [t_lo_s, t_hi_s].
double estimate_noise_floor(const power_delay_profile &pdp, double t_lo_s, double t_hi_s);

// Default noise region: the final 10% of delay bins (beyond the delay gate
// for the default configuration, hence signal-free).
double estimate_default_noise_floor(const power_delay_profile &pdp);

// Zero every bin that fails (delay <= tau_gate) && (power >= P_lambda),
// with P_lambda = noise_floor * 10^(margin_db/10). Requires noise_floor.
power_delay_profile apply_gating(const power_delay_profile &pdp,
                                 double tau_gate_s = default_tau_gate_s,
                                 double margin_db = default_noise_margin_db);

// Estimate per-PDP noise floors and gate every direction. Parallel.
void gate_grid(pdp_grid &grid, double tau_gate_s = default_tau_gate_s,
               double margin_db = default_noise_margin_db);

// Omni-directional reconstruction: per-delay-bin maximum over directions.
power_delay_profile reconstruct_omni(std::span<const power_delay_profile> pdps);
power_delay_profile reconstruct_omni(const pdp_grid &grid);

struct max_dir_selection
{
    std::size_t itx = 0;
    std::size_t irx = 0;
    double az_tx_deg = 0.0;
    double az_rx_deg = 0.0;
    power_delay_profile pdp;
};

// Beam pair with the highest delay-integrated power. Ties break toward the
// smallest (phi_tx, phi_rx).
max_dir_selection select_max_dir(const pdp_grid &grid);

// Re-interpret bins earlier than first_arrival - 5 bins as aliased from one
// unambiguous span later. Powers are untouched, only delays move.
power_delay_profile correct_wraparound(const power_delay_profile &pdp, double first_arrival_s);

} // namespace thzsound
