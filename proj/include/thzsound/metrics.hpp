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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "thzsound/sounding.hpp"

namespace thzsound
{

// Double-directional angular power spectrum: delay-integrated power per
// (phi_tx, phi_rx) beam pair.
struct ddaps
{
    angle_grid angles;
    std::vector<double> power; // itx + n_tx * irx

    double &at(std::size_t itx, std::size_t irx) { return power[itx + angles.n_tx() * irx]; }
    double at(std::size_t itx, std::size_t irx) const { return power[itx + angles.n_tx() * irx]; }
    double total() const;
};

enum class side
{
    tx,
    rx
};

// Single-directional angular power spectrum, one link end.
struct aps
{
    side end = side::tx;
    std::vector<double> angles_deg;
    std::vector<double> power;
};

// Condensed parameters of one Tx-Rx location pair.
struct link_record
{
    std::string id;
    double d_m = 0.0;
    bool los = false;
    double pl_omni_db = 0.0;
    double pl_maxdir_db = 0.0;
    double ds_omni_s = 0.0;
    double ds_maxdir_s = 0.0;
    double as_tx = 0.0;
    double as_rx = 0.0;
    double k1_omni_db = 0.0;   // +inf when the PDP has a single local maximum
    double k1_maxdir_db = 0.0; // likewise
};

// Path loss in dB: -10 log10 of the delay-summed PDP power.
double path_loss_db(const power_delay_profile &pdp);

// RMS delay spread, the second central moment of the PDP.
double rms_delay_spread_s(const power_delay_profile &pdp);

// Delay-summed power per beam pair. Inputs must be gated so noise does not
// accumulate in directions without significant paths.
ddaps compute_ddaps(const pdp_grid &grid);

// Marginalize the DDAPS onto one link end.
aps marginal_aps(const ddaps &dd, side end);

// Fleury angular spread of an APS, dimensionless in [0, 1].
double angular_spread(const aps &spectrum);

// Power ratio of the strongest PDP local maximum versus all other local
// maxima, in dB; +inf when there is exactly one local maximum.
double kappa1_db(const power_delay_profile &pdp);

struct condense_config
{
    double tau_gate_s = default_tau_gate_s;
    double noise_margin_db = default_noise_margin_db;
};

struct condense_result
{
    link_record record;
    power_delay_profile omni;
    power_delay_profile maxdir;
    std::size_t maxdir_itx = 0;
    std::size_t maxdir_irx = 0;
    ddaps dd;
};

// Full per-link pipeline: calibrate, per-direction PDP, gate, omni and
// max-dir reconstruction, all condensed parameters.
condense_result condense(const sweep_grid &raw, const calibration_trace &cal,
                         const condense_config &cfg = {});

} // namespace thzsound
