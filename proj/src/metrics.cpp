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

#include "thzsound/metrics.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "thzsound/units.hpp"

namespace thzsound
{

double ddaps::total() const
{
    double sum = 0.0;
    for (double p : power)
        sum += p;
    return sum;
}

double path_loss_db(const power_delay_profile &pdp)
{
    double sum = pdp.total_power();
    if (!(sum > 0.0))
        throw unusable_link_error("path_loss: PDP carries no power");
    return -linear_to_db(sum);
}

double rms_delay_spread_s(const power_delay_profile &pdp)
{
    double p_sum = 0.0, t_sum = 0.0, t2_sum = 0.0;
    for (std::size_t k = 0; k < pdp.n_bins(); ++k)
    {
        double p = pdp.powers[k];
        double t = pdp.delays_s[k];
        p_sum += p;
        t_sum += p * t;
        t2_sum += p * t * t;
    }
    if (!(p_sum > 0.0))
        throw unusable_link_error("rms_delay_spread: PDP carries no power");
    double m1 = t_sum / p_sum;
    double m2 = t2_sum / p_sum;
    double var = m2 - m1 * m1;
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

ddaps compute_ddaps(const pdp_grid &grid)
{
    if (grid.pdps.empty())
        throw std::invalid_argument("compute_ddaps: empty PDP set");
    for (const auto &p : grid.pdps)
        if (!p.gated)
            throw std::invalid_argument("compute_ddaps: input must be gated");

    ddaps dd;
    dd.angles = grid.angles;
    dd.power.resize(grid.pdps.size());
    for (std::size_t i = 0; i < grid.pdps.size(); ++i)
        dd.power[i] = grid.pdps[i].total_power();
    return dd;
}

aps marginal_aps(const ddaps &dd, side end)
{
    aps out;
    out.end = end;
    if (end == side::tx)
    {
        out.angles_deg = dd.angles.tx_deg;
        out.power.assign(dd.angles.n_tx(), 0.0);
        for (std::size_t itx = 0; itx < dd.angles.n_tx(); ++itx)
            for (std::size_t irx = 0; irx < dd.angles.n_rx(); ++irx)
                out.power[itx] += dd.at(itx, irx);
    }
    else
    {
        out.angles_deg = dd.angles.rx_deg;
        out.power.assign(dd.angles.n_rx(), 0.0);
        for (std::size_t irx = 0; irx < dd.angles.n_rx(); ++irx)
            for (std::size_t itx = 0; itx < dd.angles.n_tx(); ++itx)
                out.power[irx] += dd.at(itx, irx);
    }
    return out;
}

double angular_spread(const aps &spectrum)
{
    double p_sum = 0.0;
    std::complex<double> mu(0.0, 0.0);
    for (std::size_t i = 0; i < spectrum.power.size(); ++i)
    {
        double phi = deg_to_rad(spectrum.angles_deg[i]);
        double p = spectrum.power[i];
        mu += std::polar(1.0, phi) * p;
        p_sum += p;
    }
    if (!(p_sum > 0.0))
        throw unusable_link_error("angular_spread: zero total power");
    mu /= p_sum;

    double acc = 0.0;
    for (std::size_t i = 0; i < spectrum.power.size(); ++i)
    {
        double phi = deg_to_rad(spectrum.angles_deg[i]);
        acc += std::norm(std::polar(1.0, phi) - mu) * spectrum.power[i];
    }
    return std::sqrt(acc / p_sum);
}

double kappa1_db(const power_delay_profile &pdp)
{
    const auto &p = pdp.powers;
    const std::size_t n = p.size();
    if (n == 0 || !(pdp.total_power() > 0.0))
        throw unusable_link_error("kappa1: PDP carries no power");

    // local maxima: strictly above both neighbors; edge bins compare against
    // their single neighbor
    std::vector<double> maxima;
    for (std::size_t k = 0; k < n; ++k)
    {
        if (p[k] <= 0.0)
            continue;
        bool left_ok = (k == 0) || (p[k] > p[k - 1]);
        bool right_ok = (k == n - 1) || (p[k] > p[k + 1]);
        if (left_ok && right_ok)
            maxima.push_back(p[k]);
    }
    if (maxima.empty())
        throw unusable_link_error("kappa1: no local maximum in PDP");
    if (maxima.size() == 1)
        return std::numeric_limits<double>::infinity();

    double strongest = 0.0, rest = 0.0;
    for (double m : maxima)
    {
        if (m > strongest)
        {
            rest += strongest;
            strongest = m;
        }
        else
            rest += m;
    }
    return linear_to_db(strongest / rest);
}

condense_result condense(const sweep_grid &raw, const calibration_trace &cal,
                         const condense_config &cfg)
{
    sweep_grid calibrated = calibrate(raw, cal);
    pdp_grid grid = compute_pdp_grid(calibrated);
    gate_grid(grid, cfg.tau_gate_s, cfg.noise_margin_db);

    condense_result res;
    res.omni = reconstruct_omni(grid);
    auto sel = select_max_dir(grid);
    res.maxdir = std::move(sel.pdp);
    res.maxdir_itx = sel.itx;
    res.maxdir_irx = sel.irx;
    res.dd = compute_ddaps(grid);

    link_record &rec = res.record;
    rec.id = raw.meta.id;
    rec.d_m = raw.meta.distance_m;
    rec.los = raw.meta.los;
    rec.pl_omni_db = path_loss_db(res.omni);
    rec.pl_maxdir_db = path_loss_db(res.maxdir);
    rec.ds_omni_s = rms_delay_spread_s(res.omni);
    rec.ds_maxdir_s = rms_delay_spread_s(res.maxdir);
    rec.as_tx = angular_spread(marginal_aps(res.dd, side::tx));
    rec.as_rx = angular_spread(marginal_aps(res.dd, side::rx));
    rec.k1_omni_db = kappa1_db(res.omni);
    rec.k1_maxdir_db = kappa1_db(res.maxdir);
    return res;
}

} // namespace thzsound
