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
#include <vector>

namespace thzsound
{

struct confidence_interval
{
    double lo = 0.0;
    double hi = 0.0;
};

enum class weighting
{
    log10_binned,
    ols
};

// alpha-beta path-loss law PL(d) = alpha + 10 beta log10(d) + eps.
struct power_law_fit
{
    double alpha_db = 0.0;
    double beta = 0.0;
    double sigma_eps_db = 0.0;
    weighting weights = weighting::ols;
    confidence_interval alpha_ci;
    confidence_interval beta_ci;
    std::size_t n = 0;
};

// Gaussian fit on the dB (or log10) scale.
struct lognormal_fit
{
    double mu = 0.0;
    double sigma = 0.0;
    confidence_interval mu_ci;
    confidence_interval sigma_ci;
    bool degenerate = false; // all inputs identical, sigma = 0
    std::size_t n = 0;
};

// Distance trend Z = alpha + beta log10(d).
struct linear_logd_fit
{
    double alpha = 0.0;
    double beta = 0.0;
    double sigma_eps = 0.0;
    confidence_interval alpha_ci;
    confidence_interval beta_ci;
    std::size_t n = 0;
};

constexpr std::size_t default_log_distance_bins = 10;

// Density-compensating weights: split [min log10 d, max log10 d] into n_bins
// equal intervals, give every occupied bin the same total weight and divide
// it evenly among the bin's points. Weights sum to 1.
std::vector<double> log_distance_weights(std::span<const double> d_m, std::size_t n_bins);

// Weighted least squares of PL[dB] against 10 log10(d). 95% confidence
// intervals use the density-weight coefficient covariance with t quantiles
// at n-2 dof; with uniform weights this reduces exactly to the classical
// OLS covariance.
power_law_fit fit_power_law(std::span<const double> d_m, std::span<const double> pl_db,
                            std::span<const double> weights);

// Ordinary least squares variant (uniform weights, zero-mean residuals).
power_law_fit fit_ols(std::span<const double> d_m, std::span<const double> pl_db);

// eps_i = PL_i - (alpha + 10 beta log10 d_i).
std::vector<double> shadowing_residuals(const power_law_fit &fit, std::span<const double> d_m,
                                        std::span<const double> pl_db);

// Gaussian moments on the dB/log10 domain; CI for mu via Student t, for
// sigma via chi-square.
lognormal_fit fit_lognormal(std::span<const double> values);

// Weighted (log10-binned) regression of a condensed parameter on log10(d).
linear_logd_fit fit_linear_logd(std::span<const double> values, std::span<const double> d_m,
                                std::size_t n_bins = default_log_distance_bins);

double student_t_quantile(double p, double dof);
double chi_squared_quantile(double p, double dof);

} // namespace thzsound
