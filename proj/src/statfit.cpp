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

#include "thzsound/statfit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace thzsound
{

double student_t_quantile(double p, double dof)
{
    boost::math::students_t_distribution<double> dist(dof);
    return boost::math::quantile(dist, p);
}

double chi_squared_quantile(double p, double dof)
{
    boost::math::chi_squared_distribution<double> dist(dof);
    return boost::math::quantile(dist, p);
}

std::vector<double> log_distance_weights(std::span<const double> d_m, std::size_t n_bins)
{
    if (d_m.empty())
        throw std::invalid_argument("log_distance_weights: empty input");
    if (n_bins < 1)
        throw std::invalid_argument("log_distance_weights: need at least one bin");
    for (double d : d_m)
        if (!(d > 0.0))
            throw std::invalid_argument("log_distance_weights: distances must be positive");

    const std::size_t n = d_m.size();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::log10(d_m[i]);

    double lo = *std::min_element(x.begin(), x.end());
    double hi = *std::max_element(x.begin(), x.end());

    std::vector<std::size_t> bin(n, 0);
    if (hi > lo)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            auto b = static_cast<std::size_t>((x[i] - lo) / (hi - lo) * static_cast<double>(n_bins));
            bin[i] = std::min(b, n_bins - 1);
        }
    }

    std::vector<std::size_t> counts(n_bins, 0);
    for (std::size_t b : bin)
        ++counts[b];
    std::size_t occupied = 0;
    for (std::size_t c : counts)
        if (c > 0)
            ++occupied;

    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = 1.0 / (static_cast<double>(occupied) * static_cast<double>(counts[bin[i]]));
    return w;
}

namespace
{

struct wls_result
{
    double alpha = 0.0;
    double beta = 0.0;
    double sigma_eps = 0.0;
    confidence_interval alpha_ci;
    confidence_interval beta_ci;
};

// Weighted straight-line fit y = alpha + beta x. The weights compensate
// sample density, they do not encode per-point noise variance, so the
// coefficient covariance uses the corresponding sandwich form
//   Cov = (X'WX)^-1 (X'W^2X s^2) (X'WX)^-1
// with the homoscedastic residual variance s^2 = SSE/(n-2). For uniform
// weights this collapses to the textbook s^2 (X'X)^-1.
wls_result weighted_line_fit(std::span<const double> x, std::span<const double> y,
                             std::span<const double> w)
{
    const std::size_t n = x.size();
    if (n < 3)
        throw std::invalid_argument("fit: need at least 3 points");
    if (y.size() != n || w.size() != n)
        throw std::invalid_argument("fit: input size mismatch");

    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
        sxx += w[i] * x[i] * x[i];
        sxy += w[i] * x[i] * y[i];
    }
    double delta = sw * sxx - sx * sx;
    if (!(std::abs(delta) > 1e-14 * sw * sxx) || !(delta > 0.0))
        throw std::invalid_argument("fit: degenerate design (distances carry no spread)");

    wls_result r;
    r.beta = (sw * sxy - sx * sy) / delta;
    r.alpha = (sxx * sy - sx * sxy) / delta;

    double sse = 0.0, wse = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double e = y[i] - r.alpha - r.beta * x[i];
        sse += e * e;
        wse += w[i] * e * e;
    }
    double dof = static_cast<double>(n - 2);
    r.sigma_eps = std::sqrt(wse / sw * static_cast<double>(n) / dof);

    // sandwich covariance of (alpha, beta)
    double s2 = sse / dof;
    double sww = 0, swwx = 0, swwxx = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double w2 = w[i] * w[i];
        sww += w2;
        swwx += w2 * x[i];
        swwxx += w2 * x[i] * x[i];
    }
    // A^-1 with A = [[sw, sx], [sx, sxx]]
    double inv00 = sxx / delta, inv01 = -sx / delta, inv11 = sw / delta;
    // B = X'W^2X * s2
    double b00 = sww * s2, b01 = swwx * s2, b11 = swwxx * s2;
    double var_alpha = inv00 * (b00 * inv00 + b01 * inv01) + inv01 * (b01 * inv00 + b11 * inv01);
    double var_beta = inv01 * (b00 * inv01 + b01 * inv11) + inv11 * (b01 * inv01 + b11 * inv11);

    double tq = student_t_quantile(0.975, dof);
    r.alpha_ci = {r.alpha - tq * std::sqrt(var_alpha), r.alpha + tq * std::sqrt(var_alpha)};
    r.beta_ci = {r.beta - tq * std::sqrt(var_beta), r.beta + tq * std::sqrt(var_beta)};
    return r;
}

} // namespace

power_law_fit fit_power_law(std::span<const double> d_m, std::span<const double> pl_db,
                            std::span<const double> weights)
{
    const std::size_t n = d_m.size();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!(d_m[i] > 0.0))
            throw std::invalid_argument("fit_power_law: distances must be positive");
        x[i] = 10.0 * std::log10(d_m[i]);
    }
    wls_result r = weighted_line_fit(x, pl_db, weights);

    power_law_fit fit;
    fit.alpha_db = r.alpha;
    fit.beta = r.beta;
    fit.sigma_eps_db = r.sigma_eps;
    fit.weights = weighting::log10_binned;
    fit.alpha_ci = r.alpha_ci;
    fit.beta_ci = r.beta_ci;
    fit.n = n;
    return fit;
}

power_law_fit fit_ols(std::span<const double> d_m, std::span<const double> pl_db)
{
    std::vector<double> w(d_m.size(), 1.0 / static_cast<double>(d_m.size()));
    power_law_fit fit = fit_power_law(d_m, pl_db, w);
    fit.weights = weighting::ols;
    return fit;
}

std::vector<double> shadowing_residuals(const power_law_fit &fit, std::span<const double> d_m,
                                        std::span<const double> pl_db)
{
    if (d_m.size() != pl_db.size())
        throw std::invalid_argument("shadowing_residuals: input size mismatch");
    std::vector<double> eps(d_m.size());
    for (std::size_t i = 0; i < d_m.size(); ++i)
        eps[i] = pl_db[i] - (fit.alpha_db + 10.0 * fit.beta * std::log10(d_m[i]));
    return eps;
}

lognormal_fit fit_lognormal(std::span<const double> values)
{
    const std::size_t n = values.size();
    if (n < 3)
        throw std::invalid_argument("fit_lognormal: need at least 3 values");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("fit_lognormal: non-finite value");

    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= static_cast<double>(n);

    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    double var = ss / static_cast<double>(n - 1);
    double sd = std::sqrt(var);

    lognormal_fit fit;
    fit.mu = mean;
    fit.sigma = sd;
    fit.n = n;
    if (!(sd > 0.0))
    {
        fit.degenerate = true;
        fit.mu_ci = {mean, mean};
        fit.sigma_ci = {0.0, 0.0};
        return fit;
    }

    double dof = static_cast<double>(n - 1);
    double tq = student_t_quantile(0.975, dof);
    double se = sd / std::sqrt(static_cast<double>(n));
    fit.mu_ci = {mean - tq * se, mean + tq * se};

    double chi_lo = chi_squared_quantile(0.025, dof);
    double chi_hi = chi_squared_quantile(0.975, dof);
    fit.sigma_ci = {sd * std::sqrt(dof / chi_hi), sd * std::sqrt(dof / chi_lo)};
    return fit;
}

linear_logd_fit fit_linear_logd(std::span<const double> values, std::span<const double> d_m,
                                std::size_t n_bins)
{
    const std::size_t n = values.size();
    if (d_m.size() != n)
        throw std::invalid_argument("fit_linear_logd: input size mismatch");

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!(d_m[i] > 0.0))
            throw std::invalid_argument("fit_linear_logd: distances must be positive");
        x[i] = std::log10(d_m[i]);
    }
    std::vector<double> w = log_distance_weights(d_m, n_bins);
    wls_result r = weighted_line_fit(x, values, w);

    linear_logd_fit fit;
    fit.alpha = r.alpha;
    fit.beta = r.beta;
    fit.sigma_eps = r.sigma_eps;
    fit.alpha_ci = r.alpha_ci;
    fit.beta_ci = r.beta_ci;
    fit.n = n;
    return fit;
}

} // namespace thzsound
