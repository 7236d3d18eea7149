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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace thzsound
{

enum class condition
{
    los,
    nlos
};

enum class view
{
    omni,
    maxdir,
    none // parameters pooled over both link ends (angular spread)
};

enum class model_param
{
    path_loss,      // alpha [dB], beta [-]
    delay_spread,   // 10 log10(seconds)
    angular_spread, // log10 of the dimensionless Fleury spread
    kappa1,         // dB
    shadowing       // dB
};

enum class fit_kind
{
    linear_logd,
    statistical
};

enum class table_weighting
{
    weighted, // log10(d)-binned regression
    ols,
    na
};

std::string to_string(condition c);
std::string to_string(view v);
std::string to_string(model_param p);
std::string to_string(fit_kind k);
std::string to_string(table_weighting w);

condition condition_from_string(const std::string &s);
view view_from_string(const std::string &s);
model_param model_param_from_string(const std::string &s);
fit_kind fit_kind_from_string(const std::string &s);
table_weighting table_weighting_from_string(const std::string &s);

// Unit annotation required for each parameter's table rows.
std::string expected_units(model_param p);

struct model_row
{
    model_param param = model_param::path_loss;
    condition cond = condition::los;
    view v = view::omni;
    fit_kind kind = fit_kind::linear_logd;
    table_weighting weights = table_weighting::weighted;
    double p1 = 0.0; // alpha or mu
    double p2 = 0.0; // beta or sigma
    std::string units;
};

// Consolidated statistical model: the linear and statistical summary rows
// consumed by the link generator.
class model_table
{
  public:
    // Built-in defaults for the urban D2D campaign this library ships with.
    static model_table builtin_default();

    void add_row(const model_row &row);
    const model_row *find(model_param p, condition c, view v, fit_kind k,
                          table_weighting w) const;
    const model_row &require(model_param p, condition c, view v, fit_kind k,
                             table_weighting w) const;

    // Ensure every row needed by draw_link is present with valid sigma.
    void validate() const;

    const std::vector<model_row> &rows() const { return rows_; }

  private:
    std::vector<model_row> rows_;
};

model_table load_model_table(std::istream &in);
model_table load_model_table_file(const std::string &path);
void save_model_table(std::ostream &out, const model_table &table);
void save_model_table_file(const std::string &path, const model_table &table);

struct link_budget_spec
{
    double tx_power_dbm = 10.0;
    double antenna_gain_tx_dbi = 23.0;
    double antenna_gain_rx_dbi = 23.0;
    double bandwidth_hz = 1e9;
    double noise_figure_db = 5.0;
    double required_snr_db = 5.0;
};

// One generated channel realization.
struct link_realization
{
    double d_m = 0.0;
    condition cond = condition::los;
    view v = view::omni;
    double pl_db = 0.0;
    double shadowing_db = 0.0;
    double ds_s = 0.0;
    double as = 0.0;
    bool as_clamped = false;
    double k1_db = 0.0;
    std::uint64_t seed = 0;
    bool out_of_range = false; // d outside the calibrated 1-100 m range
};

// Model validity range; the fits must not be extrapolated beyond it.
constexpr double model_min_distance_m = 1.0;
constexpr double model_max_distance_m = 100.0;

// Draw one realization. Deterministic for a fixed (table, d, condition,
// view, seed); the shadowing uses the zero-mean OLS row.
link_realization draw_link(const model_table &table, double d_m, condition c, view v,
                           std::uint64_t seed);

// Highest path loss the link closes with: tx power + antenna gains
// + 174 - 10 log10(BW) - noise figure - required SNR.
double max_tolerable_path_loss_db(const link_budget_spec &spec);

double link_budget_margin_db(const link_budget_spec &spec, double pl_db);

} // namespace thzsound
