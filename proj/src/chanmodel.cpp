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

#include "thzsound/chanmodel.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "thzsound/rng.hpp"
#include "thzsound/units.hpp"

namespace thzsound
{

std::string to_string(condition c) { return c == condition::los ? "los" : "nlos"; }

std::string to_string(view v)
{
    switch (v)
    {
    case view::omni: return "omni";
    case view::maxdir: return "maxdir";
    default: return "na";
    }
}

std::string to_string(model_param p)
{
    switch (p)
    {
    case model_param::path_loss: return "pl";
    case model_param::delay_spread: return "ds";
    case model_param::angular_spread: return "as";
    case model_param::kappa1: return "k1";
    default: return "eps";
    }
}

std::string to_string(fit_kind k) { return k == fit_kind::linear_logd ? "linear" : "stat"; }

std::string to_string(table_weighting w)
{
    switch (w)
    {
    case table_weighting::weighted: return "weighted";
    case table_weighting::ols: return "ols";
    default: return "na";
    }
}

condition condition_from_string(const std::string &s)
{
    if (s == "los")
        return condition::los;
    if (s == "nlos")
        return condition::nlos;
    throw std::invalid_argument("unknown condition '" + s + "'");
}

view view_from_string(const std::string &s)
{
    if (s == "omni")
        return view::omni;
    if (s == "maxdir")
        return view::maxdir;
    if (s == "na")
        return view::none;
    throw std::invalid_argument("unknown view '" + s + "'");
}

model_param model_param_from_string(const std::string &s)
{
    if (s == "pl")
        return model_param::path_loss;
    if (s == "ds")
        return model_param::delay_spread;
    if (s == "as")
        return model_param::angular_spread;
    if (s == "k1")
        return model_param::kappa1;
    if (s == "eps")
        return model_param::shadowing;
    throw std::invalid_argument("unknown parameter '" + s + "'");
}

fit_kind fit_kind_from_string(const std::string &s)
{
    if (s == "linear")
        return fit_kind::linear_logd;
    if (s == "stat")
        return fit_kind::statistical;
    throw std::invalid_argument("unknown fit kind '" + s + "'");
}

table_weighting table_weighting_from_string(const std::string &s)
{
    if (s == "weighted")
        return table_weighting::weighted;
    if (s == "ols")
        return table_weighting::ols;
    if (s == "na")
        return table_weighting::na;
    throw std::invalid_argument("unknown weighting '" + s + "'");
}

std::string expected_units(model_param p)
{
    switch (p)
    {
    case model_param::path_loss: return "db";
    case model_param::delay_spread: return "db_s"; // 10 log10(seconds)
    case model_param::angular_spread: return "log10";
    case model_param::kappa1: return "db";
    default: return "db";
    }
}

void model_table::add_row(const model_row &row)
{
    if (row.units != expected_units(row.param))
        throw std::invalid_argument("model_table: row '" + to_string(row.param) +
                                    "' has malformed units '" + row.units + "' (expected '" +
                                    expected_units(row.param) + "')");
    if (find(row.param, row.cond, row.v, row.kind, row.weights) != nullptr)
        throw std::invalid_argument("model_table: duplicate row " + to_string(row.param) + "/" +
                                    to_string(row.cond) + "/" + to_string(row.v) + "/" +
                                    to_string(row.kind) + "/" + to_string(row.weights));
    rows_.push_back(row);
}

const model_row *model_table::find(model_param p, condition c, view v, fit_kind k,
                                   table_weighting w) const
{
    for (const auto &r : rows_)
        if (r.param == p && r.cond == c && r.v == v && r.kind == k && r.weights == w)
            return &r;
    return nullptr;
}

const model_row &model_table::require(model_param p, condition c, view v, fit_kind k,
                                      table_weighting w) const
{
    const model_row *r = find(p, c, v, k, w);
    if (r == nullptr)
        throw std::invalid_argument("model_table: missing row " + to_string(p) + "/" +
                                    to_string(c) + "/" + to_string(v) + "/" + to_string(k) + "/" +
                                    to_string(w));
    return *r;
}

void model_table::validate() const
{
    for (condition c : {condition::los, condition::nlos})
    {
        for (view v : {view::omni, view::maxdir})
        {
            require(model_param::path_loss, c, v, fit_kind::linear_logd, table_weighting::weighted);
            const auto &eps =
                require(model_param::shadowing, c, v, fit_kind::statistical, table_weighting::ols);
            const auto &ds =
                require(model_param::delay_spread, c, v, fit_kind::statistical, table_weighting::na);
            const auto &k1 =
                require(model_param::kappa1, c, v, fit_kind::statistical, table_weighting::na);
            if (eps.p2 < 0.0 || ds.p2 < 0.0 || k1.p2 < 0.0)
                throw std::invalid_argument("model_table: negative sigma in statistical row");
        }
        const auto &as =
            require(model_param::angular_spread, c, view::none, fit_kind::statistical, table_weighting::na);
        if (as.p2 < 0.0)
            throw std::invalid_argument("model_table: negative sigma in statistical row");
    }
}

namespace
{
model_row lin(model_param p, condition c, view v, table_weighting w, double alpha, double beta)
{
    return {p, c, v, fit_kind::linear_logd, w, alpha, beta, expected_units(p)};
}
model_row stat(model_param p, condition c, view v, table_weighting w, double mu, double sigma)
{
    return {p, c, v, fit_kind::statistical, w, mu, sigma, expected_units(p)};
}
} // namespace

model_table model_table::builtin_default()
{
    using p = model_param;
    using tw = table_weighting;
    constexpr condition los = condition::los, nlos = condition::nlos;
    constexpr view omni = view::omni, maxdir = view::maxdir, both = view::none;

    model_table t;
    // distance-trend rows
    t.add_row(lin(p::path_loss, los, omni, tw::weighted, 76.77, 1.74));
    t.add_row(lin(p::path_loss, los, maxdir, tw::weighted, 76.77, 1.78));
    t.add_row(lin(p::path_loss, los, omni, tw::ols, 76.53, 1.8));
    t.add_row(lin(p::path_loss, los, maxdir, tw::ols, 76.42, 1.86));
    t.add_row(lin(p::delay_spread, los, omni, tw::weighted, -82.7, 4.65));
    t.add_row(lin(p::delay_spread, los, maxdir, tw::weighted, -86.96, 4.26));
    t.add_row(lin(p::kappa1, los, omni, tw::weighted, 14.95, -3.39));
    t.add_row(lin(p::kappa1, los, maxdir, tw::weighted, 11.47, 6.19));
    t.add_row(lin(p::angular_spread, los, both, tw::weighted, -0.68, 0.12));
    t.add_row(lin(p::angular_spread, nlos, both, tw::weighted, -0.02, -0.17));
    t.add_row(lin(p::path_loss, nlos, omni, tw::weighted, 95.45, 1.49));
    t.add_row(lin(p::path_loss, nlos, maxdir, tw::weighted, 100.47, 1.35));
    t.add_row(lin(p::path_loss, nlos, omni, tw::ols, 96.26, 1.53));
    t.add_row(lin(p::path_loss, nlos, maxdir, tw::ols, 101.03, 1.45));
    t.add_row(lin(p::delay_spread, nlos, omni, tw::weighted, -67.74, -3.24));
    t.add_row(lin(p::delay_spread, nlos, maxdir, tw::weighted, -70.77, -6.96));
    t.add_row(lin(p::kappa1, nlos, omni, tw::weighted, -4.88, 4.35));
    t.add_row(lin(p::kappa1, nlos, maxdir, tw::weighted, 4.71, 2.69));

    // statistical rows
    t.add_row(stat(p::shadowing, los, omni, tw::weighted, 0.58, 1.45));
    t.add_row(stat(p::shadowing, los, maxdir, tw::weighted, 0.8, 1.81));
    t.add_row(stat(p::shadowing, los, omni, tw::ols, -0.01, 1.4));
    t.add_row(stat(p::shadowing, los, maxdir, tw::ols, 0.05, 1.73));
    t.add_row(stat(p::angular_spread, los, both, tw::na, -0.49, 0.19));
    t.add_row(stat(p::delay_spread, los, omni, tw::na, -76.84, 3.05));
    t.add_row(stat(p::delay_spread, los, maxdir, tw::na, -83.15, 3.08));
    t.add_row(stat(p::kappa1, los, omni, tw::na, 9.58, 6.05));
    t.add_row(stat(p::kappa1, los, maxdir, tw::na, 17.88, 6.07));
    t.add_row(stat(p::shadowing, nlos, omni, tw::weighted, 1.37, 5.21));
    t.add_row(stat(p::shadowing, nlos, maxdir, tw::weighted, 2.09, 6.72));
    t.add_row(stat(p::shadowing, nlos, omni, tw::ols, 0.02, 5.2));
    t.add_row(stat(p::shadowing, nlos, maxdir, tw::ols, 0.0, 6.69));
    t.add_row(stat(p::angular_spread, nlos, both, tw::na, -0.23, 0.16));
    t.add_row(stat(p::delay_spread, nlos, omni, tw::na, -71.92, 1.8));
    t.add_row(stat(p::delay_spread, nlos, maxdir, tw::na, -80.34, 3.96));
    t.add_row(stat(p::kappa1, nlos, omni, tw::na, 0.54, 4.93));
    t.add_row(stat(p::kappa1, nlos, maxdir, tw::na, 9.84, 6.95));

    t.validate();
    return t;
}

void save_model_table(std::ostream &out, const model_table &table)
{
    out << "# thzsound model table\n";
    out << "# linear rows:      value = alpha + beta * log10(d); path loss uses alpha + 10*beta*log10(d)\n";
    out << "# statistical rows: value ~ Normal(mu, sigma) in the row's units\n";
    out << "version 1\n";
    char buf[320];
    for (const auto &r : table.rows())
    {
        const char *k1 = r.kind == fit_kind::linear_logd ? "alpha" : "mu";
        const char *k2 = r.kind == fit_kind::linear_logd ? "beta" : "sigma";
        std::snprintf(buf, sizeof buf, "row kind=%s param=%s cond=%s view=%s weighting=%s %s=%.17g %s=%.17g units=%s\n",
                      to_string(r.kind).c_str(), to_string(r.param).c_str(),
                      to_string(r.cond).c_str(), to_string(r.v).c_str(),
                      to_string(r.weights).c_str(), k1, r.p1, k2, r.p2, r.units.c_str());
        out << buf;
    }
}

void save_model_table_file(const std::string &path, const model_table &table)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    save_model_table(out, table);
}

model_table load_model_table(std::istream &in)
{
    model_table table;
    std::string line;
    std::size_t line_no = 0;
    bool version_seen = false;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "version")
        {
            int v = 0;
            ls >> v;
            if (v != 1)
                throw std::invalid_argument("model table: unsupported version");
            version_seen = true;
            continue;
        }
        if (head != "row")
            throw std::invalid_argument("model table line " + std::to_string(line_no) +
                                        ": expected 'row' or 'version'");

        model_row r;
        bool have_p1 = false, have_p2 = false, have_units = false;
        std::string tok;
        while (ls >> tok)
        {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("model table line " + std::to_string(line_no) +
                                            ": token '" + tok + "' is not key=value");
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "kind")
                r.kind = fit_kind_from_string(val);
            else if (key == "param")
                r.param = model_param_from_string(val);
            else if (key == "cond")
                r.cond = condition_from_string(val);
            else if (key == "view")
                r.v = view_from_string(val);
            else if (key == "weighting")
                r.weights = table_weighting_from_string(val);
            else if (key == "alpha" || key == "mu")
            {
                r.p1 = std::stod(val);
                have_p1 = true;
            }
            else if (key == "beta" || key == "sigma")
            {
                r.p2 = std::stod(val);
                have_p2 = true;
            }
            else if (key == "units")
            {
                r.units = val;
                have_units = true;
            }
            else
                throw std::invalid_argument("model table line " + std::to_string(line_no) +
                                            ": unknown key '" + key + "'");
        }
        if (!have_p1 || !have_p2 || !have_units)
            throw std::invalid_argument("model table line " + std::to_string(line_no) +
                                        ": row is missing parameters or units");
        table.add_row(r);
    }
    if (!version_seen)
        throw std::invalid_argument("model table: missing version line");
    table.validate();
    return table;
}

model_table load_model_table_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open model table '" + path + "'");
    return load_model_table(in);
}

link_realization draw_link(const model_table &table, double d_m, condition c, view v,
                           std::uint64_t seed)
{
    if (!(d_m > 0.0))
        throw std::invalid_argument("draw_link: distance must be positive");
    if (v == view::none)
        throw std::invalid_argument("draw_link: view must be omni or maxdir");

    const auto &pl_row =
        table.require(model_param::path_loss, c, v, fit_kind::linear_logd, table_weighting::weighted);
    const auto &eps_row =
        table.require(model_param::shadowing, c, v, fit_kind::statistical, table_weighting::ols);
    const auto &ds_row =
        table.require(model_param::delay_spread, c, v, fit_kind::statistical, table_weighting::na);
    const auto &as_row = table.require(model_param::angular_spread, c, view::none,
                                       fit_kind::statistical, table_weighting::na);
    const auto &k1_row =
        table.require(model_param::kappa1, c, v, fit_kind::statistical, table_weighting::na);

    normal_stream rng(seed);

    link_realization out;
    out.d_m = d_m;
    out.cond = c;
    out.v = v;
    out.seed = seed;
    out.out_of_range = (d_m < model_min_distance_m) || (d_m > model_max_distance_m);

    // fixed draw order: shadowing, delay spread, angular spread, kappa1
    out.shadowing_db = rng.next(0.0, eps_row.p2);
    out.pl_db = pl_row.p1 + 10.0 * pl_row.p2 * std::log10(d_m) + out.shadowing_db;

    double ds_db = rng.next(ds_row.p1, ds_row.p2);
    out.ds_s = db_to_linear(ds_db);

    double as_log10 = rng.next(as_row.p1, as_row.p2);
    double as_raw = std::pow(10.0, as_log10);
    out.as_clamped = as_raw > 1.0;
    out.as = out.as_clamped ? 1.0 : as_raw;

    out.k1_db = rng.next(k1_row.p1, k1_row.p2);
    return out;
}

double max_tolerable_path_loss_db(const link_budget_spec &spec)
{
    if (!(spec.bandwidth_hz > 0.0))
        throw std::invalid_argument("link budget: bandwidth must be positive");
    return spec.tx_power_dbm + spec.antenna_gain_tx_dbi + spec.antenna_gain_rx_dbi -
           thermal_noise_dbm_hz - 10.0 * std::log10(spec.bandwidth_hz) - spec.noise_figure_db -
           spec.required_snr_db;
}

double link_budget_margin_db(const link_budget_spec &spec, double pl_db)
{
    return max_tolerable_path_loss_db(spec) - pl_db;
}

} // namespace thzsound
