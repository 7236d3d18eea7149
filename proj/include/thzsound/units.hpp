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

#include <cmath>

namespace thzsound
{

constexpr double speed_of_light_m_s = 299792458.0;

// Thermal noise power spectral density at 290 K, in dBm/Hz.
constexpr double thermal_noise_dbm_hz = -174.0;

inline double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double amplitude_to_db(double a) { return 20.0 * std::log10(a); }
inline double db_to_amplitude(double x_db) { return std::pow(10.0, x_db / 20.0); }

inline double deg_to_rad(double deg) { return deg * 0.017453292519943295; }

// Wrap an angle difference to (-180, 180] degrees.
inline double wrap_angle_deg(double deg)
{
    double x = std::fmod(deg, 360.0);
    if (x > 180.0)
        x -= 360.0;
    else if (x <= -180.0)
        x += 360.0;
    return x;
}

} // namespace thzsound
