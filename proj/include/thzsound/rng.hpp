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
#include <complex>
#include <cstdint>
#include <random>

namespace thzsound
{

// splitmix64 step (Vigna). Used for seed derivation and counter-based streams.
inline std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent stream seed from a base seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

inline double bits_to_unit_open(std::uint64_t bits)
{
    // (0, 1]: 53-bit mantissa, never returns 0 so log() is safe
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// Seeded stream of standard normal deviates. mt19937_64 plus an explicit
// Box-Muller transform, so the sequence is identical on every platform
// (std::normal_distribution is implementation-defined and is avoided).
class normal_stream
{
  public:
    explicit normal_stream(std::uint64_t seed) : eng_(seed) {}

    double next()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        double u1 = bits_to_unit_open(eng_());
        double u2 = bits_to_unit_open(eng_());
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double next(double mu, double sigma) { return mu + sigma * next(); }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Counter-based complex circularly-symmetric Gaussian with E|z|^2 = 1.
// Fully determined by (seed, index), independent of evaluation order, so
// parallel renderers produce identical noise regardless of scheduling.
inline std::complex<double> complex_gaussian_at(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t s = seed ^ (0xd1342543de82ef95ULL * (index + 1));
    std::uint64_t b1 = splitmix64(s);
    std::uint64_t b2 = splitmix64(s);
    double u1 = bits_to_unit_open(b1);
    double u2 = bits_to_unit_open(b2);
    double r = std::sqrt(-std::log(u1)); // each quadrature has variance 1/2
    double a = 6.283185307179586476925287 * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

} // namespace thzsound
