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

#include "thzsound/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace thzsound
{

namespace
{
constexpr double two_pi = 6.283185307179586476925287;

std::size_t next_pow2(std::size_t n)
{
    std::size_t m = 1;
    while (m < n)
        m <<= 1;
    return m;
}
} // namespace

std::vector<cdouble> idft_direct(std::span<const cdouble> in)
{
    const std::size_t n = in.size();
    if (n == 0)
        throw std::invalid_argument("idft_direct: empty input");

    std::vector<cdouble> out(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        cdouble acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i)
        {
            // exact integer phase index avoids large-argument trig error
            std::size_t idx = (i * k) % n;
            double phase = two_pi * static_cast<double>(idx) / static_cast<double>(n);
            acc += in[i] * cdouble(std::cos(phase), std::sin(phase));
        }
        out[k] = acc / static_cast<double>(n);
    }
    return out;
}

void fft_pow2(std::vector<cdouble> &a, bool inverse)
{
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: size must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i)
    {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1)
    {
        double ang = two_pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        cdouble wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len)
        {
            cdouble w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j)
            {
                cdouble u = a[i + j];
                cdouble v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }

    if (inverse)
    {
        double inv_n = 1.0 / static_cast<double>(n);
        for (auto &x : a)
            x *= inv_n;
    }
}

inverse_dft_plan::inverse_dft_plan(std::size_t n) : n_(n)
{
    if (n == 0)
        throw std::invalid_argument("inverse_dft_plan: size must be positive");

    m_ = next_pow2(2 * n - 1);

    // chirp[k] = exp(+i pi k^2 / N); k^2 is reduced mod 2N so the trig
    // argument stays small and exact
    chirp_.resize(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        std::size_t q = (k * k) % (2 * n);
        double phase = M_PI * static_cast<double>(q) / static_cast<double>(n);
        chirp_[k] = cdouble(std::cos(phase), std::sin(phase));
    }

    // kernel b[m] = conj(chirp[|m|]) laid out circularly over length M
    std::vector<cdouble> b(m_, cdouble(0.0, 0.0));
    b[0] = std::conj(chirp_[0]);
    for (std::size_t k = 1; k < n; ++k)
    {
        b[k] = std::conj(chirp_[k]);
        b[m_ - k] = std::conj(chirp_[k]);
    }
    fft_pow2(b, false);
    kernel_fft_ = std::move(b);
}

void inverse_dft_plan::run(std::span<const cdouble> in, std::span<cdouble> out) const
{
    if (in.size() != n_ || out.size() != n_)
        throw std::invalid_argument("inverse_dft_plan::run: size mismatch");

    if (n_ == 1)
    {
        out[0] = in[0];
        return;
    }

    std::vector<cdouble> a(m_, cdouble(0.0, 0.0));
    for (std::size_t k = 0; k < n_; ++k)
        a[k] = in[k] * chirp_[k];

    fft_pow2(a, false);
    for (std::size_t k = 0; k < m_; ++k)
        a[k] *= kernel_fft_[k];
    fft_pow2(a, true);

    double inv_n = 1.0 / static_cast<double>(n_);
    for (std::size_t k = 0; k < n_; ++k)
        out[k] = a[k] * chirp_[k] * inv_n;
}

} // namespace thzsound
