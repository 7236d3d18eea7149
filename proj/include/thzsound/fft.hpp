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
#include <span>
#include <vector>

namespace thzsound
{

using cdouble = std::complex<double>;

// Inverse DFT by direct summation, h[k] = (1/N) sum_n H[n] exp(+2i pi n k / N).
// O(N^2) serial reference; the oracle the fast path is tested against.
std::vector<cdouble> idft_direct(std::span<const cdouble> in);

// In-place radix-2 FFT. Size must be a power of two. The inverse transform
// applies the 1/N normalization.
void fft_pow2(std::vector<cdouble> &a, bool inverse);

// Bluestein chirp-z inverse DFT for arbitrary N, same contract and
// normalization as idft_direct. Plan once per size, run many times.
class inverse_dft_plan
{
  public:
    explicit inverse_dft_plan(std::size_t n);

    std::size_t size() const { return n_; }
    void run(std::span<const cdouble> in, std::span<cdouble> out) const;

  private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;                // FFT length, power of two >= 2N-1
    std::vector<cdouble> chirp_;       // exp(+i pi k^2 / N), k = 0..N-1
    std::vector<cdouble> kernel_fft_;  // FFT of the wrapped conjugate chirp
};

} // namespace thzsound
