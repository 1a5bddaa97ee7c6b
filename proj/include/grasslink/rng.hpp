// SPDX-License-Identifier: Apache-2.0
//
// grasslink - link-level simulator for Grassmann analog transmission over fading MIMO channels
// Copyright (C) 2026 grasslink developers
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

#ifndef GRASSLINK_RNG_HPP
#define GRASSLINK_RNG_HPP

#include <armadillo>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace grasslink
{

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used both as the seed-stream
// hash and to decorrelate user-supplied seeds before they enter the engine.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Stable 64-bit seed derivation: h_0 = splitmix64(base), h_k = splitmix64(h_{k-1} ^ part_k).
// Every independent random stream in the simulator gets its seed through this
// chain, so results are a pure function of the base seed and the stream labels.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) noexcept
{
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t p : parts)
        h = splitmix64(h ^ p);
    return h;
}

// Seeded random source. Uniform doubles come from the top 53 bits of a
// mt19937_64 word; complex Gaussians use the polar Box-Muller form
// r*exp(i*theta), which yields one CN(0, var) draw from two uniforms.
// All draw sequences are fully specified, so identical seeds reproduce
// identical streams on any platform.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // uniform on [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // circularly-symmetric complex Gaussian, E|z|^2 = variance
    std::complex<double> cgauss(double variance)
    {
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log() finite
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1) * variance);
        const double theta = 2.0 * arma::datum::pi * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    arma::cx_mat cgauss_mat(arma::uword n_rows, arma::uword n_cols, double variance)
    {
        arma::cx_mat out(n_rows, n_cols);
        for (arma::uword c = 0; c < n_cols; ++c)
            for (arma::uword r = 0; r < n_rows; ++r)
                out(r, c) = cgauss(variance);
        return out;
    }

    arma::cx_rowvec cgauss_row(arma::uword n, double variance)
    {
        arma::cx_rowvec out(n);
        for (arma::uword i = 0; i < n; ++i)
            out(i) = cgauss(variance);
        return out;
    }

    arma::cx_vec cgauss_col(arma::uword n, double variance)
    {
        arma::cx_vec out(n);
        for (arma::uword i = 0; i < n; ++i)
            out(i) = cgauss(variance);
        return out;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace grasslink

#endif
