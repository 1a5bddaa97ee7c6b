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

#ifndef GRASSLINK_FADING_CHANNEL_HPP
#define GRASSLINK_FADING_CHANNEL_HPP

#include <armadillo>
#include <cstdint>

namespace grasslink
{

struct ChannelConfig
{
    arma::uword n_tx = 2; // Nt
    arma::uword n_rx = 4; // Nr, must be >= Nt for blind row-space recovery
    double normalized_doppler = 0.0; // f_D * T_s, cycles per slot, in [0, 0.5)
    double noise_variance = 0.0;     // sigma_w^2, AWGN per complex element
    double tx_power = 1.0;           // P

    void validate() const;
};

// Time-ordered sequence of Nr x Nt channel realizations, one slice per slot.
// Each coefficient process is marginally CN(0,1) with Clarke-model temporal
// autocovariance J0(2*pi*fD*Ts*tau); distinct antenna pairs are independent.
struct ChannelTrace
{
    arma::cx_cube matrices; // n_rx x n_tx x n_slots
    ChannelConfig config;

    arma::uword n_slots() const noexcept { return matrices.n_slices; }
};

// Nr x T block observed at the server for one transmitted symbol matrix.
struct ReceivedBlock
{
    arma::cx_mat observations; // column t = sqrt(P) * H_t * g_t + w_t
    arma::uword slots_used = 0;
};

// Bessel function of the first kind, order zero. Total function, absolute
// accuracy better than 1e-12 for |x| <= 100.
double bessel_j0(double x);

// Generate a correlated Rayleigh fading trace: the n_slots x n_slots Toeplitz
// covariance R[tau] = J0(2*pi*fD*Ts*tau) is Cholesky-factored (with diagonal
// jitter 1e-10, escalated to at most 1e-6) and used to color i.i.d. CN(0,1)
// draws, independently per antenna pair. fD = 0 yields a constant trace.
ChannelTrace generate_trace(const ChannelConfig &config, arma::uword n_slots, std::uint64_t seed);

// Push an Nt x T symbol matrix through the trace: column t of the output is
// sqrt(P) * H_t * g_t + w_t with w_t i.i.d. CN(0, sigma_w^2). The noise
// realization depends only on (seed, Nr, T), never on the symbols.
ReceivedBlock transmit(const ChannelTrace &trace, const arma::cx_mat &symbols,
                       const ChannelConfig &config, std::uint64_t seed);

// Normalized Doppler from physical parameters: (f_c * v / c) * T_s.
double doppler_from_speed(double speed_mps, double carrier_hz, double slot_s);

} // namespace grasslink

#endif
