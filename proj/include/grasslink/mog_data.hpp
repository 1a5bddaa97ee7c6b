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

#ifndef GRASSLINK_MOG_DATA_HPP
#define GRASSLINK_MOG_DATA_HPP

#include <armadillo>
#include <cstdint>
#include <string>
#include <vector>

namespace grasslink
{

// Mixture-of-Gaussians source model: class m emits mu_m plus an i.i.d.
// circularly-symmetric complex Gaussian deviation of per-element variance
// sigma_s^2 (real and imaginary parts carry sigma_s^2 / 2 each).
struct MoGConfig
{
    arma::uword num_classes = 2;     // M
    arma::uword sample_dim = 48;     // L
    double deviation_variance = 1.0; // sigma_s^2, per complex element
    double parametric_ratio_db = 15.0; // ||mu_m||^2 / sigma_s^2 in dB for auto-generated means

    // One length-L row vector per class. Either supplied explicitly (fixtures)
    // or filled in by generate_means().
    std::vector<arma::cx_rowvec> class_means;

    // Throws config_error on violated invariants. When require_means is set,
    // also insists on a complete, well-shaped set of class means.
    void validate(bool require_means = false) const;
};

struct DataSample
{
    arma::cx_rowvec values; // length L
    arma::uword label = 0;  // in [0, M)
};

struct Dataset
{
    std::vector<DataSample> samples;
    MoGConfig config;
};

// Draw M class means with i.i.d. standard complex Gaussian entries, rescaled
// so that ||mu_m||^2 = sigma_s^2 * 10^(parametric_ratio_db / 10) exactly.
std::vector<arma::cx_rowvec> generate_means(const MoGConfig &config, std::uint64_t seed);

// Convenience: returns a copy of the config with class_means filled in.
MoGConfig with_generated_means(MoGConfig config, std::uint64_t seed);

// Draw n labeled samples. Labels are stratified round-robin (sample i belongs
// to class i mod M), values = mu_label + z with z i.i.d. CN(0, sigma_s^2).
Dataset sample_dataset(const MoGConfig &config, std::size_t n, std::uint64_t seed);

// CSV export/import, one row per sample:
//   label, re_0, im_0, ..., re_{L-1}, im_{L-1}
// Floats carry 17 significant digits so a round trip is exact.
void write_samples_csv(const std::vector<DataSample> &samples, const std::string &path);
std::vector<DataSample> read_samples_csv(const std::string &path);

} // namespace grasslink

#endif
