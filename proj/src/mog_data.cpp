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

#include "grasslink/mog_data.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "grasslink/errors.hpp"
#include "grasslink/rng.hpp"

namespace grasslink
{

void MoGConfig::validate(bool require_means) const
{
    if (num_classes < 2)
        throw config_error("MoGConfig: need at least 2 classes, got " + std::to_string(num_classes));
    if (sample_dim < 1)
        throw config_error("MoGConfig: sample_dim must be >= 1");
    if (!(deviation_variance > 0.0))
        throw config_error("MoGConfig: deviation_variance must be positive");

    if (!class_means.empty() || require_means)
    {
        if (class_means.size() != num_classes)
            throw config_error("MoGConfig: expected " + std::to_string(num_classes) +
                               " class means, got " + std::to_string(class_means.size()));
        for (const auto &mu : class_means)
            if (mu.n_elem != sample_dim)
                throw config_error("MoGConfig: class mean length " + std::to_string(mu.n_elem) +
                                   " does not match sample_dim " + std::to_string(sample_dim));
    }
}

std::vector<arma::cx_rowvec> generate_means(const MoGConfig &config, std::uint64_t seed)
{
    config.validate(false);

    const double target_norm_sq =
        config.deviation_variance * std::pow(10.0, config.parametric_ratio_db / 10.0);

    Rng rng(seed);
    std::vector<arma::cx_rowvec> means;
    means.reserve(config.num_classes);
    for (arma::uword m = 0; m < config.num_classes; ++m)
    {
        arma::cx_rowvec mu = rng.cgauss_row(config.sample_dim, 1.0);
        mu *= std::sqrt(target_norm_sq) / arma::norm(mu, 2);
        means.push_back(std::move(mu));
    }
    return means;
}

MoGConfig with_generated_means(MoGConfig config, std::uint64_t seed)
{
    config.class_means = generate_means(config, seed);
    return config;
}

Dataset sample_dataset(const MoGConfig &config, std::size_t n, std::uint64_t seed)
{
    config.validate(true);
    if (n == 0)
        throw empty_dataset_error("sample_dataset: n must be >= 1");

    Rng rng(seed);
    Dataset ds;
    ds.config = config;
    ds.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const arma::uword label = static_cast<arma::uword>(i % config.num_classes);
        DataSample s;
        s.label = label;
        s.values = config.class_means[label] + rng.cgauss_row(config.sample_dim, config.deviation_variance);
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

namespace
{

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_samples_csv(const std::vector<DataSample> &samples, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw config_error("write_samples_csv: cannot open " + path);

    for (const auto &s : samples)
    {
        out << s.label;
        for (arma::uword i = 0; i < s.values.n_elem; ++i)
            out << ',' << fmt17(s.values(i).real()) << ',' << fmt17(s.values(i).imag());
        out << '\n';
    }
}

std::vector<DataSample> read_samples_csv(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("read_samples_csv: cannot open " + path);

    std::vector<DataSample> samples;
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<double> fields;
        bool first = true;
        arma::uword label = 0;
        while (std::getline(ss, field, ','))
        {
            if (first)
            {
                label = static_cast<arma::uword>(std::stoull(field));
                first = false;
            }
            else
            {
                fields.push_back(std::stod(field));
            }
        }
        if (fields.size() % 2 != 0)
            throw shape_error("read_samples_csv: odd number of value columns in row");

        DataSample s;
        s.label = label;
        s.values.set_size(fields.size() / 2);
        for (arma::uword i = 0; i < s.values.n_elem; ++i)
            s.values(i) = {fields[2 * i], fields[2 * i + 1]};
        samples.push_back(std::move(s));
    }
    return samples;
}

} // namespace grasslink
