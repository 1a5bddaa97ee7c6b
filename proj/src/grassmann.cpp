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

#include "grasslink/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "grasslink/errors.hpp"

namespace grasslink
{

namespace
{
constexpr double k_semiunitary_tol = 1e-9;
constexpr double k_rank_tol = 1e-12;
constexpr double k_eigengap_tol = 1e-12;
} // namespace

GrassmannPoint::GrassmannPoint(arma::cx_mat basis) : basis_(std::move(basis))
{
    const arma::uword m = basis_.n_rows;
    const arma::uword t = basis_.n_cols;
    if (m < 1 || t < m)
        throw shape_error("GrassmannPoint: basis must be m x T with 1 <= m <= T, got " +
                          std::to_string(m) + " x " + std::to_string(t));

    const arma::cx_mat gram = basis_ * basis_.t();
    const double dev = arma::norm(gram - arma::eye<arma::cx_mat>(m, m), "fro");
    if (!(dev <= k_semiunitary_tol))
        throw shape_error("GrassmannPoint: rows are not orthonormal, ||G G^H - I||_F = " +
                          std::to_string(dev));
}

DataMatrix vector_to_matrix(const arma::cx_rowvec &sample, arma::uword n_tx)
{
    const arma::uword len = sample.n_elem;
    if (n_tx < 1 || n_tx > len)
        throw shape_error("vector_to_matrix: need 1 <= n_tx <= L, got n_tx = " +
                          std::to_string(n_tx) + ", L = " + std::to_string(len));

    const arma::uword t = (len + n_tx - 1) / n_tx; // chunk length after zero-padding
    arma::cx_mat x(n_tx, t, arma::fill::zeros);
    for (arma::uword i = 0; i < len; ++i)
        x(i / t, i % t) = sample(i);
    return DataMatrix{std::move(x)};
}

namespace
{

void check_projectable(const arma::cx_mat &x)
{
    if (x.n_rows < 1 || x.n_cols < x.n_rows)
        throw shape_error("projection: data matrix must be fat (Nt <= T), got " +
                          std::to_string(x.n_rows) + " x " + std::to_string(x.n_cols));
}

} // namespace

GrassmannPoint svd_project(const DataMatrix &x)
{
    check_projectable(x.entries);

    arma::cx_mat u, v;
    arma::vec s;
    if (!arma::svd_econ(u, s, v, x.entries))
        throw numerical_degeneracy_error("svd_project: SVD failed to converge");

    if (s.min() <= k_rank_tol * s.max())
        throw degenerate_sample_error("svd_project: data matrix is rank deficient (sigma_min/sigma_max = " +
                                      std::to_string(s.min() / s.max()) + ")");

    // X = U S V^H, so V^H holds an orthonormal row basis of the row space.
    return GrassmannPoint(v.t());
}

GrassmannPoint lq_project(const DataMatrix &x)
{
    check_projectable(x.entries);

    // X = L G  <=>  X^H = Q R with Q = G^H and R = L^H.
    arma::cx_mat q, r;
    if (!arma::qr_econ(q, r, x.entries.t()))
        throw numerical_degeneracy_error("lq_project: QR failed");

    const arma::vec diag_mag = arma::abs(r.diag());
    if (diag_mag.min() <= k_rank_tol * diag_mag.max())
        throw degenerate_sample_error("lq_project: data matrix is rank deficient (|r_min|/|r_max| = " +
                                      std::to_string(diag_mag.min() / diag_mag.max()) + ")");

    return GrassmannPoint(q.t());
}

double procrustes_distance_sq(const GrassmannPoint &a, const GrassmannPoint &b)
{
    if (a.ambient_dim() != b.ambient_dim() || a.subspace_dim() != b.subspace_dim())
        throw shape_error("procrustes_distance_sq: points live on different manifolds");

    const double m = static_cast<double>(a.subspace_dim());
    const double overlap = arma::norm(a.basis() * b.basis().t(), "fro");
    const double d2 = m - overlap * overlap;
    return std::clamp(d2, 0.0, m);
}

double procrustes_distance(const GrassmannPoint &a, const GrassmannPoint &b)
{
    return std::sqrt(procrustes_distance_sq(a, b));
}

GrassmannPoint extrinsic_mean(const std::vector<GrassmannPoint> &points)
{
    if (points.empty())
        throw shape_error("extrinsic_mean: empty point list");

    const arma::uword t = points.front().ambient_dim();
    const arma::uword m = points.front().subspace_dim();
    for (const auto &p : points)
        if (p.ambient_dim() != t || p.subspace_dim() != m)
            throw shape_error("extrinsic_mean: points live on different manifolds");

    arma::cx_mat avg(t, t, arma::fill::zeros);
    for (const auto &p : points)
        avg += p.basis().t() * p.basis();
    avg /= static_cast<double>(points.size());

    if (m == t) // the manifold is a single point
        return GrassmannPoint(arma::eye<arma::cx_mat>(m, t));

    arma::vec eigval;
    arma::cx_mat eigvec;
    if (!arma::eig_sym(eigval, eigvec, avg))
        throw numerical_degeneracy_error("extrinsic_mean: eigendecomposition failed");

    // eig_sym sorts ascending; the top-m eigenvectors sit in the last m columns.
    const double gap = eigval(t - m) - eigval(t - m - 1);
    if (gap < k_eigengap_tol)
        throw ambiguous_mean_error("extrinsic_mean: eigengap " + std::to_string(gap) +
                                   " below 1e-12, mean subspace is not unique");

    return GrassmannPoint(eigvec.tail_cols(m).t());
}

double cluster_separation(const std::vector<std::pair<GrassmannPoint, int>> &labeled)
{
    std::vector<int> classes;
    for (const auto &[point, label] : labeled)
        if (std::find(classes.begin(), classes.end(), label) == classes.end())
            classes.push_back(label);

    if (classes.size() < 2)
        throw config_error("cluster_separation: need at least 2 classes");
    for (int c : classes)
    {
        const auto n = std::count_if(labeled.begin(), labeled.end(),
                                     [c](const auto &e) { return e.second == c; });
        if (n < 2)
            throw config_error("cluster_separation: class " + std::to_string(c) +
                               " has fewer than 2 points");
    }

    double within_sum = 0.0, between_sum = 0.0;
    std::size_t within_n = 0, between_n = 0;
    for (std::size_t i = 0; i < labeled.size(); ++i)
        for (std::size_t j = i + 1; j < labeled.size(); ++j)
        {
            const double d2 = procrustes_distance_sq(labeled[i].first, labeled[j].first);
            if (labeled[i].second == labeled[j].second)
            {
                within_sum += d2;
                ++within_n;
            }
            else
            {
                between_sum += d2;
                ++between_n;
            }
        }

    const double within_mean = within_sum / static_cast<double>(within_n);
    const double between_mean = between_sum / static_cast<double>(between_n);
    if (within_mean == 0.0)
        return std::numeric_limits<double>::infinity();
    return between_mean / within_mean;
}

} // namespace grasslink
