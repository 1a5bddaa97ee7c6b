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

#ifndef GRASSLINK_GRASSMANN_HPP
#define GRASSLINK_GRASSMANN_HPP

#include <armadillo>
#include <utility>
#include <vector>

namespace grasslink
{

// A point on the complex Grassmann manifold G_{T,m}, held as an m x T basis
// matrix with orthonormal rows (G * G^H = I_m). The basis representative is
// arbitrary: two points are the same manifold point iff their squared
// Procrustes distance is zero, and no canonicalization is applied.
class GrassmannPoint
{
  public:
    // Validates semi-unitarity (||G G^H - I||_F <= 1e-9) and 1 <= m <= T.
    explicit GrassmannPoint(arma::cx_mat basis);

    const arma::cx_mat &basis() const noexcept { return basis_; }
    arma::uword ambient_dim() const noexcept { return basis_.n_cols; }  // T
    arma::uword subspace_dim() const noexcept { return basis_.n_rows; } // m

  private:
    arma::cx_mat basis_;
};

// An Nt x T data matrix awaiting projection onto the manifold (fat: T >= Nt).
struct DataMatrix
{
    arma::cx_mat entries;
};

// Reshape a length-L row vector into an Nt x T matrix whose rows are the
// consecutive length-T chunks of the input. If Nt does not divide L the input
// is zero-padded at the tail so that T = ceil(L / Nt).
DataMatrix vector_to_matrix(const arma::cx_rowvec &sample, arma::uword n_tx);

// Project a full-row-rank data matrix X onto G_{T,Nt} through the SVD
// X = U * S * G; returns the right factor G spanning the row space of X.
// Throws degenerate_sample_error when sigma_min <= 1e-12 * sigma_max.
GrassmannPoint svd_project(const DataMatrix &x);

// Same projection through the LQ decomposition X = L * G (L lower triangular).
// Identical manifold point as svd_project for any full-rank input.
GrassmannPoint lq_project(const DataMatrix &x);

// Squared Procrustes distance d_p^2 = m - ||A * B^H||_F^2, clamped to [0, m].
// Equals the sum of squared sines of the principal angles between the spans.
double procrustes_distance_sq(const GrassmannPoint &a, const GrassmannPoint &b);

// d_p = sqrt(d_p^2); range [0, sqrt(m)].
double procrustes_distance(const GrassmannPoint &a, const GrassmannPoint &b);

// Extrinsic (chordal) mean: the point whose projector is spanned by the top-m
// eigenvectors of the averaged projector (1/N) * sum G_i^H G_i. This is the
// exact global minimizer of sum_i d_p^2(mean, G_i) over the manifold.
// Throws ambiguous_mean_error when the eigengap at the cut is below 1e-12.
GrassmannPoint extrinsic_mean(const std::vector<GrassmannPoint> &points);

// Cluster-separation statistic of a labeled manifold dataset:
// (mean between-class pairwise d_p^2) / (mean within-class pairwise d_p^2).
// Values above 1 indicate that class structure survived the encoding.
// Returns +infinity when every within-class pair coincides.
double cluster_separation(const std::vector<std::pair<GrassmannPoint, int>> &labeled);

} // namespace grasslink

#endif
