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

#ifndef GRASSLINK_ERRORS_HPP
#define GRASSLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grasslink
{

// Invalid user-supplied configuration (bad class count, bad antenna count, ...).
class config_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Matrix/vector dimensions do not line up.
class shape_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// A dataset of size zero was requested or supplied.
class empty_dataset_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// A data matrix is rank deficient and cannot be projected onto the manifold.
class degenerate_sample_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// The averaged projector has no usable eigengap, the subspace mean is not unique.
class ambiguous_mean_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// A matrix factorization failed even after jitter escalation.
class numerical_degeneracy_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Classifier training received an unusable training set (e.g. an empty class).
class training_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// The overhead search could not meet the target error even at the shortest frame.
// Carries the best error rate that was achieved during the search.
class unreachable_target_error : public std::runtime_error
{
  public:
    unreachable_target_error(const std::string &msg, double best_error)
        : std::runtime_error(msg), best_error_(best_error) {}

    double best_error() const noexcept { return best_error_; }

  private:
    double best_error_;
};

} // namespace grasslink

#endif
