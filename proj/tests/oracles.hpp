// SPDX-License-Identifier: Apache-2.0
//
// coexist: radar / cellular spectrum-coexistence simulation library
// Copyright (C) 2026 The coexist authors
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

#ifndef COEXIST_TEST_ORACLES_HPP
#define COEXIST_TEST_ORACLES_HPP

// Independent reference computations used only by tests. Nothing here goes through
// the SVD path of null_projector.

#include "coexist/types.hpp"

#include <Eigen/QR>

#include <random>

namespace coexist::testing
{
    inline CMatrix<double> random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng)
    {
        std::normal_distribution<double> n;
        CMatrix<double> x(rows, cols);
        for (Eigen::Index i = 0; i < x.size(); ++i)
            x(i) = {n(rng), n(rng)};
        return x;
    }

    // I - H^+ H with H^+ from a rank-revealing complete orthogonal decomposition
    inline CMatrix<double> pinv_null_projector(const CMatrix<double> &h, double rel_threshold = 1e-10)
    {
        Eigen::CompleteOrthogonalDecomposition<CMatrix<double>> cod;
        cod.setThreshold(rel_threshold);
        cod.compute(h);
        const CMatrix<double> pinv = cod.pseudoInverse();
        return CMatrix<double>::Identity(h.cols(), h.cols()) - pinv * h;
    }
}

#endif
