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

#ifndef COEXIST_NULL_PROJECTION_HPP
#define COEXIST_NULL_PROJECTION_HPP

#include "coexist/los_channel.hpp"
#include "coexist/waveform.hpp"

#include <Eigen/SVD>

namespace coexist
{
    // Orthogonal projector onto null(H). Hermitian, idempotent, trace M - channel_rank.
    template <typename Real = double>
    struct NullSpaceProjector
    {
        CMatrix<Real> matrix;
        Eigen::Index channel_rank = 0;
        Real tolerance = Real(0); // relative threshold used for the rank decision

        Eigen::Index dimension() const { return matrix.rows(); }
        Eigen::Index null_dimension() const { return matrix.rows() - channel_rank; }
    };

    // P = V0 V0^H where V0 holds the right-singular vectors of H whose singular
    // values are <= rel_tolerance * sigma_max (plus those beyond min(rows, cols)).
    // Throws InfeasibleProjection when H has full column rank.
    template <typename Derived>
    auto null_projector(const Eigen::MatrixBase<Derived> &h,
                        typename Eigen::NumTraits<typename Derived::Scalar>::Real rel_tolerance = 1e-10)
    {
        using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
        using Mat = CMatrix<Real>;

        const Eigen::Index m = h.cols();
        if (m < 1)
            throw ValidationError("null_projector: channel has no columns");
        if (!(rel_tolerance >= Real(0)))
            throw ValidationError("null_projector: rel_tolerance must be >= 0");

        Mat hc = h.template cast<Complex<Real>>();
        Eigen::JacobiSVD<Mat> svd(hc, Eigen::ComputeFullV);
        const auto &sv = svd.singularValues();
        if (sv.size() == 0 || !(sv(0) > Real(0)))
            throw ValidationError("null_projector: channel matrix is zero");

        const Real threshold = rel_tolerance * sv(0);
        Eigen::Index rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > threshold)
                ++rank;

        if (rank >= m)
            throw InfeasibleProjection("null_projector: channel has full column rank " + std::to_string(rank) +
                                       " = M; null-space projection needs more radar elements than nulled directions");

        const auto v0 = svd.matrixV().rightCols(m - rank);
        NullSpaceProjector<Real> p;
        p.matrix = v0 * v0.adjoint();
        // exact Hermitian symmetry; the product is Hermitian only up to roundoff
        p.matrix = (Real(0.5) * (p.matrix + p.matrix.adjoint())).eval();
        p.channel_rank = rank;
        p.tolerance = rel_tolerance;
        return p;
    }

    template <typename Real>
    NullSpaceProjector<Real> null_projector(const ChannelMatrix<Real> &h, Real rel_tolerance = Real(1e-10))
    {
        return null_projector(h.entries, rel_tolerance);
    }

    // Projected bank X~ = P X. With renormalize, X~ is rescaled to the Frobenius power of X
    // (a what-if extension; the default keeps the projection power loss).
    template <typename Real>
    WaveformBank<Real> project_bank(const WaveformBank<Real> &bank, const NullSpaceProjector<Real> &p,
                                    bool renormalize = false)
    {
        if (bank.antennas() != p.dimension())
            throw ValidationError("project_bank: bank has " + std::to_string(bank.antennas()) +
                                  " rows but projector dimension is " + std::to_string(p.dimension()));

        WaveformBank<Real> out;
        out.samples = p.matrix * bank.samples;
        out.seed = bank.seed;
        out.algorithm = bank.algorithm;
        if (renormalize)
        {
            const Real before = bank.samples.norm(), after = out.samples.norm();
            if (after > Real(0))
                out.samples *= before / after;
        }
        return out;
    }

    // With identity input correlation the projected correlation P R P^H is P itself
    template <typename Real>
    const CMatrix<Real> &projected_correlation(const NullSpaceProjector<Real> &p)
    {
        return p.matrix;
    }

    // Projected correlation rescaled to trace M (matches project_bank(..., renormalize = true) for orthogonal banks)
    template <typename Real>
    CMatrix<Real> renormalized_correlation(const NullSpaceProjector<Real> &p)
    {
        const Real tr = p.matrix.trace().real();
        if (!(tr > Real(0)))
            throw NumericalError("renormalized_correlation: projector has zero trace");
        return p.matrix * (Real(p.dimension()) / tr);
    }
}

#endif
