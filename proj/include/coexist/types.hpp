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

#ifndef COEXIST_TYPES_HPP
#define COEXIST_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coexist
{
    // Dense complex containers, templated on the real scalar (float or double)
    template <typename Real>
    using Complex = std::complex<Real>;

    template <typename Real>
    using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

    template <typename Real>
    using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

    template <typename Real>
    using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

    template <typename Real>
    inline constexpr Real pi = std::numbers::pi_v<Real>;

    template <typename Real>
    constexpr Real deg_to_rad(Real deg) { return deg * pi<Real> / Real(180); }

    // Error categories. The CLI maps each to a distinct exit code.

    // A configuration document could not be read as a key tree
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // An input violates a documented invariant (angle range, L >= M, ...)
    class ValidationError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // The channel leaves no null space for the radar to transmit into
    class InfeasibleProjection : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A quantity is numerically undefined (zero denominator, infinite coherence time)
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Max-abs entry of a dense expression, used throughout the tolerance checks
    template <typename Derived>
    auto max_abs(const Eigen::MatrixBase<Derived> &m)
    {
        return m.cwiseAbs().maxCoeff();
    }
}

#endif
