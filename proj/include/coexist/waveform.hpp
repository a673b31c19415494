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

#ifndef COEXIST_WAVEFORM_HPP
#define COEXIST_WAVEFORM_HPP

#include "coexist/types.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <string>

namespace coexist
{
    // Identifier of the synthesis algorithm, stored with every generated bank so
    // that sweeps can be reproduced from (M, L, seed) alone.
    inline constexpr const char *waveform_algorithm_id = "mt19937_64/box-muller/householder-qr/v1";

    // M x L complex baseband samples, row m = antenna m, column n = time sample n.
    // Banks built by generate_orthogonal satisfy (1/L) X X^H = I.
    template <typename Real = double>
    struct WaveformBank
    {
        CMatrix<Real> samples;
        std::uint64_t seed = 0;
        std::string algorithm;

        Eigen::Index antennas() const { return samples.rows(); }
        Eigen::Index sample_count() const { return samples.cols(); }
    };

    namespace detail
    {
        // Portable standard-normal stream: std::normal_distribution is implementation
        // defined, so the transform from 64-bit words is spelled out here.
        class NormalStream
        {
        public:
            explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

            double next()
            {
                if (has_spare_)
                {
                    has_spare_ = false;
                    return spare_;
                }
                // u1 in (0, 1], u2 in [0, 1)
                const double u1 = (double(engine_() >> 11) + 1.0) * 0x1.0p-53;
                const double u2 = double(engine_() >> 11) * 0x1.0p-53;
                const double r = std::sqrt(-2.0 * std::log(u1));
                const double t = 2.0 * std::numbers::pi * u2;
                spare_ = r * std::sin(t);
                has_spare_ = true;
                return r * std::cos(t);
            }

        private:
            std::mt19937_64 engine_;
            double spare_ = 0.0;
            bool has_spare_ = false;
        };
    }

    // Orthogonal waveform bank: Gaussian draw, row orthonormalisation (thin Householder QR), scale by sqrt(L)
    template <typename Real = double>
    WaveformBank<Real> generate_orthogonal(Eigen::Index antennas, Eigen::Index sample_count, std::uint64_t seed)
    {
        if (antennas < 1)
            throw ValidationError("generate_orthogonal: antenna count M must be >= 1, got " + std::to_string(antennas));
        if (sample_count < antennas)
            throw ValidationError("generate_orthogonal: sample count L = " + std::to_string(sample_count) +
                                  " is smaller than antenna count M = " + std::to_string(antennas) +
                                  "; identity correlation requires L >= M");

        // Column j of the L x M draw becomes row j of the bank
        detail::NormalStream normal(seed);
        CMatrix<Real> draw(sample_count, antennas);
        for (Eigen::Index j = 0; j < antennas; ++j)
            for (Eigen::Index n = 0; n < sample_count; ++n)
            {
                const double re = normal.next();
                const double im = normal.next();
                draw(n, j) = Complex<Real>(Real(re), Real(im));
            }

        Eigen::HouseholderQR<CMatrix<Real>> qr(draw);
        CMatrix<Real> q = qr.householderQ() * CMatrix<Real>::Identity(sample_count, antennas);

        WaveformBank<Real> bank;
        bank.samples = std::sqrt(Real(sample_count)) * q.adjoint();
        bank.seed = seed;
        bank.algorithm = waveform_algorithm_id;
        return bank;
    }

    // Time-averaged correlation (1/L) X X^H
    template <typename Derived>
    auto correlation(const Eigen::MatrixBase<Derived> &samples)
    {
        using Scalar = typename Derived::Scalar;
        using Real = typename Eigen::NumTraits<Scalar>::Real;
        using Result = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
        if (samples.cols() == 0)
            return Result(Result::Zero(samples.rows(), samples.rows()));
        Result r = samples * samples.adjoint();
        r /= Real(samples.cols());
        return r;
    }

    template <typename Real>
    CMatrix<Real> correlation(const WaveformBank<Real> &bank)
    {
        return correlation(bank.samples);
    }

    // Debug dump: one line per antenna, interleaved re,im per sample. Not a stable interchange format.
    template <typename Real>
    void write_csv(std::ostream &os, const WaveformBank<Real> &bank)
    {
        os << "# algorithm=" << bank.algorithm << " seed=" << bank.seed << " M=" << bank.antennas()
           << " L=" << bank.sample_count() << '\n';
        os << std::scientific << std::setprecision(std::numeric_limits<Real>::max_digits10 - 1);
        for (Eigen::Index m = 0; m < bank.antennas(); ++m)
        {
            for (Eigen::Index n = 0; n < bank.sample_count(); ++n)
            {
                if (n)
                    os << ',';
                os << bank.samples(m, n).real() << ',' << bank.samples(m, n).imag();
            }
            os << '\n';
        }
    }
}

#endif
