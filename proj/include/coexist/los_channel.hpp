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

#ifndef COEXIST_LOS_CHANNEL_HPP
#define COEXIST_LOS_CHANNEL_HPP

#include "coexist/array_model.hpp"

#include <span>
#include <vector>

namespace coexist
{
    // Parameters of one radar -> BS line-of-sight link
    template <typename Real = double>
    struct LosChannelParams
    {
        Real attenuation = Real(1);         // a, amplitude, > 0
        Real distance = Real(0);            // d [m], radar element 0 to BS element 0
        Real carrier_wavelength = Real(1);  // lambda_c [m]
        ArrayGeometry<Real> radar_geometry; // M, Delta_M
        ArrayGeometry<Real> bs_geometry;    // N, Delta_N
        AzimuthAngle<Real> radar_azimuth;   // direction of the BS as seen from the radar broadside
        AzimuthAngle<Real> bs_azimuth;      // direction of the radar as seen from the BS broadside

        void validate() const
        {
            if (!(attenuation > Real(0)))
                throw ValidationError("LosChannelParams: attenuation must be > 0");
            if (!(distance >= Real(0)))
                throw ValidationError("LosChannelParams: distance must be >= 0");
            if (!(carrier_wavelength > Real(0)))
                throw ValidationError("LosChannelParams: carrier_wavelength must be > 0");
        }
    };

    enum class ChannelSource
    {
        single_los,
        composite
    };

    // N x M interference channel; H * x is the BS-received radar interference
    template <typename Real = double>
    struct ChannelMatrix
    {
        CMatrix<Real> entries;
        ChannelSource source = ChannelSource::single_los;
        Eigen::Index blocks = 1; // number of stacked single-LoS blocks

        Eigen::Index rows() const { return entries.rows(); }
        Eigen::Index cols() const { return entries.cols(); }
    };

    // Directional cosine of the radar-side spatial signature.
    //
    // The radar radiates a^T(theta) x toward theta (the transmit half of A = a a^T), so
    // the channel row toward a BS at azimuth theta must be a^T(theta) / sqrt(M). Since
    // the row is written e_M(Omega_M)^H, this requires Omega_M = -sin(theta).
    template <typename Real>
    Real radar_departure_omega(const AzimuthAngle<Real> &azimuth)
    {
        return -azimuth.omega();
    }

    // Rank-1 LoS channel from explicit directional cosines:
    //   H = a sqrt(N M) exp(-j 2 pi d / lambda_c) e_N(Omega_N) e_M(Omega_M)^H
    template <typename Real = double>
    ChannelMatrix<Real> los_channel(Real attenuation, Real distance, Real carrier_wavelength,
                                   const ArrayGeometry<Real> &radar, Real omega_radar,
                                   const ArrayGeometry<Real> &bs, Real omega_bs)
    {
        const Eigen::Index m = radar.element_count, n = bs.element_count;
        const Real cycles = distance / carrier_wavelength;
        const Real frac = cycles - std::floor(cycles); // 2 pi periodicity, keeps the phase argument small
        const Complex<Real> scalar = std::polar(attenuation * std::sqrt(Real(n) * Real(m)), -Real(2) * pi<Real> * frac);

        const CVector<Real> e_n = unit_signature(n, bs.spacing, omega_bs);
        const CVector<Real> e_m = unit_signature(m, radar.spacing, omega_radar);

        ChannelMatrix<Real> h;
        h.entries = scalar * (e_n * e_m.adjoint());
        h.source = ChannelSource::single_los;
        h.blocks = 1;
        return h;
    }

    template <typename Real = double>
    ChannelMatrix<Real> los_channel(const LosChannelParams<Real> &p)
    {
        p.validate();
        return los_channel(p.attenuation, p.distance, p.carrier_wavelength,
                           p.radar_geometry, radar_departure_omega(p.radar_azimuth),
                           p.bs_geometry, p.bs_azimuth.omega());
    }

    // Vertical stack of channel blocks sharing the radar dimension M
    template <typename Real = double>
    ChannelMatrix<Real> composite_channel(std::span<const ChannelMatrix<Real>> channels)
    {
        if (channels.empty())
            throw ValidationError("composite_channel: channel list is empty");

        const Eigen::Index m = channels.front().cols();
        Eigen::Index rows = 0, blocks = 0;
        for (std::size_t i = 0; i < channels.size(); ++i)
        {
            if (channels[i].cols() != m)
                throw ValidationError("composite_channel: block " + std::to_string(i) + " has " +
                                      std::to_string(channels[i].cols()) + " columns, expected " + std::to_string(m));
            rows += channels[i].rows();
            blocks += channels[i].blocks;
        }

        ChannelMatrix<Real> out;
        out.entries.resize(rows, m);
        Eigen::Index r = 0;
        for (const auto &c : channels)
        {
            out.entries.middleRows(r, c.rows()) = c.entries;
            r += c.rows();
        }
        out.source = ChannelSource::composite;
        out.blocks = blocks;
        return out;
    }

    template <typename Real = double>
    ChannelMatrix<Real> composite_channel(const std::vector<ChannelMatrix<Real>> &channels)
    {
        return composite_channel(std::span<const ChannelMatrix<Real>>(channels));
    }

    // Closed angle grid start, start+step, ..., end. Angles are computed from the
    // integer step index (no accumulation); end is included when it lies on the grid
    // to within 1e-9 steps.
    template <typename Real = double>
    std::vector<Real> angle_grid(Real start, Real end, Real step)
    {
        if (!(step > Real(0)))
            throw ValidationError("angle grid: step must be > 0");
        if (end < start)
            throw ValidationError("angle grid: end " + std::to_string(end) + " < start " + std::to_string(start));

        const auto count = static_cast<long long>(std::floor((end - start) / step + Real(1e-9))) + 1;
        std::vector<Real> grid;
        grid.reserve(std::size_t(count));
        for (long long i = 0; i < count; ++i)
        {
            Real v = start + Real(i) * step;
            // snap to 1e-9 deg to strip binary representation noise such as 30.000000000000004
            v = std::round(v * Real(1e9)) / Real(1e9);
            grid.push_back(std::min(v, end));
        }
        return grid;
    }

    // Composite channel protecting a BS sector: one N-element BS per grid angle of the sector
    template <typename Real = double>
    ChannelMatrix<Real> sector_channel(const ArrayGeometry<Real> &radar, const ArrayGeometry<Real> &bs,
                                       Real sector_start_deg, Real sector_end_deg, Real sector_step_deg,
                                       Real attenuation = Real(1), Real distance = Real(0),
                                       Real carrier_wavelength = Real(1), Real bs_azimuth_deg = Real(0))
    {
        std::vector<ChannelMatrix<Real>> blocks;
        for (Real deg : angle_grid(sector_start_deg, sector_end_deg, sector_step_deg))
        {
            LosChannelParams<Real> p;
            p.attenuation = attenuation;
            p.distance = distance;
            p.carrier_wavelength = carrier_wavelength;
            p.radar_geometry = radar;
            p.bs_geometry = bs;
            p.radar_azimuth = AzimuthAngle<Real>(deg);
            p.bs_azimuth = AzimuthAngle<Real>(bs_azimuth_deg);
            blocks.push_back(los_channel(p));
        }
        return composite_channel(blocks);
    }
}

#endif
