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

#ifndef COEXIST_BEAMPATTERN_HPP
#define COEXIST_BEAMPATTERN_HPP

#include "coexist/null_projection.hpp"
#include "coexist/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace coexist
{
    // How the gain normalisation constant Gamma is chosen
    enum class NormalizationRule
    {
        unit_reference_peak, // Gamma = 1 / M: the R = I gain at the steer direction is exactly 1 (0 dB)
        unity,               // Gamma = 1
        custom               // Gamma = BeampatternConfig::custom_gamma
    };

    template <typename Real = double>
    struct BeampatternConfig
    {
        ArrayGeometry<Real> geometry{100, Real(0.5)};
        AzimuthAngle<Real> steer_azimuth{Real(0)};
        NormalizationRule normalization = NormalizationRule::unit_reference_peak;
        Real custom_gamma = Real(1);
        std::vector<AzimuthAngle<Real>> grid;

        Real gamma() const
        {
            switch (normalization)
            {
            case NormalizationRule::unit_reference_peak:
                return Real(1) / Real(geometry.element_count);
            case NormalizationRule::unity:
                return Real(1);
            case NormalizationRule::custom:
                if (!(custom_gamma > Real(0)))
                    throw ValidationError("BeampatternConfig: custom_gamma must be > 0");
                return custom_gamma;
            }
            return Real(1);
        }

        void validate_grid() const
        {
            if (grid.empty())
                throw ValidationError("BeampatternConfig: evaluation grid is empty");
            for (std::size_t i = 1; i < grid.size(); ++i)
                if (!(grid[i].degrees() > grid[i - 1].degrees()))
                    throw ValidationError("BeampatternConfig: evaluation grid must be strictly increasing");
        }
    };

    template <typename Real = double>
    std::vector<AzimuthAngle<Real>> azimuth_grid(Real start, Real end, Real step)
    {
        std::vector<AzimuthAngle<Real>> out;
        for (Real deg : angle_grid(start, end, step))
            out.emplace_back(deg);
        return out;
    }

    // Relative threshold below which a^H(theta_D) R^T a(theta_D) counts as zero
    template <typename Real>
    inline constexpr Real degenerate_denominator_tolerance = Real(1e-12);

    namespace detail
    {
        // Precomputed R^T a(theta_D) and the denominator a^H(theta_D) R^T a(theta_D)
        template <typename Real>
        struct SteeredCorrelation
        {
            CVector<Real> rt_a_steer;
            Real denominator = Real(0);
        };

        template <typename Real>
        SteeredCorrelation<Real> steer(const CMatrix<Real> &r, const BeampatternConfig<Real> &config)
        {
            const Eigen::Index m = config.geometry.element_count;
            if (r.rows() != m || r.cols() != m)
                throw ValidationError("beampattern: correlation matrix is " + std::to_string(r.rows()) + "x" +
                                      std::to_string(r.cols()) + ", array has " + std::to_string(m) + " elements");

            const CVector<Real> a_d = steering_vector(config.geometry, config.steer_azimuth);
            SteeredCorrelation<Real> s;
            // R^T as written in the gain expression (equals conj(R) for Hermitian R)
            s.rt_a_steer = r.transpose() * a_d;
            s.denominator = a_d.dot(s.rt_a_steer).real(); // dot() conjugates its first argument

            const Real scale = Real(m) * std::abs(r.trace());
            if (!(s.denominator > degenerate_denominator_tolerance<Real> * scale) || !(scale > Real(0)))
                throw NumericalError("beampattern: steer direction " + std::to_string(config.steer_azimuth.degrees()) +
                                     " deg lies in the suppressed subspace (a^H R^T a = " +
                                     std::to_string(s.denominator) + ")");
            return s;
        }

        template <typename Real>
        Real gain_from(const SteeredCorrelation<Real> &s, const BeampatternConfig<Real> &config,
                       const AzimuthAngle<Real> &eval)
        {
            const CVector<Real> a = steering_vector(config.geometry, eval);
            return config.gamma() * std::norm(a.dot(s.rt_a_steer)) / s.denominator;
        }
    }

    // Transmit gain G(theta, theta_D) = Gamma |a^H(theta) R^T a(theta_D)|^2 / (a^H(theta_D) R^T a(theta_D))
    template <typename Real>
    Real gain(const CMatrix<Real> &r, const BeampatternConfig<Real> &config, const AzimuthAngle<Real> &eval_azimuth)
    {
        return detail::gain_from(detail::steer(r, config), config, eval_azimuth);
    }

    // dB values below this are reported as numerical zeros
    template <typename Real>
    inline constexpr Real db_floor = Real(-400);

    template <typename Real = double>
    struct BeampatternSample
    {
        Real azimuth_deg = Real(0);
        Real gain_db = Real(0);
        bool clamped = false;
    };

    template <typename Real = double>
    struct BeampatternSweep
    {
        std::vector<BeampatternSample<Real>> samples;
        Real reference_peak_db = Real(0); // 10 log10 of the unprojected (R = I) gain at the steer direction
    };

    template <typename Real>
    Real to_db(Real linear)
    {
        return Real(10) * std::log10(linear);
    }

    // Gain over config.grid in dB relative to the R = I gain at the steer direction.
    // Grid points may be split across workers; output order always follows the grid.
    template <typename Real>
    BeampatternSweep<Real> sweep(const CMatrix<Real> &r, const BeampatternConfig<Real> &config, std::size_t workers = 1)
    {
        config.validate_grid();
        const auto steered = detail::steer(r, config);

        // R = I reduces the gain to the array factor with peak Gamma * M at theta_D
        const Real reference = config.gamma() * Real(config.geometry.element_count);

        BeampatternSweep<Real> out;
        out.reference_peak_db = to_db(reference);
        out.samples.resize(config.grid.size());
        parallel_for(config.grid.size(), workers, [&](std::size_t i)
                     {
                         const Real g = detail::gain_from(steered, config, config.grid[i]) / reference;
                         BeampatternSample<Real> s;
                         s.azimuth_deg = config.grid[i].degrees();
                         const Real db = g > Real(0) ? to_db(g) : -std::numeric_limits<Real>::infinity();
                         s.clamped = !(db >= db_floor<Real>);
                         s.gain_db = s.clamped ? db_floor<Real> : db;
                         out.samples[i] = s; });
        return out;
    }

    // Worst (largest) gain in dB over the nulled azimuths; every azimuth must be on the sweep grid
    template <typename Real, typename Range>
    Real null_depth(const BeampatternSweep<Real> &sweep, const Range &nulled_azimuths_deg)
    {
        Real worst = -std::numeric_limits<Real>::infinity();
        bool any = false;
        for (const auto &az : nulled_azimuths_deg)
        {
            const Real deg = Real(az);
            auto it = std::find_if(sweep.samples.begin(), sweep.samples.end(), [&](const auto &s)
                                   { return std::abs(s.azimuth_deg - deg) <= Real(1e-9); });
            if (it == sweep.samples.end())
                throw ValidationError("null_depth: azimuth " + std::to_string(deg) + " deg is not on the sweep grid");
            worst = std::max(worst, it->gain_db);
            any = true;
        }
        if (!any)
            throw ValidationError("null_depth: nulled azimuth list is empty");
        return worst;
    }

    // BS sector (start, end, step) in degrees
    template <typename Real = double>
    struct Sector
    {
        Real start_deg = Real(30);
        Real end_deg = Real(35);
        Real step_deg = Real(1);
    };

    template <typename Real = double>
    struct ReductionOptions
    {
        Real radar_spacing = Real(0.5);
        Real bs_spacing = Real(0.5);
        Real rel_tolerance = Real(1e-10);
        bool renormalize = false;
        NormalizationRule normalization = NormalizationRule::unit_reference_peak;
    };

    // Mainlobe power reduction in dB caused by nulling a BS sector, with the target at
    // sector end + separation: 10 log10(G_I(target) / G_P(target)), both steered at the target.
    template <typename Real>
    Real mainlobe_reduction(Eigen::Index radar_elements, Eigen::Index bs_elements, const Sector<Real> &sector,
                            Real separation_deg, const ReductionOptions<Real> &opt = {})
    {
        const Real target_deg = sector.end_deg + separation_deg;
        if (!(target_deg >= Real(-90) && target_deg <= Real(90)))
            throw ValidationError("mainlobe_reduction: target azimuth " + std::to_string(target_deg) +
                                  " deg (sector end + separation) outside [-90, 90]");

        const ArrayGeometry<Real> radar(radar_elements, opt.radar_spacing);
        const ArrayGeometry<Real> bs(bs_elements, opt.bs_spacing);
        const auto h = sector_channel(radar, bs, sector.start_deg, sector.end_deg, sector.step_deg);
        const auto p = null_projector(h, opt.rel_tolerance);

        BeampatternConfig<Real> cfg;
        cfg.geometry = radar;
        cfg.steer_azimuth = AzimuthAngle<Real>(target_deg);
        cfg.normalization = opt.normalization;

        const CMatrix<Real> identity = CMatrix<Real>::Identity(radar_elements, radar_elements);
        const CMatrix<Real> projected = opt.renormalize ? renormalized_correlation(p) : p.matrix;
        const Real unprojected_gain = gain(identity, cfg, cfg.steer_azimuth);
        const Real projected_gain = gain(projected, cfg, cfg.steer_azimuth);
        return to_db(unprojected_gain / projected_gain);
    }

    // Point-target echo parameters
    template <typename Real = double>
    struct EchoModel
    {
        Complex<Real> path_gain{Real(1), Real(0)}; // alpha: propagation loss and reflection coefficient
        AzimuthAngle<Real> target_azimuth{Real(0)};
        Real noise_variance = Real(0); // per-element variance of the circular complex Gaussian noise
        std::uint64_t seed = 0;
    };

    // Snapshots y(n) = alpha a(theta) a^T(theta) x(n) + w(n), columns indexed by n
    template <typename Real>
    CMatrix<Real> simulate_echo(const WaveformBank<Real> &bank, const EchoModel<Real> &model,
                                const ArrayGeometry<Real> &geometry)
    {
        if (bank.antennas() != geometry.element_count)
            throw ValidationError("simulate_echo: bank has " + std::to_string(bank.antennas()) +
                                  " rows, geometry has " + std::to_string(geometry.element_count) + " elements");
        if (!(model.noise_variance >= Real(0)))
            throw ValidationError("simulate_echo: noise_variance must be >= 0");

        const CVector<Real> a = steering_vector(geometry, model.target_azimuth);
        // A(theta) x = a (a^T x): transpose, not conjugate transpose
        const Eigen::Matrix<Complex<Real>, 1, Eigen::Dynamic> radiated = a.transpose() * bank.samples;
        CMatrix<Real> y = model.path_gain * (a * radiated);

        if (model.noise_variance > Real(0))
        {
            detail::NormalStream normal(model.seed);
            const Real sigma = std::sqrt(model.noise_variance / Real(2));
            for (Eigen::Index n = 0; n < y.cols(); ++n)
                for (Eigen::Index m = 0; m < y.rows(); ++m)
                {
                    const Real re = Real(normal.next()), im = Real(normal.next());
                    y(m, n) += sigma * Complex<Real>(re, im);
                }
        }
        return y;
    }
}

#endif
