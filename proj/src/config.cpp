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

#include "coexist/config.hpp"
#include "coexist/sea_kinematics.hpp"
#include "coexist/types.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace coexist
{
    using json = nlohmann::json;

    namespace
    {
        // Walks one JSON object, remembering which keys were read so leftovers can be rejected
        class ObjectReader
        {
        public:
            ObjectReader(const json &node, std::string path) : node_(node), path_(std::move(path))
            {
                if (!node_.is_object())
                    throw ParseError("key '" + display() + "': expected an object");
            }

            ~ObjectReader() = default;

            bool has(const std::string &key)
            {
                seen_.insert(key);
                return node_.contains(key) && !node_.at(key).is_null();
            }

            std::string key_path(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

            double number(const std::string &key, double &out)
            {
                if (has(key))
                    out = as_number(node_.at(key), key_path(key));
                return out;
            }

            void optional_number(const std::string &key, std::optional<double> &out)
            {
                if (has(key))
                    out = as_number(node_.at(key), key_path(key));
            }

            void integer(const std::string &key, long &out)
            {
                if (has(key))
                    out = as_integer(node_.at(key), key_path(key));
            }

            void unsigned_integer(const std::string &key, std::uint64_t &out)
            {
                if (!has(key))
                    return;
                const json &v = node_.at(key);
                if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
                    throw ParseError("key '" + key_path(key) + "': expected a non-negative integer");
                out = v.get<std::uint64_t>();
            }

            void boolean(const std::string &key, bool &out)
            {
                if (!has(key))
                    return;
                if (!node_.at(key).is_boolean())
                    throw ParseError("key '" + key_path(key) + "': expected true or false");
                out = node_.at(key).get<bool>();
            }

            void string(const std::string &key, std::string &out)
            {
                if (!has(key))
                    return;
                if (!node_.at(key).is_string())
                    throw ParseError("key '" + key_path(key) + "': expected a string");
                out = node_.at(key).get<std::string>();
            }

            template <typename T, typename Convert>
            void list(const std::string &key, std::vector<T> &out, Convert convert)
            {
                if (!has(key))
                    return;
                const json &v = node_.at(key);
                if (!v.is_array())
                    throw ParseError("key '" + key_path(key) + "': expected a list");
                out.clear();
                for (std::size_t i = 0; i < v.size(); ++i)
                    out.push_back(convert(v[i], key_path(key) + "[" + std::to_string(i) + "]"));
            }

            const json &child(const std::string &key) const { return node_.at(key); }

            // Must be called once all expected keys are consumed
            void reject_unknown() const
            {
                for (const auto &item : node_.items())
                    if (!seen_.count(item.key()))
                        throw ParseError("unknown key '" + key_path(item.key()) + "'");
            }

            static double as_number(const json &v, const std::string &where)
            {
                if (!v.is_number())
                    throw ParseError("key '" + where + "': expected a number");
                return v.get<double>();
            }

            static long as_integer(const json &v, const std::string &where)
            {
                if (!v.is_number_integer())
                    throw ParseError("key '" + where + "': expected an integer");
                return v.get<long>();
            }

        private:
            std::string display() const { return path_.empty() ? "<root>" : path_; }

            const json &node_;
            std::string path_;
            std::set<std::string> seen_;
        };

        double speed_factor(const std::string &unit, const std::string &where)
        {
            if (unit == "kn")
                return units::knot_mps;
            if (unit == "mps")
                return 1.0;
            throw ParseError("key '" + where + "': unknown speed unit '" + unit + "' (expected kn or mps)");
        }

        double length_factor(const std::string &unit, const std::string &where)
        {
            if (unit == "ft")
                return units::foot_m;
            if (unit == "m")
                return 1.0;
            throw ParseError("key '" + where + "': unknown length unit '" + unit + "' (expected ft or m)");
        }

        void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw ValidationError("invalid configuration: " + what);
        }

        bool in_azimuth_range(double deg) { return deg >= -90.0 && deg <= 90.0; }
    }

    ScenarioConfig::Sea ScenarioConfig::default_sea()
    {
        Sea sea;
        for (int kn = 1; kn <= 32; ++kn)
            sea.ship_speeds_mps.push_back(units::knots_to_mps(double(kn)));
        // Wave geometry in feet, wind in knots, 200 nmi fetch
        auto state = [](std::string name, double height_ft, double length_ft, double wind_kn)
        {
            return SeaStateEntry{std::move(name), units::feet_to_m(height_ft), units::feet_to_m(length_ft),
                                 units::knots_to_mps(wind_kn), 200.0};
        };
        sea.states = {state("calm", 1.0, 100.0, 10.0),
                      state("moderate", 5.0, 100.0, 20.0),
                      state("rough", 15.0, 150.0, 30.0)};
        return sea;
    }

    double ScenarioConfig::carrier_wavelength_m() const
    {
        return units::wavelength(channel.carrier_frequency_hz);
    }

    double ScenarioConfig::steer_azimuth_deg() const
    {
        if (target.azimuth_deg)
            return *target.azimuth_deg;
        if (target.separation_deg)
            return bs.sector_end_deg + *target.separation_deg;
        return radar.steer_azimuth_deg;
    }

    void ScenarioConfig::validate() const
    {
        require(radar.elements >= 1, "radar.elements must be >= 1");
        require(radar.spacing > 0.0, "radar.spacing must be > 0 wavelengths");
        require(in_azimuth_range(radar.steer_azimuth_deg), "radar.steer_azimuth_deg must lie in [-90, 90]");

        require(bs.elements >= 1, "bs.elements must be >= 1");
        require(bs.spacing > 0.0, "bs.spacing must be > 0 wavelengths");
        require(in_azimuth_range(bs.azimuth_deg), "bs.azimuth_deg must lie in [-90, 90]");
        require(bs.sector_step_deg > 0.0, "bs.sector_step_deg must be > 0");
        require(bs.sector_start_deg <= bs.sector_end_deg, "bs.sector_start_deg must be <= bs.sector_end_deg");
        require(in_azimuth_range(bs.sector_start_deg) && in_azimuth_range(bs.sector_end_deg),
                "bs sector must lie in [-90, 90]");

        require(!(target.azimuth_deg && target.separation_deg),
                "target.azimuth_deg and target.separation_deg are mutually exclusive");
        require(in_azimuth_range(steer_azimuth_deg()),
                "beampattern steer/target azimuth " + std::to_string(steer_azimuth_deg()) + " must lie in [-90, 90]");

        require(channel.attenuation > 0.0, "channel.attenuation must be > 0");
        require(channel.distance_m >= 0.0, "channel.distance_m must be >= 0");
        require(channel.carrier_frequency_hz > 0.0, "channel.carrier_frequency_hz must be > 0");

        require(waveform.sample_count >= radar.elements,
                "waveform.L = " + std::to_string(waveform.sample_count) + " is smaller than radar.elements = " +
                    std::to_string(radar.elements) + " (identity correlation needs L >= M)");

        require(projection.rel_tolerance >= 0.0 && projection.rel_tolerance < 1.0,
                "projection.rel_tolerance must lie in [0, 1)");

        require(sweep.step_deg > 0.0, "sweep.step_deg must be > 0");
        require(sweep.start_deg <= sweep.end_deg, "sweep.start_deg must be <= sweep.end_deg");
        require(in_azimuth_range(sweep.start_deg) && in_azimuth_range(sweep.end_deg), "sweep grid must lie in [-90, 90]");

        require(!reduction.element_counts.empty(), "reduction.element_counts must be nonempty");
        for (long m : reduction.element_counts)
            require(m >= 1, "reduction.element_counts entries must be >= 1");
        require(!reduction.separations_deg.empty(), "reduction.separations_deg must be nonempty");

        require(!sea.ship_speeds_mps.empty(), "sea.ship_speeds must be nonempty");
        for (double v : sea.ship_speeds_mps)
            require(v >= 0.0 && std::isfinite(v), "sea.ship_speeds entries must be finite and >= 0");
        require(!sea.states.empty(), "sea.states must be nonempty");
        for (const auto &s : sea.states)
        {
            require(s.wave_height_m > 0.0 && s.wave_length_m > 0.0, "sea state '" + s.name + "': wave height and length must be > 0");
            require(s.wave_height_m < s.wave_length_m, "sea state '" + s.name + "': steepness must be < 1");
            require(s.wind_speed_mps >= 0.0 && s.fetch_nmi >= 0.0, "sea state '" + s.name + "': wind speed and fetch must be >= 0");
        }

        require(radarsys.pri_s > 0.0, "radarsys.pri_s must be > 0");
        require(radarsys.required_margin > 0.0, "radarsys.required_margin must be > 0");
    }

    bool operator==(const ScenarioConfig &a, const ScenarioConfig &b)
    {
        // the canonical document covers every field
        return serialize_config(a) == serialize_config(b);
    }

    ScenarioConfig parse_config(std::string_view text)
    {
        ScenarioConfig c;
        if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        {
            c.validate();
            return c;
        }

        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            // e.what() carries "at line L, column C"
            throw ParseError(std::string("configuration syntax error: ") + e.what());
        }

        ObjectReader root(doc, "");
        auto section = [&](const std::string &name, auto &&fill)
        {
            if (root.has(name))
            {
                ObjectReader r(root.child(name), name);
                fill(r);
                r.reject_unknown();
            }
        };

        section("radar", [&](ObjectReader &r)
                {
                    r.integer("elements", c.radar.elements);
                    r.number("spacing", c.radar.spacing);
                    r.number("steer_azimuth_deg", c.radar.steer_azimuth_deg); });
        section("bs", [&](ObjectReader &r)
                {
                    r.integer("elements", c.bs.elements);
                    r.number("spacing", c.bs.spacing);
                    r.number("sector_start_deg", c.bs.sector_start_deg);
                    r.number("sector_end_deg", c.bs.sector_end_deg);
                    r.number("sector_step_deg", c.bs.sector_step_deg);
                    r.number("azimuth_deg", c.bs.azimuth_deg); });
        section("target", [&](ObjectReader &r)
                {
                    r.optional_number("azimuth_deg", c.target.azimuth_deg);
                    r.optional_number("separation_deg", c.target.separation_deg); });
        section("channel", [&](ObjectReader &r)
                {
                    r.number("attenuation", c.channel.attenuation);
                    r.number("distance_m", c.channel.distance_m);
                    r.number("carrier_frequency_hz", c.channel.carrier_frequency_hz); });
        section("waveform", [&](ObjectReader &r)
                {
                    r.integer("L", c.waveform.sample_count);
                    r.unsigned_integer("seed", c.waveform.seed); });
        section("projection", [&](ObjectReader &r)
                {
                    r.number("rel_tolerance", c.projection.rel_tolerance);
                    r.boolean("renormalize", c.projection.renormalize); });
        section("sweep", [&](ObjectReader &r)
                {
                    r.number("start_deg", c.sweep.start_deg);
                    r.number("end_deg", c.sweep.end_deg);
                    r.number("step_deg", c.sweep.step_deg); });
        section("reduction", [&](ObjectReader &r)
                {
                    r.list("element_counts", c.reduction.element_counts, ObjectReader::as_integer);
                    r.list("separations_deg", c.reduction.separations_deg, ObjectReader::as_number); });
        section("sea", [&](ObjectReader &r)
                {
                    std::string speed_unit = "kn", length_unit = "ft";
                    r.string("speed_unit", speed_unit);
                    r.string("length_unit", length_unit);
                    const double vf = speed_factor(speed_unit, r.key_path("speed_unit"));
                    const double lf = length_factor(length_unit, r.key_path("length_unit"));

                    std::vector<double> speeds;
                    r.list("ship_speeds", speeds, ObjectReader::as_number);
                    if (r.has("ship_speeds"))
                    {
                        c.sea.ship_speeds_mps.clear();
                        for (double v : speeds)
                            c.sea.ship_speeds_mps.push_back(v * vf);
                    }

                    if (r.has("states"))
                    {
                        const json &states = r.child("states");
                        if (!states.is_array())
                            throw ParseError("key 'sea.states': expected a list");
                        c.sea.states.clear();
                        for (std::size_t i = 0; i < states.size(); ++i)
                        {
                            ObjectReader s(states[i], "sea.states[" + std::to_string(i) + "]");
                            ScenarioConfig::SeaStateEntry e;
                            e.name = "state" + std::to_string(i);
                            double height = 0.0, length = 0.0, wind = 0.0;
                            s.string("name", e.name);
                            s.number("wave_height", height);
                            s.number("wave_length", length);
                            s.number("wind_speed", wind);
                            s.number("fetch_nmi", e.fetch_nmi);
                            s.reject_unknown();
                            e.wave_height_m = height * lf;
                            e.wave_length_m = length * lf;
                            e.wind_speed_mps = wind * vf;
                            c.sea.states.push_back(std::move(e));
                        }
                    } });
        section("radarsys", [&](ObjectReader &r)
                {
                    r.number("pri_s", c.radarsys.pri_s);
                    r.number("required_margin", c.radarsys.required_margin); });
        root.reject_unknown();

        c.validate();
        return c;
    }

    ScenarioConfig load_config(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ParseError("cannot open configuration file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    std::string serialize_config(const ScenarioConfig &c)
    {
        json doc;
        doc["radar"] = {{"elements", c.radar.elements}, {"spacing", c.radar.spacing}, {"steer_azimuth_deg", c.radar.steer_azimuth_deg}};
        doc["bs"] = {{"elements", c.bs.elements},
                     {"spacing", c.bs.spacing},
                     {"sector_start_deg", c.bs.sector_start_deg},
                     {"sector_end_deg", c.bs.sector_end_deg},
                     {"sector_step_deg", c.bs.sector_step_deg},
                     {"azimuth_deg", c.bs.azimuth_deg}};
        doc["target"] = json::object();
        if (c.target.azimuth_deg)
            doc["target"]["azimuth_deg"] = *c.target.azimuth_deg;
        if (c.target.separation_deg)
            doc["target"]["separation_deg"] = *c.target.separation_deg;
        doc["channel"] = {{"attenuation", c.channel.attenuation},
                          {"distance_m", c.channel.distance_m},
                          {"carrier_frequency_hz", c.channel.carrier_frequency_hz}};
        doc["waveform"] = {{"L", c.waveform.sample_count}, {"seed", c.waveform.seed}};
        doc["projection"] = {{"rel_tolerance", c.projection.rel_tolerance}, {"renormalize", c.projection.renormalize}};
        doc["sweep"] = {{"start_deg", c.sweep.start_deg}, {"end_deg", c.sweep.end_deg}, {"step_deg", c.sweep.step_deg}};
        doc["reduction"] = {{"element_counts", c.reduction.element_counts}, {"separations_deg", c.reduction.separations_deg}};

        json states = json::array();
        for (const auto &s : c.sea.states)
            states.push_back({{"name", s.name},
                              {"wave_height", s.wave_height_m},
                              {"wave_length", s.wave_length_m},
                              {"wind_speed", s.wind_speed_mps},
                              {"fetch_nmi", s.fetch_nmi}});
        doc["sea"] = {{"speed_unit", "mps"}, {"length_unit", "m"}, {"ship_speeds", c.sea.ship_speeds_mps}, {"states", states}};
        doc["radarsys"] = {{"pri_s", c.radarsys.pri_s}, {"required_margin", c.radarsys.required_margin}};
        return doc.dump(2) + "\n";
    }
}
