// Copyright 2026 The SceneLang Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCENELANG_SCENARIO_HPP_
#define SCENELANG_SCENARIO_HPP_

#include <Eigen/Core>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scenelang
{

enum class AgentKind { kVehicle, kPedestrian, kCyclist };

enum class SignalColor { kRed, kYellow, kGreen, kArrowGreen, kUnknown };

/// One trajectory sample. Positions are global-frame meters, headings are
/// degrees in (-180, 180], speeds m/s.
struct TrajectoryState
{
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double heading_deg = 0.0;
    double speed = 0.0;
    bool valid = true;

    Eigen::Vector2d position() const { return {x, y}; }
};

struct Agent
{
    std::string id;
    AgentKind kind = AgentKind::kVehicle;
    std::vector<TrajectoryState> states;
};

/// A lane centerline. Lanes belong to exactly one side-group (an approach);
/// `index` is the file's ordering within that group and is only used as a
/// tie-break, placement indices are recomputed from geometry. Centerlines are
/// digitized in the direction of travel.
struct Lane
{
    std::string group;
    int index = 0;
    std::vector<Eigen::Vector2d> centerline;
};

struct Intersection
{
    Eigen::Vector2d center{0.0, 0.0};
    int branches = 4;
};

struct StopSign
{
    Eigen::Vector2d position{0.0, 0.0};
    std::string approach;
};

using Polygon = std::vector<Eigen::Vector2d>;

struct MapLayout
{
    std::vector<Lane> lanes;
    std::vector<Intersection> intersections;
    std::vector<StopSign> stop_signs;
    std::vector<Polygon> crosswalks;
    std::vector<Polygon> speed_bumps;
};

/// Signal state for one approach (lane side-group) at the current moment.
/// The stop point, when present, lies on the referenced approach.
struct SignalState
{
    std::string approach;
    SignalColor color = SignalColor::kUnknown;
    std::optional<Eigen::Vector2d> stop_point;
};

struct Scenario
{
    std::string id;
    double timestep_s = 0.1;
    int current_index = 0;
    std::string ego_id;
    std::vector<Agent> agents;
    MapLayout map;
    std::vector<SignalState> signals;
    std::set<std::string> interactive_flags;

    const Agent & ego() const;
    const Agent * find(const std::string & agent_id) const;
    int sample_count() const;
    /// Index of the sample `horizon_s` after the current moment.
    int future_index(double horizon_s = 3.0) const;
    double current_time() const;
};

const char * to_string(AgentKind kind);
const char * to_string(SignalColor color);
std::optional<AgentKind> agent_kind_from_string(const std::string & s);
std::optional<SignalColor> signal_color_from_string(const std::string & s);

/// Parses and validates one scenario document (UTF-8 JSON, see
/// docs/scenario-format.md). Throws SchemaError / InvariantError naming the
/// offending path.
Scenario parse_scenario(const std::string & document);

/// Canonical serialization; parse(serialize(s)) is the identity and the byte
/// layout is stable across runs and platforms.
std::string serialize_scenario(const Scenario & s);

/// Checks every scenario invariant; throws InvariantError on the first
/// violation. parse_scenario always validates before returning.
void validate(const Scenario & s);

/// Keeps exactly the scenarios with a non-empty objects-of-interest flag set,
/// preserving order.
std::vector<Scenario> filter_interactive(std::vector<Scenario> scenarios);

/// Orders agent ids the way descriptions list them: numeric ids ascending by
/// value, then non-numeric ids lexicographically.
bool agent_id_less(const std::string & a, const std::string & b);

}  // namespace scenelang

#endif  // SCENELANG_SCENARIO_HPP_
