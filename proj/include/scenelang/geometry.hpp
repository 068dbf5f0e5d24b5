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

#ifndef SCENELANG_GEOMETRY_HPP_
#define SCENELANG_GEOMETRY_HPP_

#include "scenelang/scenario.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scenelang
{

// Geometry constants shared by the feature extractors. Values are documented
// stand-ins where the underlying data gives no definition.
inline constexpr double kLaneWidth = 3.7;              // meters
inline constexpr double kLanePlacementMaxLateral = 3.0;
inline constexpr double kNotMovingSpeed = 0.5;         // m/s
inline constexpr double kAccelSlopeThreshold = 0.3;    // m/s^2
inline constexpr double kMotionWindowHalf = 0.5;       // s, centered 1.0 s window
inline constexpr double kHeadingTowardsMaxDistance = 50.0;
inline constexpr double kProximityHorizon = 30.0;      // m of path arc length
inline constexpr double kStopSignPathTolerance = 2.0;  // m off the path
inline constexpr double kRadialRateEpsilon = 0.05;     // m/s dead band
inline constexpr double kSameSideConeDeg = 45.0;
inline constexpr double kWasInsideLookback = 3.0;      // s
inline constexpr double kFallbackIntersectionRadius = 10.0;

struct Pose
{
    Eigen::Vector2d position{0.0, 0.0};
    double heading_deg = 0.0;
};

/// Position of a point in an agent's frame: +longitudinal is in front,
/// +lateral is to the left.
struct RelPos
{
    double longitudinal = 0.0;
    double lateral = 0.0;

    double norm() const;
};

enum class HeadingRelation { kSame, kOpposite, kLeft, kRight };

enum class MotionStatus { kAccelerating, kDecelerating, kConstant, kNotMoving };

enum class IntersectionPhaseKind {
    kHeadingTowards,
    kInside,
    kExiting,
    kDeparting,
    kSameSide,
    kNone,  // on some other branch; nothing to phrase
};

struct IntersectionPhase
{
    IntersectionPhaseKind kind = IntersectionPhaseKind::kNone;
    double distance_to_center = 0.0;
};

struct LanePlacement
{
    enum class Side { kFromLeft, kFromRight };

    int index = 1;  // 1-based, counted from `side`
    Side side = Side::kFromRight;
    int total = 1;
    int index_from_left = 1;
    int index_from_right = 1;
};

struct ProximityFeature
{
    enum class Kind { kCrosswalk, kStopSign, kSpeedBump };

    Kind kind = Kind::kCrosswalk;
    double distance = 0.0;  // arc length ahead along the agent's path
};

struct SignalView
{
    SignalColor color = SignalColor::kUnknown;
    std::optional<double> distance;  // arc length to the stop point, when known
};

/// Per-agent features at the future moment. All relative quantities are
/// measured against the ego's CURRENT pose ("Looking from the agent's
/// current angle"); the ego's own entry is relative to its current place.
struct FutureState
{
    RelPos rel;
    HeadingRelation heading = HeadingRelation::kSame;
    double speed = 0.0;
    bool not_moving = false;
    std::optional<IntersectionPhase> phase;
    bool same_side_of_ego_branch = false;
};

/// Normalizes a heading into (-180, 180].
double normalize_heading(double deg);

/// Rigid transform of a global point into the pose's frame. Norm-preserving.
RelPos ego_frame(const Eigen::Vector2d & point, const Pose & ego);

/// Qualitative relation of `other` to `ego` by heading difference
/// d = normalize(other - ego): |d| < 45 same; d in [45, 135) left;
/// d in (-135, -45] right; otherwise opposite.
HeadingRelation heading_relation(double ego_heading_deg, double other_heading_deg);

/// Classifies the motion at sample `at`: not-moving dominates, then the
/// least-squares speed slope over a 1.0 s centered window against the
/// +-0.3 m/s^2 threshold. Throws InsufficientSamples when fewer than two
/// valid samples fall inside the window.
MotionStatus motion_status(const std::vector<TrajectoryState> & states, int at);

/// Nearest lane centerline within 3.0 m lateral; the index is counted within
/// that lane's side-group, from the side that gives the smaller count.
/// Returns nullopt off-lane (e.g. inside an intersection).
std::optional<LanePlacement> lane_placement(const Eigen::Vector2d & pos, const MapLayout & map);

/// "N way" label for an intersection.
std::string classify_intersection(const Intersection & inter);

/// Radius of the disk model of the intersection region: half the widest
/// approach (lane count * lane width), fallback 10 m for lane-less maps.
double intersection_radius(const MapLayout & map);

/// The intersection the descriptions talk about: the one nearest the ego's
/// current position.
const Intersection * focal_intersection(const Scenario & s);

/// Phase of `agent` relative to the focal intersection at sample `at`.
/// Throws NoIntersection when the map has none.
IntersectionPhase intersection_phase(const Scenario & s, const Agent & agent, int at);

/// True when `pos` is outside the intersection disk and within 45 degrees of
/// the ego's current branch as seen from the center.
bool same_side_as_ego(const Scenario & s, const Eigen::Vector2d & pos);

/// Crosswalks / stop signs / speed bumps the agent's sampled path reaches
/// within 30 m of arc length, nearest first. Distance 0 means the agent is
/// at (inside) the feature now.
std::vector<ProximityFeature> proximity_features(const Agent & agent, const MapLayout & map, int at);

/// Signal governing the agent's approach at the current moment, with the arc
/// distance to its stop point along the agent's lane when known.
std::optional<SignalView> signal_for(
    const Agent & agent, const std::vector<SignalState> & signals, const MapLayout & map, int at);

/// Features of every agent (ego included, keyed by id) at current + horizon
/// seconds. Throws HorizonUnavailable when the sample does not exist.
/// A zero horizon reproduces the current-moment features exactly.
std::map<std::string, FutureState> future_snapshot(const Scenario & s, double horizon_s = 3.0);

// Polyline / polygon helpers used across the feature extractors.

struct PolylineHit
{
    double distance = 0.0;   // point-to-polyline distance
    double arc = 0.0;        // arc length at the projection
    Eigen::Vector2d point{0.0, 0.0};
    Eigen::Vector2d tangent{1.0, 0.0};
};

PolylineHit nearest_on_polyline(const std::vector<Eigen::Vector2d> & pts, const Eigen::Vector2d & p);

bool point_in_polygon(const Polygon & poly, const Eigen::Vector2d & p);

/// Sampled global positions of the agent from sample `at` forward, stopping
/// at the first invalid sample.
std::vector<Eigen::Vector2d> forward_path(const Agent & agent, int at);

/// Finite-difference velocity at sample `at` (central where possible).
Eigen::Vector2d sampled_velocity(const Agent & agent, int at, double timestep_s);

const char * to_string(HeadingRelation rel);
const char * to_string(MotionStatus status);
const char * to_string(IntersectionPhaseKind kind);
const char * to_string(ProximityFeature::Kind kind);

}  // namespace scenelang

#endif  // SCENELANG_GEOMETRY_HPP_
