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

#include "scenelang/geometry.hpp"

#include "scenelang/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace scenelang
{

namespace
{

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct GroupOffset
{
    std::size_t lane_index;  // into map.lanes
    double offset;           // signed lateral, + to the left of travel
};

/// Signed radial speed of the agent relative to `center` at sample `at`:
/// negative when closing, positive when receding.
double radial_rate(const Agent & agent, int at, double timestep_s, const Eigen::Vector2d & center)
{
    const Eigen::Vector2d p = agent.states[static_cast<std::size_t>(at)].position();
    const Eigen::Vector2d d = p - center;
    const double dist = d.norm();
    if (dist < 1e-9) {
        return 0.0;
    }
    const Eigen::Vector2d v = sampled_velocity(agent, at, timestep_s);
    return v.dot(d / dist);
}

/// First arc length at which the path's segments cross into the polygon.
std::optional<double> path_entry_arc(const std::vector<Eigen::Vector2d> & path, const Polygon & poly)
{
    double arc = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Eigen::Vector2d p0 = path[i];
        const Eigen::Vector2d p1 = path[i + 1];
        const Eigen::Vector2d d = p1 - p0;
        const double seg_len = d.norm();
        double best_t = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const Eigen::Vector2d q0 = poly[j];
            const Eigen::Vector2d q1 = poly[(j + 1) % poly.size()];
            const Eigen::Vector2d e = q1 - q0;
            const double denom = d.x() * e.y() - d.y() * e.x();
            if (std::abs(denom) < 1e-12) {
                continue;  // parallel
            }
            const Eigen::Vector2d w = q0 - p0;
            const double t = (w.x() * e.y() - w.y() * e.x()) / denom;
            const double u = (w.x() * d.y() - w.y() * d.x()) / denom;
            if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) {
                best_t = std::min(best_t, t);
            }
        }
        if (std::isfinite(best_t)) {
            return arc + best_t * seg_len;
        }
        arc += seg_len;
        if (arc > kProximityHorizon + kLaneWidth) {
            break;
        }
    }
    return std::nullopt;
}

/// Arc length at which the path passes within `tol` of a point.
std::optional<double> path_pass_arc(
    const std::vector<Eigen::Vector2d> & path, const Eigen::Vector2d & point, double tol)
{
    double arc = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Eigen::Vector2d a = path[i];
        const Eigen::Vector2d b = path[i + 1];
        const Eigen::Vector2d ab = b - a;
        const double len2 = ab.squaredNorm();
        double u = len2 > 0.0 ? (point - a).dot(ab) / len2 : 0.0;
        u = std::clamp(u, 0.0, 1.0);
        const Eigen::Vector2d q = a + u * ab;
        if ((q - point).norm() <= tol) {
            return arc + u * std::sqrt(len2);
        }
        arc += std::sqrt(len2);
        if (arc > kProximityHorizon + kLaneWidth) {
            break;
        }
    }
    return std::nullopt;
}

}  // namespace

double RelPos::norm() const
{
    return std::hypot(longitudinal, lateral);
}

double normalize_heading(double deg)
{
    double x = std::fmod(deg, 360.0);
    if (x <= -180.0) {
        x += 360.0;
    } else if (x > 180.0) {
        x -= 360.0;
    }
    return x;
}

RelPos ego_frame(const Eigen::Vector2d & point, const Pose & ego)
{
    const double h = ego.heading_deg * kDegToRad;
    const double c = std::cos(h);
    const double s = std::sin(h);
    const Eigen::Vector2d d = point - ego.position;
    return {c * d.x() + s * d.y(), -s * d.x() + c * d.y()};
}

HeadingRelation heading_relation(double ego_heading_deg, double other_heading_deg)
{
    const double d = normalize_heading(other_heading_deg - ego_heading_deg);
    if (std::abs(d) < 45.0) {
        return HeadingRelation::kSame;
    }
    if (d >= 45.0 && d < 135.0) {
        return HeadingRelation::kLeft;
    }
    if (d > -135.0 && d <= -45.0) {
        return HeadingRelation::kRight;
    }
    return HeadingRelation::kOpposite;
}

MotionStatus motion_status(const std::vector<TrajectoryState> & states, int at)
{
    if (at < 0 || static_cast<std::size_t>(at) >= states.size()) {
        throw InsufficientSamples("motion_status: sample index out of range");
    }
    const TrajectoryState & current = states[static_cast<std::size_t>(at)];
    if (current.speed < kNotMovingSpeed) {
        return MotionStatus::kNotMoving;
    }

    // Least-squares speed slope over the centered window.
    double sum_t = 0.0;
    double sum_v = 0.0;
    double sum_tt = 0.0;
    double sum_tv = 0.0;
    int count = 0;
    for (const TrajectoryState & st : states) {
        if (!st.valid || std::abs(st.t - current.t) > kMotionWindowHalf + 1e-9) {
            continue;
        }
        const double dt = st.t - current.t;
        sum_t += dt;
        sum_v += st.speed;
        sum_tt += dt * dt;
        sum_tv += dt * st.speed;
        ++count;
    }
    if (count < 2) {
        throw InsufficientSamples("motion_status: fewer than two valid samples in the window");
    }
    const double denom = count * sum_tt - sum_t * sum_t;
    if (std::abs(denom) < 1e-12) {
        return MotionStatus::kConstant;
    }
    const double slope = (count * sum_tv - sum_t * sum_v) / denom;
    if (slope > kAccelSlopeThreshold) {
        return MotionStatus::kAccelerating;
    }
    if (slope < -kAccelSlopeThreshold) {
        return MotionStatus::kDecelerating;
    }
    return MotionStatus::kConstant;
}

PolylineHit nearest_on_polyline(const std::vector<Eigen::Vector2d> & pts, const Eigen::Vector2d & p)
{
    PolylineHit best;
    best.distance = std::numeric_limits<double>::infinity();
    double arc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Eigen::Vector2d a = pts[i];
        const Eigen::Vector2d b = pts[i + 1];
        const Eigen::Vector2d ab = b - a;
        const double len = ab.norm();
        if (len < 1e-12) {
            continue;
        }
        double u = (p - a).dot(ab) / (len * len);
        u = std::clamp(u, 0.0, 1.0);
        const Eigen::Vector2d q = a + u * ab;
        const double d = (p - q).norm();
        if (d < best.distance) {
            best.distance = d;
            best.arc = arc + u * len;
            best.point = q;
            best.tangent = ab / len;
        }
        arc += len;
    }
    return best;
}

bool point_in_polygon(const Polygon & poly, const Eigen::Vector2d & p)
{
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Eigen::Vector2d & a = poly[i];
        const Eigen::Vector2d & b = poly[j];
        const bool crosses = (a.y() > p.y()) != (b.y() > p.y());
        if (crosses) {
            const double x = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
            if (p.x() < x) {
                inside = !inside;
            }
        }
    }
    return inside;
}

std::vector<Eigen::Vector2d> forward_path(const Agent & agent, int at)
{
    std::vector<Eigen::Vector2d> path;
    for (std::size_t i = static_cast<std::size_t>(at); i < agent.states.size(); ++i) {
        if (!agent.states[i].valid) {
            break;
        }
        path.push_back(agent.states[i].position());
    }
    return path;
}

Eigen::Vector2d sampled_velocity(const Agent & agent, int at, double timestep_s)
{
    const auto & st = agent.states;
    const std::size_t i = static_cast<std::size_t>(at);
    const bool prev_ok = at > 0 && st[i - 1].valid;
    const bool next_ok = i + 1 < st.size() && st[i + 1].valid;
    if (prev_ok && next_ok) {
        return (st[i + 1].position() - st[i - 1].position()) / (2.0 * timestep_s);
    }
    if (next_ok) {
        return (st[i + 1].position() - st[i].position()) / timestep_s;
    }
    if (prev_ok) {
        return (st[i].position() - st[i - 1].position()) / timestep_s;
    }
    return {0.0, 0.0};
}

std::optional<LanePlacement> lane_placement(const Eigen::Vector2d & pos, const MapLayout & map)
{
    std::size_t best_lane = 0;
    PolylineHit best;
    best.distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < map.lanes.size(); ++i) {
        const PolylineHit hit = nearest_on_polyline(map.lanes[i].centerline, pos);
        if (hit.distance < best.distance) {
            best = hit;
            best_lane = i;
        }
    }
    if (!std::isfinite(best.distance) || best.distance > kLanePlacementMaxLateral) {
        return std::nullopt;
    }

    const std::string & group = map.lanes[best_lane].group;
    const Eigen::Vector2d left_normal{-best.tangent.y(), best.tangent.x()};

    std::vector<GroupOffset> members;
    for (std::size_t i = 0; i < map.lanes.size(); ++i) {
        if (map.lanes[i].group != group) {
            continue;
        }
        const PolylineHit hit = nearest_on_polyline(map.lanes[i].centerline, pos);
        members.push_back({i, left_normal.dot(hit.point - pos)});
    }
    std::sort(members.begin(), members.end(), [&](const GroupOffset & a, const GroupOffset & b) {
        if (a.offset != b.offset) {
            return a.offset > b.offset;  // leftmost first
        }
        return map.lanes[a.lane_index].index < map.lanes[b.lane_index].index;
    });

    LanePlacement placement;
    placement.total = static_cast<int>(members.size());
    for (std::size_t rank = 0; rank < members.size(); ++rank) {
        if (members[rank].lane_index == best_lane) {
            placement.index_from_left = static_cast<int>(rank) + 1;
        }
    }
    placement.index_from_right = placement.total - placement.index_from_left + 1;
    if (placement.index_from_right <= placement.index_from_left) {
        placement.side = LanePlacement::Side::kFromRight;
        placement.index = placement.index_from_right;
    } else {
        placement.side = LanePlacement::Side::kFromLeft;
        placement.index = placement.index_from_left;
    }
    return placement;
}

std::string classify_intersection(const Intersection & inter)
{
    return std::to_string(inter.branches) + " way";
}

double intersection_radius(const MapLayout & map)
{
    std::map<std::string, int> counts;
    for (const Lane & lane : map.lanes) {
        ++counts[lane.group];
    }
    int widest = 0;
    for (const auto & [group, count] : counts) {
        widest = std::max(widest, count);
    }
    if (widest == 0) {
        return kFallbackIntersectionRadius;
    }
    return widest * kLaneWidth / 2.0;
}

const Intersection * focal_intersection(const Scenario & s)
{
    if (s.map.intersections.empty()) {
        return nullptr;
    }
    const Eigen::Vector2d ego_pos =
        s.ego().states[static_cast<std::size_t>(s.current_index)].position();
    const Intersection * best = nullptr;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const Intersection & inter : s.map.intersections) {
        const double d = (inter.center - ego_pos).norm();
        if (d < best_dist) {
            best_dist = d;
            best = &inter;
        }
    }
    return best;
}

bool same_side_as_ego(const Scenario & s, const Eigen::Vector2d & pos)
{
    const Intersection * inter = focal_intersection(s);
    if (inter == nullptr) {
        return false;
    }
    const double radius = intersection_radius(s.map);
    const Eigen::Vector2d ego_pos =
        s.ego().states[static_cast<std::size_t>(s.current_index)].position();
    const Eigen::Vector2d to_pos = pos - inter->center;
    const Eigen::Vector2d to_ego = ego_pos - inter->center;
    if (to_pos.norm() <= radius || to_ego.norm() <= radius) {
        return false;  // inside the region, no branch to compare
    }
    const double cos_angle = to_pos.dot(to_ego) / (to_pos.norm() * to_ego.norm());
    return cos_angle >= std::cos(kSameSideConeDeg * kDegToRad);
}

IntersectionPhase intersection_phase(const Scenario & s, const Agent & agent, int at)
{
    const Intersection * inter = focal_intersection(s);
    if (inter == nullptr) {
        throw NoIntersection("map has no intersection");
    }
    const double radius = intersection_radius(s.map);
    const TrajectoryState & st = agent.states.at(static_cast<std::size_t>(at));
    const Eigen::Vector2d p = st.position();
    const double dist = (p - inter->center).norm();
    const double rate = radial_rate(agent, at, s.timestep_s, inter->center);

    IntersectionPhase phase;
    phase.distance_to_center = dist;

    if (dist <= radius) {
        phase.kind = rate > kRadialRateEpsilon ? IntersectionPhaseKind::kExiting
                                               : IntersectionPhaseKind::kInside;
        return phase;
    }
    if (rate < -kRadialRateEpsilon && dist <= kHeadingTowardsMaxDistance) {
        phase.kind = IntersectionPhaseKind::kHeadingTowards;
        return phase;
    }
    if (rate > kRadialRateEpsilon) {
        // Departing only when it actually was in the region recently.
        for (int j = at; j >= 0; --j) {
            const TrajectoryState & past = agent.states[static_cast<std::size_t>(j)];
            if (st.t - past.t > kWasInsideLookback + 1e-9) {
                break;
            }
            if (past.valid && (past.position() - inter->center).norm() <= radius) {
                phase.kind = IntersectionPhaseKind::kDeparting;
                return phase;
            }
        }
    }
    phase.kind = same_side_as_ego(s, p) ? IntersectionPhaseKind::kSameSide
                                        : IntersectionPhaseKind::kNone;
    return phase;
}

std::vector<ProximityFeature> proximity_features(const Agent & agent, const MapLayout & map, int at)
{
    std::vector<ProximityFeature> features;
    const std::vector<Eigen::Vector2d> path = forward_path(agent, at);
    if (path.empty()) {
        return features;
    }
    const Eigen::Vector2d here = path.front();

    auto add_polygons = [&](const std::vector<Polygon> & polys, ProximityFeature::Kind kind) {
        for (const Polygon & poly : polys) {
            if (point_in_polygon(poly, here)) {
                features.push_back({kind, 0.0});
                continue;
            }
            if (auto arc = path_entry_arc(path, poly); arc && *arc <= kProximityHorizon) {
                features.push_back({kind, *arc});
            }
        }
    };
    add_polygons(map.crosswalks, ProximityFeature::Kind::kCrosswalk);
    add_polygons(map.speed_bumps, ProximityFeature::Kind::kSpeedBump);
    for (const StopSign & sign : map.stop_signs) {
        if (auto arc = path_pass_arc(path, sign.position, kStopSignPathTolerance);
            arc && *arc <= kProximityHorizon) {
            features.push_back({ProximityFeature::Kind::kStopSign, *arc});
        }
    }

    std::stable_sort(features.begin(), features.end(),
                     [](const ProximityFeature & a, const ProximityFeature & b) {
                         return a.distance < b.distance;
                     });
    return features;
}

std::optional<SignalView> signal_for(
    const Agent & agent, const std::vector<SignalState> & signals, const MapLayout & map, int at)
{
    const Eigen::Vector2d pos = agent.states.at(static_cast<std::size_t>(at)).position();
    const auto placement_pos = [&]() -> std::optional<std::string> {
        // Group of the nearest lane within the placement threshold.
        std::size_t best_lane = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < map.lanes.size(); ++i) {
            const PolylineHit hit = nearest_on_polyline(map.lanes[i].centerline, pos);
            if (hit.distance < best) {
                best = hit.distance;
                best_lane = i;
            }
        }
        if (!std::isfinite(best) || best > kLanePlacementMaxLateral) {
            return std::nullopt;
        }
        return map.lanes[best_lane].group;
    }();
    if (!placement_pos) {
        return std::nullopt;
    }

    const Lane * lane = nullptr;
    double lane_best = std::numeric_limits<double>::infinity();
    for (const Lane & l : map.lanes) {
        if (l.group != *placement_pos) {
            continue;
        }
        const PolylineHit hit = nearest_on_polyline(l.centerline, pos);
        if (hit.distance < lane_best) {
            lane_best = hit.distance;
            lane = &l;
        }
    }

    std::optional<SignalView> result;
    for (const SignalState & sig : signals) {
        if (sig.approach != *placement_pos) {
            continue;
        }
        SignalView view;
        view.color = sig.color;
        if (sig.stop_point && lane != nullptr) {
            const PolylineHit agent_hit = nearest_on_polyline(lane->centerline, pos);
            const PolylineHit stop_hit = nearest_on_polyline(lane->centerline, *sig.stop_point);
            const double d = stop_hit.arc - agent_hit.arc;
            if (d >= -0.5) {
                view.distance = std::max(0.0, d);
            }
        }
        if (!result || (view.distance && (!result->distance || *view.distance < *result->distance))) {
            result = view;
        }
    }
    return result;
}

std::map<std::string, FutureState> future_snapshot(const Scenario & s, double horizon_s)
{
    const int fi = s.future_index(horizon_s);
    if (fi < 0 || fi >= s.sample_count()) {
        throw HorizonUnavailable(
            "no sample " + std::to_string(horizon_s) + " s after the current moment");
    }

    const Agent & ego = s.ego();
    const TrajectoryState & ego_now = ego.states[static_cast<std::size_t>(s.current_index)];
    const Pose ego_pose{ego_now.position(), ego_now.heading_deg};
    const bool has_intersection = !s.map.intersections.empty();

    std::map<std::string, FutureState> out;
    for (const Agent & agent : s.agents) {
        const TrajectoryState & st = agent.states[static_cast<std::size_t>(fi)];
        if (!st.valid) {
            continue;
        }
        FutureState f;
        f.rel = ego_frame(st.position(), ego_pose);
        f.heading = heading_relation(ego_now.heading_deg, st.heading_deg);
        f.speed = st.speed;
        f.not_moving = st.speed < kNotMovingSpeed;
        if (has_intersection) {
            f.phase = intersection_phase(s, agent, fi);
            f.same_side_of_ego_branch = same_side_as_ego(s, st.position());
        }
        out.emplace(agent.id, std::move(f));
    }
    return out;
}

const char * to_string(HeadingRelation rel)
{
    switch (rel) {
        case HeadingRelation::kSame:
            return "same";
        case HeadingRelation::kOpposite:
            return "opposite";
        case HeadingRelation::kLeft:
            return "left";
        case HeadingRelation::kRight:
            return "right";
    }
    return "same";
}

const char * to_string(MotionStatus status)
{
    switch (status) {
        case MotionStatus::kAccelerating:
            return "accelerating";
        case MotionStatus::kDecelerating:
            return "decelerating";
        case MotionStatus::kConstant:
            return "constant";
        case MotionStatus::kNotMoving:
            return "not_moving";
    }
    return "constant";
}

const char * to_string(IntersectionPhaseKind kind)
{
    switch (kind) {
        case IntersectionPhaseKind::kHeadingTowards:
            return "heading_towards";
        case IntersectionPhaseKind::kInside:
            return "inside";
        case IntersectionPhaseKind::kExiting:
            return "exiting";
        case IntersectionPhaseKind::kDeparting:
            return "departing";
        case IntersectionPhaseKind::kSameSide:
            return "same_side";
        case IntersectionPhaseKind::kNone:
            return "none";
    }
    return "none";
}

const char * to_string(ProximityFeature::Kind kind)
{
    switch (kind) {
        case ProximityFeature::Kind::kCrosswalk:
            return "crosswalk";
        case ProximityFeature::Kind::kStopSign:
            return "stop sign";
        case ProximityFeature::Kind::kSpeedBump:
            return "speed bump";
    }
    return "crosswalk";
}

}  // namespace scenelang
