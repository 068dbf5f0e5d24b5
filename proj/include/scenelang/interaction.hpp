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

#ifndef SCENELANG_INTERACTION_HPP_
#define SCENELANG_INTERACTION_HPP_

#include "scenelang/scenario.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scenelang
{

inline constexpr double kConflictRadius = 3.0;    // m
inline constexpr double kConflictHorizon = 8.0;   // s
inline constexpr double kTurnThresholdDeg = 30.0;
inline constexpr double kStopSignServeSpeed = 0.5;     // m/s
inline constexpr double kStopSignServeDistance = 5.0;  // m
inline constexpr double kFollowMinGap = 3.0;
inline constexpr double kFollowMaxGap = 30.0;
inline constexpr double kFollowGapChangeRatio = 0.2;

enum class InteractionKind { kRuleYield, kPedYield, kOvertake, kFollow, kNone };

enum class InteractionCause {
    kStopSign,
    kTrafficLight,
    kArrowRightOfWay,
    kPedestrianPriority,
    kIntentionPattern,
    kNone,
};

/// Directed pairwise interaction verdict. For overtake/follow the yielder
/// field names the agent that gives way: the overtaken vehicle, respectively
/// the follower keeping the gap.
struct InteractionLabel
{
    std::pair<std::string, std::string> pair;
    InteractionKind kind = InteractionKind::kNone;
    std::optional<std::string> yielder;
    InteractionCause cause = InteractionCause::kNone;
    std::optional<double> conflict_time;  // seconds after the current moment
};

struct Conflict
{
    double time = 0.0;  // seconds after the current moment
    Eigen::Vector2d point{0.0, 0.0};
};

/// Earliest time within the horizon at which the two sampled future paths
/// come within 3.0 m of each other, using linear interpolation between
/// samples (solved exactly per segment). nullopt when they never do.
std::optional<Conflict> path_conflict(
    const Agent & a, const Agent & b, int from_index, double timestep_s,
    double horizon_s = kConflictHorizon);

/// Q1: vehicle pair with a path conflict where traffic rules single out the
/// yielder (red light, unserved stop sign, or missing protected right-of-way
/// against an arrow-green holder).
InteractionLabel detect_rule_yield(const Scenario & s, const std::string & a, const std::string & b);

/// Q2: vehicle-pedestrian pair with a path conflict; the vehicle yields.
InteractionLabel detect_ped_conflict(const Scenario & s, const std::string & a, const std::string & b);

/// Q3: intention patterns. Overtake: starts behind in the same side-group,
/// shifts at least one lane laterally, ends ahead within the horizon.
/// Follow: same lane, gap 3-30 m, gap change below 20%, same heading.
InteractionLabel detect_intention_pattern(
    const Scenario & s, const std::string & a, const std::string & b);

/// First-match dispatch Q1 -> Q2 -> Q3 -> none.
InteractionLabel classify_interaction(const Scenario & s, const std::string & a, const std::string & b);

/// Labels for every (ego, surrounding agent) pair, ordered by agent id.
std::vector<InteractionLabel> classify_ego_pairs(const Scenario & s);

enum class EgoIntent { kGoStraight, kTurnLeft, kTurnRight, kStop, kProceedThrough };

/// Wrap-up of all ego-involving interactions: base intent from the 3 s
/// displacement and heading change, one response token per non-none label,
/// and one action per traffic control governing the ego.
struct IntentionSummary
{
    EgoIntent base = EgoIntent::kGoStraight;
    std::vector<std::pair<std::string, std::string>> responses;          // (agent id, token)
    std::vector<std::pair<std::string, std::string>> control_responses;  // (control, action)
};

IntentionSummary ego_intention(const Scenario & s, const std::vector<InteractionLabel> & ego_labels);

const char * to_string(InteractionKind kind);
const char * to_string(InteractionCause cause);
const char * to_string(EgoIntent intent);
std::optional<InteractionKind> interaction_kind_from_string(const std::string & s);
std::optional<InteractionCause> interaction_cause_from_string(const std::string & s);

}  // namespace scenelang

#endif  // SCENELANG_INTERACTION_HPP_
