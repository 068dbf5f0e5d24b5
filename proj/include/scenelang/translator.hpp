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

#ifndef SCENELANG_TRANSLATOR_HPP_
#define SCENELANG_TRANSLATOR_HPP_

#include "scenelang/scenario.hpp"

#include <string>
#include <utility>
#include <vector>

namespace scenelang
{

/// The rendered scene text, in template order: map environment, ego agent,
/// surrounding agents (ascending numeric id), then the +3.0 s future section.
/// full_text is exactly the blank-line join of the non-empty parts and is
/// byte-stable for a given Scenario.
struct SceneDescription
{
    std::string map_paragraph;
    std::string ego_paragraph;
    std::vector<std::pair<std::string, std::string>> agent_paragraphs;  // (agent id, text)
    std::vector<std::string> future_paragraphs;
    std::string full_text;
};

std::string describe_map(const Scenario & s);
std::string describe_ego(const Scenario & s);

/// Paragraph for one surrounding agent. Throws UnknownAgent for unknown ids
/// or the ego id.
std::string describe_agent(const Scenario & s, const std::string & id);

/// Future section: header sentence first, then one paragraph per agent in
/// ascending numeric id order with the ego interleaved under its own id.
/// Throws HorizonUnavailable when no +3.0 s sample exists.
std::vector<std::string> describe_future(const Scenario & s);

SceneDescription render(const Scenario & s);

// Number formatting used by every template: distances to agents/features are
// whole meters, intersection-center offsets and signal distances one decimal,
// speeds whole m/s.
std::string format_meters(double v);
std::string format_meters_1dp(double v);
std::string format_speed(double v);

}  // namespace scenelang

#endif  // SCENELANG_TRANSLATOR_HPP_
