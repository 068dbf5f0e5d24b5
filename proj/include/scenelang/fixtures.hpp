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

#ifndef SCENELANG_FIXTURES_HPP_
#define SCENELANG_FIXTURES_HPP_

#include "scenelang/interaction.hpp"
#include "scenelang/scenario.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scenelang
{

enum class FixtureTemplate {
    kAppendixReplica,
    kStopSign4Way,
    kArrowLeftTurn,
    kOvertakeStraight,
    kFollowStraight,
    kPedCrossing,
    kRandom,
};

struct FixtureSpec
{
    FixtureTemplate tmpl = FixtureTemplate::kRandom;
    std::uint64_t seed = 0;
    std::map<std::string, double> parameters;
};

struct ExpectedLabel
{
    std::string a;
    std::string b;
    InteractionKind kind = InteractionKind::kNone;
    std::optional<std::string> yielder;
    InteractionCause cause = InteractionCause::kNone;
};

/// Ground truth bundled with a generated scenario: interaction labels the
/// rule engine must produce and sentences the translation must contain.
struct Expectation
{
    std::vector<ExpectedLabel> labels;
    std::vector<std::string> sentences;
};

struct Fixture
{
    Scenario scenario;
    Expectation expected;
};

/// Deterministic generation: same (template, seed, parameters), same
/// scenario bytes. Throws BadParameters for unusable knobs.
Fixture generate(const FixtureSpec & spec);

const char * to_string(FixtureTemplate tmpl);
std::optional<FixtureTemplate> fixture_template_from_string(const std::string & name);
std::vector<FixtureTemplate> all_fixture_templates();

std::string expectation_to_json(const Expectation & expected);

}  // namespace scenelang

#endif  // SCENELANG_FIXTURES_HPP_
