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

#ifndef SCENELANG_QA_HPP_
#define SCENELANG_QA_HPP_

#include "scenelang/translator.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scenelang
{

enum class QaCategory { kMapEnv, kEgo, kOtherAgent, kInteraction, kIntention };

struct QARecord
{
    QaCategory category = QaCategory::kMapEnv;
    std::optional<std::string> agent_id;
    std::string question;
    std::string answer;
};

/// Splits a raw response on the section markers [Env QA] [Ego QA] [Sur QA]
/// [Int QA] [Intention] (in textual order), pairing each [Q] span with its
/// [A] span. Line-oriented, whitespace-forgiving, tolerant of [End ...]
/// terminators. Throws QaError (missing section / unpaired Q / empty answer)
/// with a byte offset; no silent drops.
std::vector<QARecord> parse_qa(const std::string & raw);

/// Canonical text for a record list; parse_qa(serialize_qa(r)) reproduces
/// every (category, question, answer) triple.
std::string serialize_qa(const std::vector<QARecord> & records);

struct QaViolation
{
    std::size_t record_index = 0;
    std::string reason;
    std::string snippet;
};

/// Flags numeric speed/position values in interaction and intention answers
/// and agent ids that do not exist in the described scene. Never mutates the
/// records.
std::vector<QaViolation> validate_qa(
    const std::vector<QARecord> & records, const SceneDescription & desc);

const char * to_string(QaCategory category);
std::optional<QaCategory> qa_category_from_string(const std::string & s);

/// First "agent #N" mention in a text, if any.
std::optional<std::string> extract_agent_id(const std::string & text);

}  // namespace scenelang

#endif  // SCENELANG_QA_HPP_
