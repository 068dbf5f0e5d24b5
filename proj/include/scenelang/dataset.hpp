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

#ifndef SCENELANG_DATASET_HPP_
#define SCENELANG_DATASET_HPP_

#include "scenelang/interaction.hpp"
#include "scenelang/llm_client.hpp"
#include "scenelang/qa.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace scenelang
{

enum class AnnotateMode { kRule, kMock, kHttp };

struct Provenance
{
    std::string mode;            // "rule" | "llm"
    std::string prompt_version;  // asset version in llm modes, empty otherwise
};

struct DatasetRecord
{
    std::string scenario_id;
    std::string description;  // SceneDescription full text
    std::vector<QARecord> qa;
    std::vector<InteractionLabel> labels;  // rule mode
    Provenance provenance;
};

struct BuildFailure
{
    std::string scenario_id;
    std::string error;
};

struct ScenarioViolation
{
    std::string scenario_id;
    QaViolation violation;
};

struct BuildReport
{
    std::size_t ok_count = 0;
    std::vector<BuildFailure> failures;
    std::vector<ScenarioViolation> violations;
};

struct BuildOptions
{
    AnnotateMode mode = AnnotateMode::kRule;
    LlmClient * client = nullptr;          // required in mock/http modes
    const PromptAssets * assets = nullptr;  // required in mock/http modes
    int workers = 1;
    RetryPolicy retry;
};

/// End-to-end annotation over a batch. Failed scenarios are reported and
/// skipped, never abort the batch; records come back in scenario-id order
/// regardless of worker count.
std::pair<std::vector<DatasetRecord>, BuildReport> build(
    const std::vector<Scenario> & scenarios, const BuildOptions & options);

/// Rule-mode Q&A: one record per checklist item whose answer exists in the
/// scenario, one interaction record per surrounding agent, one intention
/// record phrasing the summary.
std::vector<QARecord> generate_template_qa(
    const Scenario & s, const SceneDescription & desc,
    const std::vector<InteractionLabel> & labels, const IntentionSummary & intent);

struct DatasetStats
{
    std::size_t scene_count = 0;
    std::map<std::string, std::size_t> per_category_totals;  // map/ego/other/interaction/intention
    std::map<std::string, double> per_scene_averages;
    std::map<std::string, std::size_t> vocabulary;  // over interaction+intention answers

    std::size_t total() const;
};

/// Exact integer counts; vocabulary over lowercase word tokens (split on
/// non-alphanumerics, no stemming) of interaction and intention answers only.
DatasetStats compute_stats(const std::vector<DatasetRecord> & records);

struct SplitManifest
{
    std::vector<std::string> train;
    std::vector<std::string> validation;
};

struct SplitResult
{
    std::vector<DatasetRecord> train;
    std::vector<DatasetRecord> validation;
    std::vector<std::string> unassigned;  // ids in neither manifest list
};

/// Partition per manifest; throws OverlapError when the id lists intersect.
SplitResult split(const std::vector<DatasetRecord> & records, const SplitManifest & manifest);

const char * to_string(AnnotateMode mode);
std::optional<AnnotateMode> annotate_mode_from_string(const std::string & s);

}  // namespace scenelang

#endif  // SCENELANG_DATASET_HPP_
