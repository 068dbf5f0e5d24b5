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

#ifndef SCENELANG_PROMPTS_HPP_
#define SCENELANG_PROMPTS_HPP_

#include "scenelang/translator.hpp"

#include <filesystem>
#include <string>

namespace scenelang
{

/// The four prompt parts shipped as versioned asset files plus the wrapped
/// scene description.
struct PromptBundle
{
    std::string system;
    std::string responsibility;
    std::string rules;
    std::string in_context;
    std::string user_input;  // "[start of the input]\n...\n[end of the input]"
};

struct PromptAssets
{
    std::string system;
    std::string responsibility;
    std::string rules;
    std::string in_context;
    std::string version;
};

/// Directory the prompt assets are loaded from by default; overridable with
/// the SCENELANG_PROMPT_DIR environment variable.
std::filesystem::path default_prompt_dir();

/// Loads system.txt, responsibility.txt, rules.txt, in_context.txt and
/// VERSION from `dir`. Throws MissingAsset naming the absent file.
PromptAssets load_prompt_assets(const std::filesystem::path & dir);

/// Deterministic bundle assembly; the user input is the description's full
/// text inside the delimiters, present exactly once each. Throws
/// PreconditionError on an empty description.
PromptBundle build_prompt(const SceneDescription & desc, const PromptAssets & assets);

}  // namespace scenelang

#endif  // SCENELANG_PROMPTS_HPP_
