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

#ifndef SCENELANG_IO_HPP_
#define SCENELANG_IO_HPP_

#include "scenelang/dataset.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace scenelang
{

std::string read_file(const std::filesystem::path & path);

/// Write-temp-then-rename; partial writes never clobber the target.
void atomic_write_file(const std::filesystem::path & path, const std::string & content);

// Dataset persistence: JSONL records plus a sidecar stats document, both
// byte-deterministic for identical inputs.
std::string dataset_record_to_jsonl_line(const DatasetRecord & record);
DatasetRecord dataset_record_from_jsonl_line(const std::string & line);
void write_dataset_jsonl(const std::filesystem::path & path, const std::vector<DatasetRecord> & records);
std::vector<DatasetRecord> read_dataset_jsonl(const std::filesystem::path & path);

std::string stats_to_json(const DatasetStats & stats);
std::string report_to_json(const BuildReport & report);

std::string labels_jsonl(const std::string & scenario_id, const std::vector<InteractionLabel> & labels);

SplitManifest read_split_manifest(const std::filesystem::path & path);

// Small utilities shared across modules.
std::uint64_t fnv1a64(const std::string & s);
std::string lowercase(std::string s);
std::vector<std::string> word_tokens(const std::string & text);

/// splitmix64: tiny deterministic RNG with identical output on every
/// platform (std distributions are implementation-defined).
struct Rng
{
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;

    explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next();
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive bounds
};

}  // namespace scenelang

#endif  // SCENELANG_IO_HPP_
