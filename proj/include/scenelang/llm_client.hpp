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

#ifndef SCENELANG_LLM_CLIENT_HPP_
#define SCENELANG_LLM_CLIENT_HPP_

#include "scenelang/prompts.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace scenelang
{

struct DecodingParams
{
    double temperature = 0.7;
    int max_tokens = 2048;
};

struct LlmRequest
{
    PromptBundle bundle;
    std::string scenario_id;
    DecodingParams params;
};

enum class FinishStatus { kComplete, kTruncated };

/// Raw completion text, preserved byte-exact for audit.
struct LlmResponse
{
    std::string text;
    FinishStatus finish = FinishStatus::kComplete;
};

class LlmClient
{
public:
    virtual ~LlmClient() = default;
    virtual LlmResponse respond(const LlmRequest & request) = 0;
};

/// Deterministic offline stand-in: same scenario id and description, same
/// response bytes. Responses are grammar-valid and mention only agents that
/// appear in the request's scene description.
class MockLlmClient : public LlmClient
{
public:
    struct Plan
    {
        int map_env = 0;
        int ego = 0;
        int other_agent = 0;
        int interaction = 0;
        int intention = 1;

        int total() const { return map_env + ego + other_agent + interaction + intention; }
    };

    LlmResponse respond(const LlmRequest & request) override;

    /// The per-category record counts the response for `request` contains.
    static Plan plan_for(const LlmRequest & request);
};

struct HttpConfig
{
    std::string endpoint;  // e.g. http://host:port/v1/chat/completions
    std::string api_key;
    std::string model;
    double timeout_s = 60.0;
    double requests_per_second = 2.0;
};

/// Resolves LLM_ENDPOINT / LLM_API_KEY / LLM_MODEL; throws ConfigError naming
/// the first missing variable.
HttpConfig http_config_from_env();

/// Chat-completion client over HTTP (wire format in docs/llm-client.md).
/// Throws AuthError / RateLimited / TimeoutError on the respective failures.
class HttpLlmClient : public LlmClient
{
public:
    explicit HttpLlmClient(HttpConfig config);
    LlmResponse respond(const LlmRequest & request) override;

private:
    HttpConfig config_;
    double next_allowed_s_ = 0.0;  // token-bucket state, monotonic seconds
};

struct RetryPolicy
{
    int max_attempts = 5;
    double backoff_base_s = 1.0;
    std::uint64_t jitter_seed = 0;
    /// Injectable for tests; the default sleeps for real.
    std::function<void(double)> sleep = {};
};

/// Issues the request, retrying transient failures (rate limits, timeouts)
/// with exponential backoff and jitter. Throws TruncatedResponse when the
/// finish status is not complete; other client errors propagate.
LlmResponse complete(const LlmRequest & request, LlmClient & client, const RetryPolicy & policy = {});

}  // namespace scenelang

#endif  // SCENELANG_LLM_CLIENT_HPP_
