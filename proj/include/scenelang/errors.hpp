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

#ifndef SCENELANG_ERRORS_HPP_
#define SCENELANG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scenelang
{

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Malformed scenario document: missing field or wrong type/unit. Carries the
/// JSON path of the offending element.
struct SchemaError : Error
{
    SchemaError(std::string path_in, const std::string & msg)
        : Error(path_in.empty() ? msg : path_in + ": " + msg), path(std::move(path_in))
    {
    }
    std::string path;
};

/// Well-formed document that violates a scenario invariant. Carries the
/// field path of the violation.
struct InvariantError : Error
{
    InvariantError(std::string path_in, const std::string & msg)
        : Error(path_in.empty() ? msg : path_in + ": " + msg), path(std::move(path_in))
    {
    }
    std::string path;
};

struct PreconditionError : Error
{
    using Error::Error;
};

struct UnknownAgent : Error
{
    using Error::Error;
};

struct InsufficientSamples : Error
{
    using Error::Error;
};

struct NoIntersection : Error
{
    using Error::Error;
};

struct HorizonUnavailable : Error
{
    using Error::Error;
};

struct MissingAsset : Error
{
    using Error::Error;
};

struct BadParameters : Error
{
    using Error::Error;
};

struct OverlapError : Error
{
    using Error::Error;
};

struct ConfigError : Error
{
    using Error::Error;
};

// Completion-service failures.
struct AuthError : Error
{
    using Error::Error;
};
struct RateLimited : Error
{
    using Error::Error;
};
struct TimeoutError : Error
{
    using Error::Error;
};
struct TruncatedResponse : Error
{
    using Error::Error;
};

/// Q&A text that cannot be parsed. Every instance carries the byte offset of
/// the offending location in the raw response.
struct QaError : Error
{
    enum class Kind { kMissingSection, kUnpairedQ, kEmptyAnswer };

    QaError(Kind kind_in, std::size_t offset_in, const std::string & msg)
        : Error(msg + " (byte offset " + std::to_string(offset_in) + ")"),
          kind(kind_in),
          offset(offset_in)
    {
    }
    Kind kind;
    std::size_t offset;
};

}  // namespace scenelang

#endif  // SCENELANG_ERRORS_HPP_
