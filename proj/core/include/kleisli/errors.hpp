/*
 * Copyright 2026 The kleisli authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace kleisli {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MonadMismatch : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct AlphabetMismatch : Error { using Error::Error; };
struct WrongMonad : Error { using Error::Error; };
struct NonMonotone : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct BadSplit : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct HeaderMismatch : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& reason)
        : Error("parse error at line " + std::to_string(line_no) + ": " + reason),
          line(line_no) {}
};

struct SchemaError : Error {
    std::string path;
    SchemaError(const std::string& at, const std::string& reason)
        : Error("schema error at " + at + ": " + reason), path(at) {}
};

}  // namespace kleisli
