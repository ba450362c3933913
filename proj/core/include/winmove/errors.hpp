/*
 * Copyright 2026 The winmove authors
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

#ifndef WINMOVE_ERRORS_HPP
#define WINMOVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace winmove {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPositionId : Error {
    explicit InvalidPositionId(const std::string& id)
        : Error("invalid position id: '" + id + "'") {}
};

struct UnknownPosition : Error {
    explicit UnknownPosition(const std::string& id)
        : Error("unknown position: '" + id + "'") {}
};

struct UnknownMove : Error {
    UnknownMove(const std::string& src, const std::string& dst)
        : Error("unknown move: " + src + " -> " + dst) {}
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason),
          line(line) {}
    std::size_t line;
};

struct UndeclaredArgument : Error {
    explicit UndeclaredArgument(const std::string& id)
        : Error("attack references undeclared argument: '" + id + "'") {}
};

struct MalformedExpression : Error {
    explicit MalformedExpression(const std::string& reason)
        : Error("malformed path expression: " + reason) {}
};

struct GraphTooLarge : Error {
    explicit GraphTooLarge(const std::string& reason) : Error(reason) {}
};

}  // namespace winmove

#endif
