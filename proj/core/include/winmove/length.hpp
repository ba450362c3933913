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

#ifndef WINMOVE_LENGTH_HPP
#define WINMOVE_LENGTH_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace winmove {

/// Number of moves, or infinity for drawn positions.
/// Infinity compares greater than every finite length and absorbs +1.
class Length {
  public:
    constexpr Length() : v_(0) {}
    constexpr explicit Length(std::uint32_t n) : v_(n) {}

    static constexpr Length infinity() { return Length(kInf, Tag{}); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    // Only valid for finite lengths.
    constexpr std::uint32_t finite() const { return v_; }

    // 1 + len, with 1 + inf = inf.
    constexpr Length successor() const {
        return is_infinite() ? *this : Length(v_ + 1);
    }

    constexpr auto operator<=>(const Length&) const = default;

    std::string to_string() const {
        return is_infinite() ? "inf" : std::to_string(v_);
    }

  private:
    struct Tag {};
    constexpr Length(std::uint32_t n, Tag) : v_(n) {}
    static constexpr std::uint32_t kInf =
        std::numeric_limits<std::uint32_t>::max();
    std::uint32_t v_;
};

}  // namespace winmove

#endif
