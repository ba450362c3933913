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

#ifndef WINMOVE_ORACLE_HPP
#define WINMOVE_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "winmove/graph.hpp"
#include "winmove/solve.hpp"

namespace winmove {

/// Brute-force reference solver: enumerates all pairs of positional
/// strategies and plays them out, so it shares no code path with the
/// rule-based solvers. Only meant for small graphs.
///
/// A play is truncated as a draw when a position repeats under the same
/// player to move. Won means some mover strategy beats every opponent
/// strategy; lengths follow the win-fast / lose-slow convention.
std::map<PositionId, NodeLabel> oracle_solve(const GameGraph& g,
                                             std::size_t max_nodes = 8,
                                             std::uint64_t max_plays =
                                                 10'000'000);

struct Mismatch {
    PositionId position;
    NodeLabel solver;
    NodeLabel reference;
};

/// Per-node differences between a solution and an oracle result.
std::vector<Mismatch> compare(const SolvedGame& solution,
                              const std::map<PositionId, NodeLabel>& reference);

}  // namespace winmove

#endif
