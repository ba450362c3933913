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

#ifndef WINMOVE_ARGUMENTATION_HPP
#define WINMOVE_ARGUMENTATION_HPP

#include <map>
#include <utility>
#include <vector>

#include "winmove/graph.hpp"
#include "winmove/length.hpp"
#include "winmove/provenance.hpp"
#include "winmove/rpq.hpp"

namespace winmove {

/// Abstract argumentation framework: arguments plus an attack relation.
struct ArgumentationFramework {
    std::vector<PositionId> arguments;  // lexicographic
    std::vector<std::pair<PositionId, PositionId>> attacks;  // (attacker, target)

    bool operator==(const ArgumentationFramework&) const = default;
};

enum class AfLabel { Accepted, Defeated, Undecided };

const char* to_string(AfLabel l);

ArgumentationFramework build_af(
    const std::vector<PositionId>& arguments,
    const std::vector<std::pair<PositionId, PositionId>>& attacks);

/// Game graph of an AF: a move from each argument to each of its
/// attackers, so winning the game means defeating the argument.
GameGraph af_to_game(const ArgumentationFramework& af);

/// AF whose attacks are the reversed moves of g (inverse of af_to_game).
ArgumentationFramework game_to_af(const GameGraph& g);

/// Grounded labeling via the game correspondence: Won -> Defeated,
/// Lost -> Accepted, Drawn -> Undecided; lengths carried over.
std::map<PositionId, std::pair<AfLabel, Length>> grounded_labeling(
    const ArgumentationFramework& af);

/// Game provenance of an argument, re-reversed into attack orientation
/// (edges read as "attacks"), edge types carried over.
ProvenanceSubgraph argument_provenance(const ArgumentationFramework& af,
                                       const PositionId& x, ProvKind kind);

}  // namespace winmove

#endif
