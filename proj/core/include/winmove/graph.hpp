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

#ifndef WINMOVE_GRAPH_HPP
#define WINMOVE_GRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace winmove {

/// Position identifier: a non-empty token with no whitespace, '#' or ','.
using PositionId = std::string;

bool is_valid_position_id(const PositionId& id);

/// Immutable finite directed graph of positions and moves.
///
/// Positions are kept sorted, so node indices enumerate positions in
/// lexicographic order and all iteration is deterministic. Moves are a
/// set: duplicates collapse on construction.
class GameGraph {
  public:
    GameGraph() = default;

    const std::vector<PositionId>& positions() const { return ids_; }
    std::size_t node_count() const { return ids_.size(); }
    std::size_t move_count() const { return moves_.size(); }

    bool has_position(const PositionId& id) const;
    // Throws UnknownPosition.
    std::size_t index_of(const PositionId& id) const;
    const PositionId& id_of(std::size_t i) const { return ids_[i]; }

    bool has_move(const PositionId& src, const PositionId& dst) const;
    // Index into moves() for a (src, dst) pair; throws UnknownMove.
    std::size_t move_index(const PositionId& src, const PositionId& dst) const;

    /// Moves as (src index, dst index), sorted lexicographically by id pair.
    const std::vector<std::pair<std::size_t, std::size_t>>& moves() const {
        return moves_;
    }
    std::vector<std::pair<PositionId, PositionId>> move_ids() const;

    std::span<const std::size_t> out_neighbors(std::size_t i) const {
        return {out_[i].data(), out_[i].size()};
    }
    std::span<const std::size_t> in_neighbors(std::size_t i) const {
        return {in_[i].data(), in_[i].size()};
    }

    bool operator==(const GameGraph& other) const {
        return ids_ == other.ids_ && moves_ == other.moves_;
    }

    friend GameGraph build_graph(
        const std::vector<PositionId>& positions,
        const std::vector<std::pair<PositionId, PositionId>>& moves);

  private:
    std::vector<PositionId> ids_;                            // sorted
    std::vector<std::pair<std::size_t, std::size_t>> moves_; // sorted
    std::vector<std::vector<std::size_t>> out_;              // sorted
    std::vector<std::vector<std::size_t>> in_;               // sorted
};

/// Builds a validated graph. Duplicate positions and moves are dropped;
/// positions appearing only in moves are added. Throws InvalidPositionId.
GameGraph build_graph(
    const std::vector<PositionId>& positions,
    const std::vector<std::pair<PositionId, PositionId>>& moves);

/// Immediate successors of x, in lexicographic order.
std::vector<PositionId> followers(const GameGraph& g, const PositionId& x);

/// {x} plus everything reachable from x by one or more moves.
std::vector<PositionId> reachable_closure(const GameGraph& g,
                                          const PositionId& x);

/// Subgraph with exactly the given nodes and all moves between them.
GameGraph induced_subgraph(const GameGraph& g,
                           const std::vector<PositionId>& nodes);

/// Graph with every move reversed (same positions).
GameGraph reverse_graph(const GameGraph& g);

}  // namespace winmove

#endif
