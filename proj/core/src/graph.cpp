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

#include "winmove/graph.hpp"

#include <algorithm>
#include <cctype>

#include "winmove/errors.hpp"

namespace winmove {

bool is_valid_position_id(const PositionId& id) {
    if (id.empty()) return false;
    for (unsigned char c : id) {
        if (std::isspace(c) || c == '#' || c == ',') return false;
    }
    return true;
}

bool GameGraph::has_position(const PositionId& id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t GameGraph::index_of(const PositionId& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw UnknownPosition(id);
    return static_cast<std::size_t>(it - ids_.begin());
}

bool GameGraph::has_move(const PositionId& src, const PositionId& dst) const {
    if (!has_position(src) || !has_position(dst)) return false;
    std::pair<std::size_t, std::size_t> m{index_of(src), index_of(dst)};
    return std::binary_search(moves_.begin(), moves_.end(), m);
}

std::size_t GameGraph::move_index(const PositionId& src,
                                  const PositionId& dst) const {
    if (has_position(src) && has_position(dst)) {
        std::pair<std::size_t, std::size_t> m{index_of(src), index_of(dst)};
        auto it = std::lower_bound(moves_.begin(), moves_.end(), m);
        if (it != moves_.end() && *it == m)
            return static_cast<std::size_t>(it - moves_.begin());
    }
    throw UnknownMove(src, dst);
}

std::vector<std::pair<PositionId, PositionId>> GameGraph::move_ids() const {
    std::vector<std::pair<PositionId, PositionId>> out;
    out.reserve(moves_.size());
    for (auto [s, d] : moves_) out.emplace_back(ids_[s], ids_[d]);
    return out;
}

GameGraph build_graph(
    const std::vector<PositionId>& positions,
    const std::vector<std::pair<PositionId, PositionId>>& moves) {
    GameGraph g;
    g.ids_ = positions;
    for (const auto& [s, d] : moves) {
        g.ids_.push_back(s);
        g.ids_.push_back(d);
    }
    for (const auto& id : g.ids_) {
        if (!is_valid_position_id(id)) throw InvalidPositionId(id);
    }
    std::sort(g.ids_.begin(), g.ids_.end());
    g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());

    for (const auto& [s, d] : moves) {
        g.moves_.emplace_back(g.index_of(s), g.index_of(d));
    }
    std::sort(g.moves_.begin(), g.moves_.end());
    g.moves_.erase(std::unique(g.moves_.begin(), g.moves_.end()),
                   g.moves_.end());

    g.out_.resize(g.ids_.size());
    g.in_.resize(g.ids_.size());
    for (auto [s, d] : g.moves_) {
        g.out_[s].push_back(d);
        g.in_[d].push_back(s);
    }
    for (auto& v : g.in_) std::sort(v.begin(), v.end());
    // out_ lists are already sorted: moves_ is sorted by (src, dst).
    return g;
}

std::vector<PositionId> followers(const GameGraph& g, const PositionId& x) {
    std::vector<PositionId> out;
    for (std::size_t y : g.out_neighbors(g.index_of(x)))
        out.push_back(g.id_of(y));
    return out;
}

std::vector<PositionId> reachable_closure(const GameGraph& g,
                                          const PositionId& x) {
    std::vector<bool> seen(g.node_count(), false);
    std::vector<std::size_t> stack{g.index_of(x)};
    seen[stack.back()] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : g.out_neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    std::vector<PositionId> out;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        if (seen[i]) out.push_back(g.id_of(i));
    return out;
}

GameGraph induced_subgraph(const GameGraph& g,
                           const std::vector<PositionId>& nodes) {
    std::vector<bool> keep(g.node_count(), false);
    for (const auto& id : nodes) keep[g.index_of(id)] = true;
    std::vector<std::pair<PositionId, PositionId>> moves;
    for (auto [s, d] : g.moves()) {
        if (keep[s] && keep[d]) moves.emplace_back(g.id_of(s), g.id_of(d));
    }
    return build_graph(nodes, moves);
}

GameGraph reverse_graph(const GameGraph& g) {
    std::vector<std::pair<PositionId, PositionId>> moves;
    for (auto [s, d] : g.moves()) moves.emplace_back(g.id_of(d), g.id_of(s));
    return build_graph(g.positions(), moves);
}

}  // namespace winmove
