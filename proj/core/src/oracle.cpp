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

#include "winmove/oracle.hpp"

#include <algorithm>
#include <optional>

#include "winmove/errors.hpp"

namespace winmove {

namespace {

// One positional strategy: a chosen out-edge per non-sink node.
using Strategy = std::vector<std::size_t>;  // choice index per node

struct PlayResult {
    enum class Outcome { MoverWins, OpponentWins, Draw } outcome;
    std::uint32_t length = 0;
};

PlayResult simulate(const GameGraph& g, std::size_t start,
                    const Strategy& mover, const Strategy& opponent) {
    std::vector<bool> visited(g.node_count() * 2, false);
    std::size_t p = start;
    std::uint32_t len = 0;
    for (;;) {
        std::size_t parity = len % 2;
        if (g.out_neighbors(p).empty()) {
            // Player to move cannot move and loses.
            return {parity == 1 ? PlayResult::Outcome::MoverWins
                                : PlayResult::Outcome::OpponentWins,
                    len};
        }
        if (visited[p * 2 + parity])
            return {PlayResult::Outcome::Draw, len};
        visited[p * 2 + parity] = true;
        const Strategy& s = parity == 0 ? mover : opponent;
        p = g.out_neighbors(p)[s[p]];
        ++len;
    }
}

// Odometer over the per-node choice counts.
bool next_strategy(const GameGraph& g, Strategy& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] + 1 < g.out_neighbors(i).size()) {
            ++s[i];
            std::fill(s.begin(), s.begin() + static_cast<long>(i), 0);
            return true;
        }
        // sinks have a single dummy choice 0
        if (!g.out_neighbors(i).empty()) s[i] = 0;
    }
    return false;
}

}  // namespace

std::map<PositionId, NodeLabel> oracle_solve(const GameGraph& g,
                                             std::size_t max_nodes,
                                             std::uint64_t max_plays) {
    if (g.node_count() > max_nodes)
        throw GraphTooLarge("graph has " + std::to_string(g.node_count()) +
                            " nodes, oracle limit is " +
                            std::to_string(max_nodes));
    std::uint64_t strategies = 1;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        std::size_t d = g.out_neighbors(i).size();
        if (d > 1) strategies *= d;
        if (strategies > max_plays) break;
    }
    if (strategies * strategies > max_plays)
        throw GraphTooLarge("strategy product exceeds play budget");

    std::map<PositionId, NodeLabel> out;
    for (std::size_t start = 0; start < g.node_count(); ++start) {
        bool winnable = false;
        Length won_len = Length::infinity();
        bool all_sigma_beaten = true;
        Length lost_len{0};

        Strategy sigma(g.node_count(), 0);
        do {
            // Worst case for the mover across all opponent strategies.
            bool wins_all = true;
            std::uint32_t worst_win = 0;
            std::optional<std::uint32_t> fastest_loss;
            Strategy tau(g.node_count(), 0);
            do {
                PlayResult r = simulate(g, start, sigma, tau);
                if (r.outcome != PlayResult::Outcome::MoverWins)
                    wins_all = false;
                else
                    worst_win = std::max(worst_win, r.length);
                if (r.outcome == PlayResult::Outcome::OpponentWins &&
                    (!fastest_loss || r.length < *fastest_loss))
                    fastest_loss = r.length;
            } while (next_strategy(g, tau));

            if (wins_all) {
                winnable = true;
                won_len = std::min(won_len, Length{worst_win});
            }
            if (fastest_loss)
                lost_len = std::max(lost_len, Length{*fastest_loss});
            else
                all_sigma_beaten = false;
        } while (next_strategy(g, sigma));

        NodeLabel label;
        if (winnable)
            label = {Value::Won, won_len};
        else if (all_sigma_beaten)
            label = {Value::Lost, lost_len};
        else
            label = {Value::Drawn, Length::infinity()};
        out.emplace(g.id_of(start), label);
    }
    return out;
}

std::vector<Mismatch> compare(
    const SolvedGame& solution,
    const std::map<PositionId, NodeLabel>& reference) {
    std::vector<Mismatch> out;
    for (const auto& [id, ref] : reference) {
        const NodeLabel& got = solution.label(id);
        if (got != ref) out.push_back({id, got, ref});
    }
    return out;
}

}  // namespace winmove
