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

#include "winmove/argumentation.hpp"

#include <algorithm>

#include "winmove/solve.hpp"

namespace winmove {

const char* to_string(AfLabel l) {
    switch (l) {
        case AfLabel::Accepted: return "accepted";
        case AfLabel::Defeated: return "defeated";
        case AfLabel::Undecided: return "undecided";
    }
    return "?";
}

ArgumentationFramework build_af(
    const std::vector<PositionId>& arguments,
    const std::vector<std::pair<PositionId, PositionId>>& attacks) {
    // Shares position-id validation and set semantics with build_graph.
    GameGraph g = build_graph(arguments, attacks);
    ArgumentationFramework af;
    af.arguments = g.positions();
    af.attacks = g.move_ids();
    return af;
}

GameGraph af_to_game(const ArgumentationFramework& af) {
    std::vector<std::pair<PositionId, PositionId>> moves;
    moves.reserve(af.attacks.size());
    for (const auto& [attacker, target] : af.attacks)
        moves.emplace_back(target, attacker);
    return build_graph(af.arguments, moves);
}

ArgumentationFramework game_to_af(const GameGraph& g) {
    std::vector<std::pair<PositionId, PositionId>> attacks;
    for (const auto& [src, dst] : g.move_ids())
        attacks.emplace_back(dst, src);
    return build_af(g.positions(), attacks);
}

std::map<PositionId, std::pair<AfLabel, Length>> grounded_labeling(
    const ArgumentationFramework& af) {
    SolvedGame solved = solve_fast(af_to_game(af));
    std::map<PositionId, std::pair<AfLabel, Length>> out;
    for (const auto& arg : af.arguments) {
        const NodeLabel& l = solved.label(arg);
        AfLabel a = l.value == Value::Won    ? AfLabel::Defeated
                    : l.value == Value::Lost ? AfLabel::Accepted
                                             : AfLabel::Undecided;
        out.emplace(arg, std::pair{a, l.length});
    }
    return out;
}

ProvenanceSubgraph argument_provenance(const ArgumentationFramework& af,
                                       const PositionId& x, ProvKind kind) {
    SolvedGame solved = solve_fast(af_to_game(af));
    ProvenanceSubgraph game = kind == ProvKind::Primary
                                  ? primary_provenance(solved, x)
                                  : actual_provenance(solved, x);
    ProvenanceSubgraph out;
    out.root = game.root;
    out.nodes = game.nodes;
    for (const auto& e : game.edges)
        out.edges.push_back({e.dst, e.src, e.annotation});
    std::sort(out.edges.begin(), out.edges.end(),
              [](const ProvenanceSubgraph::Edge& a,
                 const ProvenanceSubgraph::Edge& b) {
                  return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
              });
    return out;
}

}  // namespace winmove
