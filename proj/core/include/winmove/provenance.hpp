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

#ifndef WINMOVE_PROVENANCE_HPP
#define WINMOVE_PROVENANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "winmove/graph.hpp"
#include "winmove/solve.hpp"

namespace winmove {

/// Rooted labeled subgraph explaining the value of a position. Edges of
/// the potential provenance carry no annotation (the subgraph does not
/// depend on the solution).
struct ProvenanceSubgraph {
    struct Edge {
        PositionId src;
        PositionId dst;
        std::optional<EdgeAnnotation> annotation;

        bool operator==(const Edge&) const = default;
    };

    PositionId root;
    std::vector<PositionId> nodes;  // lexicographic
    std::vector<Edge> edges;        // lexicographic by (src, dst)

    bool contains_node(const PositionId& id) const;
    bool contains_edge(const PositionId& src, const PositionId& dst) const;

    bool operator==(const ProvenanceSubgraph&) const = default;
};

/// Everything reachable from x, untyped; needs no solved game.
ProvenanceSubgraph potential_provenance(const GameGraph& g,
                                        const PositionId& x);

/// Reachable from x over winning, delaying, and drawing moves only;
/// blunders and anything behind them are dropped.
ProvenanceSubgraph actual_provenance(const SolvedGame& s, const PositionId& x);

/// Actual provenance further restricted to minimum-length winning
/// moves: primary winning, delaying, and drawing edges.
ProvenanceSubgraph primary_provenance(const SolvedGame& s,
                                      const PositionId& x);

/// True when a ⊆ b node- and edge-wise (annotations ignored).
bool subgraph_of(const ProvenanceSubgraph& a, const ProvenanceSubgraph& b);

}  // namespace winmove

#endif
