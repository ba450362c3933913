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

#include "winmove/provenance.hpp"

#include <algorithm>

namespace winmove {

bool ProvenanceSubgraph::contains_node(const PositionId& id) const {
    return std::binary_search(nodes.begin(), nodes.end(), id);
}

bool ProvenanceSubgraph::contains_edge(const PositionId& src,
                                       const PositionId& dst) const {
    return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return e.src == src && e.dst == dst;
    });
}

namespace {

bool provenance_relevant(EdgeType t, bool primary_only) {
    switch (t) {
        case EdgeType::WinPrimary:
        case EdgeType::Delaying:
        case EdgeType::Drawing:
            return true;
        case EdgeType::WinSecondary:
            return !primary_only;
        default:
            return false;
    }
}

// Closure from x following only provenance-relevant edges.
ProvenanceSubgraph typed_closure(const SolvedGame& s, const PositionId& x,
                                 bool primary_only) {
    const GameGraph& g = s.graph;
    std::vector<bool> seen(g.node_count(), false);
    std::vector<std::size_t> stack{g.index_of(x)};
    seen[stack.back()] = true;
    // moves() is sorted by (src, dst), so each node's out-edges are a
    // contiguous range.
    auto out_range = [&](std::size_t u) {
        auto lo = std::lower_bound(g.moves().begin(), g.moves().end(),
                                   std::pair<std::size_t, std::size_t>{u, 0});
        auto hi = std::lower_bound(
            g.moves().begin(), g.moves().end(),
            std::pair<std::size_t, std::size_t>{u + 1, 0});
        return std::pair{lo, hi};
    };
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        auto [lo, hi] = out_range(u);
        for (auto it = lo; it != hi; ++it) {
            std::size_t m = static_cast<std::size_t>(it - g.moves().begin());
            if (!provenance_relevant(s.edge_annotations[m].type, primary_only))
                continue;
            if (!seen[it->second]) {
                seen[it->second] = true;
                stack.push_back(it->second);
            }
        }
    }
    ProvenanceSubgraph out;
    out.root = x;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        if (seen[i]) out.nodes.push_back(g.id_of(i));
    for (std::size_t m = 0; m < g.move_count(); ++m) {
        auto [src, dst] = g.moves()[m];
        if (seen[src] && seen[dst] &&
            provenance_relevant(s.edge_annotations[m].type, primary_only))
            out.edges.push_back(
                {g.id_of(src), g.id_of(dst), s.edge_annotations[m]});
    }
    return out;
}

}  // namespace

ProvenanceSubgraph potential_provenance(const GameGraph& g,
                                        const PositionId& x) {
    ProvenanceSubgraph out;
    out.root = x;
    out.nodes = reachable_closure(g, x);
    GameGraph sub = induced_subgraph(g, out.nodes);
    for (auto& [s, d] : sub.move_ids())
        out.edges.push_back({s, d, std::nullopt});
    return out;
}

ProvenanceSubgraph actual_provenance(const SolvedGame& s,
                                     const PositionId& x) {
    return typed_closure(s, x, /*primary_only=*/false);
}

ProvenanceSubgraph primary_provenance(const SolvedGame& s,
                                      const PositionId& x) {
    return typed_closure(s, x, /*primary_only=*/true);
}

bool subgraph_of(const ProvenanceSubgraph& a, const ProvenanceSubgraph& b) {
    for (const auto& n : a.nodes)
        if (!b.contains_node(n)) return false;
    for (const auto& e : a.edges)
        if (!b.contains_edge(e.src, e.dst)) return false;
    return true;
}

}  // namespace winmove
