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

#ifndef WINMOVE_SOLVE_HPP
#define WINMOVE_SOLVE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "winmove/graph.hpp"
#include "winmove/length.hpp"

namespace winmove {

enum class Value { Won, Lost, Drawn };

const char* to_string(Value v);

/// The seven move types of a solved game. Won->Lost edges split into
/// primary (fastest win) and secondary (slower win); Lost->Won edges
/// delay the loss; Drawn->Drawn edges keep the draw. The three blunders
/// give the advantage away and carry no length.
enum class EdgeType {
    WinPrimary,
    WinSecondary,
    Delaying,
    Drawing,
    Blunder1,  // Won -> Won
    Blunder2,  // Won -> Drawn
    Blunder3,  // Drawn -> Won
};

const char* to_string(EdgeType t);

struct NodeLabel {
    Value value = Value::Drawn;
    Length length = Length::infinity();

    bool operator==(const NodeLabel&) const = default;
};

struct EdgeAnnotation {
    EdgeType type = EdgeType::Drawing;
    std::optional<Length> length;  // absent for blunders

    bool operator==(const EdgeAnnotation&) const = default;
};

/// A game graph with a total node labeling and a total edge typing.
struct SolvedGame {
    GameGraph graph;
    std::vector<NodeLabel> node_labels;       // by node index
    std::vector<EdgeAnnotation> edge_annotations;  // by move index

    const NodeLabel& label(const PositionId& x) const {
        return node_labels[graph.index_of(x)];
    }

    bool operator==(const SolvedGame&) const = default;
};

/// Per-sweep record of rule firings. Rule steps carry the sweep index,
/// which equals the length of every position labeled in that sweep; the
/// final DrawClosure step collects all drawn positions.
struct StepTrace {
    enum class Rule { RedRule, GreenRule, DrawClosure };

    struct Step {
        std::size_t index;  // unused for DrawClosure
        Rule rule;
        std::vector<PositionId> newly_labeled;  // lexicographic

        bool operator==(const Step&) const = default;
    };

    std::vector<Step> steps;
};

/// Backward induction by synchronized Red/Green sweeps. Each sweep
/// labels every position derivable from the frozen labeling of earlier
/// sweeps, so a position's sweep index equals its length. Unlabeled
/// positions are drawn; edge types are then read off the final labels.
std::pair<SolvedGame, StepTrace> solve(const GameGraph& g);

/// Worklist retrograde analysis: per-node counters of unlabeled
/// followers, queue seeded with sinks. Produces the same SolvedGame as
/// solve in O(|V| + |E|).
SolvedGame solve_fast(const GameGraph& g);

/// Stored annotation of a move; throws UnknownMove.
EdgeAnnotation classify_edge(const SolvedGame& s, const PositionId& x,
                             const PositionId& y);

enum class ViolationKind {
    GhostEdge,
    ParityViolation,
    ValueViolation,
    LengthViolation,
    EdgeTypeViolation,
    MissingWinPrimary,
    MissingDrawing,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Independent consistency check of a labeled game: ghost edges, value
/// and length recurrences, edge typing, primary/drawing witnesses, and
/// the parity invariant. Empty result means the labeling is a valid
/// solution.
std::vector<Violation> validate_solution(const SolvedGame& s);

}  // namespace winmove

#endif
