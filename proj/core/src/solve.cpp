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

#include "winmove/solve.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>

#include "winmove/errors.hpp"

namespace winmove {

const char* to_string(Value v) {
    switch (v) {
        case Value::Won: return "won";
        case Value::Lost: return "lost";
        case Value::Drawn: return "drawn";
    }
    return "?";
}

const char* to_string(EdgeType t) {
    switch (t) {
        case EdgeType::WinPrimary: return "win_primary";
        case EdgeType::WinSecondary: return "win_secondary";
        case EdgeType::Delaying: return "delaying";
        case EdgeType::Drawing: return "drawing";
        case EdgeType::Blunder1: return "blunder_ww";
        case EdgeType::Blunder2: return "blunder_wd";
        case EdgeType::Blunder3: return "blunder_dw";
    }
    return "?";
}

namespace {

// Declarative edge typing from final node labels. Returns nullopt for
// ghost edges (Lost->Lost, Lost->Drawn, Drawn->Lost), which a correct
// solution never contains.
std::optional<EdgeAnnotation> type_from_labels(const NodeLabel& src,
                                               const NodeLabel& dst) {
    switch (src.value) {
        case Value::Won:
            if (dst.value == Value::Lost) {
                EdgeType t = src.length == dst.length.successor()
                                 ? EdgeType::WinPrimary
                                 : EdgeType::WinSecondary;
                return EdgeAnnotation{t, dst.length.successor()};
            }
            if (dst.value == Value::Won)
                return EdgeAnnotation{EdgeType::Blunder1, std::nullopt};
            return EdgeAnnotation{EdgeType::Blunder2, std::nullopt};
        case Value::Lost:
            if (dst.value == Value::Won)
                return EdgeAnnotation{EdgeType::Delaying,
                                      dst.length.successor()};
            return std::nullopt;
        case Value::Drawn:
            if (dst.value == Value::Drawn)
                return EdgeAnnotation{EdgeType::Drawing, Length::infinity()};
            if (dst.value == Value::Won)
                return EdgeAnnotation{EdgeType::Blunder3, std::nullopt};
            return std::nullopt;
    }
    return std::nullopt;
}

std::vector<EdgeAnnotation> annotate_edges(
    const GameGraph& g, const std::vector<NodeLabel>& labels) {
    std::vector<EdgeAnnotation> out;
    out.reserve(g.move_count());
    for (auto [s, d] : g.moves()) {
        auto a = type_from_labels(labels[s], labels[d]);
        if (!a) throw std::logic_error("ghost edge in solved game");
        out.push_back(*a);
    }
    return out;
}

}  // namespace

std::pair<SolvedGame, StepTrace> solve(const GameGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::optional<NodeLabel>> label(n);
    StepTrace trace;
    // Edges marked W_pr by the green rule at discovery time; must agree
    // with the declarative typing of the final labels.
    std::set<std::pair<std::size_t, std::size_t>> inflight_primary;

    for (std::size_t step = 0;; ++step) {
        std::vector<std::pair<std::size_t, NodeLabel>> newly;
        const bool green = step % 2 == 1;
        for (std::size_t x = 0; x < n; ++x) {
            if (label[x]) continue;
            auto fs = g.out_neighbors(x);
            if (green) {
                // Won if some follower is lost; shortest win.
                std::optional<Length> best;
                for (std::size_t y : fs) {
                    if (label[y] && label[y]->value == Value::Lost) {
                        if (!best || label[y]->length < *best)
                            best = label[y]->length;
                    }
                }
                if (best)
                    newly.emplace_back(
                        x, NodeLabel{Value::Won, best->successor()});
            } else {
                // Lost if all followers are won (sinks vacuously);
                // longest delay.
                Length worst{0};
                bool all_won = true;
                for (std::size_t y : fs) {
                    if (!label[y] || label[y]->value != Value::Won) {
                        all_won = false;
                        break;
                    }
                    worst = std::max(worst, label[y]->length.successor());
                }
                if (all_won) newly.emplace_back(x, NodeLabel{Value::Lost, worst});
            }
        }
        if (newly.empty()) break;
        StepTrace::Step rec{step,
                            green ? StepTrace::Rule::GreenRule
                                  : StepTrace::Rule::RedRule,
                            {}};
        for (auto& [x, lab] : newly) {
            label[x] = lab;
            rec.newly_labeled.push_back(g.id_of(x));
            if (green) {
                for (std::size_t y : g.out_neighbors(x)) {
                    if (label[y] && label[y]->value == Value::Lost &&
                        (x != y))
                        inflight_primary.insert({x, y});
                }
            }
        }
        trace.steps.push_back(std::move(rec));
    }

    StepTrace::Step draw{0, StepTrace::Rule::DrawClosure, {}};
    for (std::size_t x = 0; x < n; ++x) {
        if (!label[x]) {
            label[x] = NodeLabel{Value::Drawn, Length::infinity()};
            draw.newly_labeled.push_back(g.id_of(x));
        }
    }
    trace.steps.push_back(std::move(draw));

    SolvedGame solved;
    solved.graph = g;
    solved.node_labels.reserve(n);
    for (auto& l : label) solved.node_labels.push_back(*l);
    solved.edge_annotations = annotate_edges(g, solved.node_labels);

    // At discovery, every lost follower of a newly won node is minimal,
    // so the in-flight marks must be exactly the WinPrimary edges.
    std::set<std::pair<std::size_t, std::size_t>> declared;
    for (std::size_t m = 0; m < g.move_count(); ++m) {
        if (solved.edge_annotations[m].type == EdgeType::WinPrimary)
            declared.insert(g.moves()[m]);
    }
    if (declared != inflight_primary)
        throw std::logic_error("primary-edge marks diverge from labels");

    return {std::move(solved), std::move(trace)};
}

SolvedGame solve_fast(const GameGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::optional<NodeLabel>> label(n);
    std::vector<std::size_t> unlabeled_followers(n);
    std::deque<std::size_t> queue;

    for (std::size_t x = 0; x < n; ++x) {
        unlabeled_followers[x] = g.out_neighbors(x).size();
        if (unlabeled_followers[x] == 0) {
            label[x] = NodeLabel{Value::Lost, Length{0}};
            queue.push_back(x);
        }
    }

    // FIFO processing discovers labels in nondecreasing length order:
    // the first lost follower seen gives the shortest win, the follower
    // that zeroes the counter gives the longest delay.
    while (!queue.empty()) {
        std::size_t y = queue.front();
        queue.pop_front();
        for (std::size_t x : g.in_neighbors(y)) {
            if (label[x]) continue;
            if (label[y]->value == Value::Lost) {
                label[x] = NodeLabel{Value::Won, label[y]->length.successor()};
                queue.push_back(x);
            } else {
                if (--unlabeled_followers[x] == 0) {
                    label[x] =
                        NodeLabel{Value::Lost, label[y]->length.successor()};
                    queue.push_back(x);
                }
            }
        }
    }

    SolvedGame solved;
    solved.graph = g;
    solved.node_labels.reserve(n);
    for (auto& l : label) {
        solved.node_labels.push_back(
            l ? *l : NodeLabel{Value::Drawn, Length::infinity()});
    }
    solved.edge_annotations = annotate_edges(g, solved.node_labels);
    return solved;
}

EdgeAnnotation classify_edge(const SolvedGame& s, const PositionId& x,
                             const PositionId& y) {
    return s.edge_annotations[s.graph.move_index(x, y)];
}

std::vector<Violation> validate_solution(const SolvedGame& s) {
    std::vector<Violation> out;
    const GameGraph& g = s.graph;

    for (std::size_t x = 0; x < g.node_count(); ++x) {
        const NodeLabel& lx = s.node_labels[x];
        const PositionId& id = g.id_of(x);

        switch (lx.value) {
            case Value::Won:
                if (lx.length.is_infinite() || lx.length.finite() % 2 != 1)
                    out.push_back({ViolationKind::ParityViolation,
                                   "won node " + id + " has length " +
                                       lx.length.to_string()});
                break;
            case Value::Lost:
                if (lx.length.is_infinite() || lx.length.finite() % 2 != 0)
                    out.push_back({ViolationKind::ParityViolation,
                                   "lost node " + id + " has length " +
                                       lx.length.to_string()});
                break;
            case Value::Drawn:
                if (!lx.length.is_infinite())
                    out.push_back({ViolationKind::ParityViolation,
                                   "drawn node " + id + " has finite length"});
                break;
        }

        // Recompute value and length from follower labels.
        bool all_won = true;
        std::optional<Length> min_lost, max_won;
        for (std::size_t y : g.out_neighbors(x)) {
            const NodeLabel& ly = s.node_labels[y];
            if (ly.value != Value::Won) all_won = false;
            if (ly.value == Value::Lost &&
                (!min_lost || ly.length < *min_lost))
                min_lost = ly.length;
            if (ly.value == Value::Won && (!max_won || ly.length > *max_won))
                max_won = ly.length;
        }
        Value expected = min_lost ? Value::Won
                         : all_won ? Value::Lost
                                   : Value::Drawn;
        if (lx.value != expected) {
            out.push_back({ViolationKind::ValueViolation,
                           "node " + id + " labeled " + to_string(lx.value) +
                               ", followers imply " + to_string(expected)});
            continue;
        }
        if (lx.value == Value::Won && lx.length != min_lost->successor())
            out.push_back({ViolationKind::LengthViolation,
                           "won node " + id + " has length " +
                               lx.length.to_string() + ", expected " +
                               min_lost->successor().to_string()});
        if (lx.value == Value::Lost) {
            Length expect = max_won ? max_won->successor() : Length{0};
            if (lx.length != expect)
                out.push_back({ViolationKind::LengthViolation,
                               "lost node " + id + " has length " +
                                   lx.length.to_string() + ", expected " +
                                   expect.to_string()});
        }
    }

    std::vector<bool> has_primary(g.node_count(), false);
    std::vector<bool> has_drawing(g.node_count(), false);
    for (std::size_t m = 0; m < g.move_count(); ++m) {
        auto [xs, ys] = g.moves()[m];
        const std::string edge_name =
            g.id_of(xs) + " -> " + g.id_of(ys);
        auto expect = type_from_labels(s.node_labels[xs], s.node_labels[ys]);
        if (!expect) {
            out.push_back({ViolationKind::GhostEdge,
                           "ghost edge " + edge_name + " (" +
                               to_string(s.node_labels[xs].value) + " -> " +
                               to_string(s.node_labels[ys].value) + ")"});
            continue;
        }
        if (s.edge_annotations[m] != *expect)
            out.push_back({ViolationKind::EdgeTypeViolation,
                           "edge " + edge_name + " annotated " +
                               to_string(s.edge_annotations[m].type) +
                               ", labels imply " + to_string(expect->type)});
        if (expect->type == EdgeType::WinPrimary) has_primary[xs] = true;
        if (expect->type == EdgeType::Drawing) has_drawing[xs] = true;
    }
    for (std::size_t x = 0; x < g.node_count(); ++x) {
        if (s.node_labels[x].value == Value::Won && !has_primary[x])
            out.push_back({ViolationKind::MissingWinPrimary,
                           "won node " + g.id_of(x) +
                               " has no primary winning move"});
        if (s.node_labels[x].value == Value::Drawn && !has_drawing[x])
            out.push_back({ViolationKind::MissingDrawing,
                           "drawn node " + g.id_of(x) +
                               " has no drawing move"});
    }
    return out;
}

}  // namespace winmove
