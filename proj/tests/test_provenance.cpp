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

#include <doctest.h>

#include <random>

#include "winmove/errors.hpp"
#include "winmove/provenance.hpp"
#include "winmove/rpq.hpp"
#include "winmove/solve.hpp"
#include "test_util.hpp"

using namespace winmove;
using testutil::fig1;

namespace {

std::vector<std::pair<PositionId, PositionId>> edge_pairs(
    const ProvenanceSubgraph& p) {
    std::vector<std::pair<PositionId, PositionId>> out;
    for (const auto& e : p.edges) out.emplace_back(e.src, e.dst);
    return out;
}

}  // namespace

TEST_CASE("potential provenance of fig1 positions") {
    GameGraph g = fig1();
    ProvenanceSubgraph p = potential_provenance(g, "d");
    CHECK(p.root == "d");
    CHECK(p.nodes == std::vector<PositionId>{"d", "e", "f", "g", "h", "i", "j"});
    CHECK(edge_pairs(p) == std::vector<std::pair<PositionId, PositionId>>{
                               {"d", "e"},
                               {"d", "f"},
                               {"d", "g"},
                               {"d", "h"},
                               {"e", "h"},
                               {"g", "d"},
                               {"h", "i"},
                               {"i", "j"}});
    for (const auto& e : p.edges) CHECK(!e.annotation.has_value());

    ProvenanceSubgraph b = potential_provenance(g, "b");
    CHECK(b.nodes == std::vector<PositionId>{"b"});
    CHECK(b.edges.empty());

    ProvenanceSubgraph a = potential_provenance(g, "a");
    CHECK(a.nodes == std::vector<PositionId>{"a", "b", "o"});
    CHECK(edge_pairs(a) == std::vector<std::pair<PositionId, PositionId>>{
                               {"a", "b"}, {"a", "o"}});
}

TEST_CASE("actual provenance drops blunders and what is behind them") {
    auto [s, trace] = solve(fig1());
    ProvenanceSubgraph p = actual_provenance(s, "d");
    CHECK(p.nodes == std::vector<PositionId>{"d", "f", "g", "h", "i", "j"});
    CHECK(edge_pairs(p) == std::vector<std::pair<PositionId, PositionId>>{
                               {"d", "f"},
                               {"d", "g"},
                               {"d", "h"},
                               {"g", "d"},
                               {"h", "i"},
                               {"i", "j"}});
    CHECK(!p.contains_node("e"));

    CHECK(actual_provenance(s, "b").nodes == std::vector<PositionId>{"b"});

    auto [cyc, t2] = solve(build_graph({}, {{"x", "y"}, {"y", "x"}}));
    ProvenanceSubgraph pc = actual_provenance(cyc, "x");
    CHECK(pc.nodes == std::vector<PositionId>{"x", "y"});
    REQUIRE(pc.edges.size() == 2);
    for (const auto& e : pc.edges)
        CHECK(e.annotation->type == EdgeType::Drawing);
}

TEST_CASE("primary provenance keeps only fastest winning moves") {
    auto [s, trace] = solve(fig1());
    ProvenanceSubgraph d = primary_provenance(s, "d");
    CHECK(d.nodes == std::vector<PositionId>{"d", "f"});
    CHECK(edge_pairs(d) == std::vector<std::pair<PositionId, PositionId>>{
                               {"d", "f"}});

    ProvenanceSubgraph c = primary_provenance(s, "c");
    CHECK(c.nodes ==
          std::vector<PositionId>{"c", "d", "e", "f", "h", "i", "j"});
    CHECK(edge_pairs(c) == std::vector<std::pair<PositionId, PositionId>>{
                               {"c", "d"},
                               {"c", "e"},
                               {"d", "f"},
                               {"e", "h"},
                               {"h", "i"},
                               {"i", "j"}});

    ProvenanceSubgraph j = primary_provenance(s, "j");
    CHECK(j.nodes == std::vector<PositionId>{"j"});
    CHECK(j.edges.empty());
}

TEST_CASE("rpq surface syntax") {
    CHECK_NOTHROW(parse_rpq("W.(L.W)*"));
    CHECK_NOTHROW(parse_rpq("  Wpr . ( L . Wpr ) *  "));
    CHECK_NOTHROW(parse_rpq("D+"));
    CHECK_NOTHROW(parse_rpq("(Wpr|Wsc).L"));
    CHECK_THROWS_AS(parse_rpq(""), MalformedExpression);
    CHECK_THROWS_AS(parse_rpq("W.("), MalformedExpression);
    CHECK_THROWS_AS(parse_rpq("X"), MalformedExpression);
    CHECK_THROWS_AS(parse_rpq("W)"), MalformedExpression);
}

TEST_CASE("compiled automata accept the right words") {
    // letters: Wpr=0, Wsc=1, L=2, D=3
    Automaton dplus = compile_rpq(parse_rpq("D+"));
    CHECK(dplus.accepts({3}));
    CHECK(dplus.accepts({3, 3, 3}));
    CHECK(!dplus.accepts({}));
    CHECK(!dplus.accepts({3, 2}));

    Automaton wlw = compile_rpq(parse_rpq("W.(L.W)*"));
    CHECK(wlw.accepts({0}));
    CHECK(wlw.accepts({1}));
    CHECK(wlw.accepts({0, 2, 1}));
    CHECK(wlw.accepts({1, 2, 0, 2, 0}));
    CHECK(!wlw.accepts({2}));
    CHECK(!wlw.accepts({0, 2}));

    Automaton pr = compile_rpq(parse_rpq("Wpr.(L.Wpr)*"));
    CHECK(pr.accepts({0}));
    CHECK(!pr.accepts({1}));
    CHECK(pr.accepts({0, 2, 0}));
}

TEST_CASE("match_rpq on fig1") {
    auto [s, trace] = solve(fig1());
    CHECK(match_rpq(s, "d", parse_rpq("W.(L.W)*")) ==
          actual_provenance(s, "d"));
    CHECK(match_rpq(s, "c", parse_rpq("(L.Wpr)*")) ==
          primary_provenance(s, "c"));

    ProvenanceSubgraph b = match_rpq(s, "b", parse_rpq("D+"));
    CHECK(b.nodes == std::vector<PositionId>{"b"});
    CHECK(b.edges.empty());
}

TEST_CASE("standard patterns") {
    auto [s, trace] = solve(fig1());
    // Spot-check the table through match equivalence on fig1 roots.
    for (const auto& x : s.graph.positions()) {
        Value v = s.label(x).value;
        CHECK(match_rpq(s, x, standard_pattern(v, ProvKind::Actual)) ==
              actual_provenance(s, x));
        CHECK(match_rpq(s, x, standard_pattern(v, ProvKind::Primary)) ==
              primary_provenance(s, x));
    }
}

TEST_CASE("closure and rpq extraction agree on random graphs") {
    std::mt19937 rng(21);
    for (int i = 0; i < 200; ++i) {
        GameGraph g = testutil::random_graph(rng, 15);
        auto [s, trace] = solve(g);
        for (const auto& x : g.positions()) {
            Value v = s.label(x).value;
            CAPTURE(i);
            CAPTURE(x);
            ProvenanceSubgraph ac = actual_provenance(s, x);
            ProvenanceSubgraph pr = primary_provenance(s, x);
            ProvenanceSubgraph pt = potential_provenance(g, x);
            CHECK(match_rpq(s, x, standard_pattern(v, ProvKind::Actual)) == ac);
            CHECK(match_rpq(s, x, standard_pattern(v, ProvKind::Primary)) ==
                  pr);
            // inclusion chain
            CHECK(subgraph_of(pr, ac));
            CHECK(subgraph_of(ac, pt));
            // no blunder edge in actual or primary provenance
            for (const auto& e : ac.edges) {
                CHECK(e.annotation->type != EdgeType::Blunder1);
                CHECK(e.annotation->type != EdgeType::Blunder2);
                CHECK(e.annotation->type != EdgeType::Blunder3);
            }
            // drawn roots: actual and primary coincide
            if (v == Value::Drawn) CHECK(ac == pr);
        }
    }
}

TEST_CASE("potential provenance ignores the solution") {
    GameGraph g = fig1();
    ProvenanceSubgraph before = potential_provenance(g, "d");
    auto [s, trace] = solve(g);
    CHECK(potential_provenance(s.graph, "d") == before);
}

TEST_CASE("drawing edges never mix with winning/delaying in one subgraph") {
    std::mt19937 rng(22);
    for (int i = 0; i < 100; ++i) {
        GameGraph g = testutil::random_graph(rng, 15);
        auto [s, trace] = solve(g);
        for (const auto& x : g.positions()) {
            ProvenanceSubgraph pr = primary_provenance(s, x);
            bool has_drawing = false, has_other = false;
            for (const auto& e : pr.edges) {
                if (e.annotation->type == EdgeType::Drawing)
                    has_drawing = true;
                else
                    has_other = true;
            }
            CHECK(!(has_drawing && has_other));
        }
    }
}
