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

#ifndef WINMOVE_FORMATS_HPP
#define WINMOVE_FORMATS_HPP

#include <string>

#include "winmove/argumentation.hpp"
#include "winmove/graph.hpp"
#include "winmove/provenance.hpp"
#include "winmove/solve.hpp"

namespace winmove {

/// Edge-list text: one `src dst` move per line, `node x` declares an
/// isolated position, `#` starts a comment, blank lines are skipped.
GameGraph parse_edge_list(const std::string& text);
std::string render_edge_list(const GameGraph& g);

/// APX text: `arg(name).` and `att(a,b).` statements.
ArgumentationFramework parse_apx(const std::string& text);
std::string render_apx(const ArgumentationFramework& af);

/// Deterministic JSON (sorted arrays, stable bytes). Lengths serialize
/// as integers, infinity as the string "inf"; blunder edges carry no
/// "len" and potential-provenance edges no "type".
std::string export_json(const SolvedGame& s);
std::string export_json(const ProvenanceSubgraph& p);
std::string export_json(const GameGraph& g);

/// Grounded labeling of an AF as JSON / DOT.
std::string export_af_json(const ArgumentationFramework& af);
std::string export_af_dot(const ArgumentationFramework& af);

/// Reads back the solved-game JSON schema (labels included), e.g. for
/// validating externally produced labelings.
SolvedGame parse_solved_json(const std::string& text);

/// DOT rendering: nodes filled green/red/yellow for won/lost/drawn and
/// labeled `id : len`; primary winning edges solid green, secondary
/// dashed green, delaying solid red, drawing solid yellow, blunders
/// dashed brown. AF exports use blue/orange/yellow fills.
std::string export_dot(const SolvedGame& s);
std::string export_dot(const ProvenanceSubgraph& p);
std::string export_dot(const GameGraph& g);

/// StepTrace as one `step <n> <RR|GR|DRAW>: <ids...>` line per step.
std::string render_trace(const StepTrace& t);

}  // namespace winmove

#endif
