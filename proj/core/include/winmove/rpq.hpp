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

#ifndef WINMOVE_RPQ_HPP
#define WINMOVE_RPQ_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "winmove/provenance.hpp"
#include "winmove/solve.hpp"

namespace winmove {

/// Edge-label alphabet for path expressions. W is shorthand for
/// (Wpr | Wsc); blunder edges carry no label and never match.
enum class RpqSymbol { Wpr, Wsc, W, L, D };

/// Regular expression AST over edge labels.
struct Rpq {
    enum class Kind { Symbol, Concat, Alt, Star, Plus };

    Kind kind = Kind::Symbol;
    RpqSymbol symbol = RpqSymbol::W;  // Kind::Symbol only
    std::vector<Rpq> children;
};

Rpq rpq_symbol(RpqSymbol s);
Rpq rpq_concat(Rpq a, Rpq b);
Rpq rpq_alt(Rpq a, Rpq b);
Rpq rpq_star(Rpq a);
Rpq rpq_plus(Rpq a);

/// Surface syntax: tokens Wpr Wsc W L D; '.' concat, '|' alt, '*', '+',
/// parentheses; whitespace ignored. Throws MalformedExpression.
Rpq parse_rpq(const std::string& text);

/// Thompson-style NFA over the four concrete letters (W is expanded).
struct Automaton {
    // Concrete letters, indexable: Wpr=0, Wsc=1, L=2, D=3.
    static constexpr std::size_t kLetters = 4;

    struct State {
        std::vector<std::pair<std::size_t, std::size_t>> moves;  // (letter, to)
        std::vector<std::size_t> eps;
    };

    std::vector<State> states;
    std::size_t start = 0;
    std::size_t accept = 0;

    bool accepts(const std::vector<std::size_t>& word) const;
};

/// Letter of a typed edge; nullopt for blunders.
std::optional<std::size_t> edge_letter(EdgeType t);

Automaton compile_rpq(const Rpq& r);

/// Minimal subgraph rooted at x containing every walk from x whose
/// label word is in L(r): an edge is kept iff it lies on a prefix of
/// some accepting walk, computed on the product of the typed graph with
/// the automaton.
ProvenanceSubgraph match_rpq(const SolvedGame& s, const PositionId& x,
                             const Rpq& r);

enum class ProvKind { Actual, Primary };

/// Canonical per-value path expression: actual provenance is
/// W.(L.W)* / (L.W)* / D+ for won / lost / drawn roots, primary uses
/// Wpr in place of W.
Rpq standard_pattern(Value v, ProvKind kind);

}  // namespace winmove

#endif
