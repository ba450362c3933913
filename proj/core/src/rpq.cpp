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

#include "winmove/rpq.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "winmove/errors.hpp"

namespace winmove {

Rpq rpq_symbol(RpqSymbol s) { return Rpq{Rpq::Kind::Symbol, s, {}}; }

Rpq rpq_concat(Rpq a, Rpq b) {
    Rpq r{Rpq::Kind::Concat, RpqSymbol::W, {}};
    r.children.push_back(std::move(a));
    r.children.push_back(std::move(b));
    return r;
}

Rpq rpq_alt(Rpq a, Rpq b) {
    Rpq r{Rpq::Kind::Alt, RpqSymbol::W, {}};
    r.children.push_back(std::move(a));
    r.children.push_back(std::move(b));
    return r;
}

Rpq rpq_star(Rpq a) {
    Rpq r{Rpq::Kind::Star, RpqSymbol::W, {}};
    r.children.push_back(std::move(a));
    return r;
}

Rpq rpq_plus(Rpq a) {
    Rpq r{Rpq::Kind::Plus, RpqSymbol::W, {}};
    r.children.push_back(std::move(a));
    return r;
}

namespace {

// Recursive-descent parser for the surface syntax.
class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    Rpq parse() {
        Rpq r = alternation();
        skip_ws();
        if (pos_ != text_.size())
            throw MalformedExpression("trailing input at offset " +
                                      std::to_string(pos_));
        return r;
    }

  private:
    Rpq alternation() {
        Rpq r = concatenation();
        while (peek() == '|') {
            ++pos_;
            r = rpq_alt(std::move(r), concatenation());
        }
        return r;
    }

    Rpq concatenation() {
        Rpq r = postfix();
        while (peek() == '.') {
            ++pos_;
            r = rpq_concat(std::move(r), postfix());
        }
        return r;
    }

    Rpq postfix() {
        Rpq r = atom();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = rpq_star(std::move(r));
            } else if (c == '+') {
                ++pos_;
                r = rpq_plus(std::move(r));
            } else {
                return r;
            }
        }
    }

    Rpq atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Rpq r = alternation();
            if (peek() != ')')
                throw MalformedExpression("missing ')'");
            ++pos_;
            return r;
        }
        if (c == 'W') {
            ++pos_;
            if (text_.compare(pos_, 2, "pr") == 0) {
                pos_ += 2;
                return rpq_symbol(RpqSymbol::Wpr);
            }
            if (text_.compare(pos_, 2, "sc") == 0) {
                pos_ += 2;
                return rpq_symbol(RpqSymbol::Wsc);
            }
            return rpq_symbol(RpqSymbol::W);
        }
        if (c == 'L') {
            ++pos_;
            return rpq_symbol(RpqSymbol::L);
        }
        if (c == 'D') {
            ++pos_;
            return rpq_symbol(RpqSymbol::D);
        }
        if (c == '\0') throw MalformedExpression("unexpected end of input");
        throw MalformedExpression(std::string("unexpected character '") + c +
                                  "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

struct Fragment {
    std::size_t start;
    std::size_t accept;
};

class Builder {
  public:
    Fragment build(const Rpq& r) {
        switch (r.kind) {
            case Rpq::Kind::Symbol: {
                if (r.symbol == RpqSymbol::W) {
                    // W = (Wpr | Wsc)
                    Fragment f = letter(0);
                    Fragment g = letter(1);
                    return alt(f, g);
                }
                switch (r.symbol) {
                    case RpqSymbol::Wpr: return letter(0);
                    case RpqSymbol::Wsc: return letter(1);
                    case RpqSymbol::L: return letter(2);
                    default: return letter(3);
                }
            }
            case Rpq::Kind::Concat: {
                Fragment a = build(r.children[0]);
                Fragment b = build(r.children[1]);
                states[a.accept].eps.push_back(b.start);
                return {a.start, b.accept};
            }
            case Rpq::Kind::Alt:
                return alt(build(r.children[0]), build(r.children[1]));
            case Rpq::Kind::Star: {
                Fragment a = build(r.children[0]);
                std::size_t s = fresh();
                std::size_t t = fresh();
                states[s].eps.push_back(a.start);
                states[s].eps.push_back(t);
                states[a.accept].eps.push_back(a.start);
                states[a.accept].eps.push_back(t);
                return {s, t};
            }
            case Rpq::Kind::Plus: {
                Fragment a = build(r.children[0]);
                std::size_t t = fresh();
                states[a.accept].eps.push_back(a.start);
                states[a.accept].eps.push_back(t);
                return {a.start, t};
            }
        }
        throw MalformedExpression("unreachable");
    }

    std::vector<Automaton::State> states;

  private:
    std::size_t fresh() {
        states.emplace_back();
        return states.size() - 1;
    }

    Fragment letter(std::size_t l) {
        std::size_t s = fresh();
        std::size_t t = fresh();
        states[s].moves.emplace_back(l, t);
        return {s, t};
    }

    Fragment alt(Fragment a, Fragment b) {
        std::size_t s = fresh();
        std::size_t t = fresh();
        states[s].eps.push_back(a.start);
        states[s].eps.push_back(b.start);
        states[a.accept].eps.push_back(t);
        states[b.accept].eps.push_back(t);
        return {s, t};
    }
};

void eps_close(const Automaton& a, std::set<std::size_t>& set) {
    std::vector<std::size_t> stack(set.begin(), set.end());
    while (!stack.empty()) {
        std::size_t q = stack.back();
        stack.pop_back();
        for (std::size_t r : a.states[q].eps) {
            if (set.insert(r).second) stack.push_back(r);
        }
    }
}

}  // namespace

Rpq parse_rpq(const std::string& text) { return Parser(text).parse(); }

std::optional<std::size_t> edge_letter(EdgeType t) {
    switch (t) {
        case EdgeType::WinPrimary: return 0;
        case EdgeType::WinSecondary: return 1;
        case EdgeType::Delaying: return 2;
        case EdgeType::Drawing: return 3;
        default: return std::nullopt;
    }
}

Automaton compile_rpq(const Rpq& r) {
    Builder b;
    Fragment f = b.build(r);
    Automaton a;
    a.states = std::move(b.states);
    a.start = f.start;
    a.accept = f.accept;
    return a;
}

bool Automaton::accepts(const std::vector<std::size_t>& word) const {
    std::set<std::size_t> current{start};
    eps_close(*this, current);
    for (std::size_t letter : word) {
        std::set<std::size_t> next;
        for (std::size_t q : current) {
            for (auto [l, to] : states[q].moves)
                if (l == letter) next.insert(to);
        }
        eps_close(*this, next);
        current = std::move(next);
        if (current.empty()) return false;
    }
    return current.count(accept) > 0;
}

ProvenanceSubgraph match_rpq(const SolvedGame& s, const PositionId& x,
                             const Rpq& r) {
    const GameGraph& g = s.graph;
    const std::size_t root = g.index_of(x);
    Automaton a = compile_rpq(r);
    const std::size_t nq = a.states.size();
    auto pid = [&](std::size_t v, std::size_t q) { return v * nq + q; };

    // Product transitions: letter edges follow a typed game move, eps
    // edges stay on the same game node.
    struct PEdge {
        std::size_t from, to;
        std::size_t move;  // move index, or npos for eps
    };
    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<PEdge> pedges;
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        for (std::size_t q = 0; q < nq; ++q) {
            for (std::size_t e : a.states[q].eps)
                pedges.push_back({pid(v, q), pid(v, e), npos});
        }
    }
    for (std::size_t m = 0; m < g.move_count(); ++m) {
        auto letter = edge_letter(s.edge_annotations[m].type);
        if (!letter) continue;
        auto [u, v] = g.moves()[m];
        for (std::size_t q = 0; q < nq; ++q) {
            for (auto [l, to] : a.states[q].moves) {
                if (l == *letter) pedges.push_back({pid(u, q), pid(v, to), m});
            }
        }
    }

    const std::size_t np = g.node_count() * nq;
    std::vector<std::vector<std::size_t>> fwd(np), bwd(np);
    for (std::size_t i = 0; i < pedges.size(); ++i) {
        fwd[pedges[i].from].push_back(i);
        bwd[pedges[i].to].push_back(i);
    }

    auto reach = [&](std::vector<std::size_t> seeds,
                     const std::vector<std::vector<std::size_t>>& adj,
                     bool forward) {
        std::vector<bool> seen(np, false);
        std::vector<std::size_t> stack;
        for (std::size_t s0 : seeds) {
            if (!seen[s0]) {
                seen[s0] = true;
                stack.push_back(s0);
            }
        }
        while (!stack.empty()) {
            std::size_t p = stack.back();
            stack.pop_back();
            for (std::size_t i : adj[p]) {
                std::size_t next = forward ? pedges[i].to : pedges[i].from;
                if (!seen[next]) {
                    seen[next] = true;
                    stack.push_back(next);
                }
            }
        }
        return seen;
    };

    std::vector<bool> reachable =
        reach({pid(root, a.start)}, fwd, /*forward=*/true);
    std::vector<std::size_t> accepting;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        accepting.push_back(pid(v, a.accept));
    std::vector<bool> live = reach(std::move(accepting), bwd, /*forward=*/false);

    // Keep a game edge iff some product edge over it sits on a prefix
    // of an accepting walk from the root.
    std::set<std::size_t> kept_moves;
    std::set<std::size_t> kept_nodes{root};
    for (const PEdge& e : pedges) {
        if (e.move == npos) continue;
        if (reachable[e.from] && live[e.to]) {
            kept_moves.insert(e.move);
            kept_nodes.insert(g.moves()[e.move].first);
            kept_nodes.insert(g.moves()[e.move].second);
        }
    }

    ProvenanceSubgraph out;
    out.root = x;
    for (std::size_t v : kept_nodes) out.nodes.push_back(g.id_of(v));
    std::sort(out.nodes.begin(), out.nodes.end());
    for (std::size_t m : kept_moves) {
        auto [u, v] = g.moves()[m];
        out.edges.push_back({g.id_of(u), g.id_of(v), s.edge_annotations[m]});
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const ProvenanceSubgraph::Edge& a_,
                 const ProvenanceSubgraph::Edge& b_) {
                  return std::tie(a_.src, a_.dst) < std::tie(b_.src, b_.dst);
              });
    return out;
}

Rpq standard_pattern(Value v, ProvKind kind) {
    RpqSymbol w = kind == ProvKind::Primary ? RpqSymbol::Wpr : RpqSymbol::W;
    switch (v) {
        case Value::Won:
            // W.(L.W)*
            return rpq_concat(
                rpq_symbol(w),
                rpq_star(rpq_concat(rpq_symbol(RpqSymbol::L), rpq_symbol(w))));
        case Value::Lost:
            // (L.W)*
            return rpq_star(
                rpq_concat(rpq_symbol(RpqSymbol::L), rpq_symbol(w)));
        case Value::Drawn:
            return rpq_plus(rpq_symbol(RpqSymbol::D));
    }
    throw MalformedExpression("unreachable");
}

}  // namespace winmove
