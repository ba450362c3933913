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

#include "winmove/formats.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "winmove/errors.hpp"

namespace winmove {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

Json length_json(const Length& l) {
    if (l.is_infinite()) return Json("inf");
    return Json(l.finite());
}

Length length_from_json(const Json& j, std::size_t line = 0) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Length::infinity();
        throw ParseError(line, "bad length: " + j.get<std::string>());
    }
    if (!j.is_number_unsigned()) throw ParseError(line, "bad length");
    return Length{j.get<std::uint32_t>()};
}

std::optional<Value> value_from_string(const std::string& s) {
    if (s == "won") return Value::Won;
    if (s == "lost") return Value::Lost;
    if (s == "drawn") return Value::Drawn;
    return std::nullopt;
}

std::optional<EdgeType> edge_type_from_string(const std::string& s) {
    static const std::pair<const char*, EdgeType> table[] = {
        {"win_primary", EdgeType::WinPrimary},
        {"win_secondary", EdgeType::WinSecondary},
        {"delaying", EdgeType::Delaying},
        {"drawing", EdgeType::Drawing},
        {"blunder_ww", EdgeType::Blunder1},
        {"blunder_wd", EdgeType::Blunder2},
        {"blunder_dw", EdgeType::Blunder3},
    };
    for (auto& [name, t] : table)
        if (s == name) return t;
    return std::nullopt;
}

struct DotEdgeStyle {
    const char* color;
    const char* style;
    bool labeled;
};

DotEdgeStyle dot_style(EdgeType t) {
    switch (t) {
        case EdgeType::WinPrimary: return {"green", "solid", true};
        case EdgeType::WinSecondary: return {"green", "dashed", true};
        case EdgeType::Delaying: return {"red", "solid", true};
        case EdgeType::Drawing: return {"yellow", "solid", true};
        default: return {"brown", "dashed", false};
    }
}

const char* dot_fill(Value v) {
    switch (v) {
        case Value::Won: return "green";
        case Value::Lost: return "red";
        case Value::Drawn: return "yellow";
    }
    return "gray";
}

const char* dot_fill(AfLabel l) {
    switch (l) {
        case AfLabel::Accepted: return "blue";
        case AfLabel::Defeated: return "orange";
        case AfLabel::Undecided: return "yellow";
    }
    return "gray";
}

void dot_node(std::ostringstream& out, const PositionId& id,
              const std::string& label, const char* fill) {
    out << "  \"" << id << "\" [label=\"" << label
        << "\",style=filled,fillcolor=" << fill << "];\n";
}

void dot_edge(std::ostringstream& out, const PositionId& src,
              const PositionId& dst,
              const std::optional<EdgeAnnotation>& ann) {
    out << "  \"" << src << "\" -> \"" << dst << "\" [";
    if (ann) {
        DotEdgeStyle st = dot_style(ann->type);
        out << "color=" << st.color << ",style=" << st.style;
        if (st.labeled && ann->length)
            out << ",label=\"" << ann->length->to_string() << "\"";
    } else {
        out << "color=gray,style=solid";
    }
    out << "];\n";
}

}  // namespace

GameGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<PositionId> positions;
    std::vector<std::pair<PositionId, PositionId>> moves;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto toks = split_tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "node") {
            if (toks.size() != 2)
                throw ParseError(lineno, "expected 'node <id>'");
            positions.push_back(toks[1]);
        } else if (toks.size() == 2) {
            moves.emplace_back(toks[0], toks[1]);
        } else {
            throw ParseError(lineno, "expected 'src dst'");
        }
    }
    try {
        return build_graph(positions, moves);
    } catch (const InvalidPositionId& e) {
        throw ParseError(0, e.what());
    }
}

std::string render_edge_list(const GameGraph& g) {
    std::ostringstream out;
    std::set<PositionId> covered;
    for (const auto& [s, d] : g.move_ids()) {
        covered.insert(s);
        covered.insert(d);
    }
    for (const auto& id : g.positions())
        if (!covered.count(id)) out << "node " << id << "\n";
    for (const auto& [s, d] : g.move_ids()) out << s << " " << d << "\n";
    return out.str();
}

ArgumentationFramework parse_apx(const std::string& text) {
    std::vector<PositionId> args;
    std::vector<std::pair<PositionId, PositionId>> attacks;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < line.size() &&
                   std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
        };
        for (skip_ws(); pos < line.size(); skip_ws()) {
            bool is_arg = line.compare(pos, 4, "arg(") == 0;
            bool is_att = line.compare(pos, 4, "att(") == 0;
            if (!is_arg && !is_att)
                throw ParseError(lineno, "expected arg(...) or att(...)");
            pos += 4;
            auto close = line.find(')', pos);
            if (close == std::string::npos ||
                line.compare(close, 2, ").") != 0)
                throw ParseError(lineno, "statement must end with ').'");
            std::string body = line.substr(pos, close - pos);
            pos = close + 2;
            if (is_arg) {
                args.push_back(body);
            } else {
                auto comma = body.find(',');
                if (comma == std::string::npos)
                    throw ParseError(lineno, "att needs two arguments");
                std::string a = body.substr(0, comma);
                std::string b = body.substr(comma + 1);
                while (!b.empty() && b.front() == ' ') b.erase(b.begin());
                attacks.emplace_back(a, b);
            }
        }
    }
    std::set<PositionId> declared(args.begin(), args.end());
    for (const auto& [a, b] : attacks) {
        if (!declared.count(a)) throw UndeclaredArgument(a);
        if (!declared.count(b)) throw UndeclaredArgument(b);
    }
    try {
        return build_af(args, attacks);
    } catch (const InvalidPositionId& e) {
        throw ParseError(0, e.what());
    }
}

std::string render_apx(const ArgumentationFramework& af) {
    std::ostringstream out;
    for (const auto& a : af.arguments) out << "arg(" << a << ").\n";
    for (const auto& [a, b] : af.attacks)
        out << "att(" << a << "," << b << ").\n";
    return out.str();
}

std::string export_json(const SolvedGame& s) {
    Json doc;
    doc["nodes"] = Json::array();
    for (std::size_t i = 0; i < s.graph.node_count(); ++i) {
        const NodeLabel& l = s.node_labels[i];
        doc["nodes"].push_back({{"id", s.graph.id_of(i)},
                                {"value", to_string(l.value)},
                                {"len", length_json(l.length)}});
    }
    doc["edges"] = Json::array();
    for (std::size_t m = 0; m < s.graph.move_count(); ++m) {
        auto [src, dst] = s.graph.moves()[m];
        const EdgeAnnotation& a = s.edge_annotations[m];
        Json e = {{"src", s.graph.id_of(src)},
                  {"dst", s.graph.id_of(dst)},
                  {"type", to_string(a.type)}};
        if (a.length) e["len"] = length_json(*a.length);
        doc["edges"].push_back(std::move(e));
    }
    return doc.dump() + "\n";
}

std::string export_json(const ProvenanceSubgraph& p) {
    Json doc;
    doc["root"] = p.root;
    doc["nodes"] = Json::array();
    for (const auto& n : p.nodes) doc["nodes"].push_back({{"id", n}});
    doc["edges"] = Json::array();
    for (const auto& e : p.edges) {
        Json j = {{"src", e.src}, {"dst", e.dst}};
        if (e.annotation) {
            j["type"] = to_string(e.annotation->type);
            if (e.annotation->length)
                j["len"] = length_json(*e.annotation->length);
        }
        doc["edges"].push_back(std::move(j));
    }
    return doc.dump() + "\n";
}

std::string export_json(const GameGraph& g) {
    Json doc;
    doc["nodes"] = Json::array();
    for (const auto& id : g.positions()) doc["nodes"].push_back({{"id", id}});
    doc["edges"] = Json::array();
    for (const auto& [s, d] : g.move_ids())
        doc["edges"].push_back({{"src", s}, {"dst", d}});
    return doc.dump() + "\n";
}

std::string export_af_json(const ArgumentationFramework& af) {
    Json doc;
    doc["arguments"] = Json::array();
    for (const auto& [id, l] : grounded_labeling(af)) {
        doc["arguments"].push_back({{"id", id},
                                    {"label", to_string(l.first)},
                                    {"len", length_json(l.second)}});
    }
    doc["attacks"] = Json::array();
    for (const auto& [a, b] : af.attacks)
        doc["attacks"].push_back({{"src", a}, {"dst", b}});
    return doc.dump() + "\n";
}

std::string export_af_dot(const ArgumentationFramework& af) {
    auto labeling = grounded_labeling(af);
    SolvedGame solved = solve_fast(af_to_game(af));
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& [id, l] : labeling)
        dot_node(out, id, id + " : " + l.second.to_string(),
                 dot_fill(l.first));
    for (const auto& [a, b] : af.attacks) {
        // Attack (a, b) is game move (b, a); carry its type over.
        dot_edge(out, a, b, classify_edge(solved, b, a));
    }
    out << "}\n";
    return out.str();
}

SolvedGame parse_solved_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    std::vector<PositionId> positions;
    std::vector<std::pair<PositionId, PositionId>> moves;
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
        throw ParseError(0, "expected object with nodes and edges");
    for (const auto& n : doc["nodes"])
        positions.push_back(n.at("id").get<std::string>());
    for (const auto& e : doc["edges"])
        moves.emplace_back(e.at("src").get<std::string>(),
                           e.at("dst").get<std::string>());

    SolvedGame s;
    s.graph = build_graph(positions, moves);
    if (s.graph.node_count() != doc["nodes"].size() ||
        s.graph.move_count() != doc["edges"].size())
        throw ParseError(0, "duplicate nodes or edges");

    s.node_labels.resize(s.graph.node_count());
    for (const auto& n : doc["nodes"]) {
        auto v = value_from_string(n.at("value").get<std::string>());
        if (!v) throw ParseError(0, "bad node value");
        s.node_labels[s.graph.index_of(n.at("id").get<std::string>())] = {
            *v, length_from_json(n.at("len"))};
    }
    s.edge_annotations.resize(s.graph.move_count());
    for (const auto& e : doc["edges"]) {
        auto t = edge_type_from_string(e.at("type").get<std::string>());
        if (!t) throw ParseError(0, "bad edge type");
        EdgeAnnotation a{*t, std::nullopt};
        if (e.contains("len")) a.length = length_from_json(e["len"]);
        s.edge_annotations[s.graph.move_index(
            e.at("src").get<std::string>(),
            e.at("dst").get<std::string>())] = a;
    }
    return s;
}

std::string export_dot(const SolvedGame& s) {
    std::ostringstream out;
    out << "digraph {\n";
    for (std::size_t i = 0; i < s.graph.node_count(); ++i) {
        const NodeLabel& l = s.node_labels[i];
        dot_node(out, s.graph.id_of(i),
                 s.graph.id_of(i) + " : " + l.length.to_string(),
                 dot_fill(l.value));
    }
    for (std::size_t m = 0; m < s.graph.move_count(); ++m) {
        auto [src, dst] = s.graph.moves()[m];
        dot_edge(out, s.graph.id_of(src), s.graph.id_of(dst),
                 s.edge_annotations[m]);
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const ProvenanceSubgraph& p) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& n : p.nodes) dot_node(out, n, n, "gray");
    for (const auto& e : p.edges) dot_edge(out, e.src, e.dst, e.annotation);
    out << "}\n";
    return out.str();
}

std::string export_dot(const GameGraph& g) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& id : g.positions()) dot_node(out, id, id, "gray");
    for (const auto& [s, d] : g.move_ids())
        dot_edge(out, s, d, std::nullopt);
    out << "}\n";
    return out.str();
}

std::string render_trace(const StepTrace& t) {
    std::ostringstream out;
    for (const auto& step : t.steps) {
        if (step.rule == StepTrace::Rule::DrawClosure)
            out << "step inf DRAW:";
        else
            out << "step " << step.index << " "
                << (step.rule == StepTrace::Rule::RedRule ? "RR" : "GR")
                << ":";
        for (const auto& id : step.newly_labeled) out << " " << id;
        out << "\n";
    }
    return out.str();
}

}  // namespace winmove
