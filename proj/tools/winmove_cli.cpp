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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "winmove/argumentation.hpp"
#include "winmove/errors.hpp"
#include "winmove/formats.hpp"
#include "winmove/graph.hpp"
#include "winmove/provenance.hpp"
#include "winmove/rpq.hpp"
#include "winmove/solve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw winmove::Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_apx(const std::string& path, const std::string& text) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".apx")
        return true;
    auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos &&
           (text.compare(first, 4, "arg(") == 0 ||
            text.compare(first, 4, "att(") == 0);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace winmove;

    CLI::App app{"win-move game solver with game provenance"};
    app.require_subcommand(1);

    std::string input, format = "json", node, kind, rpq_expr, to;
    bool labeled = false;

    auto* cmd_solve = app.add_subcommand("solve", "solve a game graph");
    cmd_solve->add_option("file", input)->required();
    cmd_solve->add_option("--format", format)
        ->check(CLI::IsMember({"json", "dot"}));

    auto* cmd_trace = app.add_subcommand("trace", "print the rule firings");
    cmd_trace->add_option("file", input)->required();

    auto* cmd_prov =
        app.add_subcommand("prov", "extract a provenance subgraph");
    cmd_prov->add_option("file", input)->required();
    cmd_prov->add_option("--node", node)->required();
    cmd_prov->add_option("--kind", kind)
        ->check(CLI::IsMember({"potential", "actual", "primary"}));
    cmd_prov->add_option("--rpq", rpq_expr);
    cmd_prov->add_option("--format", format)
        ->check(CLI::IsMember({"json", "dot"}));

    auto* cmd_af =
        app.add_subcommand("af", "grounded labeling of an argumentation "
                                 "framework");
    cmd_af->add_option("file", input)->required();
    cmd_af->add_option("--explain", node);
    cmd_af->add_option("--kind", kind)
        ->check(CLI::IsMember({"actual", "primary"}));
    cmd_af->add_option("--format", format)
        ->check(CLI::IsMember({"json", "dot"}));

    auto* cmd_validate =
        app.add_subcommand("validate", "check a (labeled) game");
    cmd_validate->add_option("file", input)->required();
    cmd_validate->add_flag("--labeled", labeled,
                           "input is solved-game JSON with labels");

    auto* cmd_convert = app.add_subcommand("convert", "convert formats");
    cmd_convert->add_option("file", input)->required();
    cmd_convert->add_option("--to", to)
        ->required()
        ->check(CLI::IsMember({"json", "dot", "apx", "edgelist"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        const std::string text = read_input(input);

        if (cmd_solve->parsed()) {
            auto [solved, trace] = solve(parse_edge_list(text));
            std::cout << (format == "dot" ? export_dot(solved)
                                          : export_json(solved));
        } else if (cmd_trace->parsed()) {
            auto [solved, trace] = solve(parse_edge_list(text));
            std::cout << render_trace(trace);
        } else if (cmd_prov->parsed()) {
            GameGraph g = parse_edge_list(text);
            ProvenanceSubgraph p;
            if (!rpq_expr.empty()) {
                auto [solved, trace] = solve(g);
                p = match_rpq(solved, node, parse_rpq(rpq_expr));
            } else if (kind == "potential") {
                p = potential_provenance(g, node);
            } else if (kind == "actual" || kind == "primary") {
                auto [solved, trace] = solve(g);
                p = kind == "primary" ? primary_provenance(solved, node)
                                      : actual_provenance(solved, node);
            } else {
                std::cerr << "prov: need --kind or --rpq\n";
                return kExitUsage;
            }
            std::cout << (format == "dot" ? export_dot(p) : export_json(p));
        } else if (cmd_af->parsed()) {
            ArgumentationFramework af = parse_apx(text);
            if (!node.empty()) {
                ProvenanceSubgraph p = argument_provenance(
                    af, node,
                    kind == "primary" ? ProvKind::Primary : ProvKind::Actual);
                std::cout << (format == "dot" ? export_dot(p)
                                              : export_json(p));
            } else {
                std::cout << (format == "dot" ? export_af_dot(af)
                                              : export_af_json(af));
            }
        } else if (cmd_validate->parsed()) {
            SolvedGame s = labeled ? parse_solved_json(text)
                                   : solve(parse_edge_list(text)).first;
            auto violations = validate_solution(s);
            if (violations.empty()) {
                std::cout << "ok\n";
            } else {
                for (const auto& v : violations)
                    std::cout << v.detail << "\n";
                return kExitInvalid;
            }
        } else if (cmd_convert->parsed()) {
            if (looks_like_apx(input, text)) {
                ArgumentationFramework af = parse_apx(text);
                if (to == "apx")
                    std::cout << render_apx(af);
                else if (to == "edgelist")
                    std::cout << render_edge_list(af_to_game(af));
                else if (to == "json")
                    std::cout << export_json(af_to_game(af));
                else
                    std::cout << export_dot(af_to_game(af));
            } else {
                GameGraph g = parse_edge_list(text);
                if (to == "apx")
                    std::cout << render_apx(game_to_af(g));
                else if (to == "edgelist")
                    std::cout << render_edge_list(g);
                else if (to == "json")
                    std::cout << export_json(g);
                else
                    std::cout << export_dot(g);
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
