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

// End-to-end acceptance suite. Usage:
//   winmove_acceptance <cli-binary> <fixture-dir> <golden-dir>
// Prints one PASS/FAIL line per criterion; exit code is the number of
// failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "winmove/argumentation.hpp"
#include "winmove/errors.hpp"
#include "winmove/formats.hpp"
#include "winmove/oracle.hpp"
#include "winmove/provenance.hpp"
#include "winmove/rpq.hpp"
#include "winmove/solve.hpp"
#include "test_util.hpp"

using namespace winmove;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name;
    if (!ok && !detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw Error("popen failed: " + cmd);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

// Density sweep shared by criteria 4 and 5.
GameGraph sweep_graph(std::mt19937& rng, int i) {
    double degree = 0.2 + 0.4 * static_cast<double>(i % 10);
    return testutil::random_graph(rng, 30, degree);
}

void criterion1() {
    auto t0 = Clock::now();
    auto [s, trace] = solve(testutil::fig1());
    double elapsed = seconds_since(t0);
    const std::vector<std::pair<std::string, NodeLabel>> expected = {
        {"a", {Value::Won, Length{1}}},   {"b", {Value::Lost, Length{0}}},
        {"c", {Value::Lost, Length{4}}},  {"d", {Value::Won, Length{1}}},
        {"e", {Value::Won, Length{3}}},   {"f", {Value::Lost, Length{0}}},
        {"g", {Value::Lost, Length{2}}},  {"h", {Value::Lost, Length{2}}},
        {"i", {Value::Won, Length{1}}},   {"j", {Value::Lost, Length{0}}},
        {"o", {Value::Lost, Length{0}}},
    };
    bool ok = elapsed < 1.0;
    std::string detail;
    for (const auto& [id, lab] : expected) {
        if (s.label(id) != lab) {
            ok = false;
            detail += id + " mislabeled; ";
        }
    }
    report(1, "running-example node labeling", ok, detail);
}

void criterion2() {
    auto [s, trace] = solve(testutil::fig1());
    const std::vector<std::tuple<std::string, std::string, EdgeAnnotation>>
        expected = {
            {"d", "f", {EdgeType::WinPrimary, Length{1}}},
            {"d", "g", {EdgeType::WinSecondary, Length{3}}},
            {"d", "h", {EdgeType::WinSecondary, Length{3}}},
            {"d", "e", {EdgeType::Blunder1, std::nullopt}},
            {"c", "d", {EdgeType::Delaying, Length{2}}},
            {"c", "e", {EdgeType::Delaying, Length{4}}},
            {"a", "b", {EdgeType::WinPrimary, Length{1}}},
            {"a", "o", {EdgeType::WinPrimary, Length{1}}},
        };
    bool ok = true;
    std::string detail;
    for (const auto& [x, y, ann] : expected) {
        if (classify_edge(s, x, y) != ann) {
            ok = false;
            detail += x + "->" + y + " mistyped; ";
        }
    }
    report(2, "running-example edge typing", ok, detail);
}

void criterion3() {
    GameGraph g = testutil::fig1();
    auto [s, trace] = solve(g);
    ProvenanceSubgraph pt = potential_provenance(g, "d");
    ProvenanceSubgraph ac = actual_provenance(s, "d");
    ProvenanceSubgraph pr = primary_provenance(s, "d");
    ProvenanceSubgraph prc = primary_provenance(s, "c");
    bool ok = pt.nodes.size() == 7 && pt.edges.size() == 8 &&
              ac.nodes.size() == 6 && ac.edges.size() == 6 &&
              !ac.contains_node("e") &&
              pr.nodes == std::vector<PositionId>{"d", "f"} &&
              pr.edges.size() == 1 && pr.contains_edge("d", "f") &&
              prc.contains_edge("c", "d") && prc.contains_edge("c", "e");
    report(3, "provenance subgraphs of the running example", ok);
}

void criterion4() {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(400);
    auto check_trace = [&](const GameGraph& g) {
        auto [s, trace] = solve(g);
        for (const auto& step : trace.steps) {
            for (const auto& id : step.newly_labeled) {
                if (step.rule == StepTrace::Rule::DrawClosure) {
                    if (s.label(id).value != Value::Drawn) {
                        ok = false;
                        detail = "non-drawn node in draw closure";
                    }
                } else if (s.label(id).length !=
                           Length{static_cast<std::uint32_t>(step.index)}) {
                    ok = false;
                    detail = "step index differs from length";
                }
            }
        }
    };
    check_trace(testutil::fig1());
    for (int i = 0; i < 1000; ++i) check_trace(sweep_graph(rng, i));
    report(4, "step/length agreement on fig1 and 1000 random graphs", ok,
           detail);
}

void criterion5() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::mt19937 rng(400);  // same sweep as criterion 4
    for (int i = 0; i < 1000 && ok; ++i) {
        GameGraph g = sweep_graph(rng, i);
        auto [s, trace] = solve(g);
        if (!validate_solution(s).empty()) {
            ok = false;
            detail = "validate_solution reported violations";
            break;
        }
        if (solve_fast(g) != s) {
            ok = false;
            detail = "solve_fast disagrees with solve";
            break;
        }
        for (const auto& x : g.positions()) {
            ProvenanceSubgraph pt = potential_provenance(g, x);
            ProvenanceSubgraph ac = actual_provenance(s, x);
            ProvenanceSubgraph pr = primary_provenance(s, x);
            Value v = s.label(x).value;
            if (!subgraph_of(pr, ac) || !subgraph_of(ac, pt)) {
                ok = false;
                detail = "inclusion chain broken at " + x;
                break;
            }
            if (match_rpq(s, x, standard_pattern(v, ProvKind::Actual)) != ac ||
                match_rpq(s, x, standard_pattern(v, ProvKind::Primary)) !=
                    pr) {
                ok = false;
                detail = "closure/RPQ mismatch at " + x;
                break;
            }
        }
    }
    double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) {
        ok = false;
        detail = "suite took " + std::to_string(elapsed) + "s";
    }
    report(5, "structural property suite on 1000 random graphs", ok, detail);
}

void criterion6() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::mt19937 rng(600);
    int done = 0;
    while (done < 200 && ok) {
        GameGraph g = testutil::random_graph(rng, 8, 1.8);
        try {
            auto ref = oracle_solve(g);
            if (!compare(solve(g).first, ref).empty()) {
                ok = false;
                detail = "solver/oracle mismatch";
            }
            ++done;
        } catch (const GraphTooLarge&) {
            // denser than the play budget allows; resample
        }
    }
    double elapsed = seconds_since(t0);
    if (elapsed >= 120.0) {
        ok = false;
        detail = "took " + std::to_string(elapsed) + "s";
    }
    report(6, "oracle equivalence on 200 random small graphs", ok, detail);
}

void criterion7() {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(700);
    for (int i = 0; i < 100 && ok; ++i) {
        ArgumentationFramework af = testutil::random_af(rng, 12);
        auto got = grounded_labeling(af);
        auto ref = testutil::grounded_reference(af);
        SolvedGame s = solve_fast(af_to_game(af));
        for (const auto& arg : af.arguments) {
            AfLabel recolored = s.label(arg).value == Value::Won
                                    ? AfLabel::Defeated
                                : s.label(arg).value == Value::Lost
                                    ? AfLabel::Accepted
                                    : AfLabel::Undecided;
            if (got.at(arg).first != recolored ||
                got.at(arg).first != ref.at(arg)) {
                ok = false;
                detail = "AF labeling mismatch at " + arg;
                break;
            }
        }
    }
    auto labeling = grounded_labeling(game_to_af(testutil::fig1()));
    for (const char* id : {"a", "d", "e", "i"})
        if (labeling.at(id).first != AfLabel::Defeated) ok = false;
    for (const char* id : {"b", "c", "f", "g", "h", "j", "o"})
        if (labeling.at(id).first != AfLabel::Accepted) ok = false;
    report(7, "AF grounded-labeling correspondence", ok, detail);
}

void criterion8(const std::string& cli, const std::string& fixtures,
                const std::string& golden) {
    bool ok = true;
    std::string detail;
    const std::string fig1 = fixtures + "/fig1.edges";
    const std::string apx = fixtures + "/fig1.apx";
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"solve " + fig1, "fig1.solved.json"},
        {"solve " + fig1 + " --format dot", "fig1.solved.dot"},
        {"trace " + fig1, "fig1.trace.txt"},
        {"prov " + fig1 + " --node d --kind primary", "fig1.prov_d.json"},
        {"prov " + fig1 + " --node d --kind potential",
         "fig1.prov_d_potential.json"},
        {"prov " + fig1 + " --node d --rpq \"W.(L.W)*\"",
         "fig1.prov_d_rpq.json"},
        {"af " + apx, "fig1.af.json"},
        {"af " + apx + " --format dot", "fig1.af.dot"},
        {"af " + apx + " --explain d --kind primary", "fig1.af_d.json"},
        {"validate " + fig1, "fig1.validate.txt"},
        {"convert " + fig1 + " --to apx", "fig1.converted.apx"},
        {"convert " + apx + " --to edgelist", "fig1.converted.edges"},
    };
    for (const auto& [args, file] : cases) {
        CliResult r1 = run_cli(cli, args);
        CliResult r2 = run_cli(cli, args);
        if (r1.exit_code != 0) {
            ok = false;
            detail += "nonzero exit for '" + args + "'; ";
            continue;
        }
        if (r1.out != r2.out) {
            ok = false;
            detail += "nondeterministic output for '" + args + "'; ";
        }
        std::string want = read_file(golden + "/" + file);
        if (r1.out != want) {
            ok = false;
            detail += "golden mismatch for " + file + "; ";
        }
    }
    report(8, "CLI determinism and golden outputs", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: winmove_acceptance <cli> <fixture-dir> "
                     "<golden-dir>\n";
        return 64;
    }
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8(argv[1], argv[2], argv[3]);
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 64;
    }
    return failures;
}
