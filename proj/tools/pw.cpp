// Copyright 2026 The pwcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end of the library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pw/dsl.hpp"
#include "pw/fkt.hpp"
#include "pw/matchgate.hpp"
#include "pw/oracle.hpp"
#include "pw/plane_graph.hpp"
#include "pw/rewrite.hpp"

namespace {

using namespace pw;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kFail = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
}

struct Config {
    double epsilon = 1e-9;
    int width_cap = kDefaultWidthCap;

    Tolerance tol() const { return Tolerance::from_epsilon(epsilon); }
};

Diagram load_diagram(const std::string &path) {
    try {
        return parse_diagram(read_file(path));
    } catch (const ParseError &e) {
        throw Error(path + ":" + e.what());
    }
}

Tensor load_tensor(const std::string &path) {
    try {
        return parse_tensor(read_file(path));
    } catch (const ParseError &e) {
        throw Error(path + ":" + e.what());
    }
}

int cmd_eval(const Config &cfg, const std::string &file, const std::string &method, const std::string &coeff) {
    Diagram d = load_diagram(file);
    bool scalar = d.inputs() == 0 && d.outputs() == 0;
    std::optional<BitWord> alpha;
    if (!coeff.empty()) {
        alpha = BitWord::from_string(coeff);
        if (alpha->size() != static_cast<size_t>(d.inputs() + d.outputs())) {
            throw Error("--coeff needs " + std::to_string(d.inputs() + d.outputs()) + " bits");
        }
    }
    if (method == "fkt") {
        if (!scalar) {
            throw Error("--method fkt needs a scalar (0 -> 0) diagram");
        }
        std::cout << scalar_eval_fkt(d).str() << "\n";
        return kOk;
    }
    if (method == "brute") {
        GraphForm g = to_graph_form(d);
        if (alpha) {
            std::cout << format_complex(coefficient(g, *alpha)) << "\n";
        } else if (scalar) {
            std::cout << format_complex(scalar_brute(g)) << "\n";
        } else {
            Tensor t(d.inputs() + d.outputs());
            for (uint64_t i = 0; i < t.amps.size(); i++) {
                t.amps[i] = coefficient(g, BitWord::from_index(i, t.wires));
            }
            std::cout << print_tensor(t) << "\n";
        }
        return kOk;
    }
    if (alpha) {
        std::cout << format_complex(coefficient(d, *alpha, cfg.width_cap)) << "\n";
    } else if (scalar) {
        std::cout << format_complex(interpret(d, cfg.width_cap).amps[0]) << "\n";
    } else {
        std::cout << print_tensor(interpret(d, cfg.width_cap)) << "\n";
    }
    return kOk;
}

int cmd_normalize(const Config &cfg, const std::string &file, const std::string &trace) {
    NormalizeResult res = normalize_traced(load_diagram(file), cfg.tol());
    std::cout << res.form.str() << "\n";
    if (!trace.empty()) {
        std::string text;
        for (const TraceStep &s : res.trace) {
            text += s.str() + "\n";
        }
        if (trace == "-") {
            std::cout << text;
        } else {
            write_file(trace, text);
        }
    }
    return kOk;
}

int cmd_equal(const Config &cfg, const std::string &a, const std::string &b) {
    bool same = equal(load_diagram(a), load_diagram(b), cfg.tol());
    std::cout << (same ? "true" : "false") << "\n";
    return same ? kOk : kNo;
}

std::string witness_text(const MgiReport &r) {
    std::string s = "residual=" + format_complex(r.worst_residual);
    if (r.witness) {
        s += " alpha=" + r.witness->alpha.str() + " beta=" + r.witness->beta.str() +
             " value=" + format_complex(r.witness->value);
    }
    return s;
}

int cmd_mgi(const Config &cfg, const std::string &file) {
    MgiReport r = mgi_check(load_tensor(file), cfg.epsilon);
    std::cout << (r.passed ? "pass " : "fail ") << witness_text(r) << "\n";
    return r.passed ? kOk : kNo;
}

int cmd_synth(const Config &cfg, const std::string &file, const std::string &out) {
    try {
        Diagram d = synthesize(load_tensor(file), cfg.epsilon);
        std::string text = print_diagram(d) + "\n";
        if (out.empty() || out == "-") {
            std::cout << text;
        } else {
            write_file(out, text);
        }
        return kOk;
    } catch (const MgiFailure &e) {
        std::cerr << "error: not a matchgate: " << witness_text(e.report) << "\n";
        return kNo;
    }
}

int cmd_matchings(const std::string &file, const std::string &method) {
    WeightedPlaneGraph g;
    try {
        g = parse_plane_graph(read_file(file));
    } catch (const ParseError &e) {
        throw Error(file + ":" + e.what());
    }
    if (method == "brute") {
        std::cout << format_complex(matching_weight_brute(g)) << "\n";
    } else {
        std::cout << matching_weight_fkt(g).str() << "\n";
    }
    return kOk;
}

int cmd_convert(const std::string &file, const std::string &to) {
    Diagram d = load_diagram(file);
    if (to == "dot") {
        std::cout << to_dot(to_open_plane_graph(d));
    } else {
        if (d.inputs() != 0 || d.outputs() != 0) {
            throw Error("--to wpg needs a scalar (0 -> 0) diagram");
        }
        GraphForm gf = to_graph_form(d);
        WeightedPlaneGraph g = to_weighted_plane_graph(gf);
        // Scalar and loop factors become separate single-edge components.
        std::vector<Complex> factors(gf.loops.begin(), gf.loops.end());
        for (Complex &w : factors) {
            w += 1.0;
        }
        if (gf.scalar != 1.0) {
            factors.push_back(gf.scalar);
        }
        for (Complex w : factors) {
            int e = static_cast<int>(g.edges.size());
            g.edges.push_back({g.vertex_count, g.vertex_count + 1, w});
            g.rotation.push_back({e});
            g.rotation.push_back({e});
            g.vertex_count += 2;
        }
        std::cout << print_plane_graph(g);
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Planar W-calculus toolkit"};
    app.require_subcommand(1);
    Config cfg;
    cfg.epsilon = default_tolerance().rel;
    app.add_option("--epsilon", cfg.epsilon, "Numerical tolerance (default 1e-9, or PW_EPSILON)")
        ->check(CLI::PositiveNumber);
    app.add_option("--width-cap", cfg.width_cap, "Largest register the dense evaluator may build")
        ->check(CLI::Range(1, 30));

    std::string file, file2, eval_method, match_method, coeff, trace, out, to;

    auto *eval = app.add_subcommand("eval", "Evaluate a diagram");
    eval->add_option("file", file, "Diagram (.pw)")->required();
    eval->add_option("--method", eval_method, "oracle, fkt or brute")
        ->check(CLI::IsMember({"oracle", "fkt", "brute"}))
        ->default_val("oracle");
    eval->add_option("--coeff", coeff, "Single coefficient at this bit string");

    auto *norm = app.add_subcommand("normalize", "Print the reduced normal form");
    norm->add_option("file", file, "Diagram (.pw)")->required();
    norm->add_option("--trace", trace, "Write the rewrite trace here (- for stdout)");

    auto *eq = app.add_subcommand("equal", "Decide semantic equality (exit 0 equal, 1 not)");
    eq->add_option("a", file, "First diagram")->required();
    eq->add_option("b", file2, "Second diagram")->required();

    auto *mgi = app.add_subcommand("mgi", "Check the matchgate identities");
    mgi->add_option("tensor", file, "Tensor (.json)")->required();

    auto *synth = app.add_subcommand("synth", "Build a diagram for a matchgate tensor");
    synth->add_option("tensor", file, "Tensor (.json)")->required();
    synth->add_option("-o,--output", out, "Output diagram (.pw), default stdout");

    auto *match = app.add_subcommand("matchings", "Total perfect-matching weight of a plane graph");
    match->add_option("graph", file, "Graph (.wpg)")->required();
    match->add_option("--method", match_method, "fkt or brute")
        ->check(CLI::IsMember({"fkt", "brute"}))
        ->default_val("fkt");

    auto *conv = app.add_subcommand("convert", "Export a diagram");
    conv->add_option("file", file, "Diagram (.pw)")->required();
    conv->add_option("--to", to, "dot or wpg")->check(CLI::IsMember({"dot", "wpg"}))->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kFail;
    }

    try {
        if (*eval) return cmd_eval(cfg, file, eval_method, coeff);
        if (*norm) return cmd_normalize(cfg, file, trace);
        if (*eq) return cmd_equal(cfg, file, file2);
        if (*mgi) return cmd_mgi(cfg, file);
        if (*synth) return cmd_synth(cfg, file, out);
        if (*match) return cmd_matchings(file, match_method);
        if (*conv) return cmd_convert(file, to);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kFail;
}
