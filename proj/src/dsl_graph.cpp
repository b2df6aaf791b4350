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

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "pw/dsl.hpp"

namespace pw {

namespace {

struct Word {
    std::string text;
    SourceSpan span;
};

std::vector<Word> split_line(const std::string &line, size_t lineno) {
    std::vector<Word> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            i++;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') {
            j++;
        }
        out.push_back({line.substr(i, j - i), {lineno, i + 1, j - i}});
        i = j;
    }
    return out;
}

double parse_real(const Word &w) {
    double v = 0;
    const char *end = w.text.data() + w.text.size();
    auto r = std::from_chars(w.text.data(), end, v);
    if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v)) {
        throw ParseError("expected a finite real number, found '" + w.text + "'", w.span, {"real"});
    }
    return v;
}

std::string real_text(double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), x == 0 ? 0.0 : x);
    return std::string(buf, r.ptr);
}

}  // namespace

WeightedPlaneGraph parse_plane_graph(const std::string &text) {
    WeightedPlaneGraph g;
    std::map<std::string, int> vid, eid;
    std::vector<bool> has_rot;
    std::vector<SourceSpan> rot_span;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    auto vertex = [&](const Word &w) {
        auto it = vid.find(w.text);
        if (it == vid.end()) {
            throw ParseError("unknown vertex '" + w.text + "'", w.span, {"vertex id"});
        }
        return it->second;
    };
    auto edge = [&](const Word &w) {
        auto it = eid.find(w.text);
        if (it == eid.end()) {
            throw ParseError("unknown edge '" + w.text + "'", w.span, {"edge id"});
        }
        return it->second;
    };
    auto arity = [](const std::vector<Word> &ws, size_t lo, size_t hi, const char *usage) {
        if (ws.size() < lo || ws.size() > hi) {
            const Word &last = ws.back();
            throw ParseError(std::string("expected '") + usage + "'", last.span);
        }
    };
    while (std::getline(in, line)) {
        lineno++;
        std::vector<Word> ws = split_line(line, lineno);
        if (ws.empty()) {
            continue;
        }
        const std::string &kw = ws[0].text;
        if (kw == "v") {
            arity(ws, 2, 2, "v <id>");
            if (!vid.emplace(ws[1].text, g.vertex_count).second) {
                throw ParseError("duplicate vertex '" + ws[1].text + "'", ws[1].span);
            }
            g.vertex_count++;
            g.rotation.emplace_back();
            has_rot.push_back(false);
            rot_span.push_back(ws[0].span);
        } else if (kw == "e") {
            arity(ws, 5, 6, "e <id> <u> <v> <re> [<im>]");
            int u = vertex(ws[2]), v = vertex(ws[3]);
            Complex w(parse_real(ws[4]), ws.size() == 6 ? parse_real(ws[5]) : 0.0);
            if (!eid.emplace(ws[1].text, static_cast<int>(g.edges.size())).second) {
                throw ParseError("duplicate edge '" + ws[1].text + "'", ws[1].span);
            }
            g.edges.push_back({u, v, w});
        } else if (kw == "rot") {
            arity(ws, 2, SIZE_MAX, "rot <v> <e1> <e2> ...");
            int v = vertex(ws[1]);
            if (has_rot[v]) {
                throw ParseError("duplicate rotation for vertex '" + ws[1].text + "'", ws[1].span);
            }
            has_rot[v] = true;
            rot_span[v] = ws[1].span;
            for (size_t i = 2; i < ws.size(); i++) {
                int e = edge(ws[i]);
                if (g.edges[e].u != v && g.edges[e].v != v) {
                    throw ParseError("edge '" + ws[i].text + "' is not incident to vertex '" + ws[1].text + "'",
                                     ws[i].span);
                }
                g.rotation[v].push_back(e);
            }
        } else if (kw == "outer") {
            arity(ws, 3, 3, "outer <edge-id> <from-vertex>");
            if (g.outer) {
                throw ParseError("duplicate outer face", ws[0].span);
            }
            int e = edge(ws[1]), v = vertex(ws[2]);
            if (g.edges[e].u != v && g.edges[e].v != v) {
                throw ParseError("outer edge is not incident to the given vertex", ws[2].span);
            }
            g.outer = std::make_pair(e, v);
        } else {
            throw ParseError("unknown record '" + kw + "'", ws[0].span, {"v", "e", "rot", "outer"});
        }
    }
    // Each vertex must list every incident edge end exactly once.
    std::vector<std::map<int, int>> want(g.vertex_count), got(g.vertex_count);
    for (size_t e = 0; e < g.edges.size(); e++) {
        want[g.edges[e].u][static_cast<int>(e)]++;
        want[g.edges[e].v][static_cast<int>(e)]++;
    }
    for (int v = 0; v < g.vertex_count; v++) {
        for (int e : g.rotation[v]) {
            got[v][e]++;
        }
        if (want[v] != got[v]) {
            std::string name;
            for (auto &[k, id] : vid) {
                if (id == v) {
                    name = k;
                }
            }
            throw ParseError(has_rot[v] ? "rotation of vertex '" + name + "' is not a permutation of its edge ends"
                                        : "missing rotation for vertex '" + name + "'",
                             rot_span[v], {"rot"});
        }
    }
    return g;
}

std::string print_plane_graph(const WeightedPlaneGraph &g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count; v++) {
        out << "v " << v << "\n";
    }
    for (size_t e = 0; e < g.edges.size(); e++) {
        const auto &ed = g.edges[e];
        out << "e " << e << " " << ed.u << " " << ed.v << " " << real_text(ed.w.real());
        if (ed.w.imag() != 0) {
            out << " " << real_text(ed.w.imag());
        }
        out << "\n";
    }
    for (int v = 0; v < g.vertex_count; v++) {
        if (g.rotation[v].empty()) {
            continue;
        }
        out << "rot " << v;
        for (int e : g.rotation[v]) {
            out << " " << e;
        }
        out << "\n";
    }
    if (g.outer) {
        out << "outer " << g.outer->first << " " << g.outer->second << "\n";
    }
    return out.str();
}

}  // namespace pw
