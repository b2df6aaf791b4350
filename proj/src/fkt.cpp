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

#include "pw/fkt.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace pw {

namespace {

int tail(const WeightedPlaneGraph &g, int dart) {
    const auto &e = g.edges[dart / 2];
    return dart % 2 == 0 ? e.u : e.v;
}

int find_root(std::vector<int> &parent, int x) {
    while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
    }
    return x;
}

std::vector<int> component_labels(const WeightedPlaneGraph &g) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &e : g.edges) {
        parent[find_root(parent, e.u)] = find_root(parent, e.v);
    }
    std::vector<int> label(g.vertex_count);
    for (int v = 0; v < g.vertex_count; v++) {
        label[v] = find_root(parent, v);
    }
    return label;
}

}  // namespace

Faces faces(const WeightedPlaneGraph &g) {
    int darts = 2 * static_cast<int>(g.edges.size());
    if (static_cast<int>(g.rotation.size()) != g.vertex_count) {
        throw Error("rotation system: expected one rotation per vertex");
    }
    // Position of each outgoing dart within its tail's rotation.
    std::vector<int> pos(darts, -1);
    for (int v = 0; v < g.vertex_count; v++) {
        const auto &rot = g.rotation[v];
        for (size_t i = 0; i < rot.size(); i++) {
            int e = rot[i];
            if (e < 0 || e >= static_cast<int>(g.edges.size())) {
                throw Error("rotation system: unknown edge");
            }
            const auto &ed = g.edges[e];
            int d;
            if (ed.u == v && pos[2 * e] < 0) {
                d = 2 * e;
            } else if (ed.v == v && pos[2 * e + 1] < 0) {
                d = 2 * e + 1;
            } else {
                throw Error("rotation system: edge " + std::to_string(e) + " listed at a wrong vertex");
            }
            pos[d] = static_cast<int>(i);
        }
    }
    for (int d = 0; d < darts; d++) {
        if (pos[d] < 0) {
            throw Error("rotation system: edge end missing from rotation");
        }
    }
    auto out_dart = [&](int v, int i) {
        int e = g.rotation[v][i];
        const auto &ed = g.edges[e];
        if (ed.u == ed.v) {
            return pos[2 * e] == i ? 2 * e : 2 * e + 1;
        }
        return ed.u == v ? 2 * e : 2 * e + 1;
    };

    Faces fs;
    fs.face_of_dart.assign(darts, -1);
    for (int start = 0; start < darts; start++) {
        if (fs.face_of_dart[start] >= 0) {
            continue;
        }
        int f = static_cast<int>(fs.cycles.size());
        fs.cycles.emplace_back();
        int d = start;
        while (fs.face_of_dart[d] < 0) {
            fs.face_of_dart[d] = f;
            fs.cycles[f].push_back(d);
            // Clockwise successor of the reverse dart keeps the face on the left.
            int back = d ^ 1;
            int h = tail(g, back);
            int deg = static_cast<int>(g.rotation[h].size());
            d = out_dart(h, (pos[back] + deg - 1) % deg);
        }
        if (d != start) {
            throw Error("rotation system: face tracing did not close");
        }
    }

    // Euler check and outer face per component.
    std::vector<int> label = component_labels(g);
    std::map<int, std::array<int, 3>> count;  // V, E, F
    for (int v = 0; v < g.vertex_count; v++) {
        if (!g.rotation[v].empty()) {
            count[label[v]][0]++;
        }
    }
    for (const auto &e : g.edges) {
        count[label[e.u]][1]++;
    }
    std::map<int, int> outer_of;
    for (size_t f = 0; f < fs.cycles.size(); f++) {
        int c = label[tail(g, fs.cycles[f][0])];
        count[c][2]++;
        auto it = outer_of.find(c);
        if (it == outer_of.end() || fs.cycles[f].size() > fs.cycles[it->second].size()) {
            outer_of[c] = static_cast<int>(f);
        }
    }
    for (auto &[c, n] : count) {
        if (n[0] - n[1] + n[2] != 2) {
            throw Error("rotation system is not planar (Euler characteristic " +
                        std::to_string(n[0] - n[1] + n[2]) + ")");
        }
    }
    if (g.outer) {
        auto [e, from] = *g.outer;
        if (e < 0 || e >= static_cast<int>(g.edges.size()) ||
            (g.edges[e].u != from && g.edges[e].v != from)) {
            throw Error("outer face: edge side does not exist");
        }
        // The outer face lies to the right of the directed side, i.e. it is
        // traced by the reverse dart.
        int d = g.edges[e].u == from ? 2 * e + 1 : 2 * e;
        outer_of[label[from]] = fs.face_of_dart[d];
    }
    for (auto &[c, f] : outer_of) {
        fs.outer.push_back(f);
    }
    return fs;
}

int clockwise_count(const WeightedPlaneGraph &, const Faces &fs, const Orientation &o, int f) {
    int cw = 0;
    for (int d : fs.cycles[f]) {
        // Faces run counter-clockwise, so a dart against its edge is clockwise.
        bool forward = d % 2 == 0;
        if (forward != o[d / 2]) {
            cw++;
        }
    }
    return cw;
}

Orientation pfaffian_orientation(const WeightedPlaneGraph &g) {
    Faces fs = faces(g);
    size_t m = g.edges.size();
    Orientation o(m, true);
    std::vector<bool> fixed(m, false);

    // Spanning forest by BFS; tree edges point away from the root.
    std::vector<std::vector<int>> inc(g.vertex_count);
    for (size_t e = 0; e < m; e++) {
        inc[g.edges[e].u].push_back(static_cast<int>(e));
        inc[g.edges[e].v].push_back(static_cast<int>(e));
    }
    std::vector<bool> seen(g.vertex_count, false);
    for (int r = 0; r < g.vertex_count; r++) {
        if (seen[r]) {
            continue;
        }
        seen[r] = true;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : inc[v]) {
                int w = g.edges[e].u == v ? g.edges[e].v : g.edges[e].u;
                if (!seen[w]) {
                    seen[w] = true;
                    fixed[e] = true;
                    o[e] = g.edges[e].u == v;
                    q.push(w);
                }
            }
        }
    }

    // The remaining edges form a spanning tree of the dual. Walk it from
    // each outer face and settle faces leaves first.
    size_t nf = fs.cycles.size();
    std::vector<int> parent_edge(nf, -1);
    std::vector<bool> reached(nf, false);
    std::vector<int> order;
    for (int root : fs.outer) {
        reached[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            order.push_back(f);
            for (int d : fs.cycles[f]) {
                int e = d / 2;
                if (fixed[e]) {
                    continue;
                }
                int other = fs.face_of_dart[d ^ 1];
                if (!reached[other]) {
                    reached[other] = true;
                    parent_edge[other] = e;
                    q.push(other);
                }
            }
        }
    }
    for (size_t i = order.size(); i-- > 0;) {
        int f = order[i];
        int e = parent_edge[f];
        if (e < 0) {
            continue;
        }
        o[e] = true;
        if (clockwise_count(g, fs, o, f) % 2 == 0) {
            o[e] = false;
        }
        fixed[e] = true;
    }
    for (size_t f = 0; f < nf; f++) {
        bool is_outer = std::find(fs.outer.begin(), fs.outer.end(), static_cast<int>(f)) != fs.outer.end();
        if (!is_outer && clockwise_count(g, fs, o, static_cast<int>(f)) % 2 == 0) {
            throw Error("pfaffian orientation: face left with even clockwise count");
        }
    }
    return o;
}

void SkewMatrix::set(int i, int j, Complex w) {
    a[static_cast<size_t>(i) * n + j] = w;
    a[static_cast<size_t>(j) * n + i] = -w;
}

SkewMatrix tutte_matrix(const WeightedPlaneGraph &g, const Orientation &o, bool unit_weights) {
    SkewMatrix m(g.vertex_count);
    for (size_t e = 0; e < g.edges.size(); e++) {
        const auto &ed = g.edges[e];
        Complex w = unit_weights ? Complex(1.0) : ed.w;
        if (o[e]) {
            m.set(ed.u, ed.v, m(ed.u, ed.v) + w);
        } else {
            m.set(ed.v, ed.u, m(ed.v, ed.u) + w);
        }
    }
    return m;
}

LogComplex pfaffian(SkewMatrix m) {
    const int n = m.n;
    if (n % 2 == 1) {
        return {};
    }
    constexpr double kPivotThreshold = 1e-12;
    // Only the strict upper triangle is kept current.
    std::vector<Complex> &a = m.a;
    auto at = [&](int i, int j) -> Complex & { return a[static_cast<size_t>(i) * n + j]; };
    auto get = [&](int i, int j) -> Complex { return i < j ? at(i, j) : i > j ? -at(j, i) : Complex(0.0); };
    auto put = [&](int i, int j, Complex v) {
        if (i < j) {
            at(i, j) = v;
        } else {
            at(j, i) = -v;
        }
    };
    LogComplex acc = LogComplex::one();
    for (int k = 0; k < n; k += 2) {
        int best = -1;
        double best_abs = kPivotThreshold;
        for (int j = k + 1; j < n; j++) {
            double v = std::abs(at(k, j));
            if (v > best_abs) {
                best_abs = v;
                best = j;
            }
        }
        if (best < 0) {
            return {};
        }
        if (best != k + 1) {
            int p = k + 1, q = best;
            for (int c = k; c < n; c++) {
                if (c == p || c == q) {
                    continue;
                }
                Complex tp = get(p, c), tq = get(q, c);
                put(p, c, tq);
                put(q, c, tp);
            }
            at(p, q) = -at(p, q);
            acc *= LogComplex::from(-1.0);
        }
        Complex piv = at(k, k + 1);
        acc *= LogComplex::from(piv);
        Complex inv = 1.0 / piv;
        const Complex *r0 = &a[static_cast<size_t>(k) * n];
        const Complex *r1 = &a[static_cast<size_t>(k + 1) * n];
        for (int i = k + 2; i < n; i++) {
            Complex c1 = r1[i] * inv, c0 = r0[i] * inv;
            if (c1 == 0.0 && c0 == 0.0) {
                continue;
            }
            Complex *ri = &a[static_cast<size_t>(i) * n];
            for (int j = i + 1; j < n; j++) {
                ri[j] += c1 * r0[j] - c0 * r1[j];
            }
        }
    }
    return acc;
}

namespace {

// Merges parallel edges, drops self-loops and zero edges.
WeightedPlaneGraph simplify(const WeightedPlaneGraph &g) {
    std::map<std::pair<int, int>, int> first;
    std::vector<Complex> weight(g.edges.size(), 0.0);
    std::vector<int> owner(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); e++) {
        const auto &ed = g.edges[e];
        if (ed.u == ed.v) {
            continue;
        }
        auto [it, fresh] = first.try_emplace(std::minmax(ed.u, ed.v), static_cast<int>(e));
        owner[e] = it->second;
        weight[it->second] += ed.w;
    }
    Tolerance tol;
    WeightedPlaneGraph s;
    s.vertex_count = g.vertex_count;
    std::vector<int> remap(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); e++) {
        if (owner[e] == static_cast<int>(e) && !tol.negligible(weight[e])) {
            remap[e] = static_cast<int>(s.edges.size());
            s.edges.push_back({g.edges[e].u, g.edges[e].v, weight[e]});
        }
    }
    s.rotation.resize(g.vertex_count);
    for (int v = 0; v < g.vertex_count; v++) {
        for (int e : g.rotation[v]) {
            if (e >= 0 && e < static_cast<int>(g.edges.size()) && remap[e] >= 0) {
                s.rotation[v].push_back(remap[e]);
            }
        }
    }
    if (g.outer && remap[g.outer->first] >= 0) {
        s.outer = std::make_pair(remap[g.outer->first], g.outer->second);
    }
    return s;
}

}  // namespace

LogComplex matching_weight_fkt(const WeightedPlaneGraph &input) {
    if (static_cast<int>(input.rotation.size()) != input.vertex_count) {
        throw Error("rotation system: expected one rotation per vertex");
    }
    // Validates the embedding as given before simplifying it.
    faces(input);
    WeightedPlaneGraph g = simplify(input);
    Orientation o = pfaffian_orientation(g);
    std::vector<int> label = component_labels(g);
    std::map<int, std::vector<int>> members;
    for (int v = 0; v < g.vertex_count; v++) {
        members[label[v]].push_back(v);
    }
    LogComplex total = LogComplex::one();
    std::vector<int> local(g.vertex_count, -1);
    for (auto &[c, vs] : members) {
        if (vs.size() % 2 == 1) {
            return {};
        }
        for (size_t i = 0; i < vs.size(); i++) {
            local[vs[i]] = static_cast<int>(i);
        }
        int k = static_cast<int>(vs.size());
        SkewMatrix mw(k), mu(k);
        for (size_t e = 0; e < g.edges.size(); e++) {
            const auto &ed = g.edges[e];
            if (label[ed.u] != c) {
                continue;
            }
            int a = local[ed.u], b = local[ed.v];
            if (!o[e]) {
                std::swap(a, b);
            }
            mw.set(a, b, ed.w);
            mu.set(a, b, 1.0);
        }
        LogComplex pu = pfaffian(mu);
        if (pu.is_zero() || pu.log10_magnitude() < std::log10(0.5)) {
            return {};
        }
        LogComplex pw = pfaffian(mw);
        total *= pw * LogComplex::from(pu.phase().real() < 0 ? -1.0 : 1.0);
    }
    return total;
}

WeightedPlaneGraph to_weighted_plane_graph(const GraphForm &g) {
    if (!g.legs.empty() || !g.wires.empty()) {
        throw Error("graph form has boundary ports");
    }
    WeightedPlaneGraph w;
    w.vertex_count = g.vertex_count;
    for (const auto &e : g.edges) {
        w.edges.push_back({e.u, e.v, e.w});
    }
    w.rotation.resize(g.vertex_count);
    for (int v = 0; v < g.vertex_count; v++) {
        for (const auto &s : g.rotation[v]) {
            w.rotation[v].push_back(s.index);
        }
    }
    return w;
}

LogComplex scalar_eval_fkt(const Diagram &d) {
    if (d.inputs() != 0 || d.outputs() != 0) {
        throw Error("scalar_eval_fkt: diagram is not 0 -> 0");
    }
    GraphForm gf = to_graph_form(d);
    LogComplex v = LogComplex::from(gf.scalar);
    for (Complex w : gf.loops) {
        v *= LogComplex::from(1.0 + w);
    }
    return v * matching_weight_fkt(to_weighted_plane_graph(gf));
}

namespace {

Complex match_from(const std::vector<std::vector<std::pair<int, Complex>>> &adj, std::vector<char> &used) {
    size_t v = 0;
    while (v < adj.size() && used[v]) {
        v++;
    }
    if (v == adj.size()) {
        return 1.0;
    }
    used[v] = 1;
    Complex total = 0.0;
    for (const auto &[w, weight] : adj[v]) {
        if (!used[w]) {
            used[w] = 1;
            total += weight * match_from(adj, used);
            used[w] = 0;
        }
    }
    used[v] = 0;
    return total;
}

}  // namespace

Complex matching_weight_brute(const WeightedPlaneGraph &g) {
    std::vector<std::vector<std::pair<int, Complex>>> adj(g.vertex_count);
    for (const auto &e : g.edges) {
        if (e.u != e.v) {
            adj[e.u].push_back({e.v, e.w});
            adj[e.v].push_back({e.u, e.w});
        }
    }
    std::vector<char> used(g.vertex_count, 0);
    return match_from(adj, used);
}

}  // namespace pw
