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

#include "pw/plane_graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace pw {

namespace {

// Wire endpoints are glued pairwise while walking the term. Terminal
// endpoints are node half-edges or ports; the others belong to bare wires.
class Builder {
   public:
    struct Frag {
        std::vector<int> in, out;
    };

    OpenPlaneGraph g;

    Frag build(const Diagram &d) {
        switch (d.op()) {
            case Diagram::Op::Leaf:
                return build_leaf(d.generator());
            case Diagram::Op::Compose: {
                Frag a = build(d.first());
                Frag b = build(d.second());
                for (size_t i = 0; i < a.out.size(); i++) {
                    join(a.out[i], b.in[i]);
                }
                return {a.in, b.out};
            }
            case Diagram::Op::Tensor: {
                Frag a = build(d.first());
                Frag b = build(d.second());
                a.in.insert(a.in.end(), b.in.begin(), b.in.end());
                a.out.insert(a.out.end(), b.out.begin(), b.out.end());
                return a;
            }
        }
        return {};
    }

    void finish(const Frag &f) {
        g.inputs = static_cast<int>(f.in.size());
        g.outputs = static_cast<int>(f.out.size());
        for (size_t i = f.in.size(); i-- > 0;) {
            g.ports.push_back(port(f.in[i]));
        }
        for (int e : f.out) {
            g.ports.push_back(port(e));
        }
        g.twin.assign(g.half_node.size(), -1);
        std::vector<bool> seen(link_.size(), false);
        for (size_t t = 0; t < link_.size(); t++) {
            if (he_[t] < 0 || seen[t]) {
                continue;
            }
            if (link_[t].size() != 1) {
                throw Error("plane graph: dangling half-edge");
            }
            int prev = static_cast<int>(t), cur = link_[t][0];
            seen[t] = true;
            while (he_[cur] < 0) {
                seen[cur] = true;
                int next = link_[cur][0] == prev ? link_[cur][1] : link_[cur][0];
                prev = cur;
                cur = next;
            }
            seen[cur] = true;
            g.twin[he_[t]] = he_[cur];
            g.twin[he_[cur]] = he_[t];
        }
        for (size_t t = 0; t < link_.size(); t++) {
            if (seen[t]) {
                continue;
            }
            g.free_loops++;
            int prev = -1, cur = static_cast<int>(t);
            while (!seen[cur]) {
                seen[cur] = true;
                int next = link_[cur][0] == prev ? link_[cur][1] : link_[cur][0];
                prev = cur;
                cur = next;
            }
        }
    }

   private:
    int endpoint(int he) {
        link_.emplace_back();
        he_.push_back(he);
        return static_cast<int>(link_.size()) - 1;
    }
    void join(int a, int b) {
        link_[a].push_back(b);
        link_[b].push_back(a);
    }
    int half_edge(int node) {
        g.half_node.push_back(node);
        int h = static_cast<int>(g.half_node.size()) - 1;
        if (node >= 0) {
            g.nodes[node].rotation.push_back(h);
        }
        return h;
    }
    int port(int frag_end) {
        int h = half_edge(-1);
        join(endpoint(h), frag_end);
        return h;
    }

    Frag build_leaf(const Generator &gen) {
        Frag f;
        switch (gen.kind) {
            case GenKind::Identity:
                for (int i = 0; i < gen.inputs; i++) {
                    int a = endpoint(-1), b = endpoint(-1);
                    join(a, b);
                    f.in.push_back(a);
                    f.out.push_back(b);
                }
                return f;
            case GenKind::Cup:
            case GenKind::Cap: {
                int a = endpoint(-1), b = endpoint(-1);
                join(a, b);
                (gen.kind == GenKind::Cup ? f.in : f.out) = {a, b};
                return f;
            }
            case GenKind::Scalar:
                g.scalar *= gen.param;
                return f;
            default:
                break;
        }
        PlaneNode n;
        n.kind = gen.kind == GenKind::Black   ? NodeKind::Black
                 : gen.kind == GenKind::White ? NodeKind::White
                                              : NodeKind::FSwap;
        n.weight = gen.kind == GenKind::White ? gen.param : Complex(1.0);
        g.nodes.push_back(n);
        int id = static_cast<int>(g.nodes.size()) - 1;
        // Counter-clockwise: inputs left to right, then outputs right to left.
        for (int i = 0; i < gen.inputs; i++) {
            f.in.push_back(endpoint(half_edge(id)));
        }
        f.out.resize(gen.outputs);
        for (int i = gen.outputs; i-- > 0;) {
            f.out[i] = endpoint(half_edge(id));
        }
        return f;
    }

    std::vector<std::vector<int>> link_;
    std::vector<int> he_;
};

}  // namespace

OpenPlaneGraph to_open_plane_graph(const Diagram &d) {
    Builder b;
    Builder::Frag f = b.build(d);
    b.finish(f);
    return std::move(b.g);
}

namespace {

// Planar gadget standing in for one fswap. Corners A, B, C, D carry out1,
// out2, in2, in1; P1..P4 are inner vertices.
constexpr std::array<std::array<double, 2>, 8> kGadgetPos = {{
    {0.0, 2.0}, {2.0, 2.0}, {2.0, 0.0}, {0.0, 0.0}, {0.6, 1.4}, {1.4, 1.4}, {1.4, 0.6}, {0.6, 0.6},
}};
struct GadgetEdge {
    int a, b;
    double w;
};
constexpr std::array<GadgetEdge, 9> kGadgetEdges = {{
    {1, 5, 1}, {3, 7, 1}, {4, 5, 1}, {0, 5, 1}, {1, 6, 1},
    {6, 7, -1}, {4, 6, -1}, {2, 7, -1}, {3, 4, -1},
}};
// Rotation slot of the fswap node (in1, in2, out2, out1) to gadget corner.
constexpr std::array<int, 4> kSlotCorner = {3, 2, 1, 0};

struct Pending {
    bool gadget;  // true: index into edges; false: half-edge id
    int index;
};

}  // namespace

GraphForm to_graph_form(const OpenPlaneGraph &g) {
    GraphForm f;
    f.port_count = static_cast<int>(g.ports.size());
    f.scalar = g.scalar;

    std::vector<int> base(g.nodes.size(), -1);
    std::vector<std::vector<Pending>> rot;
    std::vector<GraphForm::Edge> edges;
    for (size_t n = 0; n < g.nodes.size(); n++) {
        const PlaneNode &node = g.nodes[n];
        if (node.kind == NodeKind::Black) {
            base[n] = static_cast<int>(rot.size());
            rot.emplace_back();
            for (int h : node.rotation) {
                rot.back().push_back({false, h});
            }
        } else if (node.kind == NodeKind::FSwap) {
            int b = base[n] = static_cast<int>(rot.size());
            std::vector<std::vector<std::pair<double, Pending>>> around(8);
            auto angle = [](int from, int to) {
                return std::atan2(kGadgetPos[to][1] - kGadgetPos[from][1],
                                  kGadgetPos[to][0] - kGadgetPos[from][0]);
            };
            for (const GadgetEdge &e : kGadgetEdges) {
                int id = static_cast<int>(edges.size());
                edges.push_back({b + e.a, b + e.b, e.w});
                around[e.a].push_back({angle(e.a, e.b), {true, id}});
                around[e.b].push_back({angle(e.b, e.a), {true, id}});
            }
            for (int s = 0; s < 4; s++) {
                int c = kSlotCorner[s];
                double up = kGadgetPos[c][1] > 1.0 ? M_PI / 2 : -M_PI / 2;
                around[c].push_back({up, {false, node.rotation[s]}});
            }
            for (auto &a : around) {
                std::sort(a.begin(), a.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
                rot.emplace_back();
                for (auto &[ang, p] : a) {
                    rot.back().push_back(p);
                }
            }
        }
    }
    f.vertex_count = static_cast<int>(rot.size());

    auto vertex_of = [&](int h) {
        int n = g.half_node[h];
        if (g.nodes[n].kind == NodeKind::Black) {
            return base[n];
        }
        const auto &r = g.nodes[n].rotation;
        int s = static_cast<int>(std::find(r.begin(), r.end(), h) - r.begin());
        return base[n] + kSlotCorner[s];
    };
    std::vector<bool> white_seen(g.nodes.size(), false);
    // Follows h through white nodes; returns the terminal half-edge.
    auto resolve = [&](int h, Complex &w) {
        int t = g.twin[h];
        while (g.half_node[t] >= 0 && g.nodes[g.half_node[t]].kind == NodeKind::White) {
            int n = g.half_node[t];
            white_seen[n] = true;
            w *= g.nodes[n].weight;
            const auto &r = g.nodes[n].rotation;
            t = g.twin[r[0] == t ? r[1] : r[0]];
        }
        return t;
    };
    std::map<int, int> port_index;
    for (size_t i = 0; i < g.ports.size(); i++) {
        port_index[g.ports[i]] = static_cast<int>(i);
    }

    std::vector<int> edge_of_half(g.half_node.size(), -1);
    std::vector<std::vector<GraphForm::Slot>> slots(rot.size());
    for (size_t v = 0; v < rot.size(); v++) {
        for (const Pending &p : rot[v]) {
            if (p.gadget) {
                slots[v].push_back({false, p.index});
                continue;
            }
            Complex w = 1.0;
            int t = resolve(p.index, w);
            if (g.half_node[t] < 0) {
                f.legs.push_back({static_cast<int>(v), port_index.at(t), w});
                slots[v].push_back({true, static_cast<int>(f.legs.size()) - 1});
                continue;
            }
            int e = edge_of_half[p.index];
            if (e < 0) {
                e = static_cast<int>(edges.size());
                edges.push_back({static_cast<int>(v), vertex_of(t), w});
                edge_of_half[p.index] = edge_of_half[t] = e;
            }
            slots[v].push_back({false, e});
        }
    }
    for (size_t i = 0; i < g.ports.size(); i++) {
        Complex w = 1.0;
        int t = resolve(g.ports[i], w);
        if (g.half_node[t] < 0 && port_index.at(t) > static_cast<int>(i)) {
            f.wires.push_back({static_cast<int>(i), port_index.at(t), w});
        }
    }
    for (size_t n = 0; n < g.nodes.size(); n++) {
        if (g.nodes[n].kind != NodeKind::White || white_seen[n]) {
            continue;
        }
        Complex w = 1.0;
        int m = static_cast<int>(n);
        int out = g.nodes[n].rotation[1];
        while (!white_seen[m]) {
            white_seen[m] = true;
            w *= g.nodes[m].weight;
            int t = g.twin[out];
            m = g.half_node[t];
            const auto &r = g.nodes[m].rotation;
            out = r[0] == t ? r[1] : r[0];
        }
        f.loops.push_back(w);
    }
    for (int i = 0; i < g.free_loops; i++) {
        f.loops.push_back(1.0);
    }

    // Merge parallel edges into the first copy; drop self-loops and zeros.
    std::vector<int> keep(edges.size(), -1);
    std::map<std::pair<int, int>, int> first;
    for (size_t e = 0; e < edges.size(); e++) {
        auto [u, v, w] = edges[e];
        if (u == v) {
            continue;
        }
        auto key = std::minmax(u, v);
        auto it = first.find(key);
        if (it == first.end()) {
            first[key] = static_cast<int>(e);
            keep[e] = static_cast<int>(e);
        } else {
            edges[it->second].w += w;
        }
    }
    Tolerance tol;
    std::vector<int> remap(edges.size(), -1);
    for (size_t e = 0; e < edges.size(); e++) {
        if (keep[e] >= 0 && !tol.negligible(edges[e].w)) {
            remap[e] = static_cast<int>(f.edges.size());
            f.edges.push_back(edges[e]);
        }
    }
    f.rotation.resize(rot.size());
    for (size_t v = 0; v < rot.size(); v++) {
        for (const auto &s : slots[v]) {
            if (s.is_leg) {
                f.rotation[v].push_back(s);
            } else if (remap[s.index] >= 0) {
                GraphForm::Slot r{false, remap[s.index]};
                if (std::find(f.rotation[v].begin(), f.rotation[v].end(), r) == f.rotation[v].end()) {
                    f.rotation[v].push_back(r);
                }
            }
        }
    }
    return f;
}

GraphForm to_graph_form(const Diagram &d) { return to_graph_form(to_open_plane_graph(d)); }

namespace {

Complex matching_sum(const std::vector<std::vector<std::pair<int, Complex>>> &adj, std::vector<bool> &covered,
                     int from) {
    int n = static_cast<int>(adj.size());
    int v = from;
    while (v < n && covered[v]) {
        v++;
    }
    if (v == n) {
        return 1.0;
    }
    covered[v] = true;
    Complex total = 0.0;
    for (auto [u, w] : adj[v]) {
        if (!covered[u]) {
            covered[u] = true;
            total += w * matching_sum(adj, covered, v + 1);
            covered[u] = false;
        }
    }
    covered[v] = false;
    return total;
}

}  // namespace

Complex graph_coefficient(const GraphForm &g, const BitWord &alpha) {
    if (alpha.size() != static_cast<size_t>(g.port_count)) {
        throw Error("graph_coefficient: index length does not match the port count");
    }
    Complex value = g.scalar;
    for (Complex w : g.loops) {
        value *= 1.0 + w;
    }
    for (const auto &wire : g.wires) {
        if (alpha[wire.a] != alpha[wire.b]) {
            return 0.0;
        }
        if (alpha[wire.a]) {
            value *= wire.w;
        }
    }
    std::vector<bool> covered(g.vertex_count, false);
    for (const auto &leg : g.legs) {
        if (alpha[leg.port]) {
            if (covered[leg.vertex]) {
                return 0.0;
            }
            covered[leg.vertex] = true;
            value *= leg.w;
        }
    }
    std::vector<std::vector<std::pair<int, Complex>>> adj(g.vertex_count);
    for (const auto &e : g.edges) {
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
    }
    return value * matching_sum(adj, covered, 0);
}

std::string to_dot(const OpenPlaneGraph &g) {
    std::ostringstream out;
    out << "graph pw {\n";
    for (size_t n = 0; n < g.nodes.size(); n++) {
        const PlaneNode &node = g.nodes[n];
        out << "  n" << n;
        switch (node.kind) {
            case NodeKind::Black:
                out << " [shape=circle,style=filled,fillcolor=black,label=\"\"]";
                break;
            case NodeKind::White:
                out << " [shape=circle,label=\"" << format_complex(node.weight) << "\"]";
                break;
            case NodeKind::FSwap:
                out << " [shape=diamond,label=\"fswap\"]";
                break;
        }
        out << ";\n";
    }
    for (size_t i = 0; i < g.ports.size(); i++) {
        out << "  p" << i << " [shape=plaintext,label=\"" << (i < static_cast<size_t>(g.inputs) ? "in" : "out")
            << i << "\"];\n";
    }
    std::vector<int> port_of(g.half_node.size(), -1);
    for (size_t i = 0; i < g.ports.size(); i++) {
        port_of[g.ports[i]] = static_cast<int>(i);
    }
    auto name = [&](int h) {
        int n = g.half_node[h];
        return n >= 0 ? "n" + std::to_string(n) : "p" + std::to_string(port_of[h]);
    };
    for (size_t h = 0; h < g.half_node.size(); h++) {
        int t = g.twin[h];
        if (static_cast<int>(h) < t) {
            out << "  " << name(static_cast<int>(h)) << " -- " << name(t) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace pw
