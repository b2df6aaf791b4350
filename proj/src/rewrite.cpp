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

#include "pw/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "pw/fkt.hpp"

namespace pw {

namespace {

struct RuleInfo {
    RuleId id;
    const char *name;
};

const RuleInfo kRules[] = {
    {RuleId::WSpiderFusion, "W-spider-fusion"},
    {RuleId::WBinary, "W-binary"},
    {RuleId::WBialgebra, "W-bialgebra"},
    {RuleId::WLoop, "W-loop"},
    {RuleId::PhaseFusion, "phase-fusion"},
    {RuleId::ZBinary, "Z-binary"},
    {RuleId::PhaseDistrib, "phase-distrib"},
    {RuleId::Sum, "sum"},
    {RuleId::FswapZ, "fswap-Z"},
    {RuleId::FswapsW, "fswaps-W"},
    {RuleId::Zero, "zero"},
    {RuleId::FswapRemoval, "fswap-removal"},
    {RuleId::FswapYB, "fswap-YB"},
    {RuleId::FswapRotated, "fswap-rotated"},
    {RuleId::SumR, "sum->"},
    {RuleId::WLoopR, "W-loop->"},
    {RuleId::ZeroEdge, "zero-edge"},
    {RuleId::BinaryWR, "binary-W->"},
    {RuleId::FswapRemovalR, "fswap-removal->"},
    {RuleId::PhaseFusionR, "phase-fusion->"},
    {RuleId::FloopR, "floop->"},
    {RuleId::Fusion0R, "fusion-0->"},
    {RuleId::FusionR, "fusion->"},
    {RuleId::Pivot, "pivot"},
    {RuleId::ZeroR, "zero->"},
    {RuleId::Reduce1, "reduce-1"},
    {RuleId::Reduce2, "reduce-2"},
    {RuleId::Reduce3, "reduce-3"},
    {RuleId::Reduce4, "reduce-4"},
};

}  // namespace

const std::vector<RuleId> &all_rules() {
    static const std::vector<RuleId> rules = [] {
        std::vector<RuleId> out;
        for (const auto &r : kRules) {
            out.push_back(r.id);
        }
        return out;
    }();
    return rules;
}

std::string rule_name(RuleId r) {
    for (const auto &info : kRules) {
        if (info.id == r) {
            return info.name;
        }
    }
    return "?";
}

std::optional<RuleId> rule_from_name(const std::string &name) {
    for (const auto &info : kRules) {
        if (name == info.name) {
            return info.id;
        }
    }
    return std::nullopt;
}

namespace {

// Signed adjacency of a linear form: k[a][b] = w when a precedes b and
// -w otherwise. Parallel arcs are summed, self-loops dropped.
struct Adjacency {
    std::unordered_map<int, int> pos;
    std::map<int, std::map<int, Complex>> k;

    explicit Adjacency(const LinearForm &f) {
        for (size_t i = 0; i < f.vertices.size(); i++) {
            pos[f.vertices[i].id] = static_cast<int>(i);
            k[f.vertices[i].id];
        }
        for (const auto &arc : f.arcs) {
            if (arc.a == arc.b) {
                continue;
            }
            k[arc.a][arc.b] += arc.w;
            k[arc.b][arc.a] -= arc.w;
        }
    }

    Complex at(int a, int b) const {
        auto row = k.find(a);
        if (row == k.end()) {
            return 0.0;
        }
        auto e = row->second.find(b);
        return e == row->second.end() ? Complex(0.0) : e->second;
    }
};

bool same_anchors(const Redex &a, const Redex &b) { return a.rule == b.rule && a.anchors == b.anchors; }

// Principal pivot on the arc (a, b). With u before v and r = K[u][v]:
//   Pf(K[S]) = r * Pf(B[S ^ {u,v}])
// where B is the pivoted matrix with the rows of v and of every vertex
// strictly between u and v negated. Internal pivot vertices disappear,
// boundary ones flip their leg.
LinearForm pivot(const LinearForm &f, int a, int b, const Tolerance &tol) {
    Adjacency adj(f);
    int u = adj.pos.at(a) < adj.pos.at(b) ? a : b;
    int v = u == a ? b : a;
    Complex r = adj.at(u, v);
    if (tol.negligible(r)) {
        throw Error("pivot on a negligible arc");
    }
    std::map<int, Complex> nu = adj.k[u], nv = adj.k[v];
    nu.erase(v);
    nv.erase(u);
    std::vector<int> touched;
    for (const auto &[j, w] : nu) {
        touched.push_back(j);
    }
    for (const auto &[j, w] : nv) {
        if (!nu.count(j)) {
            touched.push_back(j);
        }
    }
    std::sort(touched.begin(), touched.end(), [&](int x, int y) { return adj.pos[x] < adj.pos[y]; });

    // Upper-triangle weights of the result, keyed by (earlier, later).
    std::map<std::pair<int, int>, Complex> upper;
    std::set<std::pair<int, int>> updated;
    for (const auto &[x, row] : adj.k) {
        if (x == u || x == v) {
            continue;
        }
        for (const auto &[y, w] : row) {
            if (y != u && y != v && adj.pos[x] < adj.pos[y]) {
                upper[{x, y}] = w;
            }
        }
    }
    auto get = [](const std::map<int, Complex> &m, int j) {
        auto it = m.find(j);
        return it == m.end() ? Complex(0.0) : it->second;
    };
    for (size_t s = 0; s < touched.size(); s++) {
        for (size_t t = s + 1; t < touched.size(); t++) {
            int i = touched[s], j = touched[t];
            Complex d = (get(nv, i) * get(nu, j) - get(nu, i) * get(nv, j)) / r;
            if (d == 0.0) {
                continue;
            }
            Complex before = upper.count({i, j}) ? upper[{i, j}] : Complex(0.0);
            Complex after = before + d;
            double scale = std::max(std::abs(before), std::abs(d));
            upper[{i, j}] = tol.negligible(after, scale) ? Complex(0.0) : after;
            updated.insert({i, j});
        }
    }
    auto put = [&](int x, int y, Complex w) {
        if (adj.pos[x] < adj.pos[y]) {
            upper[{x, y}] = w;
        } else {
            upper[{y, x}] = -w;
        }
    };
    for (const auto &[j, w] : nv) {
        put(u, j, w / r);
    }
    for (const auto &[j, w] : nu) {
        put(v, j, -w / r);
    }
    put(u, v, -1.0 / r);

    int pu = adj.pos[u], pv = adj.pos[v];
    auto negated = [&](int x) {
        int p = adj.pos[x];
        return x == v || (p > pu && p < pv);
    };

    LinearForm g = f;
    g.arcs.clear();
    g.scalar *= r;
    std::vector<int> gone;
    for (int x : {u, v}) {
        auto &vx = g.vertices[adj.pos[x]];
        if (vx.internal()) {
            gone.push_back(x);
        } else {
            vx.flip = !vx.flip;
        }
    }
    for (const auto &[key, w] : upper) {
        auto [x, y] = key;
        if (std::find(gone.begin(), gone.end(), x) != gone.end() ||
            std::find(gone.begin(), gone.end(), y) != gone.end()) {
            continue;
        }
        if (w == 0.0 && !updated.count(key)) {
            continue;
        }
        Complex sw = negated(x) != negated(y) ? -w : w;
        g.arcs.push_back({x, y, sw});
    }
    for (int x : gone) {
        g.vertices.erase(g.vertices.begin() + g.position(x));
    }
    return g;
}

// Arc ends at a vertex, self-loops counting twice.
std::unordered_map<int, int> degrees(const LinearForm &f) {
    std::unordered_map<int, int> deg;
    for (const auto &v : f.vertices) {
        deg[v.id] = 0;
    }
    for (const auto &arc : f.arcs) {
        deg[arc.a]++;
        deg[arc.b]++;
    }
    return deg;
}

// Variant of the pivot family at internal vertex p, with its partner.
std::optional<Redex> pivot_redex(const LinearForm &f, const Adjacency &adj, int p, const Tolerance &tol) {
    // Arcs of negligible weight are left to the zero-edge rule.
    std::vector<std::pair<int, Complex>> row;
    bool pending = false;
    for (const auto &[j, w] : adj.k.at(p)) {
        if (tol.negligible(w)) {
            pending = true;
        } else {
            row.push_back({j, w});
        }
    }
    if (row.empty()) {
        if (pending) {
            return std::nullopt;
        }
        return Redex{RuleId::ZeroR, {p}, {}};
    }
    auto best = [&](bool internal_only) {
        int q = -1;
        double m = -1;
        for (const auto &[j, w] : row) {
            if (internal_only && !f.vertices[adj.pos.at(j)].internal()) {
                continue;
            }
            if (std::abs(w) > m) {
                m = std::abs(w);
                q = j;
            }
        }
        return q;
    };
    int qi = best(true);
    int q = qi >= 0 ? qi : best(false);
    RuleId rule = RuleId::Pivot;
    if (row.size() == 1) {
        rule = RuleId::Fusion0R;
    } else if (qi >= 0) {
        rule = RuleId::FusionR;
    } else if (row.size() == 2) {
        rule = RuleId::BinaryWR;
    }
    return Redex{rule, {p, q}, {adj.at(p, q)}};
}

std::optional<Redex> reduce_redex(const LinearForm &f, const Adjacency &adj, int i, const Tolerance &tol) {
    int pi = adj.pos.at(i);
    const auto &vi = f.vertices[pi];
    if (vi.internal() || !vi.flip) {
        return std::nullopt;
    }
    int j = -1;
    double m = -1;
    for (const auto &[x, w] : adj.k.at(i)) {
        if (adj.pos.at(x) > pi && !tol.negligible(w) && std::abs(w) > m) {
            m = std::abs(w);
            j = x;
        }
    }
    if (j < 0) {
        return std::nullopt;
    }
    const auto &vj = f.vertices[adj.pos.at(j)];
    if (vj.internal()) {
        return std::nullopt;
    }
    bool bj = !vj.flip;
    bool next = adj.pos.at(j) == pi + 1;
    RuleId rule = bj ? (next ? RuleId::Reduce1 : RuleId::Reduce2) : (next ? RuleId::Reduce3 : RuleId::Reduce4);
    return Redex{rule, {i, j}, {adj.at(i, j)}};
}

bool pivot_family(RuleId r) {
    return r == RuleId::Fusion0R || r == RuleId::FusionR || r == RuleId::BinaryWR || r == RuleId::Pivot ||
           r == RuleId::Reduce1 || r == RuleId::Reduce2 || r == RuleId::Reduce3 || r == RuleId::Reduce4;
}

}  // namespace

std::vector<Redex> find_redexes(const LinearForm &f, RuleId rule, const Tolerance &tol) {
    std::vector<Redex> out;
    Adjacency adj(f);
    auto by_line = [&](std::vector<Redex> &v) {
        std::stable_sort(v.begin(), v.end(), [&](const Redex &x, const Redex &y) {
            std::vector<int> px, py;
            for (int a : x.anchors) px.push_back(adj.pos.at(a));
            for (int a : y.anchors) py.push_back(adj.pos.at(a));
            return px < py;
        });
    };
    switch (rule) {
        case RuleId::SumR: {
            std::map<std::pair<int, int>, int> count;
            for (const auto &arc : f.arcs) {
                if (arc.a != arc.b && ++count[{arc.a, arc.b}] == 2) {
                    out.push_back({rule, {arc.a, arc.b}, {}});
                }
            }
            break;
        }
        case RuleId::WLoopR: {
            std::set<int> seen;
            for (const auto &arc : f.arcs) {
                if (arc.a == arc.b && seen.insert(arc.a).second) {
                    out.push_back({rule, {arc.a}, {}});
                }
            }
            break;
        }
        case RuleId::ZeroEdge: {
            std::set<std::pair<int, int>> seen;
            for (const auto &arc : f.arcs) {
                if (arc.a != arc.b && tol.negligible(arc.w) && seen.insert({arc.a, arc.b}).second) {
                    out.push_back({rule, {arc.a, arc.b}, {}});
                }
            }
            break;
        }
        case RuleId::ZeroR:
        case RuleId::Fusion0R:
        case RuleId::FusionR:
        case RuleId::BinaryWR:
        case RuleId::Pivot:
            for (const auto &v : f.vertices) {
                if (!v.internal()) {
                    continue;
                }
                auto r = pivot_redex(f, adj, v.id, tol);
                if (r && r->rule == rule) {
                    out.push_back(*r);
                }
            }
            break;
        case RuleId::PhaseDistrib:
            for (const auto &v : f.vertices) {
                if (!v.internal() && v.leg != 1.0) {
                    out.push_back({rule, {v.id}, {v.leg}});
                }
            }
            break;
        case RuleId::Reduce1:
        case RuleId::Reduce2:
        case RuleId::Reduce3:
        case RuleId::Reduce4:
            for (const auto &v : f.vertices) {
                auto r = reduce_redex(f, adj, v.id, tol);
                if (r && r->rule == rule) {
                    out.push_back(*r);
                }
            }
            break;
        default:
            break;
    }
    by_line(out);
    return out;
}

Complex rule_factor(const LinearForm &f, const Redex &redex) {
    if (redex.rule == RuleId::ZeroR) {
        return 0.0;
    }
    if (pivot_family(redex.rule)) {
        Adjacency adj(f);
        int a = redex.anchors[0], b = redex.anchors[1];
        return adj.pos.at(a) < adj.pos.at(b) ? adj.at(a, b) : adj.at(b, a);
    }
    if (redex.rule == RuleId::PhaseDistrib) {
        const auto &v = f.vertices[f.position(redex.anchors[0])];
        return v.flip ? Complex(1.0) : v.leg;
    }
    return 1.0;
}

LinearForm apply_rule(const LinearForm &f, const Redex &redex, const Tolerance &tol) {
    auto current = find_redexes(f, redex.rule, tol);
    if (std::none_of(current.begin(), current.end(), [&](const Redex &r) { return same_anchors(r, redex); })) {
        throw Error("apply_rule: stale redex for " + rule_name(redex.rule));
    }
    LinearForm g = f;
    switch (redex.rule) {
        case RuleId::SumR: {
            int a = redex.anchors[0], b = redex.anchors[1];
            Complex w = 0.0;
            std::erase_if(g.arcs, [&](const LinearForm::Arc &arc) {
                bool hit = arc.a == a && arc.b == b;
                if (hit) {
                    w += arc.w;
                }
                return hit;
            });
            g.arcs.push_back({a, b, w});
            return g;
        }
        case RuleId::WLoopR: {
            int a = redex.anchors[0];
            std::erase_if(g.arcs, [&](const LinearForm::Arc &arc) { return arc.a == a && arc.b == a; });
            return g;
        }
        case RuleId::ZeroEdge: {
            int a = redex.anchors[0], b = redex.anchors[1];
            std::erase_if(g.arcs, [&](const LinearForm::Arc &arc) {
                return arc.a == a && arc.b == b && tol.negligible(arc.w);
            });
            return g;
        }
        case RuleId::ZeroR:
            g.scalar = 0.0;
            return g;
        case RuleId::PhaseDistrib: {
            auto &v = g.vertices[g.position(redex.anchors[0])];
            Complex w = v.leg;
            Complex arc_factor = v.flip ? w : 1.0 / w;
            if (!v.flip) {
                g.scalar *= w;
            }
            v.leg = 1.0;
            for (auto &arc : g.arcs) {
                if (arc.a == v.id || arc.b == v.id) {
                    arc.w *= arc_factor;
                }
            }
            return g;
        }
        default:
            break;
    }
    return pivot(f, redex.anchors[0], redex.anchors[1], tol);
}

std::string MeasureT::str() const {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

MeasureT measure(const LinearForm &f) {
    MeasureT m;
    auto deg = degrees(f);
    std::unordered_map<int, int> pos;
    for (size_t i = 0; i < f.vertices.size(); i++) {
        pos[f.vertices[i].id] = static_cast<int>(i);
    }
    for (const auto &v : f.vertices) {
        int arity = deg[v.id] + (v.internal() ? 0 : 1);
        m.v[0] += v.internal();
        m.v[1] += arity >= 3;
        m.v[3] += arity == 2;
        m.v[5] += v.internal() && deg[v.id] == 0;
    }
    m.v[2] = static_cast<int>(f.arcs.size());
    for (size_t i = 0; i < f.arcs.size(); i++) {
        for (size_t j = 0; j < f.arcs.size(); j++) {
            int a = pos[f.arcs[i].a], b = pos[f.arcs[i].b];
            int c = pos[f.arcs[j].a], d = pos[f.arcs[j].b];
            m.v[4] += a < c && c < b && b < d;
        }
    }
    return m;
}

std::vector<std::vector<int>> fusion_classes(const LinearForm &f) {
    auto deg = degrees(f);
    std::unordered_map<int, int> parent;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto arity = [&](const LinearForm::Vertex &v) { return deg[v.id] + (v.internal() ? 0 : 1); };
    std::unordered_map<int, bool> joins;
    for (const auto &v : f.vertices) {
        parent[v.id] = v.id;
        joins[v.id] = arity(v) >= 3 || (v.internal() && arity(v) == 2);
    }
    for (const auto &arc : f.arcs) {
        if (joins[arc.a] && joins[arc.b]) {
            parent[find(arc.a)] = find(arc.b);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (const auto &v : f.vertices) {
        if (arity(v) >= 3) {
            groups[find(v.id)].push_back(v.id);
        }
    }
    std::vector<std::vector<int>> out;
    for (auto &[root, ids] : groups) {
        out.push_back(std::move(ids));
    }
    return out;
}

std::vector<NodeClass> classify(const LinearForm &f) {
    std::vector<NodeClass> out;
    for (const auto &v : f.vertices) {
        out.push_back(v.internal() ? NodeClass::Internal : v.flip ? NodeClass::Boundary0 : NodeClass::Boundary1);
    }
    return out;
}

bool WGSX::reduced() const {
    for (const auto &[e, w] : edges) {
        if (!b[e.first]) {
            return false;
        }
    }
    return true;
}

std::string WGSX::str() const {
    std::string out = "s=" + format_complex(s) + "; n=" + std::to_string(n) + "; edges=";
    bool first = true;
    for (const auto &[e, w] : edges) {
        out += (first ? "" : " ") + std::string("(") + std::to_string(e.first + 1) + "," +
               std::to_string(e.second + 1) + ":" + format_complex(w) + ")";
        first = false;
    }
    return out + "; b=" + b.str();
}

WGSX WGSX::zero(int n) {
    WGSX w;
    w.s = 0.0;
    w.n = n;
    w.b = BitWord(n);
    return w;
}

LinearForm to_linear_form(const WGSX &w) {
    LinearForm f;
    for (int i = 0; i < w.n; i++) {
        f.add_vertex(i, !w.b[i]);
    }
    for (const auto &[e, x] : w.edges) {
        f.add_arc(e.first, e.second, x);
    }
    f.port_count = w.n;
    f.scalar = w.s;
    return f;
}

Complex wgsx_amplitude(const WGSX &w, const BitWord &alpha) { return evaluate(to_linear_form(w), alpha); }

std::string TraceStep::str() const {
    std::string at;
    for (size_t i = 0; i < anchors.size(); i++) {
        at += (i ? "," : "") + std::to_string(anchors[i]);
    }
    if (at.empty()) {
        at = "-";
    }
    return "step " + std::to_string(step) + " rule=" + rule_name(rule) + " at=" + at +
           " scalar=" + format_complex(scalar);
}

namespace {

const RuleId kStep1[] = {RuleId::SumR,     RuleId::WLoopR,  RuleId::ZeroEdge, RuleId::BinaryWR,
                         RuleId::Fusion0R, RuleId::FusionR, RuleId::ZeroR,    RuleId::Pivot};
const RuleId kStep3[] = {RuleId::Reduce1, RuleId::Reduce2, RuleId::Reduce3, RuleId::Reduce4};

LinearForm zero_form(int ports) {
    LinearForm f;
    for (int p = 0; p < ports; p++) {
        f.add_vertex(p, true);
    }
    f.port_count = ports;
    f.scalar = 0.0;
    return f;
}

WGSX extract(const LinearForm &f, const Tolerance &tol) {
    if (tol.negligible(f.scalar)) {
        return WGSX::zero(f.port_count);
    }
    WGSX w;
    w.s = f.scalar;
    w.n = f.port_count;
    w.b = BitWord(f.port_count);
    std::unordered_map<int, int> port;
    for (const auto &v : f.vertices) {
        if (v.internal()) {
            throw Error("normalize: internal vertex left after step 1");
        }
        port[v.id] = v.port;
        w.b.set(v.port, !v.flip);
    }
    for (const auto &arc : f.arcs) {
        if (arc.a != arc.b) {
            w.edges[{port[arc.a], port[arc.b]}] += arc.w;
        }
    }
    std::erase_if(w.edges, [&](const auto &e) { return tol.negligible(e.second); });
    return w;
}

}  // namespace

NormalizeResult normalize_traced(const Diagram &d, const Tolerance &tol) {
    LinearForm f = linearize(d);
    NormalizeResult res;
    auto is_zero = [&] { return tol.negligible(f.scalar); };
    auto step = [&](const Redex &r) {
        Complex c = rule_factor(f, r);
        f = apply_rule(f, r, tol);
        res.trace.push_back({static_cast<int>(res.trace.size()) + 1, r.rule, r.anchors, c});
        if (is_zero()) {
            f = zero_form(f.port_count);
        }
    };

    // Step 1: eliminate every internal vertex.
    res.measures.push_back(measure(f));
    while (!is_zero()) {
        bool applied = false;
        for (RuleId rule : kStep1) {
            auto found = find_redexes(f, rule, tol);
            if (!found.empty()) {
                step(found.front());
                res.measures.push_back(measure(f));
                applied = true;
                break;
            }
        }
        if (!applied) {
            break;
        }
    }

    // Step 2: move leg weights into the scalar and the arcs.
    while (!is_zero()) {
        auto found = find_redexes(f, RuleId::PhaseDistrib, tol);
        if (found.empty()) {
            break;
        }
        step(found.front());
    }

    // Step 3: clear right neighbours of type-0 vertices, leftmost first.
    while (!is_zero()) {
        auto zeros = find_redexes(f, RuleId::ZeroEdge, tol);
        if (!zeros.empty()) {
            step(zeros.front());
            continue;
        }
        std::optional<Redex> next;
        int best = -1;
        for (RuleId rule : kStep3) {
            for (const Redex &r : find_redexes(f, rule, tol)) {
                int p = f.position(r.anchors[0]);
                if (best < 0 || p < best) {
                    best = p;
                    next = r;
                }
            }
        }
        if (!next) {
            break;
        }
        step(*next);
    }
    res.form = extract(f, tol);
    return res;
}

WGSX normalize(const Diagram &d, const Tolerance &tol) { return normalize_traced(d, tol).form; }

bool equal(const WGSX &a, const WGSX &b, const Tolerance &tol) {
    if (a.n != b.n) {
        return false;
    }
    bool za = tol.negligible(a.s), zb = tol.negligible(b.s);
    if (za || zb) {
        return za && zb;
    }
    if (!(a.b == b.b) || a.edges.size() != b.edges.size() || !tol.close(a.s, b.s)) {
        return false;
    }
    for (const auto &[e, w] : a.edges) {
        auto it = b.edges.find(e);
        if (it == b.edges.end() || !tol.close(w, it->second)) {
            return false;
        }
    }
    return true;
}

bool equal(const Diagram &a, const Diagram &b, const Tolerance &tol) {
    if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) {
        throw Error("equal: arity mismatch (" + std::to_string(a.inputs()) + "->" + std::to_string(a.outputs()) +
                    " vs " + std::to_string(b.inputs()) + "->" + std::to_string(b.outputs()) + ")");
    }
    return equal(normalize(a, tol), normalize(b, tol), tol);
}

}  // namespace pw
