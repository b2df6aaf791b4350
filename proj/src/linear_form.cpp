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

#include "pw/linear_form.hpp"

#include <map>
#include <string>

#include "pw/fkt.hpp"

namespace pw {

int LinearForm::position(int id) const {
    for (size_t i = 0; i < vertices.size(); i++) {
        if (vertices[i].id == id) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

int LinearForm::owner(int port) const {
    for (size_t i = 0; i < vertices.size(); i++) {
        if (vertices[i].port == port) {
            return static_cast<int>(i);
        }
    }
    throw Error("linear form: port " + std::to_string(port) + " has no vertex");
}

int LinearForm::add_vertex(int port, bool flip, Complex leg) {
    return insert_vertex(vertices.size(), port, flip, leg);
}

int LinearForm::insert_vertex(size_t pos, int port, bool flip, Complex leg) {
    Vertex v;
    v.id = next_id++;
    v.port = port;
    v.flip = flip;
    v.leg = leg;
    vertices.insert(vertices.begin() + static_cast<long>(pos), v);
    return v.id;
}

void LinearForm::add_arc(int a, int b, Complex w) {
    if (position(a) > position(b)) {
        std::swap(a, b);
    }
    arcs.push_back({a, b, w});
}

void LinearForm::erase_vertex(int id) {
    int p = position(id);
    if (p < 0) {
        throw Error("linear form: no vertex " + std::to_string(id));
    }
    vertices.erase(vertices.begin() + p);
    std::erase_if(arcs, [id](const Arc &a) { return a.a == id || a.b == id; });
}

void LinearForm::check() const {
    int expect = 0;
    for (const Vertex &v : vertices) {
        if (v.port >= 0) {
            if (v.port != expect) {
                throw Error("linear form: ports out of order");
            }
            expect++;
        }
    }
    if (expect != port_count) {
        throw Error("linear form: port count mismatch");
    }
    for (const Arc &a : arcs) {
        if (position(a.a) < 0 || position(a.b) < 0 || position(a.a) > position(a.b)) {
            throw Error("linear form: malformed arc");
        }
    }
}

namespace {

// Appends b after a; b's ports follow a's.
LinearForm juxtapose(LinearForm a, const LinearForm &b) {
    int shift = a.next_id;
    for (LinearForm::Vertex v : b.vertices) {
        v.id += shift;
        if (v.port >= 0) {
            v.port += a.port_count;
        }
        a.vertices.push_back(v);
    }
    for (const auto &arc : b.arcs) {
        a.arcs.push_back({arc.a + shift, arc.b + shift, arc.w});
    }
    a.next_id += b.next_id;
    a.port_count += b.port_count;
    a.scalar *= b.scalar;
    return a;
}

// Inserts block f into g right after g's port `at - 1`; f's ports become
// at, at+1, ... No arc of g can cross into f, so no sign appears.
LinearForm insert_block(LinearForm g, const LinearForm &f, int at) {
    size_t pos = at == 0 ? 0 : static_cast<size_t>(g.owner(at - 1)) + 1;
    for (auto &v : g.vertices) {
        if (v.port >= at) {
            v.port += f.port_count;
        }
    }
    int shift = g.next_id;
    std::vector<LinearForm::Vertex> block;
    for (LinearForm::Vertex v : f.vertices) {
        v.id += shift;
        if (v.port >= 0) {
            v.port += at;
        }
        block.push_back(v);
    }
    g.vertices.insert(g.vertices.begin() + static_cast<long>(pos), block.begin(), block.end());
    for (const auto &arc : f.arcs) {
        g.arcs.push_back({arc.a + shift, arc.b + shift, arc.w});
    }
    g.next_id += f.next_id;
    g.port_count += f.port_count;
    g.scalar *= f.scalar;
    return g;
}

// Two-port pieces: a single arc between direct legs.
LinearForm arc_state(Complex first_leg) {
    LinearForm f;
    int a = f.add_vertex(0, false, first_leg);
    int b = f.add_vertex(1);
    f.add_arc(a, b, 1.0);
    f.port_count = 2;
    return f;
}

LinearForm nested_arcs(int k) {
    LinearForm f;
    std::vector<int> ids;
    for (int p = 0; p < 2 * k; p++) {
        ids.push_back(f.add_vertex(p));
    }
    for (int j = 0; j < k; j++) {
        f.add_arc(ids[j], ids[2 * k - 1 - j], 1.0);
    }
    f.port_count = 2 * k;
    return f;
}

LinearForm leaf_form(const Generator &g) {
    LinearForm f;
    switch (g.kind) {
        case GenKind::Identity:
            return nested_arcs(g.inputs);
        case GenKind::Black: {
            int k = g.inputs + g.outputs;
            if (k == 0) {
                f.add_vertex();  // isolated: the empty spider is 0
            } else if (k == 1) {
                f.add_vertex(0);
            } else {
                int hub = f.add_vertex();
                for (int p = 0; p < k; p++) {
                    f.add_arc(hub, f.add_vertex(p, true), 1.0);
                }
            }
            f.port_count = k;
            return f;
        }
        case GenKind::White:
            return arc_state(g.param);
        case GenKind::Cup:
        case GenKind::Cap:
            return arc_state(1.0);
        case GenKind::FSwap: {
            int v[4];
            for (int p = 0; p < 4; p++) {
                v[p] = f.add_vertex(p, true);
            }
            f.add_arc(v[0], v[2], 1.0);
            f.add_arc(v[1], v[3], 1.0);
            f.port_count = 4;
            return f;
        }
        case GenKind::Scalar:
            f.scalar = g.param;
            return f;
    }
    return f;
}

// Turns a flipped leg into a direct leg on a fresh neighbour.
void unflip(LinearForm &f, int index, bool left_side) {
    LinearForm::Vertex v = f.vertices[index];
    size_t pos = left_side ? static_cast<size_t>(index) + 1 : static_cast<size_t>(index);
    int y = f.insert_vertex(pos, v.port, false, v.leg);
    LinearForm::Vertex &owner = f.vertices[f.position(v.id)];
    owner.port = -1;
    owner.flip = false;
    owner.leg = 1.0;
    f.add_arc(v.id, y, 1.0);
}

// Joins adjacent ports p and p + 1 (sums over their common bit).
void contract(LinearForm &f, int p) {
    int iu = f.owner(p);
    if (f.vertices[iu].flip) {
        unflip(f, iu, true);
    }
    int iv = f.owner(p + 1);
    if (f.vertices[iv].flip) {
        unflip(f, iv, false);
    }
    iu = f.owner(p);
    iv = f.owner(p + 1);
    LinearForm::Vertex &u = f.vertices[iu];
    LinearForm::Vertex &v = f.vertices[iv];
    // Everything between u and v is internal, hence always uncovered.
    double sign = (iv - iu - 1) % 2 == 0 ? 1.0 : -1.0;
    Complex w = u.leg * v.leg * sign;
    int a = u.id, b = v.id;
    u.port = v.port = -1;
    u.leg = v.leg = 1.0;
    f.add_arc(a, b, w);
    for (auto &x : f.vertices) {
        if (x.port > p + 1) {
            x.port -= 2;
        }
    }
    f.port_count -= 2;
}

LinearForm lower(const Diagram &d) {
    switch (d.op()) {
        case Diagram::Op::Leaf:
            return leaf_form(d.generator());
        case Diagram::Op::Tensor:
            // State ports of f (x) g: g's reversed inputs, all of f, g's outputs.
            return insert_block(lower(d.second()), lower(d.first()), d.second().inputs());
        case Diagram::Op::Compose: {
            int a = d.first().inputs(), b = d.first().outputs();
            LinearForm f = juxtapose(lower(d.first()), lower(d.second()));
            for (int t = 0; t < b; t++) {
                contract(f, a + b - 1 - t);
            }
            return f;
        }
    }
    return {};
}

}  // namespace

LinearForm linearize(const Diagram &d) {
    LinearForm f = lower(d);
    // A zero leg weight pins its port to 0.
    for (size_t i = 0; i < f.vertices.size(); i++) {
        LinearForm::Vertex v = f.vertices[i];
        if (v.internal() || v.leg != 0.0) {
            continue;
        }
        if (v.flip) {
            // Uncovered only at bit 1, which the weight kills: drop it.
            f.erase_vertex(v.id);
            f.insert_vertex(i, v.port, true, 1.0);
        } else {
            // Bit 0 leaves it uncovered for good.
            f.vertices[i].port = -1;
            f.vertices[i].leg = 1.0;
            f.insert_vertex(i + 1, v.port, true, 1.0);
        }
    }
    f.check();
    return f;
}

Complex evaluate(const LinearForm &f, const BitWord &alpha) {
    if (alpha.size() != static_cast<size_t>(f.port_count)) {
        throw Error("evaluate: index length does not match the port count");
    }
    Complex value = f.scalar;
    std::map<int, int> local;
    for (const auto &v : f.vertices) {
        bool covered = false;
        if (!v.internal()) {
            bool bit = alpha[v.port];
            if (bit) {
                value *= v.leg;
            }
            covered = bit != v.flip;
        }
        if (!covered) {
            int k = static_cast<int>(local.size());
            local[v.id] = k;
        }
    }
    if (value == 0.0) {
        return 0.0;
    }
    SkewMatrix m(static_cast<int>(local.size()));
    for (const auto &arc : f.arcs) {
        auto a = local.find(arc.a), b = local.find(arc.b);
        if (a == local.end() || b == local.end() || arc.a == arc.b) {
            continue;
        }
        m.set(a->second, b->second, m(a->second, b->second) + arc.w);
    }
    return value * pfaffian(m).to_complex();
}

Tensor evaluate_all(const LinearForm &f) {
    Tensor t(f.port_count);
    for (uint64_t i = 0; i < t.amps.size(); i++) {
        t.amps[i] = evaluate(f, BitWord::from_index(i, f.port_count));
    }
    return t;
}

}  // namespace pw
