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

#include "pw/diagram.hpp"

#include <string>

namespace pw {

Diagram Diagram::leaf(const Generator &g) {
    if (g.inputs < 0 || g.outputs < 0) {
        throw Error("negative generator arity");
    }
    auto n = std::make_shared<Node>();
    n->op = Op::Leaf;
    n->gen = g;
    n->inputs = g.inputs;
    n->outputs = g.outputs;
    return Diagram(std::move(n));
}

Diagram Diagram::identity(int k) { return leaf({GenKind::Identity, k, k, 1.0}); }
Diagram Diagram::black(int n, int m) { return leaf({GenKind::Black, n, m, 1.0}); }
Diagram Diagram::white(Complex r) { return leaf({GenKind::White, 1, 1, r}); }
Diagram Diagram::cup() { return leaf({GenKind::Cup, 2, 0, 1.0}); }
Diagram Diagram::cap() { return leaf({GenKind::Cap, 0, 2, 1.0}); }
Diagram Diagram::fswap() { return leaf({GenKind::FSwap, 2, 2, 1.0}); }
Diagram Diagram::scalar(Complex c) { return leaf({GenKind::Scalar, 0, 0, c}); }
Diagram Diagram::ket0() { return compose(ket1(), x()); }

bool Diagram::operator==(const Diagram &other) const {
    if (node_ == other.node_) {
        return true;
    }
    const Node &a = *node_;
    const Node &b = *other.node_;
    if (a.op != b.op || a.inputs != b.inputs || a.outputs != b.outputs) {
        return false;
    }
    if (a.op == Op::Leaf) {
        return a.gen == b.gen;
    }
    return a.kids[0] == b.kids[0] && a.kids[1] == b.kids[1];
}

Diagram tensor(const Diagram &a, const Diagram &b) {
    auto n = std::make_shared<Diagram::Node>();
    n->op = Diagram::Op::Tensor;
    n->kids = {a, b};
    n->inputs = a.inputs() + b.inputs();
    n->outputs = a.outputs() + b.outputs();
    n->size = a.size() + b.size();
    return Diagram(std::move(n));
}

Diagram compose(const Diagram &a, const Diagram &b) {
    if (a.outputs() != b.inputs()) {
        throw Error("compose: width mismatch (" + std::to_string(a.outputs()) + " outputs feed " +
                    std::to_string(b.inputs()) + " inputs)");
    }
    auto n = std::make_shared<Diagram::Node>();
    n->op = Diagram::Op::Compose;
    n->kids = {a, b};
    n->inputs = a.inputs();
    n->outputs = b.outputs();
    n->size = a.size() + b.size();
    return Diagram(std::move(n));
}

Diagram tensor_all(const std::vector<Diagram> &parts) {
    if (parts.empty()) {
        return Diagram::identity(0);
    }
    Diagram acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) {
        acc = tensor(parts[i], acc);
    }
    return acc;
}

Diagram compose_all(const std::vector<Diagram> &parts) {
    if (parts.empty()) {
        throw Error("compose_all: empty list");
    }
    Diagram acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) {
        acc = compose(parts[i], acc);
    }
    return acc;
}

Diagram embed(const Diagram &a, int k, int width) {
    int rest = width - k - a.inputs();
    if (k < 0 || rest < 0) {
        throw Error("embed: diagram does not fit in register");
    }
    std::vector<Diagram> parts;
    if (k > 0) {
        parts.push_back(Diagram::identity(k));
    }
    parts.push_back(a);
    if (rest > 0) {
        parts.push_back(Diagram::identity(rest));
    }
    return tensor_all(parts);
}

Diagram nested_caps(int k) {
    if (k == 0) {
        return Diagram::identity(0);
    }
    Diagram acc = Diagram::cap();
    for (int j = 1; j < k; j++) {
        acc = compose(acc, tensor_all({Diagram::identity(j), Diagram::cap(), Diagram::identity(j)}));
    }
    return acc;
}

Diagram nested_cups(int k) {
    if (k == 0) {
        return Diagram::identity(0);
    }
    Diagram acc = Diagram::cup();
    for (int j = 1; j < k; j++) {
        acc = compose(tensor_all({Diagram::identity(j), Diagram::cup(), Diagram::identity(j)}), acc);
    }
    return acc;
}

Diagram state_form(const Diagram &d) {
    int n = d.inputs();
    if (n == 0) {
        return d;
    }
    return compose(nested_caps(n), tensor(Diagram::identity(n), d));
}

Diagram map_form(const Diagram &s, int n) {
    if (s.inputs() != 0 || s.outputs() < n) {
        throw Error("map_form: expected a state with at least n outputs");
    }
    if (n == 0) {
        return s;
    }
    int m = s.outputs() - n;
    return compose(tensor(Diagram::identity(n), s), tensor(nested_cups(n), Diagram::identity(m)));
}

static void collect(const Diagram &d, std::vector<Generator> &out) {
    if (d.op() == Diagram::Op::Leaf) {
        out.push_back(d.generator());
        return;
    }
    collect(d.first(), out);
    collect(d.second(), out);
}

std::vector<Generator> leaves(const Diagram &d) {
    std::vector<Generator> out;
    collect(d, out);
    return out;
}

}  // namespace pw
