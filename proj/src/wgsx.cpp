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

#include <algorithm>
#include <tuple>

#include "pw/rewrite.hpp"

namespace pw {

Diagram wgsx_to_diagram(const WGSX &w) {
    if (w.n == 0) {
        return Diagram::scalar(w.s);
    }
    // Every edge becomes a weighted cap; its two ends then travel through
    // fswaps to the spiders of their vertices.
    struct End {
        int vertex;
        int side;  // 0: right end of its edge, 1: left end
        int other;
        auto key() const { return std::tie(vertex, side, other); }
    };
    std::vector<End> wires;
    std::vector<Diagram> caps, weights;
    std::vector<int> degree(w.n, 0);
    for (const auto &[e, x] : w.edges) {
        caps.push_back(Diagram::cap());
        weights.push_back(Diagram::white(x));
        weights.push_back(Diagram::identity(1));
        wires.push_back({e.first, 1, e.second});
        wires.push_back({e.second, 0, e.first});
        degree[e.first]++;
        degree[e.second]++;
    }
    Diagram acc = Diagram::identity(0);
    if (!caps.empty()) {
        acc = compose(tensor_all(caps), tensor_all(weights));
    }
    int width = static_cast<int>(wires.size());
    for (bool sorted = false; !sorted;) {
        sorted = true;
        for (int k = 0; k + 1 < width; k++) {
            if (wires[k + 1].key() < wires[k].key()) {
                std::swap(wires[k], wires[k + 1]);
                acc = compose(acc, embed(Diagram::fswap(), k, width));
                sorted = false;
            }
        }
    }
    std::vector<Diagram> spiders, flips;
    for (int v = 0; v < w.n; v++) {
        spiders.push_back(Diagram::black(degree[v], 1));
        flips.push_back(w.b[v] ? Diagram::identity(1) : Diagram::x());
    }
    acc = compose(compose(acc, tensor_all(spiders)), tensor_all(flips));
    return tensor(acc, Diagram::scalar(w.s));
}

WGSX remove_vertex(const WGSX &w, int i) {
    if (i < 1 || i > w.n) {
        throw Error("remove_vertex: index " + std::to_string(i) + " out of range 1.." + std::to_string(w.n));
    }
    int k = i - 1;
    WGSX out;
    out.s = w.s;
    out.n = w.n - 1;
    out.b = BitWord(out.n);
    for (int v = 0, t = 0; v < w.n; v++) {
        if (v != k) {
            out.b.set(t++, w.b[v]);
        }
    }
    auto shift = [k](int v) { return v > k ? v - 1 : v; };
    for (const auto &[e, x] : w.edges) {
        if (e.first != k && e.second != k) {
            out.edges[{shift(e.first), shift(e.second)}] = x;
        }
    }
    return out;
}

}  // namespace pw
