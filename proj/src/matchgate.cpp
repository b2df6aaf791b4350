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

#include "pw/matchgate.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "pw/rewrite.hpp"

namespace pw {

namespace {

// Mask of wire p (1-based; wire 1 is the most significant bit).
uint64_t wire_mask(int n, int p) { return uint64_t{1} << (n - p); }

}  // namespace

MgiReport mgi_check(const Tensor &g, double tol) {
    int n = g.wires;
    if (n > kMgiMaxWires) {
        throw Error("mgi_check: " + std::to_string(n) + " wires exceed the limit of " + std::to_string(kMgiMaxWires));
    }
    MgiReport report;
    double scale = g.max_abs();
    if (n == 0 || scale == 0.0) {
        return report;
    }
    scale *= scale;
    uint64_t size = g.amps.size();
    for (uint64_t a = 0; a < size; a++) {
        for (uint64_t b = a + 1; b < size; b++) {
            uint64_t diff = a ^ b;
            Complex sum = 0.0;
            int k = 0;
            for (int p = 1; p <= n; p++) {
                uint64_t e = wire_mask(n, p);
                if (diff & e) {
                    k++;
                    Complex term = g.amps[a ^ e] * g.amps[b ^ e];
                    sum += k % 2 == 0 ? term : -term;
                }
            }
            double r = std::abs(sum) / scale;
            if (r > report.worst_residual) {
                report.worst_residual = r;
                report.witness = MgiWitness{BitWord::from_index(a, n), BitWord::from_index(b, n), sum};
            }
        }
    }
    report.passed = report.worst_residual <= tol;
    if (report.passed) {
        report.witness.reset();
    }
    return report;
}

bool parity_check(const Tensor &g, double tol) {
    double even = 0.0, odd = 0.0;
    for (uint64_t a = 0; a < g.amps.size(); a++) {
        double v = std::abs(g.amps[a]);
        double &slot = std::popcount(a) % 2 == 0 ? even : odd;
        slot = std::max(slot, v);
    }
    double top = std::max(even, odd);
    return even * odd <= tol * top * top;
}

Tensor state_tensor_product(const Tensor &f, int a, int b, const Tensor &g, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != f.wires || c + d != g.wires) {
        throw Error("state_tensor_product: splits do not match the wire counts");
    }
    int m = c + d;
    Tensor out(a + m + b);
    for (uint64_t idx = 0; idx < out.amps.size(); idx++) {
        uint64_t a3 = idx & ((uint64_t{1} << b) - 1);
        uint64_t a2 = (idx >> b) & ((uint64_t{1} << m) - 1);
        uint64_t a1 = idx >> (b + m);
        out.amps[idx] = f.amps[(a1 << b) | a3] * g.amps[a2];
    }
    return out;
}

Tensor contract_consecutive(const Tensor &g, int i) {
    int n = g.wires;
    if (i < 1 || i + 1 > n) {
        throw Error("contract_consecutive: index " + std::to_string(i) + " out of range for " + std::to_string(n) +
                    " wires");
    }
    Tensor out(n - 2);
    int low = n - i - 1;  // wires after i + 1
    for (uint64_t idx = 0; idx < out.amps.size(); idx++) {
        uint64_t tail = idx & ((uint64_t{1} << low) - 1);
        uint64_t head = idx >> low;
        uint64_t base = (head << (low + 2)) | tail;
        out.amps[idx] = g.amps[base] + g.amps[base | (uint64_t{3} << low)];
    }
    return out;
}

Tensor compose_states(const Tensor &f, const Tensor &g, int shared) {
    if (shared < 0 || shared > f.wires || shared > g.wires) {
        throw Error("compose_states: shared wire count exceeds a state");
    }
    Tensor joined = state_tensor_product(f, f.wires, 0, g, g.wires, 0);
    int top = f.wires;
    for (int t = 0; t < shared; t++) {
        joined = contract_consecutive(joined, top - t);
    }
    return joined;
}

Tensor weight2_reconstruct(int n, const std::map<std::pair<int, int>, Complex> &pairs) {
    Tensor out(n);
    out.amps[0] = 1.0;
    for (const auto &[e, w] : pairs) {
        if (e.first < 1 || e.first >= e.second || e.second > n) {
            throw Error("weight2_reconstruct: bad pair index");
        }
        out.amps[wire_mask(n, e.first) | wire_mask(n, e.second)] = w;
    }
    // Amplitudes of weight >= 4 by increasing weight.
    for (int weight = 4; weight <= n; weight += 2) {
        for (uint64_t a = 0; a < out.amps.size(); a++) {
            if (std::popcount(a) != weight) {
                continue;
            }
            std::vector<int> pos;
            for (int p = 1; p <= n; p++) {
                if (a & wire_mask(n, p)) {
                    pos.push_back(p);
                }
            }
            uint64_t ei = wire_mask(n, pos[0]);
            Complex sum = 0.0;
            for (size_t k = 1; k < pos.size(); k++) {
                uint64_t pair = ei | wire_mask(n, pos[k]);
                Complex term = out.amps[a ^ pair] * out.amps[pair];
                sum += k % 2 == 1 ? term : -term;
            }
            out.amps[a] = sum;
        }
    }
    return out;
}

MgiFailure::MgiFailure(const MgiReport &r)
    : Error("tensor fails the matchgate identities (residual " + std::to_string(r.worst_residual) + ")"), report(r) {}

Diagram synthesize(const Tensor &g, double tol) {
    MgiReport report = mgi_check(g, tol);
    if (!report.passed) {
        throw MgiFailure(report);
    }
    int n = g.wires;
    double top = g.max_abs();
    if (top == 0.0) {
        return wgsx_to_diagram(WGSX::zero(n));
    }
    // Shift by the least index with a nonnegligible amplitude.
    uint64_t beta = 0;
    while (std::abs(g.amps[beta]) <= tol * top) {
        beta++;
    }
    WGSX w;
    w.n = n;
    w.s = g.amps[beta];
    w.b = BitWord::from_index(beta, n);
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            Complex v = g.amps[beta ^ wire_mask(n, i) ^ wire_mask(n, j)] / w.s;
            if (std::abs(v) * std::abs(w.s) > tol * top) {
                w.edges[{i - 1, j - 1}] = v;
            }
        }
    }
    return wgsx_to_diagram(w);
}

}  // namespace pw
