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

#include "pw/oracle.hpp"

#include <bit>
#include <string>

#include "pw/plane_graph.hpp"

namespace pw {

Matrix generator_matrix(const Generator &g) {
    Matrix m(g.inputs, g.outputs);
    switch (g.kind) {
        case GenKind::Identity:
            for (size_t i = 0; i < m.rows(); i++) {
                m.at(i, i) = 1;
            }
            break;
        case GenKind::Black:
            for (size_t r = 0; r < m.rows(); r++) {
                for (size_t c = 0; c < m.cols(); c++) {
                    if (std::popcount(r) + std::popcount(c) == 1) {
                        m.at(r, c) = 1;
                    }
                }
            }
            break;
        case GenKind::White:
            m.at(0, 0) = 1;
            m.at(1, 1) = g.param;
            break;
        case GenKind::Cup:
        case GenKind::Cap:
            m.data[0] = 1;
            m.data[3] = 1;
            break;
        case GenKind::FSwap:
            // |x y> -> (-1)^{xy} |y x>
            m.at(0b00, 0b00) = 1;
            m.at(0b10, 0b01) = 1;
            m.at(0b01, 0b10) = 1;
            m.at(0b11, 0b11) = -1;
            break;
        case GenKind::Scalar:
            m.at(0, 0) = g.param;
            break;
    }
    return m;
}

namespace {

// Batch of register states: `batch` columns of 2^width amplitudes.
struct Register {
    int width = 0;
    size_t batch = 0;
    std::vector<Complex> v;
};

class Evaluator {
   public:
    Evaluator(int cap, int inputs) : cap_(cap), inputs_(inputs) {}

    // Applies d to wires [p, p + d.inputs()) of r.
    void apply(const Diagram &d, int p, Register &r) {
        switch (d.op()) {
            case Diagram::Op::Leaf:
                apply_leaf(d.generator(), p, r);
                return;
            case Diagram::Op::Compose:
                apply(d.first(), p, r);
                apply(d.second(), p, r);
                return;
            case Diagram::Op::Tensor:
                apply(d.second(), p + d.first().inputs(), r);
                apply(d.first(), p, r);
                return;
        }
    }

   private:
    void apply_leaf(const Generator &g, int p, Register &r) {
        if (g.kind == GenKind::Identity) {
            return;
        }
        int k = g.inputs, m = g.outputs;
        int w2 = r.width - k + m;
        if (w2 + inputs_ > cap_ || k + m > cap_) {
            throw Error("interpret: width " + std::to_string(w2 + inputs_) + " exceeds cap " +
                        std::to_string(cap_));
        }
        Matrix gm = generator_matrix(g);
        int lo_bits = r.width - p - k;
        size_t lo_n = size_t{1} << lo_bits;
        size_t hi_n = size_t{1} << p;
        size_t old_size = size_t{1} << r.width;
        size_t new_size = size_t{1} << w2;
        std::vector<Complex> out(new_size * r.batch, 0.0);
        for (size_t b = 0; b < r.batch; b++) {
            const Complex *src = &r.v[b * old_size];
            Complex *dst = &out[b * new_size];
            for (size_t hi = 0; hi < hi_n; hi++) {
                for (size_t in = 0; in < gm.cols(); in++) {
                    for (size_t lo = 0; lo < lo_n; lo++) {
                        Complex a = src[(((hi << k) | in) << lo_bits) | lo];
                        if (a == 0.0) {
                            continue;
                        }
                        for (size_t o = 0; o < gm.rows(); o++) {
                            Complex e = gm.at(o, in);
                            if (e != 0.0) {
                                dst[(((hi << m) | o) << lo_bits) | lo] += e * a;
                            }
                        }
                    }
                }
            }
        }
        r.v = std::move(out);
        r.width = w2;
    }

    int cap_;
    int inputs_;
};

}  // namespace

Matrix interpret_matrix(const Diagram &d, int width_cap) {
    int n = d.inputs();
    if (2 * n > width_cap || n + d.outputs() > width_cap) {
        throw Error("interpret: width exceeds cap " + std::to_string(width_cap));
    }
    Register r;
    r.width = n;
    r.batch = size_t{1} << n;
    r.v.assign(r.batch * r.batch, 0.0);
    for (size_t b = 0; b < r.batch; b++) {
        r.v[b * r.batch + b] = 1;
    }
    Evaluator(width_cap, n).apply(d, 0, r);
    Matrix m(n, d.outputs());
    size_t sz = size_t{1} << r.width;
    for (size_t c = 0; c < m.cols(); c++) {
        for (size_t o = 0; o < m.rows(); o++) {
            m.at(o, c) = r.v[c * sz + o];
        }
    }
    return m;
}

Tensor interpret(const Diagram &d, int width_cap) {
    if (d.inputs() + d.outputs() > width_cap) {
        throw Error("interpret: width " + std::to_string(d.inputs() + d.outputs()) +
                    " exceeds cap " + std::to_string(width_cap));
    }
    return matrix_to_state(interpret_matrix(d, width_cap));
}

Complex coefficient(const Diagram &d, const BitWord &alpha, int width_cap) {
    if (alpha.size() != static_cast<size_t>(d.inputs() + d.outputs())) {
        throw Error("coefficient: index length does not match the diagram");
    }
    return interpret(d, width_cap)[alpha];
}

Complex coefficient(const GraphForm &g, const BitWord &alpha) { return graph_coefficient(g, alpha); }

Complex scalar_brute(const GraphForm &g) {
    if (g.port_count != 0) {
        throw Error("scalar_brute: graph form has boundary ports");
    }
    return graph_coefficient(g, BitWord(0));
}

Complex scalar_brute(const Diagram &d) {
    if (d.inputs() != 0 || d.outputs() != 0) {
        throw Error("scalar_brute: diagram is not 0 -> 0");
    }
    return scalar_brute(to_graph_form(d));
}

}  // namespace pw
