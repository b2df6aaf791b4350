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

#include "pw/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace pw {

Matrix::Matrix(int in, int out) : in_wires(in), out_wires(out) {
    data.assign(rows() * cols(), 0.0);
}

Matrix matmul_after(const Matrix &second, const Matrix &first) {
    if (second.in_wires != first.out_wires) {
        throw Error("matrix width mismatch");
    }
    Matrix r(first.in_wires, second.out_wires);
    size_t mid = first.rows();
    for (size_t i = 0; i < r.rows(); i++) {
        for (size_t k = 0; k < mid; k++) {
            Complex s = second.at(i, k);
            if (s == 0.0) {
                continue;
            }
            for (size_t j = 0; j < r.cols(); j++) {
                r.at(i, j) += s * first.at(k, j);
            }
        }
    }
    return r;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix r(a.in_wires + b.in_wires, a.out_wires + b.out_wires);
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            Complex s = a.at(i, j);
            if (s == 0.0) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    r.at(i * b.rows() + k, j * b.cols() + l) = s * b.at(k, l);
                }
            }
        }
    }
    return r;
}

double Tensor::max_abs() const {
    double m = 0;
    for (Complex z : amps) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool Tensor::approx_equal(const Tensor &o, const Tolerance &tol) const {
    if (wires != o.wires) {
        return false;
    }
    double scale = std::max(max_abs(), o.max_abs());
    for (size_t i = 0; i < amps.size(); i++) {
        if (std::abs(amps[i] - o.amps[i]) > tol.abs + tol.rel * scale) {
            return false;
        }
    }
    return true;
}

static size_t reverse_bits(size_t x, int n) {
    size_t r = 0;
    for (int i = 0; i < n; i++) {
        r = (r << 1) | ((x >> i) & 1);
    }
    return r;
}

Tensor matrix_to_state(const Matrix &m) {
    Tensor t(m.in_wires + m.out_wires);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            t.amps[(reverse_bits(c, m.in_wires) << m.out_wires) | r] = m.at(r, c);
        }
    }
    return t;
}

Matrix state_to_matrix(const Tensor &t, int inputs) {
    if (inputs < 0 || inputs > t.wires) {
        throw Error("state_to_matrix: bad input count");
    }
    Matrix m(inputs, t.wires - inputs);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            m.at(r, c) = t.amps[(reverse_bits(c, inputs) << m.out_wires) | r];
        }
    }
    return m;
}

}  // namespace pw
