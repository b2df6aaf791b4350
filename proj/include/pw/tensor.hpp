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

#ifndef PW_TENSOR_HPP
#define PW_TENSOR_HPP

#include <vector>

#include "pw/bitword.hpp"
#include "pw/common.hpp"

namespace pw {

/// Dense 2^rows x 2^cols matrix of a map, stored row-major as M[out][in].
struct Matrix {
    int in_wires = 0;
    int out_wires = 0;
    std::vector<Complex> data;

    Matrix() = default;
    Matrix(int in, int out);
    size_t rows() const { return size_t{1} << out_wires; }
    size_t cols() const { return size_t{1} << in_wires; }
    Complex &at(size_t r, size_t c) { return data[r * cols() + c]; }
    Complex at(size_t r, size_t c) const { return data[r * cols() + c]; }
};

Matrix matmul_after(const Matrix &second, const Matrix &first);
Matrix kron(const Matrix &a, const Matrix &b);

/// Amplitudes of a state on `wires` wires, indexed by BitWord::to_index.
struct Tensor {
    int wires = 0;
    std::vector<Complex> amps;

    Tensor() = default;
    explicit Tensor(int w) : wires(w), amps(size_t{1} << w, 0.0) {}

    Complex operator[](const BitWord &a) const { return amps[a.to_index()]; }
    Complex &operator[](const BitWord &a) { return amps[a.to_index()]; }
    double max_abs() const;
    bool approx_equal(const Tensor &o, const Tolerance &tol) const;
};

/// Reads a map as a state: ports are the reversed inputs then the outputs.
Tensor matrix_to_state(const Matrix &m);
Matrix state_to_matrix(const Tensor &t, int inputs);

}  // namespace pw

#endif
