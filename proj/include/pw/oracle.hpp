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

#ifndef PW_ORACLE_HPP
#define PW_ORACLE_HPP

#include "pw/bitword.hpp"
#include "pw/diagram.hpp"
#include "pw/plane_graph.hpp"
#include "pw/tensor.hpp"

namespace pw {

constexpr int kDefaultWidthCap = 20;

/// Dense matrix of a generator, M[out][in].
Matrix generator_matrix(const Generator &g);

/// Dense map of d. Throws Error if the working register would exceed
/// `width_cap` wires (register width plus input count).
Matrix interpret_matrix(const Diagram &d, int width_cap = kDefaultWidthCap);

/// Amplitudes of state_form(d): ports are reversed inputs, then outputs.
Tensor interpret(const Diagram &d, int width_cap = kDefaultWidthCap);

/// Single amplitude of state_form(d).
Complex coefficient(const Diagram &d, const BitWord &alpha, int width_cap = kDefaultWidthCap);

/// Amplitude of a graph form at `alpha`, by matching enumeration.
Complex coefficient(const GraphForm &g, const BitWord &alpha);

/// Total matching weight of a graph form without ports.
Complex scalar_brute(const GraphForm &g);

/// Value of a 0 -> 0 diagram by explicit enumeration of perfect matchings
/// of its graph form. Independent of the dense evaluator.
Complex scalar_brute(const Diagram &d);

}  // namespace pw

#endif
