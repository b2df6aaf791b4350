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

#ifndef PW_MATCHGATE_HPP
#define PW_MATCHGATE_HPP

#include <map>
#include <optional>
#include <utility>

#include "pw/bitword.hpp"
#include "pw/diagram.hpp"
#include "pw/tensor.hpp"

namespace pw {

struct MgiWitness {
    BitWord alpha;
    BitWord beta;
    Complex value;
};

struct MgiReport {
    bool passed = true;
    /// Largest |identity| / max|G|^2 over all checked pairs.
    double worst_residual = 0.0;
    std::optional<MgiWitness> witness;
};

/// Largest wire count mgi_check accepts.
inline constexpr int kMgiMaxWires = 14;

/// Checks every matchgate identity for pairs alpha < beta. Throws Error
/// beyond kMgiMaxWires wires.
MgiReport mgi_check(const Tensor &g, double tol = 1e-9);

/// True iff all amplitudes of nonnegligible size share one weight parity.
bool parity_check(const Tensor &g, double tol = 1e-9);

/// [f (x) g]_{a1 a2 a3} = f_{a1 a3} g_{a2} where f has a + b wires split
/// as (a, b), g has c + d wires and |a2| = c + d.
Tensor state_tensor_product(const Tensor &f, int a, int b, const Tensor &g, int c, int d);

/// Sums out wires i and i + 1 (1-based) against the cup.
Tensor contract_consecutive(const Tensor &g, int i);

/// State of d1 ; d2 from the states of d1 and d2, where d1 has `shared`
/// outputs and d2 as many inputs.
Tensor compose_states(const Tensor &f, const Tensor &g, int shared);

/// Even-weight tensor with G_0 = 1 whose pair amplitudes G_{e_i + e_j} are
/// the given values. Keys are 1-based (i, j), i < j.
Tensor weight2_reconstruct(int n, const std::map<std::pair<int, int>, Complex> &pairs);

/// Raised by synthesize when the tensor fails the identities.
class MgiFailure : public Error {
   public:
    MgiFailure(const MgiReport &report);
    MgiReport report;
};

/// A diagram 0 -> n whose semantics is g. Throws MgiFailure when g is not
/// a matchgate.
Diagram synthesize(const Tensor &g, double tol = 1e-9);

}  // namespace pw

#endif
