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

#ifndef PW_LINEAR_FORM_HPP
#define PW_LINEAR_FORM_HPP

#include <vector>

#include "pw/bitword.hpp"
#include "pw/diagram.hpp"
#include "pw/tensor.hpp"

namespace pw {

/// Black vertices on a line with weighted arcs drawn above it.
///
/// Each vertex carries at most one port. A port p with leg weight w and
/// flip bit x marks its vertex as covered when alpha_p xor x = 1. The
/// amplitude is
///
///   scalar * prod_{alpha_p = 1} w_p * Pf(K[uncovered vertices])
///
/// where K is the skew matrix of the arcs in line order and vertices
/// without a port are never covered. Two arcs that interleave on the
/// line cross once, which is exactly the sign an fswap would produce.
struct LinearForm {
    struct Vertex {
        int id = 0;
        int port = -1;  // -1: internal
        bool flip = false;
        Complex leg = 1.0;
        bool internal() const { return port < 0; }
    };
    /// Arc between vertex ids; `a` is not to the right of `b`.
    struct Arc {
        int a, b;
        Complex w;
    };

    std::vector<Vertex> vertices;
    std::vector<Arc> arcs;
    int port_count = 0;
    Complex scalar = 1.0;
    int next_id = 0;

    /// Line position of vertex `id`, or -1.
    int position(int id) const;
    /// Index into `vertices` of the owner of port p.
    int owner(int port) const;
    int add_vertex(int port = -1, bool flip = false, Complex leg = 1.0);
    /// Inserts a vertex at line position `pos`.
    int insert_vertex(size_t pos, int port = -1, bool flip = false, Complex leg = 1.0);
    void add_arc(int a, int b, Complex w);
    void erase_vertex(int id);
    /// Throws Error if ports are not one per vertex in increasing order.
    void check() const;
};

/// Builds the linear form of state_form(d).
LinearForm linearize(const Diagram &d);

/// Amplitude at alpha, one Pfaffian per call.
Complex evaluate(const LinearForm &f, const BitWord &alpha);
/// All amplitudes; intended for at most ~16 ports.
Tensor evaluate_all(const LinearForm &f);

}  // namespace pw

#endif
