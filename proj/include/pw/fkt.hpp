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

#ifndef PW_FKT_HPP
#define PW_FKT_HPP

#include <optional>
#include <string>
#include <vector>

#include "pw/common.hpp"
#include "pw/diagram.hpp"
#include "pw/plane_graph.hpp"

namespace pw {

/// phase * 10^log10_magnitude, with phase of unit modulus or exactly zero.
class LogComplex {
   public:
    LogComplex() = default;  // exact zero
    static LogComplex one() { return from(1.0); }
    static LogComplex from(Complex z);

    bool is_zero() const { return phase_ == 0.0; }
    Complex phase() const { return phase_; }
    double log10_magnitude() const { return log10_; }

    LogComplex operator*(const LogComplex &o) const;
    LogComplex &operator*=(const LogComplex &o) { return *this = *this * o; }
    /// May overflow to infinity or underflow to zero for extreme exponents.
    Complex to_complex() const;

    /// "<re>+<im>i x10^<k>", or the plain value when |k| <= 15.
    std::string str() const;

   private:
    Complex phase_ = 0.0;
    double log10_ = 0.0;
};

struct WeightedPlaneGraph {
    struct Edge {
        int u, v;
        Complex w;
    };
    int vertex_count = 0;
    std::vector<Edge> edges;
    /// Counter-clockwise edge ids per vertex; a self-loop appears twice.
    std::vector<std::vector<int>> rotation;
    /// Outer face given by a directed edge side (edge id, tail vertex).
    std::optional<std::pair<int, int>> outer;
};

/// Directed edge sides ("darts") are numbered 2e (u to v) and 2e+1 (v to u).
struct Faces {
    std::vector<std::vector<int>> cycles;  // darts, each face on its left
    std::vector<int> face_of_dart;
    /// Outer face per connected component that has edges.
    std::vector<int> outer;
};

/// Traces every face of the combinatorial map. Throws Error if the
/// rotation system is invalid or fails the Euler check.
Faces faces(const WeightedPlaneGraph &g);

/// Direction bit per edge: true means the edge points from u to v.
using Orientation = std::vector<bool>;

/// Pfaffian orientation: spanning-tree edges first, the rest in dual-tree
/// order so every bounded face has an odd clockwise count.
Orientation pfaffian_orientation(const WeightedPlaneGraph &g);

/// Counts edges on face `f` that run clockwise, i.e. against the traversal.
int clockwise_count(const WeightedPlaneGraph &g, const Faces &fs, const Orientation &o, int f);

struct SkewMatrix {
    int n = 0;
    std::vector<Complex> a;  // row-major n x n
    explicit SkewMatrix(int size = 0) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}
    Complex operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    /// Sets A_ij = w and A_ji = -w.
    void set(int i, int j, Complex w);
};

SkewMatrix tutte_matrix(const WeightedPlaneGraph &g, const Orientation &o, bool unit_weights = false);

/// Pfaffian by skew elimination with row pivoting. Odd size gives 0.
LogComplex pfaffian(SkewMatrix m);

/// Total weight of perfect matchings of a planar embedded graph.
LogComplex matching_weight_fkt(const WeightedPlaneGraph &g);

/// Sum over perfect matchings by exhaustive search. Exponential time.
Complex matching_weight_brute(const WeightedPlaneGraph &g);

/// Plane graph of a graph form without legs or wires.
WeightedPlaneGraph to_weighted_plane_graph(const GraphForm &g);

/// Value of a 0 -> 0 diagram in polynomial time.
LogComplex scalar_eval_fkt(const Diagram &d);

}  // namespace pw

#endif
