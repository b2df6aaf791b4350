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

#ifndef PW_PLANE_GRAPH_HPP
#define PW_PLANE_GRAPH_HPP

#include <string>
#include <vector>

#include "pw/bitword.hpp"
#include "pw/diagram.hpp"

namespace pw {

enum class NodeKind { Black, White, FSwap };

/// Node of an open plane graph. `rotation` lists its half-edges
/// counter-clockwise, starting from the leftmost input.
struct PlaneNode {
    NodeKind kind = NodeKind::Black;
    Complex weight = 1.0;
    std::vector<int> rotation;
};

/// Graph of a diagram with its planar embedding. Every half-edge has a
/// twin; half-edges owned by node -1 are boundary ports.
struct OpenPlaneGraph {
    std::vector<PlaneNode> nodes;
    std::vector<int> half_node;
    std::vector<int> twin;
    /// Port half-edges in state order: reversed inputs, then outputs.
    std::vector<int> ports;
    int inputs = 0;
    int outputs = 0;
    /// Closed wires that meet no node.
    int free_loops = 0;
    Complex scalar = 1.0;
};

OpenPlaneGraph to_open_plane_graph(const Diagram &d);

/// Weighted perfect-matching form. Vertices are black nodes; a port that
/// carries 1 covers its vertex and contributes the leg weight.
struct GraphForm {
    struct Edge {
        int u, v;
        Complex w;
    };
    struct Leg {
        int vertex, port;
        Complex w;
    };
    /// Port-to-port wire: both bits must agree, weight applies at 1.
    struct Wire {
        int a, b;
        Complex w;
    };
    struct Slot {
        bool is_leg;
        int index;
        bool operator==(const Slot &) const = default;
    };

    int vertex_count = 0;
    int port_count = 0;
    std::vector<Edge> edges;
    std::vector<Leg> legs;
    std::vector<Wire> wires;
    /// Each closed loop multiplies the value by (1 + w).
    std::vector<Complex> loops;
    Complex scalar = 1.0;
    /// Counter-clockwise incidence order per vertex.
    std::vector<std::vector<Slot>> rotation;
};

/// Expands fswaps into a planar gadget, folds white nodes into edge weights,
/// merges parallel edges and drops self-loops and zero edges.
GraphForm to_graph_form(const OpenPlaneGraph &g);
GraphForm to_graph_form(const Diagram &d);

/// Amplitude at `alpha` by explicit enumeration of perfect matchings.
Complex graph_coefficient(const GraphForm &g, const BitWord &alpha);

/// Graphviz rendering of an open plane graph.
std::string to_dot(const OpenPlaneGraph &g);

}  // namespace pw

#endif
