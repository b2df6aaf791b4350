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

#include <gtest/gtest.h>

#include <random>

#include "pw/oracle.hpp"
#include "pw/plane_graph.hpp"
#include "support/corpus.hpp"

using namespace pw;

TEST(plane_graph, parallel_edges_merge) {
    Diagram d = compose(Diagram::black(0, 2),
                        compose(tensor(Diagram::white(2), Diagram::white(-1)), Diagram::black(2, 0)));
    GraphForm g = to_graph_form(d);
    EXPECT_EQ(g.vertex_count, 2);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0].w, Complex(1.0));
    EXPECT_EQ(g.scalar, Complex(1.0));
    EXPECT_EQ(scalar_brute(g), Complex(1.0));
}

TEST(plane_graph, identity_is_a_wire) {
    GraphForm g = to_graph_form(Diagram::identity(1));
    EXPECT_EQ(g.vertex_count, 0);
    ASSERT_EQ(g.wires.size(), 1u);
    EXPECT_EQ(g.wires[0].w, Complex(1.0));
}

TEST(plane_graph, closed_loop_factor) {
    GraphForm g = to_graph_form(compose(Diagram::cap(), Diagram::cup()));
    ASSERT_EQ(g.loops.size(), 1u);
    EXPECT_EQ(scalar_brute(g), Complex(2.0));
    GraphForm w = to_graph_form(compose(Diagram::cap(), compose(tensor(Diagram::white(3), Diagram::identity(1)),
                                                                Diagram::cup())));
    ASSERT_EQ(w.loops.size(), 1u);
    EXPECT_EQ(scalar_brute(w), Complex(4.0));
}

TEST(plane_graph, self_loops_dropped) {
    Diagram d = compose(Diagram::black(1, 3), tensor(Diagram::identity(1), Diagram::cup()));
    GraphForm g = to_graph_form(d);
    EXPECT_TRUE(g.edges.empty());
    EXPECT_EQ(g.legs.size(), 2u);
}

TEST(plane_graph, every_port_appears_once) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; trial++) {
        Diagram d = testkit::random_diagram(rng, trial % 4, (trial / 4) % 4);
        GraphForm g = to_graph_form(d);
        std::vector<int> seen(g.port_count, 0);
        for (const auto &l : g.legs) {
            seen[l.port]++;
        }
        for (const auto &w : g.wires) {
            seen[w.a]++;
            seen[w.b]++;
        }
        for (int s : seen) {
            ASSERT_EQ(s, 1);
        }
        for (const auto &e : g.edges) {
            ASSERT_NE(e.u, e.v);
            ASSERT_NE(e.w, Complex(0.0));
        }
    }
}

TEST(plane_graph, merging_preserves_matching_sum) {
    // Three parallel edges and a self-loop, against the unmerged sum.
    Diagram d = compose(Diagram::black(0, 3), compose(tensor_all({Diagram::white(2), Diagram::white(Complex(0, 1)),
                                                                  Diagram::white(-5)}),
                                                      Diagram::black(3, 0)));
    GraphForm g = to_graph_form(d);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0].w, Complex(-3, 1));
    EXPECT_EQ(scalar_brute(g), interpret(d).amps[0]);
}

TEST(plane_graph, dot_export) {
    std::string dot = to_dot(to_open_plane_graph(compose(Diagram::white(2), Diagram::x())));
    EXPECT_NE(dot.find("graph pw"), std::string::npos);
    EXPECT_NE(dot.find("fillcolor=black"), std::string::npos);
    EXPECT_NE(dot.find("label=\"2\""), std::string::npos);
    std::string f = to_dot(to_open_plane_graph(Diagram::fswap()));
    EXPECT_NE(f.find("diamond"), std::string::npos);
}

TEST(plane_graph, rotation_covers_every_incidence) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; trial++) {
        GraphForm g = to_graph_form(testkit::random_diagram(rng, 0, 2));
        std::vector<int> deg(g.vertex_count, 0);
        for (const auto &e : g.edges) {
            deg[e.u]++;
            deg[e.v]++;
        }
        for (const auto &l : g.legs) {
            deg[l.vertex]++;
        }
        for (int v = 0; v < g.vertex_count; v++) {
            ASSERT_EQ(static_cast<int>(g.rotation[v].size()), deg[v]);
        }
    }
}
