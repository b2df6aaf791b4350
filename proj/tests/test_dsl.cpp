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

#include "pw/dsl.hpp"
#include "pw/oracle.hpp"
#include "support/corpus.hpp"

using namespace pw;

TEST(dsl, parse_snake) {
    Diagram d = parse_diagram("pw 1 -> 1 { cap, id; id, cup }");
    EXPECT_EQ(d.inputs(), 1);
    EXPECT_TRUE(interpret(d).approx_equal(interpret(Diagram::identity(1)), Tolerance{}));
}

TEST(dsl, parse_scalar_example) {
    Diagram d = parse_diagram("pw 0 -> 0 { black(0,2); white(2), white(-1); black(2,0) }");
    EXPECT_EQ(interpret(d).amps[0], Complex(1.0));
}

TEST(dsl, parse_complex_weight) {
    Diagram d = parse_diagram("pw 1 -> 1 { white(0.5-0.5i) }");
    EXPECT_EQ(d, Diagram::white(Complex(0.5, -0.5)));
    EXPECT_EQ(parse_complex("2i"), Complex(0, 2));
    EXPECT_EQ(parse_complex("-3"), Complex(-3, 0));
    EXPECT_EQ(parse_complex("1e-3+2.5i"), Complex(1e-3, 2.5));
    EXPECT_EQ(parse_complex("-.5-1i"), Complex(-0.5, -1));
    EXPECT_THROW(parse_complex("1+"), ParseError);
}

TEST(dsl, comments_and_whitespace) {
    Diagram d = parse_diagram("# header\npw 2->2{\n  fswap # swap\n; id , x }\n");
    EXPECT_EQ(d.inputs(), 2);
    EXPECT_EQ(d.outputs(), 2);
}

TEST(dsl, print_examples) {
    EXPECT_EQ(print_diagram(parse_diagram("pw 1->1 { x }")), "pw 1 -> 1 { x }");
    EXPECT_EQ(print_diagram(Diagram::white(1)), "pw 1 -> 1 { white(1) }");
    EXPECT_EQ(print_diagram(Diagram::identity(0)), "pw 0 -> 0 { id(0) }");
    EXPECT_EQ(print_diagram(tensor(Diagram::ket1(), compose(Diagram::x(), Diagram::white(Complex(0, 2))))),
              "pw 1 -> 2 { ket1, x; id, white(2i) }");
}

TEST(dsl, syntax_errors_carry_spans) {
    try {
        parse_diagram("pw 1 -> 1 {\n  x,\n  bogus }");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.span().line, 3u);
        EXPECT_EQ(e.span().column, 3u);
        EXPECT_FALSE(e.expected().empty());
    }
    try {
        parse_diagram("pw 1 -> 1 { x");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.span().line, 1u);
        EXPECT_NE(e.message().find("end of input"), std::string::npos);
    }
    EXPECT_THROW(parse_diagram("pw 1 -> 1 { x $ }"), ParseError);
}

TEST(dsl, arity_errors_name_rows) {
    try {
        parse_diagram("pw 1 -> 1 { x; cup }");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(e.message().find("row 1"), std::string::npos);
        EXPECT_NE(e.message().find("row 2"), std::string::npos);
        EXPECT_EQ(e.span().column, 16u);
    }
    EXPECT_THROW(parse_diagram("pw 2 -> 1 { x }"), ParseError);
}

TEST(dsl, round_trip_random_terms) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; trial++) {
        Diagram d = testkit::random_diagram(rng, trial % 3, (trial / 3) % 3);
        std::string text = print_diagram(d);
        Diagram back = parse_diagram(text);
        ASSERT_EQ(back, row_normal_form(d)) << text;
        ASSERT_EQ(print_diagram(back), text);
        Tensor a = interpret(d), b = interpret(back);
        for (size_t i = 0; i < a.amps.size(); i++) {
            ASSERT_EQ(a.amps[i], b.amps[i]) << text;
        }
    }
}

TEST(dsl, exact_weights_round_trip) {
    Diagram d = Diagram::white(Complex(0.1, 1.0 / 3.0));
    EXPECT_EQ(parse_diagram(print_diagram(d)), d);
}

TEST(dsl, tensor_examples) {
    Tensor cap = parse_tensor(R"({"wires":2,"amplitudes":[[1,0],[0,0],[0,0],[1,0]]})");
    EXPECT_TRUE(cap.approx_equal(interpret(Diagram::cap()), Tolerance{}));
    Tensor zero = parse_tensor(R"({"wires":0,"amplitudes":[[0,0]]})");
    EXPECT_EQ(zero.wires, 0);
    EXPECT_EQ(zero.amps[0], Complex(0.0));
    EXPECT_THROW(parse_tensor(R"({"wires":2,"amplitudes":[[1,0]]})"), ParseError);
    EXPECT_THROW(parse_tensor(R"({"wires":1,"amplitudes":[[1,0],[1]]})"), ParseError);
    try {
        parse_tensor("{\"wires\": 1,\n \"amplitudes\": [oops]}");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.span().line, 2u);
    }
}

TEST(dsl, tensor_round_trip) {
    std::mt19937_64 rng(32);
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 100; trial++) {
        Tensor t(trial % 5);
        for (Complex &z : t.amps) {
            z = Complex(nd(rng), nd(rng));
        }
        Tensor back = parse_tensor(print_tensor(t));
        ASSERT_EQ(back.wires, t.wires);
        ASSERT_EQ(back.amps, t.amps);
    }
}

TEST(dsl, plane_graph_examples) {
    const char *square = R"(
v a
v b
v c
v d
e ab a b 1
e bc b c 1
e cd c d 1
e da d a 1
rot a ab da
rot b bc ab
rot c cd bc
rot d da cd
)";
    WeightedPlaneGraph g = parse_plane_graph(square);
    EXPECT_EQ(g.vertex_count, 4);
    EXPECT_EQ(faces(g).cycles.size(), 2u);
    EXPECT_EQ(matching_weight_fkt(g).to_complex(), Complex(2.0));

    WeightedPlaneGraph tri = parse_plane_graph(
        "v 1\nv 2\nv 3\ne x 1 2 1\ne y 2 3 1\ne z 3 1 1\nrot 1 x z\nrot 2 y x\nrot 3 z y\n");
    EXPECT_TRUE(matching_weight_fkt(tri).is_zero());

    try {
        parse_plane_graph("v a\ne ab a q 1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(e.message().find("'q'"), std::string::npos);
        EXPECT_EQ(e.span().line, 2u);
        EXPECT_EQ(e.span().column, 8u);
    }
    EXPECT_THROW(parse_plane_graph("v a\nv a\n"), ParseError);
    EXPECT_THROW(parse_plane_graph("v a\nv b\ne ab a b 1\nrot a ab\n"), ParseError);
    EXPECT_THROW(parse_plane_graph("v a\nv b\ne ab a b 1\nrot a ab ab\nrot b ab\n"), ParseError);
}

TEST(dsl, plane_graph_round_trip) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; trial++) {
        WeightedPlaneGraph g = testkit::random_planar_graph(rng, 3, 4, 0.8, 0.3, true);
        if (trial % 3 == 0 && !g.edges.empty()) {
            g.outer = std::make_pair(0, g.edges[0].u);
        }
        std::string text = print_plane_graph(g);
        WeightedPlaneGraph back = parse_plane_graph(text);
        ASSERT_EQ(back.vertex_count, g.vertex_count);
        ASSERT_EQ(back.rotation, g.rotation);
        ASSERT_EQ(back.outer, g.outer);
        ASSERT_EQ(back.edges.size(), g.edges.size());
        for (size_t e = 0; e < g.edges.size(); e++) {
            ASSERT_EQ(back.edges[e].u, g.edges[e].u);
            ASSERT_EQ(back.edges[e].v, g.edges[e].v);
            ASSERT_EQ(back.edges[e].w, g.edges[e].w);
        }
        ASSERT_EQ(print_plane_graph(back), text);
    }
}
