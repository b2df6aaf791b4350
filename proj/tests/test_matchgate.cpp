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

#include "pw/matchgate.hpp"
#include "pw/oracle.hpp"
#include "pw/rewrite.hpp"
#include "support/corpus.hpp"

using namespace pw;

namespace {

const Tolerance kTight{1e-9, 1e-10};

Tensor from_amps(int n, std::vector<Complex> amps) {
    Tensor t(n);
    t.amps = std::move(amps);
    return t;
}

Tensor state_of(const Diagram &d) { return interpret(state_form(d)); }

// The plain (non-fermionic) swap as a 4-wire state.
Tensor swap_state() {
    Matrix m(2, 2);
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            m.at(y * 2 + x, x * 2 + y) = 1.0;
        }
    }
    return matrix_to_state(m);
}

}  // namespace

TEST(mgi, small_examples) {
    EXPECT_TRUE(mgi_check(from_amps(2, {1, 0, 0, 1})).passed);
    EXPECT_TRUE(mgi_check(from_amps(0, {3})).passed);
    MgiReport swap = mgi_check(swap_state());
    EXPECT_FALSE(swap.passed);
    ASSERT_TRUE(swap.witness.has_value());
    EXPECT_GT(std::abs(swap.witness->value), 1e-3);
    EXPECT_THROW(mgi_check(Tensor(15)), Error);
}

TEST(mgi, fermionic_swap_passes) { EXPECT_TRUE(mgi_check(state_of(Diagram::fswap())).passed); }

TEST(parity, examples) {
    EXPECT_TRUE(parity_check(from_amps(2, {0, 1, 1, 0})));
    EXPECT_FALSE(parity_check(from_amps(2, {1, 1, 0, 0})));
}

TEST(mgi, terms_factor_through_matchgates) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> arity(0, 4);
    for (int trial = 0; trial < 200; trial++) {
        Diagram d = testkit::random_diagram(rng, arity(rng), arity(rng));
        Tensor g = state_of(d);
        MgiReport r = mgi_check(g);
        ASSERT_TRUE(r.passed) << r.worst_residual;
        ASSERT_TRUE(parity_check(g));
    }
}

TEST(mgi, state_form_matches_interpret) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; trial++) {
        Diagram d = testkit::random_diagram(rng, 2, 1);
        EXPECT_TRUE(state_of(d).approx_equal(interpret(d), kTight));
    }
}

TEST(mgi, parity_equivalent_up_to_three_wires) {
    std::mt19937_64 rng(44);
    std::normal_distribution<double> z;
    std::bernoulli_distribution coin(0.5);
    for (int n = 0; n <= 3; n++) {
        for (int trial = 0; trial < 200; trial++) {
            Tensor t(n);
            bool mixed = coin(rng);
            int parity = static_cast<int>(rng() % 2);
            for (uint64_t a = 0; a < t.amps.size(); a++) {
                if (mixed || std::popcount(a) % 2 == parity) {
                    t.amps[a] = Complex(z(rng), z(rng));
                }
            }
            EXPECT_EQ(parity_check(t), mgi_check(t).passed) << n;
        }
    }
    // Four wires: even support, fails the identities.
    Tensor four = from_amps(4, std::vector<Complex>(16, 0.0));
    four.amps[0] = 1.0;
    four.amps[15] = 1.0;
    EXPECT_TRUE(parity_check(four));
    EXPECT_FALSE(mgi_check(four).passed);
}

TEST(products, tensor_product_index_law) {
    Tensor cap = from_amps(2, {1, 0, 0, 1});
    Tensor nested = state_tensor_product(cap, 1, 1, cap, 0, 2);
    EXPECT_TRUE(nested.approx_equal(interpret(nested_caps(2)), kTight));
    Tensor unit = from_amps(0, {1});
    EXPECT_TRUE(state_tensor_product(cap, 2, 0, unit, 0, 0).approx_equal(cap, kTight));
    EXPECT_THROW(state_tensor_product(cap, 1, 0, cap, 0, 2), Error);

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; trial++) {
        Diagram f = testkit::random_diagram(rng, 1, 2), g = testkit::random_diagram(rng, 1, 1);
        Tensor p = state_tensor_product(state_of(f), 1, 2, state_of(g), 1, 1);
        EXPECT_TRUE(p.approx_equal(state_of(tensor(g, f)), kTight));
        EXPECT_TRUE(mgi_check(p).passed);
    }
}

TEST(products, contraction) {
    Tensor c = contract_consecutive(from_amps(2, {1, 0, 0, 1}), 1);
    EXPECT_EQ(c.wires, 0);
    EXPECT_EQ(c.amps[0], Complex(2.0));
    EXPECT_EQ(contract_consecutive(from_amps(2, {0, 1, 1, 0}), 1).amps[0], Complex(0.0));
    EXPECT_THROW(contract_consecutive(from_amps(2, {0, 1, 1, 0}), 2), Error);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; trial++) {
        Tensor g = state_of(testkit::random_diagram(rng, 2, 3));
        int i = 1 + static_cast<int>(rng() % 4);
        EXPECT_TRUE(mgi_check(contract_consecutive(g, i)).passed);
    }
}

TEST(products, compose_states_agrees_with_terms) {
    Tensor xs = state_of(Diagram::x());
    EXPECT_TRUE(compose_states(xs, xs, 1).approx_equal(state_of(Diagram::identity(1)), kTight));
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 50; trial++) {
        int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3), c = static_cast<int>(rng() % 3);
        Diagram d1 = testkit::random_diagram(rng, a, b), d2 = testkit::random_diagram(rng, b, c);
        Tensor got = compose_states(state_of(d1), state_of(d2), b);
        EXPECT_TRUE(got.approx_equal(state_of(compose(d1, d2)), kTight));
        Tensor ident = state_of(Diagram::identity(a));
        EXPECT_TRUE(compose_states(ident, state_of(d1), a).approx_equal(state_of(d1), kTight));
    }
}

TEST(weight2, base_and_pfaffian) {
    Tensor two = weight2_reconstruct(2, {{{1, 2}, Complex(0, 3)}});
    EXPECT_TRUE(two.approx_equal(from_amps(2, {1, 0, 0, Complex(0, 3)}), kTight));
    Complex w12(1, 1), w13(2, 0), w14(0, -1), w23(3, 1), w24(-1, 2), w34(0.5, 0.5);
    Tensor four = weight2_reconstruct(4, {{{1, 2}, w12}, {{1, 3}, w13}, {{1, 4}, w14}, {{2, 3}, w23}, {{2, 4}, w24}, {{3, 4}, w34}});
    EXPECT_NEAR(std::abs(four.amps[15] - (w12 * w34 - w13 * w24 + w14 * w23)), 0.0, 1e-12);
}

TEST(weight2, reconstructs_graph_states) {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 100; trial++) {
        int n = 1 + trial % 6;
        WGSX w;
        w.n = n;
        w.b = BitWord(n);
        std::map<std::pair<int, int>, Complex> pairs;
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                if (rng() % 3) {
                    w.edges[{i, j}] = pairs[{i + 1, j + 1}] = Complex(u(rng), u(rng));
                }
            }
        }
        Tensor want = evaluate_all(to_linear_form(w));
        EXPECT_TRUE(weight2_reconstruct(n, pairs).approx_equal(want, kTight));
    }
}

TEST(synthesize, round_trips) {
    Tensor edge = from_amps(2, {1, 0, 0, Complex(2, -1)});
    EXPECT_TRUE(interpret(synthesize(edge)).approx_equal(edge, kTight));
    Tensor zero(3);
    EXPECT_EQ(interpret(synthesize(zero)).max_abs(), 0.0);
    EXPECT_THROW(synthesize(swap_state()), MgiFailure);

    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> arity(0, 3);
    int shifted = 0;
    for (int trial = 0; trial < 200; trial++) {
        Tensor g = state_of(testkit::random_diagram(rng, arity(rng), arity(rng)));
        shifted += g.amps.empty() || std::abs(g.amps[0]) < 1e-9;
        ASSERT_TRUE(interpret(synthesize(g)).approx_equal(g, kTight));
    }
    EXPECT_GT(shifted, 0);
}
