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

#include "pw/linear_form.hpp"
#include "pw/oracle.hpp"
#include "support/corpus.hpp"

using namespace pw;

namespace {

void expect_same(const Diagram &d) {
    Tensor want = interpret(d);
    Tensor got = evaluate_all(linearize(d));
    ASSERT_TRUE(got.approx_equal(want, Tolerance{1e-8, 1e-10})) << d.inputs() << "->" << d.outputs();
}

}  // namespace

TEST(linear_form, generators) {
    expect_same(Diagram::black(0, 0));
    expect_same(Diagram::black(1, 0));
    expect_same(Diagram::black(2, 3));
    expect_same(Diagram::white(Complex(2, -1)));
    expect_same(Diagram::white(0));
    expect_same(Diagram::cup());
    expect_same(Diagram::cap());
    expect_same(Diagram::fswap());
    expect_same(Diagram::identity(3));
    expect_same(Diagram::scalar(Complex(0, 3)));
}

TEST(linear_form, small_compositions) {
    Diagram x = Diagram::black(1, 1);
    expect_same(compose(x, x));
    expect_same(compose(Diagram::fswap(), Diagram::fswap()));
    expect_same(tensor(Diagram::white(3), Diagram::cup()));
    expect_same(tensor(Diagram::cap(), Diagram::white(-2)));
    expect_same(compose(Diagram::cap(), tensor(x, Diagram::white(5))));
    expect_same(compose(tensor(Diagram::white(0), Diagram::identity(1)), Diagram::fswap()));
}

TEST(linear_form, random_corpus) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> arity(0, 3);
    for (int trial = 0; trial < 400; trial++) {
        Diagram d = testkit::random_diagram(rng, arity(rng), arity(rng));
        expect_same(d);
    }
}

TEST(linear_form, arcs_point_rightwards) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; trial++) {
        LinearForm f = linearize(testkit::random_diagram(rng, 2, 2));
        EXPECT_NO_THROW(f.check());
    }
}
