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

#include "pw/axioms.hpp"
#include "pw/oracle.hpp"
#include "pw/rewrite.hpp"
#include "support/corpus.hpp"
#include "support/rewrites.hpp"

using namespace pw;

namespace {

const Tolerance kTight{1e-9, 1e-10};

WGSX random_wgsx(std::mt19937_64 &rng, int n, bool reduced) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::bernoulli_distribution coin(0.5);
    WGSX w;
    w.s = Complex(u(rng), u(rng));
    w.n = n;
    w.b = BitWord(n);
    for (int i = 0; i < n; i++) {
        w.b.set(i, coin(rng));
    }
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (coin(rng) && (!reduced || w.b[i])) {
                w.edges[{i, j}] = Complex(u(rng), u(rng));
            }
        }
    }
    return w;
}

Tensor wgsx_tensor(const WGSX &w) { return evaluate_all(to_linear_form(w)); }

}  // namespace

TEST(wgsx, diagram_matches_amplitudes) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; trial++) {
        WGSX w = random_wgsx(rng, 1 + trial % 6, false);
        Tensor want = wgsx_tensor(w);
        Tensor got = interpret(wgsx_to_diagram(w));
        ASSERT_TRUE(got.approx_equal(want, kTight)) << w.str();
    }
}

TEST(wgsx, single_vertex_and_zero) {
    WGSX one;
    one.n = 1;
    one.b = BitWord::from_string("1");
    Tensor t = interpret(wgsx_to_diagram(one));
    EXPECT_NEAR(std::abs(t.amps[0]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t.amps[1] - 1.0), 0.0, 1e-12);
    Tensor z = interpret(wgsx_to_diagram(WGSX::zero(3)));
    EXPECT_EQ(z.max_abs(), 0.0);
}

TEST(wgsx, single_edge_ratio) {
    WGSX w;
    w.n = 2;
    w.b = BitWord::from_string("11");
    w.edges[{0, 1}] = Complex(0.5, 2);
    Tensor t = interpret(wgsx_to_diagram(w));
    // b = 11 puts the empty matching on |11> and the edge on |00>.
    Complex ratio = t.amps[0] / t.amps[3];
    EXPECT_NEAR(std::abs(ratio - Complex(0.5, 2)), 0.0, 1e-12);
}

TEST(wgsx, remove_vertex_postselects) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; trial++) {
        int n = 1 + trial % 6;
        WGSX w = random_wgsx(rng, n, false);
        int i = 1 + static_cast<int>(rng() % n);
        WGSX r = remove_vertex(w, i);
        Tensor full = wgsx_tensor(w), part = wgsx_tensor(r);
        for (uint64_t a = 0; a < part.amps.size(); a++) {
            BitWord rest = BitWord::from_index(a, n - 1);
            BitWord alpha(n);
            for (int k = 0, t = 0; k < n; k++) {
                alpha.set(k, k == i - 1 ? w.b[k] : rest[t++]);
            }
            ASSERT_NEAR(std::abs(full[alpha] - part.amps[a]), 0.0, 1e-9);
        }
    }
    EXPECT_THROW(remove_vertex(WGSX::zero(2), 3), Error);
}

TEST(normalize, round_trip_and_reduced) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> arity(0, 3);
    for (int trial = 0; trial < 300; trial++) {
        Diagram d = testkit::random_diagram(rng, arity(rng), arity(rng));
        NormalizeResult res = normalize_traced(d);
        ASSERT_TRUE(res.form.reduced()) << res.form.str();
        Tensor want = interpret(d);
        Tensor got = interpret(wgsx_to_diagram(res.form));
        ASSERT_TRUE(got.approx_equal(want, kTight)) << res.form.str();
        for (size_t k = 1; k < res.measures.size(); k++) {
            ASSERT_LT(res.measures[k], res.measures[k - 1]);
        }
    }
}

TEST(axioms, equations_hold) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2, 2);
    for (RuleId rule : all_rules()) {
        if (!has_equation(rule)) {
            continue;
        }
        for (int trial = 0; trial < 12; trial++) {
            RuleParams p{trial % 4, (trial / 4) % 3, Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
            Equation eq = rule_equation(rule, p);
            ASSERT_EQ(eq.lhs.inputs(), eq.rhs.inputs()) << rule_name(rule);
            ASSERT_EQ(eq.lhs.outputs(), eq.rhs.outputs()) << rule_name(rule);
            ASSERT_TRUE(interpret(eq.lhs).approx_equal(interpret(eq.rhs), kTight)) << rule_name(rule);
        }
    }
}

TEST(equal, rewritten_pairs_agree) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> arity(0, 3), steps(1, 30);
    for (int trial = 0; trial < 100; trial++) {
        Diagram d = testkit::random_diagram(rng, arity(rng), arity(rng));
        Diagram e = d;
        for (int k = steps(rng); k > 0; k--) {
            e = testkit::random_sound_rewrite(e, rng);
        }
        ASSERT_TRUE(interpret(d).approx_equal(interpret(e), kTight));
        WGSX a = normalize(d), b = normalize(e);
        ASSERT_TRUE(equal(a, b)) << a.str() << "\n" << b.str();
    }
}

TEST(rules, linear_form_rules_are_sound) {
    std::mt19937_64 rng(12);
    std::map<RuleId, int> hits;
    for (int trial = 0; trial < 300; trial++) {
        LinearForm f = testkit::random_linear_host(rng);
        Tensor before = evaluate_all(f);
        for (RuleId rule : all_rules()) {
            for (const Redex &r : find_redexes(f, rule)) {
                LinearForm g = apply_rule(f, r);
                ASSERT_TRUE(evaluate_all(g).approx_equal(before, kTight)) << rule_name(rule);
                hits[rule]++;
            }
        }
    }
    for (RuleId rule : {RuleId::SumR, RuleId::WLoopR, RuleId::ZeroEdge, RuleId::BinaryWR, RuleId::Fusion0R,
                        RuleId::FusionR, RuleId::Pivot, RuleId::PhaseDistrib}) {
        EXPECT_GT(hits[rule], 0) << rule_name(rule);
    }
}

TEST(rules, reduction_rules_are_sound) {
    std::mt19937_64 rng(13);
    std::map<RuleId, int> hits;
    for (int trial = 0; trial < 300; trial++) {
        LinearForm f = to_linear_form(random_wgsx(rng, 2 + trial % 5, false));
        Tensor before = evaluate_all(f);
        for (RuleId rule : {RuleId::Reduce1, RuleId::Reduce2, RuleId::Reduce3, RuleId::Reduce4}) {
            for (const Redex &r : find_redexes(f, rule)) {
                ASSERT_TRUE(evaluate_all(apply_rule(f, r)).approx_equal(before, kTight)) << rule_name(rule);
                hits[rule]++;
            }
        }
    }
    for (RuleId rule : {RuleId::Reduce1, RuleId::Reduce2, RuleId::Reduce3, RuleId::Reduce4}) {
        EXPECT_GT(hits[rule], 0) << rule_name(rule);
    }
}

TEST(normalize, named_states) {
    WGSX one = normalize(Diagram::ket1());
    EXPECT_EQ(one.str(), "s=1; n=1; edges=; b=1");
    WGSX zero_ket = normalize(Diagram::ket0());
    EXPECT_EQ(zero_ket.str(), "s=1; n=1; edges=; b=0");
    WGSX cap = normalize(Diagram::cap());
    EXPECT_EQ(cap.n, 2);
    ASSERT_EQ(cap.edges.size(), 1u);
    EXPECT_TRUE(interpret(wgsx_to_diagram(cap)).approx_equal(interpret(Diagram::cap()), kTight));
    WGSX dead = normalize(compose(Diagram::ket1(), compose(Diagram::x(), Diagram::bra1())));
    EXPECT_EQ(dead.str(), "s=0; n=0; edges=; b=");
    WGSX dead2 = normalize(compose(Diagram::ket1(), Diagram::x()));
    EXPECT_NE(dead2.s, 0.0);
    WGSX z = normalize(tensor(Diagram::scalar(0.0), Diagram::cap()));
    EXPECT_EQ(z.str(), "s=0; n=2; edges=; b=00");
}

TEST(equal, examples) {
    Diagram snake = compose(tensor(Diagram::identity(1), Diagram::cap()), tensor(Diagram::cup(), Diagram::identity(1)));
    EXPECT_TRUE(equal(snake, Diagram::identity(1)));
    EXPECT_TRUE(equal(Diagram::white(1.0), Diagram::identity(1)));
    EXPECT_FALSE(equal(Diagram::ket0(), Diagram::ket1()));
    EXPECT_THROW(equal(Diagram::ket0(), Diagram::identity(1)), Error);
}

TEST(equal, distinct_pairs_differ) {
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<int> arity(0, 3);
    int checked = 0;
    while (checked < 100) {
        int a = arity(rng), b = arity(rng);
        Diagram d = testkit::random_diagram(rng, a, b), e = testkit::random_diagram(rng, a, b);
        if (interpret(d).approx_equal(interpret(e), Tolerance{1e-6, 1e-6})) {
            continue;
        }
        ASSERT_FALSE(equal(d, e));
        checked++;
    }
}

TEST(normalize, zero_iff_zero_scalar) {
    std::mt19937_64 rng(17);
    testkit::CorpusOptions opt;
    for (int trial = 0; trial < 200; trial++) {
        Diagram d = testkit::random_diagram(rng, trial % 3, (trial / 3) % 3, opt);
        bool zero = interpret(d).max_abs() < 1e-9;
        EXPECT_EQ(zero, normalize(d).s == 0.0);
    }
}

TEST(redexes, examples) {
    LinearForm f;
    int a = f.add_vertex(), b = f.add_vertex(0);
    f.add_arc(a, b, 2.0);
    f.add_arc(a, b, -1.0);
    f.port_count = 1;
    auto sums = find_redexes(f, RuleId::SumR);
    ASSERT_EQ(sums.size(), 1u);
    LinearForm g = apply_rule(f, sums[0]);
    ASSERT_EQ(g.arcs.size(), 1u);
    EXPECT_EQ(g.arcs[0].w, Complex(1.0));
    EXPECT_THROW(apply_rule(g, sums[0]), Error);

    LinearForm lone;
    lone.add_vertex();
    auto zeros = find_redexes(lone, RuleId::ZeroR);
    ASSERT_EQ(zeros.size(), 1u);
    EXPECT_EQ(apply_rule(lone, zeros[0]).scalar, Complex(0.0));

    LinearForm empty;
    for (RuleId rule : all_rules()) {
        EXPECT_TRUE(find_redexes(empty, rule).empty());
        EXPECT_TRUE(find_term_redexes(Diagram::identity(0), rule).empty());
    }
    EXPECT_EQ(measure(empty).str(), "(0,0,0,0,0,0)");
}

TEST(redexes, term_rules) {
    Diagram d = compose(Diagram::black(2, 1), Diagram::white(1.0));
    auto found = find_term_redexes(d, RuleId::ZBinary);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].path, std::vector<int>{1});
    EXPECT_TRUE(interpret(apply_term_rule(d, found[0])).approx_equal(interpret(d), kTight));
    Diagram fused = compose(compose(Diagram::black(2, 1), Diagram::x()), Diagram::black(1, 2));
    auto f2 = find_term_redexes(fused, RuleId::WSpiderFusion);
    ASSERT_EQ(f2.size(), 1u);
    Diagram r = apply_term_rule(fused, f2[0]);
    EXPECT_EQ(r.op(), Diagram::Op::Leaf);
    EXPECT_TRUE(interpret(r).approx_equal(interpret(fused), kTight));
    EXPECT_THROW(apply_term_rule(d, TermRedex{RuleId::FswapRemoval, {}}), Error);
}

TEST(trace, lines_and_names) {
    NormalizeResult res = normalize_traced(Diagram::cap());
    for (const TraceStep &s : res.trace) {
        EXPECT_EQ(s.str().rfind("step " + std::to_string(s.step) + " rule=", 0), 0u);
    }
    for (RuleId rule : all_rules()) {
        EXPECT_EQ(rule_from_name(rule_name(rule)), rule);
    }
    EXPECT_FALSE(rule_from_name("nope"));
}

TEST(classes, fusion_and_node_classes) {
    LinearForm f = linearize(compose(Diagram::black(0, 3), tensor(Diagram::identity(2), Diagram::x())));
    auto classes = fusion_classes(f);
    EXPECT_FALSE(classes.empty());
    auto kinds = classify(f);
    EXPECT_EQ(kinds.size(), f.vertices.size());
    EXPECT_NE(std::count(kinds.begin(), kinds.end(), NodeClass::Internal), 0);
}
