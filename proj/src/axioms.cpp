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

#include "pw/axioms.hpp"

#include <algorithm>

namespace pw {

namespace {

Diagram power(const Diagram &d, int k) { return tensor_all(std::vector<Diagram>(std::max(k, 0), d)); }

Diagram id(int k) { return Diagram::identity(k); }

Diagram F() { return Diagram::fswap(); }

void require_nonzero(Complex r, RuleId rule) {
    if (r == 0.0) {
        throw Error(rule_name(rule) + ": weight must be nonzero");
    }
}

}  // namespace

bool has_equation(RuleId rule) {
    switch (rule) {
        case RuleId::Pivot:
        case RuleId::Reduce1:
        case RuleId::Reduce2:
        case RuleId::Reduce3:
        case RuleId::Reduce4:
            return false;
        default:
            return true;
    }
}

Equation rule_equation(RuleId rule, const RuleParams &p) {
    int n = std::max(p.n, 0), m = std::max(p.m, 0);
    Diagram x = Diagram::x();
    switch (rule) {
        case RuleId::WSpiderFusion:
            return {rule, compose_all({Diagram::black(n, 1), x, Diagram::black(1, m)}), Diagram::black(n, m)};
        case RuleId::WBinary:
            return {rule, compose(x, x), id(1)};
        case RuleId::WBialgebra: {
            Diagram xx = tensor(x, x);
            Diagram rhs = compose_all({xx, tensor(Diagram::black(1, 2), Diagram::black(1, 2)),
                                       tensor_all({id(1), F(), id(1)}),
                                       tensor(Diagram::black(2, 1), Diagram::black(2, 1)), xx});
            return {rule, compose(Diagram::black(2, 1), Diagram::black(1, 2)), rhs};
        }
        case RuleId::WLoop:
        case RuleId::WLoopR:
            return {rule, compose(Diagram::black(n, m + 2), tensor(id(m), Diagram::cup())), Diagram::black(n, m)};
        case RuleId::PhaseFusion:
        case RuleId::PhaseFusionR:
            return {rule, compose(Diagram::white(p.r), Diagram::white(p.s)), Diagram::white(p.r * p.s)};
        case RuleId::ZBinary:
            return {rule, Diagram::white(1.0), id(1)};
        case RuleId::PhaseDistrib: {
            Diagram lhs = compose_all({power(Diagram::white(p.r), n), Diagram::black(n, m), power(Diagram::white(p.r), m)});
            return {rule, lhs, tensor(Diagram::scalar(p.r), Diagram::black(n, m))};
        }
        case RuleId::Sum:
        case RuleId::SumR: {
            Diagram lhs = compose_all(
                {Diagram::black(1, 2), tensor(Diagram::white(p.r), Diagram::white(p.s)), Diagram::black(2, 1)});
            return {rule, lhs, compose_all({x, Diagram::white(p.r + p.s), x})};
        }
        case RuleId::FswapZ:
            return {rule, compose(F(), tensor(Diagram::white(p.r), id(1))),
                    compose(tensor(id(1), Diagram::white(p.r)), F())};
        case RuleId::FswapsW:
            return {rule, compose(tensor(x, id(1)), F()),
                    compose_all({tensor(id(1), Diagram::white(-1.0)), F(), tensor(id(1), x)})};
        case RuleId::Zero:
            return {rule, Diagram::black(0, 0), Diagram::scalar(0.0)};
        case RuleId::FswapRemoval:
        case RuleId::FswapRemovalR:
            return {rule, compose(F(), F()), id(2)};
        case RuleId::FswapYB: {
            Diagram a = tensor(F(), id(1)), b = tensor(id(1), F());
            return {rule, compose_all({a, b, a}), compose_all({b, a, b})};
        }
        case RuleId::FswapRotated: {
            // The fswap bent through a cap and a cup is the fswap again.
            Diagram lhs = compose_all({tensor(Diagram::cap(), id(2)), tensor_all({id(1), F(), id(1)}),
                                       tensor(id(2), Diagram::cup())});
            return {rule, lhs, F()};
        }
        case RuleId::ZeroEdge: {
            Diagram lhs = compose_all({Diagram::black(n, 1), Diagram::white(0.0), Diagram::black(1, m)});
            return {rule, lhs, tensor(Diagram::black(n, 0), Diagram::black(0, m))};
        }
        case RuleId::BinaryWR:
            require_nonzero(p.r, rule);
            return {rule, compose_all({x, Diagram::white(p.r), x}),
                    tensor(Diagram::scalar(p.r), Diagram::white(1.0 / p.r))};
        case RuleId::FloopR:
            return {rule,
                    compose_all({tensor(id(1), Diagram::cap()), tensor(F(), id(1)), tensor(id(1), Diagram::cup())}),
                    Diagram::white(-1.0)};
        case RuleId::Fusion0R: {
            Diagram lhs = compose_all({Diagram::black(n, 1), Diagram::white(p.r), Diagram::bra1()});
            return {rule, lhs, tensor(Diagram::scalar(p.r), power(compose(x, Diagram::bra1()), n))};
        }
        case RuleId::FusionR: {
            Diagram lhs = compose_all({Diagram::black(n, 1), x, Diagram::white(p.r), Diagram::black(1, m)});
            return {rule, lhs, compose(power(Diagram::white(p.r), n), Diagram::black(n, m))};
        }
        case RuleId::ZeroR: {
            Diagram d = Diagram::black(n, m);
            return {rule, tensor(Diagram::black(0, 0), d), tensor(Diagram::scalar(0.0), d)};
        }
        default:
            break;
    }
    throw Error(rule_name(rule) + " has no term equation");
}

namespace {

bool is_leaf(const Diagram &d, GenKind kind) { return d.op() == Diagram::Op::Leaf && d.generator().kind == kind; }

bool is_black(const Diagram &d, int n, int m) {
    return is_leaf(d, GenKind::Black) && (n < 0 || d.inputs() == n) && (m < 0 || d.outputs() == m);
}

bool is_x(const Diagram &d) { return is_black(d, 1, 1); }

// Right side for `rule` at d, if its left side matches d itself.
std::optional<Diagram> rewrite_here(const Diagram &d, RuleId rule) {
    bool comp = d.op() == Diagram::Op::Compose;
    switch (rule) {
        case RuleId::ZBinary:
            if (is_leaf(d, GenKind::White) && d.generator().param == 1.0) {
                return Diagram::identity(1);
            }
            break;
        case RuleId::PhaseFusion:
            if (comp && is_leaf(d.first(), GenKind::White) && is_leaf(d.second(), GenKind::White)) {
                return Diagram::white(d.first().generator().param * d.second().generator().param);
            }
            break;
        case RuleId::WBinary:
            if (comp && is_x(d.first()) && is_x(d.second())) {
                return Diagram::identity(1);
            }
            break;
        case RuleId::FswapRemoval:
            if (comp && is_leaf(d.first(), GenKind::FSwap) && is_leaf(d.second(), GenKind::FSwap)) {
                return Diagram::identity(2);
            }
            break;
        case RuleId::Zero:
            if (is_black(d, 0, 0)) {
                return Diagram::scalar(0.0);
            }
            break;
        case RuleId::WSpiderFusion:
            if (!comp) {
                break;
            }
            if (d.first().op() == Diagram::Op::Compose && is_black(d.first().first(), -1, 1) &&
                is_x(d.first().second()) && is_black(d.second(), 1, -1)) {
                return Diagram::black(d.first().first().inputs(), d.second().outputs());
            }
            if (d.second().op() == Diagram::Op::Compose && is_black(d.first(), -1, 1) &&
                is_x(d.second().first()) && is_black(d.second().second(), 1, -1)) {
                return Diagram::black(d.first().inputs(), d.second().second().outputs());
            }
            break;
        default:
            break;
    }
    return std::nullopt;
}

void collect(const Diagram &d, RuleId rule, std::vector<int> &path, std::vector<TermRedex> &out) {
    if (rewrite_here(d, rule)) {
        out.push_back({rule, path});
    }
    if (d.op() == Diagram::Op::Leaf) {
        return;
    }
    for (int k = 0; k < 2; k++) {
        path.push_back(k);
        collect(k == 0 ? d.first() : d.second(), rule, path, out);
        path.pop_back();
    }
}

Diagram rebuild(const Diagram &d, const TermRedex &redex, size_t depth) {
    if (depth == redex.path.size()) {
        auto rhs = rewrite_here(d, redex.rule);
        if (!rhs) {
            throw Error("apply_term_rule: " + rule_name(redex.rule) + " does not match");
        }
        return *rhs;
    }
    if (d.op() == Diagram::Op::Leaf) {
        throw Error("apply_term_rule: path leaves the term");
    }
    bool left = redex.path[depth] == 0;
    Diagram a = left ? rebuild(d.first(), redex, depth + 1) : d.first();
    Diagram b = left ? d.second() : rebuild(d.second(), redex, depth + 1);
    return d.op() == Diagram::Op::Tensor ? tensor(a, b) : compose(a, b);
}

}  // namespace

std::vector<TermRedex> find_term_redexes(const Diagram &d, RuleId rule) {
    std::vector<TermRedex> out;
    std::vector<int> path;
    collect(d, rule, path, out);
    return out;
}

Diagram apply_term_rule(const Diagram &d, const TermRedex &redex) { return rebuild(d, redex, 0); }

}  // namespace pw
