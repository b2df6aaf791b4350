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

#ifndef PW_REWRITE_HPP
#define PW_REWRITE_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pw/bitword.hpp"
#include "pw/common.hpp"
#include "pw/diagram.hpp"
#include "pw/linear_form.hpp"

namespace pw {

enum class RuleId {
    // Axioms.
    WSpiderFusion,
    WBinary,
    WBialgebra,
    WLoop,
    PhaseFusion,
    ZBinary,
    PhaseDistrib,
    Sum,
    FswapZ,
    FswapsW,
    Zero,
    FswapRemoval,
    FswapYB,
    FswapRotated,
    // Oriented rules used by the strategy.
    SumR,
    WLoopR,
    ZeroEdge,
    BinaryWR,
    FswapRemovalR,
    PhaseFusionR,
    FloopR,
    Fusion0R,
    FusionR,
    Pivot,
    ZeroR,
    // Reduction of the final form.
    Reduce1,
    Reduce2,
    Reduce3,
    Reduce4,
};

const std::vector<RuleId> &all_rules();
std::string rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string &name);

/// A match on a linear form. Anchors are vertex ids.
struct Redex {
    RuleId rule;
    std::vector<int> anchors;
    std::vector<Complex> params;
};

/// Enumerates matches in line order. Rules without a counterpart on the
/// linear form (fswaps are implicit there) return nothing.
std::vector<Redex> find_redexes(const LinearForm &f, RuleId rule, const Tolerance &tol = default_tolerance());

/// Throws Error when the redex no longer matches.
LinearForm apply_rule(const LinearForm &f, const Redex &redex, const Tolerance &tol = default_tolerance());

/// Scalar factor that applying `redex` moves into the global scalar.
Complex rule_factor(const LinearForm &f, const Redex &redex);

struct MeasureT {
    std::array<int, 6> v{};
    auto operator<=>(const MeasureT &) const = default;
    std::string str() const;
};

MeasureT measure(const LinearForm &f);

/// Classes of internal-or-boundary vertices of degree >= 3 joined through
/// chains of degree-2 internal vertices. Each class lists vertex ids.
std::vector<std::vector<int>> fusion_classes(const LinearForm &f);

enum class NodeClass { Boundary1, Boundary0, Internal };
std::vector<NodeClass> classify(const LinearForm &f);

/// Scalar, ordered weighted graph and X layer. Indices are 0-based here and
/// 1-based in text.
struct WGSX {
    Complex s = 1.0;
    int n = 0;
    std::map<std::pair<int, int>, Complex> edges;
    BitWord b;

    bool reduced() const;
    std::string str() const;
    /// Canonical zero form on n vertices.
    static WGSX zero(int n);
};

/// Amplitude of the state described by w.
Complex wgsx_amplitude(const WGSX &w, const BitWord &alpha);

struct TraceStep {
    int step = 0;
    RuleId rule;
    std::vector<int> anchors;
    Complex scalar = 1.0;
    std::string str() const;
};

struct NormalizeResult {
    WGSX form;
    std::vector<TraceStep> trace;
    /// Measure before the first and after every step-1 application.
    std::vector<MeasureT> measures;
};

NormalizeResult normalize_traced(const Diagram &d, const Tolerance &tol = default_tolerance());
WGSX normalize(const Diagram &d, const Tolerance &tol = default_tolerance());

bool equal(const WGSX &a, const WGSX &b, const Tolerance &tol = default_tolerance());
/// Throws Error on an arity mismatch.
bool equal(const Diagram &a, const Diagram &b, const Tolerance &tol = default_tolerance());

/// Diagram 0 -> n whose semantics is the state of w.
Diagram wgsx_to_diagram(const WGSX &w);
/// Vertex i is 1-based. Throws Error when out of range.
WGSX remove_vertex(const WGSX &w, int i);
/// Turns a WGSX into a linear form on n ports.
LinearForm to_linear_form(const WGSX &w);

}  // namespace pw

#endif
