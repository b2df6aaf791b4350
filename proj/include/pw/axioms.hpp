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

#ifndef PW_AXIOMS_HPP
#define PW_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pw/diagram.hpp"
#include "pw/rewrite.hpp"

namespace pw {

/// Parameters a rule schema is instantiated with. Arities are clamped to
/// what the rule admits; weights that must be nonzero are checked.
struct RuleParams {
    int n = 1;
    int m = 1;
    Complex r = 2.0;
    Complex s = 3.0;
};

/// Both sides of a rule as terms of equal arity.
struct Equation {
    RuleId rule;
    Diagram lhs;
    Diagram rhs;
};

/// True for rules stated as term equations. The pivot rule and the four
/// reduction rules act only on linear forms.
bool has_equation(RuleId rule);

/// Throws Error when the rule has no term equation or a side condition fails.
Equation rule_equation(RuleId rule, const RuleParams &p = {});

/// A term-level match: the path from the root (0 = first child, 1 = second).
struct TermRedex {
    RuleId rule;
    std::vector<int> path;
};

/// Matches rules whose left side is a fixed small subterm. Other rules
/// return no matches.
std::vector<TermRedex> find_term_redexes(const Diagram &d, RuleId rule);

/// Throws Error when the redex does not match.
Diagram apply_term_rule(const Diagram &d, const TermRedex &redex);

}  // namespace pw

#endif
