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

#ifndef PW_DIAGRAM_HPP
#define PW_DIAGRAM_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "pw/common.hpp"

namespace pw {

enum class GenKind { Identity, Black, White, Cup, Cap, FSwap, Scalar };

/// A single generator. `inputs`/`outputs` hold the arity (identity uses both),
/// `param` holds the white phase or the scalar value.
struct Generator {
    GenKind kind = GenKind::Identity;
    int inputs = 0;
    int outputs = 0;
    Complex param = 1.0;

    bool operator==(const Generator &other) const = default;
};

/// Immutable term over generators, tensor and sequential composition.
/// Copies are cheap: subterms are shared.
class Diagram {
   public:
    enum class Op { Leaf, Tensor, Compose };

    static Diagram identity(int k);
    static Diagram black(int n, int m);
    static Diagram white(Complex r);
    static Diagram cup();
    static Diagram cap();
    static Diagram fswap();
    static Diagram scalar(Complex c);
    static Diagram x() { return black(1, 1); }
    static Diagram ket1() { return black(0, 1); }
    static Diagram bra1() { return black(1, 0); }
    static Diagram ket0();

    static Diagram leaf(const Generator &g);

    int inputs() const;
    int outputs() const;
    Op op() const;
    const Generator &generator() const;
    const Diagram &first() const;
    const Diagram &second() const;

    /// Number of generator leaves, identities included.
    size_t size() const;

    bool operator==(const Diagram &other) const;
    bool operator!=(const Diagram &other) const { return !(*this == other); }

    friend Diagram tensor(const Diagram &a, const Diagram &b);
    friend Diagram compose(const Diagram &a, const Diagram &b);

   private:
    struct Node;
    explicit Diagram(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Diagram::Node {
    Op op = Op::Leaf;
    Generator gen;
    std::vector<Diagram> kids;
    int inputs = 0;
    int outputs = 0;
    size_t size = 1;
};

inline int Diagram::inputs() const { return node_->inputs; }
inline int Diagram::outputs() const { return node_->outputs; }
inline Diagram::Op Diagram::op() const { return node_->op; }
inline const Generator &Diagram::generator() const { return node_->gen; }
inline const Diagram &Diagram::first() const { return node_->kids[0]; }
inline const Diagram &Diagram::second() const { return node_->kids[1]; }
inline size_t Diagram::size() const { return node_->size; }

/// Parallel composition. Throws nothing; arities add.
Diagram tensor(const Diagram &a, const Diagram &b);
/// Sequential composition: `a` first, then `b`. Throws Error on width mismatch.
Diagram compose(const Diagram &a, const Diagram &b);

Diagram tensor_all(const std::vector<Diagram> &parts);
Diagram compose_all(const std::vector<Diagram> &parts);

/// `a` on wires [k, k + a.inputs()) inside a register of `width` wires.
Diagram embed(const Diagram &a, int k, int width);

/// Nested caps 0 -> 2k whose j-th output is paired with output 2k-1-j.
Diagram nested_caps(int k);
/// Nested cups 2k -> 0, mirror of nested_caps.
Diagram nested_cups(int k);

/// Bends every input of d into an output: the result is 0 -> n + m and its
/// first n outputs are the inputs of d in reverse order.
Diagram state_form(const Diagram &d);
/// Inverse of state_form: treats the first n outputs of `s` as inputs.
Diagram map_form(const Diagram &s, int n);

/// Enumerates the leaves of `d` in left-to-right order.
std::vector<Generator> leaves(const Diagram &d);

}  // namespace pw

#endif
