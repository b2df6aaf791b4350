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

#ifndef PW_DSL_HPP
#define PW_DSL_HPP

#include <string>
#include <vector>

#include "pw/diagram.hpp"
#include "pw/fkt.hpp"
#include "pw/tensor.hpp"

namespace pw {

struct SourceSpan {
    size_t line = 1;    // 1-based
    size_t column = 1;  // 1-based
    size_t length = 0;
};

class ParseError : public Error {
   public:
    ParseError(std::string message, SourceSpan span, std::vector<std::string> expected = {});
    const std::string &message() const { return message_; }
    const SourceSpan &span() const { return span_; }
    const std::vector<std::string> &expected() const { return expected_; }

   private:
    std::string message_;
    SourceSpan span_;
    std::vector<std::string> expected_;
};

/// Parses the row syntax, e.g. "pw 1 -> 1 { cap, id; id, cup }".
Diagram parse_diagram(const std::string &text);
/// Prints `d` as rows. Tensors are zipped row by row and padded with
/// identities, so printing is stable under parse.
std::string print_diagram(const Diagram &d);
/// Rebuilds `d` in the shape parse_diagram produces: right-nested rows.
Diagram row_normal_form(const Diagram &d);

/// {"wires": k, "amplitudes": [[re, im], ...]}
Tensor parse_tensor(const std::string &text);
std::string print_tensor(const Tensor &t);

/// Line format with `v`, `e`, `rot` and `outer` records.
WeightedPlaneGraph parse_plane_graph(const std::string &text);
std::string print_plane_graph(const WeightedPlaneGraph &g);

/// Reads "a", "bi", "a+bi" or "a-bi". Throws Error on anything else.
Complex parse_complex(const std::string &text);

}  // namespace pw

#endif
