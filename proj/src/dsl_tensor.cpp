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

#include <cmath>

#include "json.hpp"
#include "pw/dsl.hpp"

namespace pw {

namespace {

SourceSpan span_at(const std::string &text, size_t byte) {
    SourceSpan s;
    byte = std::min(byte, text.size());
    for (size_t i = 0; i < byte; i++) {
        if (text[i] == '\n') {
            s.line++;
            s.column = 1;
        } else {
            s.column++;
        }
    }
    s.length = byte < text.size() ? 1 : 0;
    return s;
}

}  // namespace

Tensor parse_tensor(const std::string &text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw ParseError("malformed JSON", span_at(text, at), {"json"});
    }
    SourceSpan whole = span_at(text, text.find_first_not_of(" \t\r\n"));
    if (!j.is_object() || !j.contains("wires") || !j.contains("amplitudes")) {
        throw ParseError("expected an object with \"wires\" and \"amplitudes\"", whole, {"wires", "amplitudes"});
    }
    const json &w = j["wires"];
    if (!w.is_number_unsigned() || w.get<uint64_t>() > 30) {
        throw ParseError("\"wires\" must be a natural number up to 30", whole, {"nat"});
    }
    int wires = static_cast<int>(w.get<uint64_t>());
    const json &a = j["amplitudes"];
    if (!a.is_array() || a.size() != (size_t{1} << wires)) {
        throw ParseError("\"amplitudes\" must hold exactly 2^wires entries", whole);
    }
    Tensor t(wires);
    for (size_t i = 0; i < a.size(); i++) {
        const json &e = a[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ParseError("amplitude " + std::to_string(i) + " is not a [re, im] pair", whole, {"[re, im]"});
        }
        Complex z(e[0].get<double>(), e[1].get<double>());
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ParseError("amplitude " + std::to_string(i) + " is not finite", whole);
        }
        t.amps[i] = z;
    }
    return t;
}

std::string print_tensor(const Tensor &t) {
    nlohmann::json amps = nlohmann::json::array();
    for (Complex z : t.amps) {
        amps.push_back({z.real(), z.imag()});
    }
    nlohmann::json j;
    j["wires"] = t.wires;
    j["amplitudes"] = amps;
    return j.dump();
}

}  // namespace pw
