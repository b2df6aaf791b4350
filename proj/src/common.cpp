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

#include "pw/common.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace pw {

Tolerance default_tolerance() {
    Tolerance t;
    if (const char *env = std::getenv("PW_EPSILON")) {
        char *end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) {
            t = Tolerance::from_epsilon(v);
        }
    }
    return t;
}

static std::string fmt_real(double x, bool exact) {
    if (x == 0) {
        x = 0;  // drop negative zero
    }
    char buf[64];
    if (exact) {
        auto r = std::to_chars(buf, buf + sizeof(buf), x);
        return std::string(buf, r.ptr);
    }
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

static std::string fmt_complex(Complex z, bool exact) {
    double re = z.real(), im = z.imag();
    if (im == 0) {
        return fmt_real(re, exact);
    }
    std::string imag = fmt_real(std::abs(im), exact);
    if (re == 0) {
        return (im < 0 ? "-" : "") + imag + "i";
    }
    return fmt_real(re, exact) + (im < 0 ? "-" : "+") + imag + "i";
}

std::string format_complex(Complex z) { return fmt_complex(z, false); }

std::string format_complex_exact(Complex z) { return fmt_complex(z, true); }

}  // namespace pw
