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

#ifndef PW_COMMON_HPP
#define PW_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace pw {

using Complex = std::complex<double>;

/// Numerical tolerance shared by every module. A value z is negligible
/// relative to a scale s when |z| <= abs + rel * s.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    /// Relative tolerance eps with an absolute floor of eps / 1000.
    static Tolerance from_epsilon(double eps) { return {eps, eps * 1e-3}; }
    bool negligible(Complex z, double scale = 0.0) const {
        return std::abs(z) <= abs + rel * scale;
    }
    bool close(Complex a, Complex b) const {
        double scale = std::max(std::abs(a), std::abs(b));
        return std::abs(a - b) <= abs + rel * scale;
    }
};

/// Reads PW_EPSILON from the environment if present, otherwise returns defaults.
Tolerance default_tolerance();

/// Raised for malformed diagrams, arity mismatches and refused operations.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Formats a complex number with 15 significant digits, e.g. "0.5-0.5i".
std::string format_complex(Complex z);

/// Shortest text that reads back to exactly the same value.
std::string format_complex_exact(Complex z);

}  // namespace pw

#endif
