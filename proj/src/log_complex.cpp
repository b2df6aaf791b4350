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
#include <cstdio>

#include "pw/fkt.hpp"

namespace pw {

LogComplex LogComplex::from(Complex z) {
    LogComplex r;
    double m = std::abs(z);
    if (m == 0 || !std::isfinite(m)) {
        return r;
    }
    r.phase_ = z / m;
    r.log10_ = std::log10(m);
    return r;
}

LogComplex LogComplex::operator*(const LogComplex &o) const {
    LogComplex r;
    if (is_zero() || o.is_zero()) {
        return r;
    }
    Complex p = phase_ * o.phase_;
    r.phase_ = p / std::abs(p);
    r.log10_ = log10_ + o.log10_;
    return r;
}

Complex LogComplex::to_complex() const {
    if (is_zero()) {
        return 0.0;
    }
    return phase_ * std::pow(10.0, log10_);
}

std::string LogComplex::str() const {
    if (is_zero()) {
        return "0";
    }
    double k = std::floor(log10_);
    if (std::abs(k) <= 15) {
        Complex z = to_complex();
        // Snap to integers that are exact up to rounding.
        double re = std::round(z.real()), im = std::round(z.imag());
        if (std::abs(z.real() - re) <= 1e-9 * std::max(1.0, std::abs(re))) {
            z.real(re);
        }
        if (std::abs(z.imag() - im) <= 1e-9 * std::max(1.0, std::abs(z.real()))) {
            z.imag(im);
        }
        return format_complex(z);
    }
    Complex mant = phase_ * std::pow(10.0, log10_ - k);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi x10^%.0f", mant.real(), mant.imag(), k);
    return buf;
}

}  // namespace pw
