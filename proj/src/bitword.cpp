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

#include "pw/bitword.hpp"

#include "pw/common.hpp"

namespace pw {

BitWord BitWord::from_index(uint64_t index, size_t length) {
    BitWord w(length);
    for (size_t i = 0; i < length; i++) {
        w.bits_[length - 1 - i] = (index >> i) & 1;
    }
    return w;
}

BitWord BitWord::from_string(const std::string &s) {
    BitWord w(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] != '0' && s[i] != '1') {
            throw Error("bit word contains '" + std::string(1, s[i]) + "'");
        }
        w.bits_[i] = s[i] == '1';
    }
    return w;
}

BitWord BitWord::unit(size_t p, size_t length) {
    if (p < 1 || p > length) {
        throw Error("unit position out of range");
    }
    BitWord w(length);
    w.bits_[p - 1] = 1;
    return w;
}

uint64_t BitWord::to_index() const {
    if (bits_.size() > 64) {
        throw Error("bit word too long for an index");
    }
    uint64_t r = 0;
    for (uint8_t b : bits_) {
        r = (r << 1) | b;
    }
    return r;
}

std::string BitWord::str() const {
    std::string s;
    for (uint8_t b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

size_t BitWord::weight() const {
    size_t n = 0;
    for (uint8_t b : bits_) {
        n += b;
    }
    return n;
}

BitWord BitWord::operator^(const BitWord &o) const {
    if (o.size() != size()) {
        throw Error("xor of bit words with different lengths");
    }
    BitWord r(size());
    for (size_t i = 0; i < size(); i++) {
        r.bits_[i] = bits_[i] ^ o.bits_[i];
    }
    return r;
}

BitWord BitWord::concat(const BitWord &o) const {
    BitWord r = *this;
    r.bits_.insert(r.bits_.end(), o.bits_.begin(), o.bits_.end());
    return r;
}

std::vector<size_t> BitWord::diff_positions(const BitWord &o) const {
    if (o.size() != size()) {
        throw Error("comparing bit words with different lengths");
    }
    std::vector<size_t> r;
    for (size_t i = 0; i < size(); i++) {
        if (bits_[i] != o.bits_[i]) {
            r.push_back(i + 1);
        }
    }
    return r;
}

}  // namespace pw
