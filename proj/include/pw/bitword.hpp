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

#ifndef PW_BITWORD_HPP
#define PW_BITWORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pw {

/// Fixed-length bit string. Position 1 is the most significant bit of the
/// integer index, matching the tensor layout used everywhere else.
class BitWord {
   public:
    BitWord() = default;
    explicit BitWord(size_t length) : bits_(length, 0) {}
    static BitWord from_index(uint64_t index, size_t length);
    /// Parses a string of '0'/'1'. Throws Error on other characters.
    static BitWord from_string(const std::string &s);
    /// Word of given length with a single 1 at 1-based position p.
    static BitWord unit(size_t p, size_t length);

    size_t size() const { return bits_.size(); }
    bool operator[](size_t i) const { return bits_[i] != 0; }  // 0-based
    void set(size_t i, bool v) { bits_[i] = v ? 1 : 0; }        // 0-based

    uint64_t to_index() const;
    std::string str() const;
    size_t weight() const;
    bool parity() const { return weight() % 2 == 1; }

    BitWord operator^(const BitWord &o) const;
    BitWord concat(const BitWord &o) const;
    /// 1-based positions where this word and `o` differ.
    std::vector<size_t> diff_positions(const BitWord &o) const;

    bool operator==(const BitWord &o) const = default;

   private:
    std::vector<uint8_t> bits_;
};

}  // namespace pw

#endif
