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

#include <cctype>
#include <cmath>
#include <sstream>

#include "pw/dsl.hpp"

namespace pw {

ParseError::ParseError(std::string message, SourceSpan span, std::vector<std::string> expected)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      message_(std::move(message)),
      span_(span),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, Imag, Arrow, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

std::vector<Token> lex(const std::string &s) {
    std::vector<Token> out;
    size_t i = 0, line = 1, col = 1;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; k++, i++) {
            if (s[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') {
                advance(1);
            }
            continue;
        }
        SourceSpan sp{line, col, 1};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
                j++;
            }
            sp.length = j - i;
            out.push_back({Tok::Ident, s.substr(i, j - i), sp});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                j++;
            }
            if (j < s.size() && s[j] == '.') {
                j++;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    j++;
                }
            }
            if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
                size_t k = j + 1;
                if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
                    k++;
                }
                if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                    j = k;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                        j++;
                    }
                }
            }
            Tok kind = Tok::Number;
            std::string text = s.substr(i, j - i);
            if (j < s.size() && s[j] == 'i' &&
                (j + 1 >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[j + 1])) || s[j + 1] == '_'))) {
                kind = Tok::Imag;
                j++;
            }
            sp.length = j - i;
            out.push_back({kind, text, sp});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            sp.length = 2;
            out.push_back({Tok::Arrow, "->", sp});
            advance(2);
            continue;
        }
        if (std::string("(){},;+-").find(c) != std::string::npos) {
            out.push_back({Tok::Punct, std::string(1, c), sp});
            advance(1);
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", sp);
    }
    out.push_back({Tok::End, "", {line, col, 0}});
    return out;
}

double to_double(const Token &t) {
    double v = std::strtod(t.text.c_str(), nullptr);
    if (!std::isfinite(v)) {
        throw ParseError("number is not finite", t.span);
    }
    return v;
}

class Parser {
   public:
    explicit Parser(const std::string &text) : toks_(lex(text)) {}

    const Token &peek() const { return toks_[pos_]; }
    bool at_punct(const char *p) const { return peek().kind == Tok::Punct && peek().text == p; }
    bool at_end() const { return peek().kind == Tok::End; }

    const Token &take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string &what, std::vector<std::string> expected) const {
        const Token &t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        std::string msg = "expected " + what + ", found " + found;
        throw ParseError(msg, t.span, std::move(expected));
    }

    void expect_punct(const char *p) {
        if (!at_punct(p)) {
            fail(std::string("'") + p + "'", {p});
        }
        take();
    }

    int nat() {
        if (peek().kind != Tok::Number || peek().text.find_first_not_of("0123456789") != std::string::npos) {
            fail("a natural number", {"nat"});
        }
        const Token &t = take();
        if (t.text.size() > 6) {
            throw ParseError("number too large", t.span);
        }
        return std::stoi(t.text);
    }

    double sign() {
        double sign = 1;
        if (at_punct("-") || at_punct("+")) {
            sign = take().text == "-" ? -1 : 1;
        }
        if (peek().kind != Tok::Number && peek().kind != Tok::Imag) {
            fail("a number", {"number"});
        }
        return sign;
    }

    Complex complex() {
        double sign = this->sign();
        const Token &first = take();
        double v = sign * to_double(first);
        if (first.kind == Tok::Imag) {
            return {0.0, v};
        }
        if ((at_punct("+") || at_punct("-")) && toks_[pos_ + 1].kind == Tok::Imag) {
            double s2 = take().text == "-" ? -1 : 1;
            return {v, s2 * to_double(take())};
        }
        return {v, 0.0};
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

const std::vector<std::string> kGenNames = {"id",   "cup",  "cap",   "fswap", "x",     "ket0",
                                            "ket1", "bra1", "black", "white", "scalar"};

Diagram parse_gen(Parser &p) {
    if (p.peek().kind != Tok::Ident) {
        p.fail("a generator", kGenNames);
    }
    Token t = p.take();
    const std::string &n = t.text;
    if (n == "id") {
        int k = 1;
        if (p.at_punct("(")) {
            p.take();
            k = p.nat();
            p.expect_punct(")");
        }
        return Diagram::identity(k);
    }
    if (n == "cup") return Diagram::cup();
    if (n == "cap") return Diagram::cap();
    if (n == "fswap") return Diagram::fswap();
    if (n == "x") return Diagram::x();
    if (n == "ket0") return Diagram::ket0();
    if (n == "ket1") return Diagram::ket1();
    if (n == "bra1") return Diagram::bra1();
    if (n == "black") {
        p.expect_punct("(");
        int a = p.nat();
        p.expect_punct(",");
        int b = p.nat();
        p.expect_punct(")");
        return Diagram::black(a, b);
    }
    if (n == "white" || n == "scalar") {
        p.expect_punct("(");
        Complex c = p.complex();
        p.expect_punct(")");
        return n == "white" ? Diagram::white(c) : Diagram::scalar(c);
    }
    throw ParseError("unknown generator '" + n + "'", t.span, kGenNames);
}

}  // namespace

Complex parse_complex(const std::string &text) {
    Parser p(text);
    Complex c = p.complex();
    if (!p.at_end()) {
        p.fail("end of number", {});
    }
    return c;
}

Diagram parse_diagram(const std::string &text) {
    Parser p(text);
    if (p.peek().kind != Tok::Ident || p.peek().text != "pw") {
        p.fail("'pw'", {"pw"});
    }
    p.take();
    SourceSpan header = p.peek().span;
    int n = p.nat();
    if (p.peek().kind != Tok::Arrow) {
        p.fail("'->'", {"->"});
    }
    p.take();
    int m = p.nat();
    p.expect_punct("{");
    std::vector<Diagram> rows;
    std::vector<SourceSpan> spans;
    while (true) {
        spans.push_back(p.peek().span);
        std::vector<Diagram> gens = {parse_gen(p)};
        while (p.at_punct(",")) {
            p.take();
            gens.push_back(parse_gen(p));
        }
        rows.push_back(tensor_all(gens));
        if (p.at_punct(";")) {
            p.take();
            continue;
        }
        if (p.at_punct("}")) {
            p.take();
            break;
        }
        p.fail("',' or ';' or '}'", {",", ";", "}"});
    }
    if (!p.at_end()) {
        p.fail("end of input", {});
    }
    for (size_t k = 0; k + 1 < rows.size(); k++) {
        if (rows[k].outputs() != rows[k + 1].inputs()) {
            throw ParseError("arity mismatch: row " + std::to_string(k + 1) + " has " +
                                 std::to_string(rows[k].outputs()) + " outputs but row " + std::to_string(k + 2) +
                                 " has " + std::to_string(rows[k + 1].inputs()) + " inputs",
                             spans[k + 1]);
        }
    }
    if (rows.front().inputs() != n || rows.back().outputs() != m) {
        throw ParseError("arity mismatch: header says " + std::to_string(n) + " -> " + std::to_string(m) +
                             " but rows give " + std::to_string(rows.front().inputs()) + " -> " +
                             std::to_string(rows.back().outputs()),
                         header);
    }
    return compose_all(rows);
}

namespace {

using Row = std::vector<Generator>;

void append_identity(Row &row, int k) {
    if (k > 0) {
        row.push_back({GenKind::Identity, k, k, 1.0});
    }
}

std::vector<Row> rows_of(const Diagram &d) {
    switch (d.op()) {
        case Diagram::Op::Leaf:
            return {{d.generator()}};
        case Diagram::Op::Compose: {
            std::vector<Row> a = rows_of(d.first()), b = rows_of(d.second());
            a.insert(a.end(), b.begin(), b.end());
            return a;
        }
        case Diagram::Op::Tensor:
            break;
    }
    std::vector<Row> a = rows_of(d.first()), b = rows_of(d.second());
    std::vector<Row> out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); i++) {
        if (i < a.size()) {
            out[i] = a[i];
        } else {
            append_identity(out[i], d.first().outputs());
        }
        if (i < b.size()) {
            out[i].insert(out[i].end(), b[i].begin(), b[i].end());
        } else {
            append_identity(out[i], d.second().outputs());
        }
    }
    return out;
}

// Drops empty identities; a row left empty keeps a single id(0).
std::vector<Row> clean_rows(const Diagram &d) {
    std::vector<Row> rows = rows_of(d);
    for (Row &r : rows) {
        Row kept;
        for (const Generator &g : r) {
            if (!(g.kind == GenKind::Identity && g.inputs == 0)) {
                kept.push_back(g);
            }
        }
        if (kept.empty()) {
            kept.push_back({GenKind::Identity, 0, 0, 1.0});
        }
        r = std::move(kept);
    }
    return rows;
}

std::string gen_text(const Generator &g) {
    switch (g.kind) {
        case GenKind::Identity:
            return g.inputs == 1 ? "id" : "id(" + std::to_string(g.inputs) + ")";
        case GenKind::Black:
            if (g.inputs == 1 && g.outputs == 1) return "x";
            if (g.inputs == 0 && g.outputs == 1) return "ket1";
            if (g.inputs == 1 && g.outputs == 0) return "bra1";
            return "black(" + std::to_string(g.inputs) + "," + std::to_string(g.outputs) + ")";
        case GenKind::White:
            return "white(" + format_complex_exact(g.param) + ")";
        case GenKind::Cup:
            return "cup";
        case GenKind::Cap:
            return "cap";
        case GenKind::FSwap:
            return "fswap";
        case GenKind::Scalar:
            return "scalar(" + format_complex_exact(g.param) + ")";
    }
    return "";
}

}  // namespace

std::string print_diagram(const Diagram &d) {
    std::ostringstream out;
    out << "pw " << d.inputs() << " -> " << d.outputs() << " { ";
    std::vector<Row> rows = clean_rows(d);
    for (size_t i = 0; i < rows.size(); i++) {
        if (i > 0) {
            out << "; ";
        }
        for (size_t j = 0; j < rows[i].size(); j++) {
            out << (j > 0 ? ", " : "") << gen_text(rows[i][j]);
        }
    }
    out << " }";
    return out.str();
}

Diagram row_normal_form(const Diagram &d) {
    std::vector<Diagram> rows;
    for (const Row &r : clean_rows(d)) {
        std::vector<Diagram> gens;
        for (const Generator &g : r) {
            gens.push_back(Diagram::leaf(g));
        }
        rows.push_back(tensor_all(gens));
    }
    return compose_all(rows);
}

}  // namespace pw
