/*
   Copyright 2026 The lsakit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lsa/format.hpp"

#include <map>
#include <sstream>

namespace lsa {

namespace {

// Character scanner over one line, tracking the column for errors.
class LineScanner {
public:
    LineScanner(const std::string& text, int lineNo, int colBase = 0)
        : text_(text), line_(lineNo), base_(colBase) {}

    void skipSpace() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool done() {
        skipSpace();
        return pos_ >= text_.size();
    }
    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        char c = peek();
        if (pos_ < text_.size()) ++pos_;
        return c;
    }
    bool tryTake(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!tryTake(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, col(), msg); }
    int col() const { return base_ + static_cast<int>(pos_) + 1; }

    BigInt integer() {
        skipSpace();
        bool neg = tryTake('-');
        if (!isdigit(peek())) fail("expected a number");
        BigInt v = 0;
        while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    BigRational rational() {
        BigInt num = integer();
        if (tryTake('/')) {
            BigInt den = integer();
            if (den == 0) fail("zero denominator");
            return BigRational(num, den);
        }
        return BigRational(num);
    }

    // `(re)+(im)i` or `(re)-(im)i` or `(im)i`; the caller has seen '('.
    Scalar gaussian() {
        expect('(', "to open a coefficient");
        BigRational first = rational();
        expect(')', "to close a coefficient part");
        if (tryTake('i')) return Scalar(BigRational(0), first);
        int sign = 0;
        if (tryTake('+'))
            sign = 1;
        else if (tryTake('-'))
            sign = -1;
        else
            fail("expected '+', '-' or 'i' after the real part");
        expect('(', "to open the imaginary part");
        BigRational im = rational();
        expect(')', "to close the imaginary part");
        expect('i', "after the imaginary part");
        return Scalar(first, sign < 0 ? -im : im);
    }

    // basis symbol e<k>, 1-based; returns 0-based index
    int basisIndex(int dim) {
        skipSpace();
        if (peek() != 'e') fail("expected a basis symbol e1..e" + std::to_string(dim));
        ++pos_;
        if (!isdigit(peek())) fail("expected a basis index");
        BigInt k = integer();
        if (k < 1 || k > dim)
            fail("basis index out of range 1.." + std::to_string(dim));
        return static_cast<int>(k) - 1;
    }

    // Parses a full lin-comb into a coordinate vector.
    Vec linComb(int dim, Field field) {
        Vec v = zeroVec(dim);
        bool first = true;
        while (true) {
            skipSpace();
            int sign = 1;
            if (tryTake('+'))
                sign = 1;
            else if (tryTake('-'))
                sign = -1;
            else if (!first)
                fail("expected '+', '-' or end of expression");
            skipSpace();
            if (first && peek() == '0' && sign == 1) {
                // explicit zero must stand alone
                ++pos_;
                skipSpace();
                if (!done()) fail("unexpected input after '0'");
                return v;
            }
            Scalar coeff(1);
            bool sawCoeff = false;
            if (peek() == '(') {
                coeff = gaussian();
                sawCoeff = true;
            } else if (isdigit(peek())) {
                coeff = Scalar(rational());
                sawCoeff = true;
            }
            if (sawCoeff) expect('*', "between a coefficient and its basis symbol");
            if (field == Field::Rational && !coeff.isRational())
                fail("non-rational coefficient in a rational-field algebra");
            int idx = basisIndex(dim);
            if (sign < 0) coeff = -coeff;
            v[static_cast<size_t>(idx)] += coeff;
            first = false;
            skipSpace();
            if (done()) return v;
            if (peek() != '+' && peek() != '-') fail("expected '+', '-' or end of expression");
        }
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_;
    int base_;
};

std::string stripComment(const std::string& line) {
    size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

}  // namespace

Algebra parseAlgebra(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string rawLine;
    int lineNo = 0;
    int dim = -1;
    Field field = Field::Rational;
    bool fieldSeen = false;
    bool productSeen = false;
    std::map<std::pair<int, int>, Vec> products;

    while (std::getline(in, rawLine)) {
        ++lineNo;
        if (!rawLine.empty() && rawLine.back() == '\r') rawLine.pop_back();
        std::string line = stripComment(rawLine);
        if (blank(line)) continue;
        LineScanner sc(line, lineNo);
        char c = sc.peek();
        if (c == 'd') {
            for (char want : {'d', 'i', 'm'}) sc.expect(want, "in 'dim'");
            if (dim >= 0) sc.fail("duplicate dim line");
            BigInt d = sc.integer();
            if (d < 0 || d > 64) sc.fail("dimension must be between 0 and 64");
            dim = static_cast<int>(d);
            if (!sc.done()) sc.fail("unexpected input after the dimension");
        } else if (c == 'f') {
            for (char want : {'f', 'i', 'e', 'l', 'd'}) sc.expect(want, "in 'field'");
            if (fieldSeen) sc.fail("duplicate field line");
            if (productSeen) sc.fail("field line must precede product lines");
            sc.expect('Q', "as the field name (Q or Qi)");
            field = sc.tryTake('i') ? Field::Gaussian : Field::Rational;
            fieldSeen = true;
            if (!sc.done()) sc.fail("unexpected input after the field name");
        } else if (c == 'e') {
            if (dim < 0) sc.fail("dim line must come before product lines");
            productSeen = true;
            int i = sc.basisIndex(dim);
            sc.expect('*', "between the two basis factors");
            int j = sc.basisIndex(dim);
            sc.expect('=', "after the product left-hand side");
            Vec rhs = sc.linComb(dim, field);
            if (!products.emplace(std::make_pair(i, j), rhs).second)
                sc.fail("duplicate product line for e" + std::to_string(i + 1) + "*e" +
                        std::to_string(j + 1));
        } else {
            sc.fail("expected 'dim', 'field', a product line or a comment");
        }
    }
    if (dim < 0) throw ParseError(lineNo + 1, 1, "missing dim line");
    Vec tensor(static_cast<size_t>(dim) * static_cast<size_t>(dim) * static_cast<size_t>(dim));
    for (const auto& [ij, rhs] : products)
        for (int k = 0; k < dim; ++k)
            tensor[(static_cast<size_t>(ij.first) * static_cast<size_t>(dim) +
                    static_cast<size_t>(ij.second)) *
                       static_cast<size_t>(dim) +
                   static_cast<size_t>(k)] = rhs[static_cast<size_t>(k)];
    return Algebra(dim, field, std::move(tensor), name);
}

namespace {

std::string scalarCoeffString(const Scalar& c) {
    if (c.isRational()) return rationalStr(c.real());
    return "(" + rationalStr(c.real()) + ")+(" + rationalStr(c.imag()) + ")i";
}

}  // namespace

std::string linCombString(const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < v.size(); ++k) {
        const Scalar& c = v[k];
        if (c.isZero()) continue;
        std::string basis = "e" + std::to_string(k + 1);
        bool negRational = c.isRational() && c.real() < 0;
        if (first) {
            if (c.isOne())
                os << basis;
            else if (c == Scalar(-1))
                os << "-" << basis;
            else
                os << scalarCoeffString(c) << "*" << basis;
            first = false;
        } else {
            if (c.isOne())
                os << " + " << basis;
            else if (c == Scalar(-1))
                os << " - " << basis;
            else if (negRational)
                os << " - " << scalarCoeffString(-c) << "*" << basis;
            else
                os << " + " << scalarCoeffString(c) << "*" << basis;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string serializeAlgebra(const Algebra& a) {
    std::ostringstream os;
    os << "dim " << a.dim() << "\n";
    os << "field " << fieldName(a.field()) << "\n";
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Vec p = a.basisProduct(i, j);
            if (vecIsZero(p)) continue;
            os << "e" << (i + 1) << "*e" << (j + 1) << " = " << linCombString(p) << "\n";
        }
    return os.str();
}

Vec parseLinComb(const std::string& text, int dim, Field field) {
    LineScanner sc(text, 1);
    Vec v = sc.linComb(dim, field);
    return v;
}

std::vector<Vec> parseVectorList(const std::string& text, int dim, Field field) {
    std::vector<Vec> out;
    size_t start = 0;
    int col = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string part =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        LineScanner sc(part, 1, col);
        out.push_back(sc.linComb(dim, field));
        if (comma == std::string::npos) break;
        start = comma + 1;
        col = static_cast<int>(start);
    }
    return out;
}

}  // namespace lsa
