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

#ifndef LSAKIT_SCALAR_HPP
#define LSAKIT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsa {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coefficient field of an algebra: the rationals or the Gaussian rationals.
enum class Field { Rational, Gaussian };

inline const char* fieldName(Field f) { return f == Field::Rational ? "Q" : "Qi"; }

/// Exact scalar: a Gaussian rational re + im*i. Values with im == 0 serve as
/// plain rationals; rational-tagged algebras enforce im == 0 at construction.
/// Numerators/denominators are arbitrary-precision; cpp_rational keeps them
/// canonical (denominator > 0, gcd = 1).
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}
    Scalar(long n, long d) : re_(BigRational(n, d)) {}
    explicit Scalar(BigRational re) : re_(std::move(re)) {}
    Scalar(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(BigRational(0), BigRational(1)); }

    const BigRational& real() const { return re_; }
    const BigRational& imag() const { return im_; }

    bool isZero() const { return re_.is_zero() && im_.is_zero(); }
    bool isOne() const { return re_ == 1 && im_.is_zero(); }
    bool isRational() const { return im_.is_zero(); }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// re^2 + im^2 (a nonnegative rational, zero iff the scalar is zero).
    BigRational normSq() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) {
        BigRational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.isZero()) throw std::domain_error("Scalar: division by zero");
        BigRational n = o.normSq();
        Scalar c = o.conj();
        *this *= c;
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const {
        Scalar one(1);
        return one /= *this;
    }

    /// Deterministic total order: lexicographic on (re, im). Used for
    /// tie-breaking in canonical outputs, not a field order.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (a.re_ < b.re_) return std::strong_ordering::less;
        if (b.re_ < a.re_) return std::strong_ordering::greater;
        if (a.im_ < b.im_) return std::strong_ordering::less;
        if (b.im_ < a.im_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text form: "2", "-1/3", "(1/2)+(3)i", "(0)+(-1)i".
    std::string str() const;

private:
    BigRational re_{0};
    BigRational im_{0};
};

std::string rationalStr(const BigRational& q);

using Vec = std::vector<Scalar>;

bool vecIsZero(const Vec& v);
Vec vecAdd(const Vec& a, const Vec& b);
Vec vecSub(const Vec& a, const Vec& b);
Vec vecScale(const Scalar& c, const Vec& v);
Vec zeroVec(int n);
/// Standard basis vector e_i (0-based index) in dimension n.
Vec unitVec(int n, int i);

}  // namespace lsa

#endif
