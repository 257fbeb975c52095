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

#ifndef LSAKIT_POLYNOMIAL_HPP
#define LSAKIT_POLYNOMIAL_HPP

#include "lsa/matrix.hpp"

namespace lsa {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Vec coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Polynomial constant(const Scalar& s) { return Polynomial(Vec{s}); }
    static Polynomial x() { return Polynomial(Vec{Scalar(0), Scalar(1)}); }

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Vec& coeffs() const { return c_; }
    Scalar coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(k)] : Scalar(0);
    }
    Scalar leading() const {
        if (isZero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool isMonic() const { return !isZero() && leading().isOne(); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// (quotient, remainder) with deg r < deg b; exact field division.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    Polynomial derivative() const;
    Scalar eval(const Scalar& x) const;
    Matrix evalMatrix(const Matrix& m) const;  // p(M), square M
    Polynomial monic() const;
    Polynomial conjCoeffs() const;
    /// p(a*x + b)
    Polynomial composeLinear(const Scalar& a, const Scalar& b) const;
    bool hasRationalCoeffs() const;

    std::string str() const;  // "x^2 - 1/3*x + 2" style, highest degree first

private:
    void normalize() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }
    Vec c_;
};

Polynomial polyGcd(Polynomial a, Polynomial b);  // monic gcd (or zero)

/// Squarefree decomposition over a char-0 field: product of (factor^mult)
/// times the leading coefficient equals the input.
std::vector<std::pair<Polynomial, int>> squarefreeDecomposition(const Polynomial& p);

/// Irreducible monic factors over Q with multiplicities, canonically ordered
/// (degree, then coefficient sequence). Product times leading(p) equals p.
/// Throws on the zero polynomial, degree > 12, or rational coefficients absent.
std::vector<std::pair<Polynomial, int>> factorRational(const Polynomial& p);

/// Irreducible monic factors over Q(i); same contract as factorRational.
/// Backed by norm polynomials, so it inherits the rational degree caps.
std::vector<std::pair<Polynomial, int>> factorGaussian(const Polynomial& p);

std::vector<std::pair<Polynomial, int>> factorOverField(const Polynomial& p, Field field);

/// Deterministic canonical order used for factor lists.
bool polyLess(const Polynomial& a, const Polynomial& b);

}  // namespace lsa

#endif
