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

#include "lsa/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lsa {

Polynomial Polynomial::operator-() const {
    Vec v = c_;
    for (auto& s : v) s = -s;
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Vec v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) return Polynomial();
    Vec v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].isZero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
    Vec v = p.c_;
    for (auto& x : v) x *= s;
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.isZero()) throw std::domain_error("divmod: division by zero polynomial");
    Polynomial r = a;
    Vec q(a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0);
    Scalar lead = b.leading();
    while (!r.isZero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Scalar f = r.leading() / lead;
        q[static_cast<size_t>(shift)] = f;
        Vec rv = r.coeffs();
        for (int k = 0; k <= b.degree(); ++k)
            rv[static_cast<size_t>(k + shift)] -= f * b.coeff(k);
        r = Polynomial(std::move(rv));
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::derivative() const {
    if (degree() <= 0) return Polynomial();
    Vec v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(v));
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Matrix Polynomial::evalMatrix(const Matrix& m) const {
    if (!m.isSquare()) throw std::invalid_argument("evalMatrix: not square");
    Matrix r(m.rows(), m.rows());
    for (size_t i = c_.size(); i-- > 0;) {
        r = m * r;
        for (int d = 0; d < m.rows(); ++d) r.at(d, d) += c_[i];
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (isZero()) return *this;
    return leading().inverse() * *this;
}

Polynomial Polynomial::conjCoeffs() const {
    Vec v = c_;
    for (auto& s : v) s = s.conj();
    return Polynomial(std::move(v));
}

Polynomial Polynomial::composeLinear(const Scalar& a, const Scalar& b) const {
    Polynomial lin(Vec{b, a});
    Polynomial r;
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + Polynomial::constant(c_[i]);
    return r;
}

bool Polynomial::hasRationalCoeffs() const {
    for (const auto& s : c_)
        if (!s.isRational()) return false;
    return true;
}

std::string Polynomial::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Scalar s = coeff(k);
        if (s.isZero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        std::string cs;
        if (k == 0)
            cs = s.str();
        else if (s.isOne())
            cs = "";
        else if (s == Scalar(-1))
            cs = "-";
        else
            cs = s.str() + "*";
        if (first) {
            os << cs << mono;
            first = false;
        } else if (s.isRational() && s.real() < 0) {
            Scalar neg = -s;
            std::string ns = (k != 0 && neg.isOne()) ? "" : neg.str() + (k == 0 ? "" : "*");
            os << " - " << ns << mono;
        } else {
            os << " + " << cs << mono;
        }
    }
    return os.str();
}

Polynomial polyGcd(Polynomial a, Polynomial b) {
    while (!b.isZero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.isZero() ? a : a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefreeDecomposition(const Polynomial& p) {
    if (p.isZero()) throw std::domain_error("squarefreeDecomposition: zero polynomial");
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = p.monic();
    if (f.degree() == 0) return out;
    Polynomial c = polyGcd(f, f.derivative());
    Polynomial w = divmod(f, c).first;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = polyGcd(w, c);
        Polynomial fac = divmod(w, y).first;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = std::move(y);
        c = divmod(c, w).first;
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer helpers for rational root extraction and Kronecker interpolation.
// ---------------------------------------------------------------------------

namespace {

using boost::multiprecision::powm;

bool millerRabin(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

BigInt pollardBrent(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        BigInt q = 1;
        int step = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = (q * diff) % n;
            if (++step % 32 == 0) {
                d = gcd(q, n);
                if (d == n) break;
            }
        }
        if (d == 1 || d == 0) d = gcd(q, n);
        if (d > 1 && d < n) return d;
    }
}

void factorIntegerInto(BigInt n, std::map<BigInt, int>& out) {
    if (n <= 1) return;
    for (long p = 2; p < 10000 && BigInt(p) * p <= n; ++p) {
        while (n % p == 0) {
            ++out[BigInt(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (millerRabin(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollardBrent(n);
    factorIntegerInto(d, out);
    factorIntegerInto(n / d, out);
}

std::vector<BigInt> divisorsOf(const BigInt& n) {
    std::map<BigInt, int> pf;
    factorIntegerInto(abs(n), pf);
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : pf) {
        size_t base = divs.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Integer-coefficient copy of a rational polynomial (denominators cleared,
// content removed, leading coefficient positive).
std::vector<BigInt> primitiveIntegerCoeffs(const Polynomial& p) {
    BigInt lcm = 1;
    for (const auto& s : p.coeffs()) lcm = lcm / gcd(lcm, denominator(s.real())) * denominator(s.real());
    std::vector<BigInt> v;
    v.reserve(p.coeffs().size());
    BigInt content = 0;
    for (const auto& s : p.coeffs()) {
        BigRational q = s.real() * BigRational(lcm);
        v.push_back(numerator(q));
        content = gcd(content, numerator(q));
    }
    if (content == 0) content = 1;
    if (v.back() < 0) content = -content;
    for (auto& x : v) x /= content;
    return v;
}

BigInt evalIntPoly(const std::vector<BigInt>& f, const BigInt& x) {
    BigInt r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

Polynomial fromIntCoeffs(const std::vector<BigInt>& f) {
    Vec v;
    v.reserve(f.size());
    for (const auto& x : f) v.emplace_back(BigRational(x));
    return Polynomial(std::move(v));
}

// Rational roots of a rational polynomial with p(0) != 0, each with its
// multiplicity divided out of p. Deterministic candidate order.
std::vector<std::pair<Scalar, int>> extractRationalRoots(Polynomial& p) {
    std::vector<std::pair<Scalar, int>> roots;
    if (p.degree() < 1) return roots;
    std::vector<BigInt> f = primitiveIntegerCoeffs(p);
    std::vector<BigInt> numCands = divisorsOf(f.front());
    std::vector<BigInt> denCands = divisorsOf(f.back());
    std::vector<Scalar> candidates;
    for (const BigInt& den : denCands)
        for (const BigInt& num : numCands) {
            if (gcd(num, den) != 1) continue;
            candidates.emplace_back(BigRational(num, den));
            candidates.emplace_back(BigRational(-num, den));
        }
    std::sort(candidates.begin(), candidates.end(),
              [](const Scalar& a, const Scalar& b) { return a < b; });
    for (const Scalar& cand : candidates) {
        int mult = 0;
        while (p.degree() >= 1 && p.eval(cand).isZero()) {
            p = divmod(p, Polynomial(Vec{-cand, Scalar(1)})).first;
            ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
        if (p.degree() < 1) break;
    }
    return roots;
}

constexpr long kKroneckerCandidateBudget = 4000000;

// One irreducible factor of a primitive squarefree integer polynomial with
// no rational roots, or nullopt when the polynomial is irreducible.
// Ascending target degree keeps every returned factor irreducible.
std::optional<Polynomial> kroneckerFactor(const Polynomial& p) {
    int d = p.degree();
    if (d <= 3) return std::nullopt;
    std::vector<BigInt> f = primitiveIntegerCoeffs(p);
    long tried = 0;
    for (int k = 2; k <= d / 2; ++k) {
        std::vector<BigInt> points;
        for (long t = 0; static_cast<int>(points.size()) < k + 1; ++t) {
            long x = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);  // 0, -1, 1, -2, 2, ...
            points.emplace_back(x);
        }
        std::vector<std::vector<BigInt>> valueChoices;
        for (const BigInt& x : points) {
            BigInt v = evalIntPoly(f, x);
            std::vector<BigInt> divs = divisorsOf(v);
            std::vector<BigInt> signedDivs;
            for (const BigInt& dd : divs) {
                signedDivs.push_back(dd);
                signedDivs.push_back(-dd);
            }
            valueChoices.push_back(std::move(signedDivs));
        }
        valueChoices[0].erase(
            std::remove_if(valueChoices[0].begin(), valueChoices[0].end(),
                           [](const BigInt& x) { return x < 0; }),
            valueChoices[0].end());  // sign symmetry: fix g(x0) > 0
        std::vector<size_t> odo(static_cast<size_t>(k) + 1, 0);
        while (true) {
            if (++tried > kKroneckerCandidateBudget)
                throw std::runtime_error("factorRational: candidate budget exceeded");
            // Lagrange interpolation through (points[i], chosen[i]).
            Polynomial g;
            for (int i = 0; i <= k; ++i) {
                Polynomial li = Polynomial::constant(Scalar(BigRational(valueChoices[static_cast<size_t>(i)][odo[static_cast<size_t>(i)]])));
                for (int j = 0; j <= k; ++j) {
                    if (i == j) continue;
                    Scalar denom(BigRational(points[static_cast<size_t>(i)] - points[static_cast<size_t>(j)]));
                    li = li * Polynomial(Vec{Scalar(BigRational(-points[static_cast<size_t>(j)])) / denom,
                                             Scalar(1) / denom});
                }
                g = g + li;
            }
            if (g.degree() == k) {
                bool integral = true;
                for (const auto& s : g.coeffs())
                    if (denominator(s.real()) != 1) {
                        integral = false;
                        break;
                    }
                if (integral) {
                    auto [q, r] = divmod(p, g);
                    if (r.isZero()) return g;
                }
            }
            // odometer
            size_t pos = 0;
            while (pos < odo.size()) {
                if (++odo[pos] < valueChoices[pos].size()) break;
                odo[pos] = 0;
                ++pos;
            }
            if (pos == odo.size()) break;
        }
    }
    return std::nullopt;
}

// Monic irreducible factors of a monic squarefree rational polynomial.
std::vector<Polynomial> factorSquarefreeRational(Polynomial p) {
    std::vector<Polynomial> out;
    if (p.degree() < 1) return out;
    if (!p.coeff(0).isZero()) {
        // fall through
    } else {
        out.push_back(Polynomial::x());
        p = divmod(p, Polynomial::x()).first;
    }
    for (const auto& [root, mult] : extractRationalRoots(p))
        for (int i = 0; i < mult; ++i) out.push_back(Polynomial(Vec{-root, Scalar(1)}));
    while (p.degree() > 0) {
        if (p.degree() > 8)
            throw std::runtime_error("factorRational: residual degree exceeds Kronecker cap (8)");
        std::optional<Polynomial> g = kroneckerFactor(p);
        if (!g) {
            out.push_back(p.monic());
            break;
        }
        out.push_back(g->monic());
        p = divmod(p, *g).first;
    }
    return out;
}

void sortFactors(std::vector<std::pair<Polynomial, int>>& factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return polyLess(a.first, b.first); });
}

}  // namespace

bool polyLess(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = 0; k <= a.degree(); ++k) {
        auto c = a.coeff(k) <=> b.coeff(k);
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<std::pair<Polynomial, int>> factorRational(const Polynomial& p) {
    if (p.isZero()) throw std::domain_error("factorRational: zero polynomial");
    if (!p.hasRationalCoeffs())
        throw std::domain_error("factorRational: coefficients are not rational");
    if (p.degree() > 12) throw std::domain_error("factorRational: degree cap (12) exceeded");
    std::vector<std::pair<Polynomial, int>> out;
    for (const auto& [part, mult] : squarefreeDecomposition(p))
        for (const Polynomial& f : factorSquarefreeRational(part))
            out.emplace_back(f, mult);
    // Merge duplicates (a factor can only repeat across distinct squarefree
    // parts if something upstream went wrong, but keep the output canonical).
    sortFactors(out);
    std::vector<std::pair<Polynomial, int>> merged;
    for (auto& fm : out) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    return merged;
}

namespace {

// Monic irreducible factors over Q(i) of a monic squarefree polynomial,
// via factoring the norm of a shifted copy over Q.
std::vector<Polynomial> factorSquarefreeGaussian(const Polynomial& p) {
    std::vector<Polynomial> out;
    if (p.degree() < 1) return out;
    if (p.degree() == 1) {
        out.push_back(p.monic());
        return out;
    }
    for (long s = 0; s <= 24; ++s) {
        Polynomial shifted = p.composeLinear(Scalar(1), Scalar(BigRational(0), BigRational(-s)));
        Polynomial norm = shifted * shifted.conjCoeffs();
        if (!norm.hasRationalCoeffs())
            throw std::logic_error("factorGaussian: norm polynomial not rational");
        if (polyGcd(norm, norm.derivative()).degree() != 0) continue;
        std::vector<std::pair<Polynomial, int>> nf = factorRational(norm);
        Scalar shiftBack(BigRational(0), BigRational(s));
        Polynomial rest = p.monic();
        for (const auto& [g, mult] : nf) {
            (void)mult;  // squarefree norm: all multiplicities 1
            Polynomial h = polyGcd(rest, g.composeLinear(Scalar(1), shiftBack));
            if (h.degree() >= 1) {
                out.push_back(h.monic());
                rest = divmod(rest, h).first;
            }
        }
        if (rest.degree() != 0)
            throw std::logic_error("factorGaussian: factors do not exhaust input");
        return out;
    }
    throw std::runtime_error("factorGaussian: no squarefree norm shift found");
}

}  // namespace

std::vector<std::pair<Polynomial, int>> factorGaussian(const Polynomial& p) {
    if (p.isZero()) throw std::domain_error("factorGaussian: zero polynomial");
    if (p.degree() > 12) throw std::domain_error("factorGaussian: degree cap (12) exceeded");
    std::vector<std::pair<Polynomial, int>> out;
    for (const auto& [part, mult] : squarefreeDecomposition(p))
        for (const Polynomial& f : factorSquarefreeGaussian(part))
            out.emplace_back(f, mult);
    sortFactors(out);
    return out;
}

std::vector<std::pair<Polynomial, int>> factorOverField(const Polynomial& p, Field field) {
    return field == Field::Rational ? factorRational(p) : factorGaussian(p);
}

}  // namespace lsa
