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

#include "lsa/scalar.hpp"

namespace lsa {

std::string rationalStr(const BigRational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

std::string Scalar::str() const {
    if (im_.is_zero()) return rationalStr(re_);
    return "(" + rationalStr(re_) + ")+(" + rationalStr(im_) + ")i";
}

bool vecIsZero(const Vec& v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

Vec vecAdd(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vecAdd: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vecSub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vecSub: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vecScale(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Vec zeroVec(int n) { return Vec(static_cast<size_t>(n)); }

Vec unitVec(int n, int i) {
    Vec v(static_cast<size_t>(n));
    v.at(static_cast<size_t>(i)) = Scalar(1);
    return v;
}

}  // namespace lsa
