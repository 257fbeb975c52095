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

#include "lsa/subspace.hpp"

#include <sstream>

namespace lsa {

void Subspace::checkSameAmbient(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
}

Subspace Subspace::span(int ambientDim, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambientDim)
            throw std::invalid_argument("Subspace::span: vector length != ambient dimension");
    Matrix m = Matrix::fromRows(vectors, ambientDim);
    std::vector<int> pivots = m.rrefInPlace();
    Subspace s(ambientDim);
    Matrix basis(static_cast<int>(pivots.size()), ambientDim);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
        basis.setRow(r, m.row(r));
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::whole(int ambientDim) {
    Subspace s(ambientDim);
    s.basis_ = Matrix::identity(ambientDim);
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("Subspace::reduce: length mismatch");
    Vec r = v;
    std::vector<int> pivots = pivotColumns();
    for (size_t k = 0; k < pivots.size(); ++k) {
        const Scalar& c = r[static_cast<size_t>(pivots[k])];
        if (c.isZero()) continue;
        Scalar f = c;
        for (int j = 0; j < ambient_; ++j)
            r[static_cast<size_t>(j)] -= f * basis_.at(static_cast<int>(k), j);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return vecIsZero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    checkSameAmbient(*this, other);
    for (int r = 0; r < other.dim(); ++r)
        if (!contains(other.basisVector(r))) return false;
    return true;
}

Vec Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) throw std::invalid_argument("Subspace::coordinates: not a member");
    std::vector<int> pivots = pivotColumns();
    Vec coords(pivots.size());
    for (size_t k = 0; k < pivots.size(); ++k)
        coords[k] = v[static_cast<size_t>(pivots[k])];
    return coords;
}

std::vector<int> Subspace::pivotColumns() const {
    std::vector<int> pivots;
    for (int r = 0; r < basis_.rows(); ++r)
        for (int c = 0; c < ambient_; ++c)
            if (!basis_.at(r, c).isZero()) {
                pivots.push_back(c);
                break;
            }
    return pivots;
}

std::vector<int> Subspace::freeColumns() const {
    std::vector<bool> isPivot(static_cast<size_t>(ambient_), false);
    for (int c : pivotColumns()) isPivot[static_cast<size_t>(c)] = true;
    std::vector<int> free;
    for (int c = 0; c < ambient_; ++c)
        if (!isPivot[static_cast<size_t>(c)]) free.push_back(c);
    return free;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    Subspace::checkSameAmbient(a, b);
    std::vector<Vec> rows;
    for (int r = 0; r < a.dim(); ++r) rows.push_back(a.basisVector(r));
    for (int r = 0; r < b.dim(); ++r) rows.push_back(b.basisVector(r));
    return Subspace::span(a.ambient_, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    Subspace::checkSameAmbient(a, b);
    // x in both spans: x = s^T A = t^T B. Solve A^T s - B^T t = 0.
    int n = a.ambient_;
    int ka = a.dim(), kb = b.dim();
    if (ka == 0 || kb == 0) return Subspace::zero(n);
    Matrix sys(n, ka + kb);
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < ka; ++r) sys.at(i, r) = a.basis_.at(r, i);
        for (int r = 0; r < kb; ++r) sys.at(i, ka + r) = -b.basis_.at(r, i);
    }
    std::vector<Vec> vecs;
    for (const Vec& null : sys.nullspaceBasis()) {
        Vec x = zeroVec(n);
        for (int r = 0; r < ka; ++r)
            for (int i = 0; i < n; ++i)
                x[static_cast<size_t>(i)] += null[static_cast<size_t>(r)] * a.basis_.at(r, i);
        vecs.push_back(std::move(x));
    }
    return Subspace::span(n, vecs);
}

namespace {

std::string linCombStr(const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
        const Scalar& c = v[i];
        if (c.isZero()) continue;
        std::string e = "e" + std::to_string(i + 1);
        if (first) {
            if (c.isOne())
                os << e;
            else if (c == Scalar(-1))
                os << "-" << e;
            else
                os << c.str() << "*" << e;
            first = false;
        } else {
            if (c.isOne())
                os << " + " << e;
            else if (c == Scalar(-1))
                os << " - " << e;
            else if (c.isRational() && c.real() < 0)
                os << " - " << (-c).str() << "*" << e;
            else
                os << " + " << c.str() << "*" << e;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string Subspace::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    os << "span{";
    for (int r = 0; r < dim(); ++r) {
        if (r) os << ", ";
        os << linCombStr(basisVector(r));
    }
    os << "}";
    return os.str();
}

}  // namespace lsa
