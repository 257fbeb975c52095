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

#include "lsa/matrix.hpp"

#include <sstream>

namespace lsa {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::fromRows(const std::vector<Vec>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw std::invalid_argument("Matrix::fromRows: row length mismatch");
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    }
    return m;
}

Vec Matrix::row(int r) const {
    Vec v(static_cast<size_t>(cols_));
    for (int c = 0; c < cols_; ++c) v[static_cast<size_t>(c)] = at(r, c);
    return v;
}

Vec Matrix::col(int c) const {
    Vec v(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<size_t>(r)] = at(r, c);
    return v;
}

void Matrix::setRow(int r, const Vec& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("setRow: length mismatch");
    for (int c = 0; c < cols_; ++c) at(r, c) = v[static_cast<size_t>(c)];
}

bool Matrix::isZero() const {
    for (const auto& x : data_)
        if (!x.isZero()) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix +: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix -: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.isZero()) continue;
            for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = c * m.data_[i];
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: length mismatch");
    Vec r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Scalar s(0);
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Scalar Matrix::trace() const {
    if (!isSquare()) throw std::invalid_argument("trace: not square");
    Scalar s(0);
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

Matrix Matrix::pow(int k) const {
    if (!isSquare()) throw std::invalid_argument("pow: not square");
    Matrix r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

std::vector<int> Matrix::rrefInPlace() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!at(i, c).isZero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Scalar inv = at(r, c).inverse();
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).isZero()) continue;
            Scalar f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rrefInPlace().size());
}

std::vector<Vec> Matrix::nullspaceBasis() const {
    Matrix m = *this;
    std::vector<int> pivots = m.rrefInPlace();
    std::vector<bool> isPivot(static_cast<size_t>(cols_), false);
    for (int c : pivots) isPivot[static_cast<size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < cols_; ++f) {
        if (isPivot[static_cast<size_t>(f)]) continue;
        Vec v = zeroVec(cols_);
        v[static_cast<size_t>(f)] = Scalar(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[static_cast<size_t>(pivots[pr])] = -m.at(static_cast<int>(pr), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> Matrix::charpoly() const {
    if (!isSquare()) throw std::invalid_argument("charpoly: not square");
    int n = rows_;
    // Faddeev-LeVerrier: exact over a char-0 field.
    std::vector<Scalar> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = Scalar(1);
    Matrix M = Matrix(n, n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) M.at(i, i) += c[static_cast<size_t>(n - k + 1)];
        M = (*this) * M;
        c[static_cast<size_t>(n - k)] = -(M.trace() / Scalar(k));
    }
    return c;
}

bool Matrix::isNilpotent() const {
    if (!isSquare()) throw std::invalid_argument("isNilpotent: not square");
    Matrix p = *this;
    for (int k = 1; k <= rows_; ++k) {
        if (p.isZero()) return true;
        p = p * (*this);
    }
    return p.isZero();
}

std::optional<Matrix> Matrix::inverse() const {
    if (!isSquare()) throw std::invalid_argument("inverse: not square");
    int n = rows_;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    std::vector<int> pivots = aug.rrefInPlace();
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Matrix Matrix::fromVectorized(const Vec& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols)
        throw std::invalid_argument("fromVectorized: size mismatch");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

std::vector<Matrix> Matrix::productSpanClosure(const std::vector<Matrix>& gens, int matDim) {
    std::vector<Matrix> basisMats;
    // Incremental row reduction: one reduced row (with remembered pivot) per
    // independent matrix found so far.
    std::vector<std::pair<int, Vec>> reduced;
    auto add = [&](const Matrix& m) {
        Vec v = m.vectorized();
        for (const auto& [pivot, row] : reduced) {
            const Scalar& c = v[static_cast<size_t>(pivot)];
            if (c.isZero()) continue;
            Scalar f = c;
            for (size_t i = 0; i < v.size(); ++i) v[i] -= f * row[i];
        }
        int pivot = -1;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].isZero()) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) return;
        Scalar inv = v[static_cast<size_t>(pivot)].inverse();
        for (auto& x : v) x *= inv;
        reduced.emplace_back(pivot, std::move(v));
        basisMats.push_back(m);
    };
    for (const Matrix& g : gens) add(g);
    size_t frontier = 0;
    while (frontier < basisMats.size()) {
        size_t end = basisMats.size();
        for (size_t i = frontier; i < end; ++i)
            for (const Matrix& g : gens) {
                add(g * basisMats[i]);
                add(basisMats[i] * g);
            }
        frontier = end;
    }
    return basisMats;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

}  // namespace lsa
