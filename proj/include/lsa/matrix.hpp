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

#ifndef LSAKIT_MATRIX_HPP
#define LSAKIT_MATRIX_HPP

#include <optional>

#include "lsa/scalar.hpp"

namespace lsa {

/// Dense matrix of exact scalars, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    }

    static Matrix identity(int n);
    static Matrix fromRows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return data_[idx(r, c)]; }
    const Scalar& at(int r, int c) const { return data_[idx(r, c)]; }

    Vec row(int r) const;
    Vec col(int c) const;
    void setRow(int r, const Vec& v);

    bool isZero() const;
    bool isSquare() const { return rows_ == cols_; }

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix transpose() const;
    Scalar trace() const;
    Matrix pow(int k) const;

    /// In-place reduced row echelon form. Returns the pivot columns in order.
    std::vector<int> rrefInPlace();
    int rank() const;

    /// Canonical basis of {x : M x = 0}, one basis vector per returned row;
    /// deterministic (free columns ascending, then RREF-canonicalized upstream).
    std::vector<Vec> nullspaceBasis() const;

    /// Characteristic polynomial coefficients, constant term first
    /// (size n+1, leading coefficient 1). Faddeev-LeVerrier; exact.
    std::vector<Scalar> charpoly() const;

    /// M^k = 0 for some k <= rows().
    bool isNilpotent() const;

    std::optional<Matrix> inverse() const;

    /// Row-major flattening, used to treat operators as vectors of length rows*cols.
    Vec vectorized() const { return data_; }
    static Matrix fromVectorized(const Vec& v, int rows, int cols);

    std::string str() const;

    /// Span closure of square matrices under matrix multiplication: a basis
    /// of the span of all words of length >= 1 in the generators, in
    /// deterministic discovery order.
    static std::vector<Matrix> productSpanClosure(const std::vector<Matrix>& gens, int matDim);

private:
    size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("Matrix: index out of range");
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    Vec data_;
};

}  // namespace lsa

#endif
