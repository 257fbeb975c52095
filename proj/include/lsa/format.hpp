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

#ifndef LSAKIT_FORMAT_HPP
#define LSAKIT_FORMAT_HPP

#include "lsa/algebra.hpp"

namespace lsa {

/// Parse failure with 1-based line/column position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Line-oriented algebra description:
///   # comment
///   dim N
///   field Q | Qi        (optional, defaults to Q)
///   ei*ej = <lin-comb>
/// where <lin-comb> is `c1*ek1 [+- c2*ek2 ...]`, coefficients rational like
/// `2`, `-1/3` or Gaussian like `(1/2)+(3)i`, a bare `ek` meaning 1, or `0`.
/// Unspecified products are zero; duplicate (i,j) lines are errors.
Algebra parseAlgebra(const std::string& text, const std::string& name = "");

/// Canonical text form; parseAlgebra(serializeAlgebra(a)) equals a.
std::string serializeAlgebra(const Algebra& a);

/// One lin-comb in the grammar above, as a coordinate vector of length dim.
Vec parseLinComb(const std::string& text, int dim, Field field);

/// Comma-separated lin-combs (the CLI's ideal spec).
std::vector<Vec> parseVectorList(const std::string& text, int dim, Field field);

/// Canonical lin-comb rendering ("e1 + 2*e3", "0").
std::string linCombString(const Vec& v);

}  // namespace lsa

#endif
