// Copyright 2026 The cutgen authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUTGEN_LINEAR_SYSTEM_HPP_
#define CUTGEN_LINEAR_SYSTEM_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "cutgen/rational.hpp"

namespace cutgen {

// Homogeneous linear system over the rationals, maintained in reduced row
// echelon form by exact elimination.  Equations are added incrementally;
// dependent rows vanish.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_columns);

  // Adds sum_i coeff_i * x_{col_i} = 0.  Repeated columns accumulate.
  void add_equation(const std::vector<std::pair<std::size_t, Rational>>& terms);

  std::size_t columns() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t nullity() const { return cols_ - rows_.size(); }

  // Columns without a pivot, ascending; one nullspace basis vector per entry.
  std::vector<std::size_t> free_columns() const;

  // Basis vector with free column `free_col` set to 1, all other free
  // columns 0, pivot columns back-substituted.
  std::vector<Rational> nullspace_vector(std::size_t free_col) const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;   // RREF pivot rows
  std::vector<std::size_t> pivot_col_;        // pivot column of rows_[r]
  std::vector<long> row_of_col_;              // -1 when the column is free
};

}  // namespace cutgen

#endif  // CUTGEN_LINEAR_SYSTEM_HPP_
