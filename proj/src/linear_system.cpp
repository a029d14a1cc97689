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

#include "cutgen/linear_system.hpp"

#include <stdexcept>

namespace cutgen {

LinearSystem::LinearSystem(std::size_t num_columns)
    : cols_(num_columns), row_of_col_(num_columns, -1) {}

void LinearSystem::add_equation(
    const std::vector<std::pair<std::size_t, Rational>>& terms) {
  std::vector<Rational> row(cols_, Rational(0));
  for (const auto& [col, coeff] : terms) {
    if (col >= cols_) throw std::out_of_range("LinearSystem: column out of range");
    row[col] += coeff;
  }

  // Forward elimination against the pivot rows.  Pivot rows have zeros
  // left of their pivot, so a single left-to-right pass suffices.
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c].is_zero()) continue;
    const long r = row_of_col_[c];
    if (r < 0) continue;
    const Rational factor = row[c];
    const std::vector<Rational>& pivot_row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t j = c; j < cols_; ++j) {
      if (!pivot_row[j].is_zero()) row[j] -= factor * pivot_row[j];
    }
  }

  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!row[c].is_zero()) { lead = c; break; }
  }
  if (lead == cols_) return;  // dependent equation

  const Rational inv = row[lead];
  for (std::size_t j = lead; j < cols_; ++j) {
    if (!row[j].is_zero()) row[j] /= inv;
  }

  // Back-eliminate the new pivot column from existing rows.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational& entry = rows_[r][lead];
    if (entry.is_zero()) continue;
    const Rational factor = entry;
    for (std::size_t j = lead; j < cols_; ++j) {
      if (!row[j].is_zero()) rows_[r][j] -= factor * row[j];
    }
  }

  row_of_col_[lead] = static_cast<long>(rows_.size());
  pivot_col_.push_back(lead);
  rows_.push_back(std::move(row));
}

std::vector<std::size_t> LinearSystem::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row_of_col_[c] < 0) out.push_back(c);
  }
  return out;
}

std::vector<Rational> LinearSystem::nullspace_vector(std::size_t free_col) const {
  if (free_col >= cols_ || row_of_col_[free_col] >= 0) {
    throw std::invalid_argument("LinearSystem: not a free column");
  }
  std::vector<Rational> x(cols_, Rational(0));
  x[free_col] = Rational(1);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    // Pivot row: x_pivot + sum over free columns a_j x_j = 0.
    x[pivot_col_[r]] = -rows_[r][free_col];
  }
  return x;
}

}  // namespace cutgen
