#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "citetrack/errors.hpp"

namespace citetrack {

// Rectangular numeric table with uniquely named columns.
class experiment_table {
 public:
  explicit experiment_table(std::vector<std::string> columns)
      : columns_(std::move(columns)) {
    if (columns_.empty())
      throw validation_error("experiment_table: at least one column required");
    for (std::size_t i = 0; i < columns_.size(); ++i)
      for (std::size_t j = i + 1; j < columns_.size(); ++j)
        if (columns_[i] == columns_[j])
          throw validation_error("experiment_table: duplicate column name '" +
                                 columns_[i] + "'");
  }

  void add_row(std::vector<double> row) {
    if (row.size() != columns_.size())
      throw validation_error("experiment_table: row width mismatch");
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept {
    return rows_;
  }

  std::size_t column_index(const std::string& name) const {
    auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end())
      throw validation_error("experiment_table: no column named '" + name +
                             "'");
    return static_cast<std::size_t>(it - columns_.begin());
  }

  std::vector<double> column(const std::string& name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const std::vector<double>& row : rows_) out.push_back(row[idx]);
    return out;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace citetrack
