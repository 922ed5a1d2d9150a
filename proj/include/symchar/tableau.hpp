#pragma once

#include <string>
#include <vector>

#include "symchar/partition.hpp"

namespace symchar {

// Standard Young tableau in English notation: rows()[0] is the top row.
class StandardTableau {
 public:
  // Throws DomainError unless rows form a standard filling of a partition
  // shape by 1..k.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  const Partition& shape() const noexcept { return shape_; }
  int size() const noexcept { return shape_.size(); }

  // 0-based row and column of entry a.
  int row_of(int a) const;
  int column_of(int a) const;

  // Column index minus row index of the box holding a. Throws DomainError
  // when a is not in 1..k.
  int content(int a) const;

  // Row index of each entry 1..k; the enumeration order key.
  std::vector<int> row_sequence() const;

  // Filling with entries a and a+1 exchanged. The result is standard
  // exactly when a and a+1 share neither a row nor a column.
  std::vector<std::vector<int>> swapped(int a) const;

  std::string to_string() const;

  friend bool operator==(const StandardTableau& x, const StandardTableau& y) {
    return x.rows_ == y.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
  std::vector<int> row_of_;
  std::vector<int> column_of_;
};

bool is_standard_filling(const std::vector<std::vector<int>>& rows);

// All standard tableaux of shape lambda, ordered lexicographically by the
// sequence of row indices of entries 1..k.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda);

}  // namespace symchar
