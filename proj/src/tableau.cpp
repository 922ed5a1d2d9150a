#include "symchar/tableau.hpp"

#include <algorithm>

#include "symchar/error.hpp"

namespace symchar {

bool is_standard_filling(const std::vector<std::vector<int>>& rows) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    total += rows[i].size();
  }
  std::vector<bool> seen(total, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int v = rows[i][j];
      if (v < 1 || static_cast<std::size_t>(v) > total || seen[v - 1]) return false;
      seen[v - 1] = true;
      if (j > 0 && rows[i][j - 1] >= v) return false;
      if (i > 0 && rows[i - 1][j] >= v) return false;
    }
  }
  return true;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (!is_standard_filling(rows_)) throw DomainError("not a standard Young tableau");
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  shape_ = Partition(std::move(parts));
  row_of_.assign(static_cast<std::size_t>(shape_.size()), 0);
  column_of_.assign(static_cast<std::size_t>(shape_.size()), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      row_of_[rows_[i][j] - 1] = static_cast<int>(i);
      column_of_[rows_[i][j] - 1] = static_cast<int>(j);
    }
}

int StandardTableau::row_of(int a) const {
  if (a < 1 || a > size()) throw DomainError("entry out of range");
  return row_of_[a - 1];
}

int StandardTableau::column_of(int a) const {
  if (a < 1 || a > size()) throw DomainError("entry out of range");
  return column_of_[a - 1];
}

int StandardTableau::content(int a) const { return column_of(a) - row_of(a); }

std::vector<int> StandardTableau::row_sequence() const { return row_of_; }

std::vector<std::vector<int>> StandardTableau::swapped(int a) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& v : r) {
      if (v == a)
        v = a + 1;
      else if (v == a + 1)
        v = a;
    }
  return rows;
}

std::string StandardTableau::to_string() const {
  std::string out;
  for (const auto& r : rows_) {
    out += '[';
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(r[j]);
    }
    out += ']';
  }
  return out;
}

namespace {

// Places entries a, a+1, ... trying rows top to bottom, which yields the
// lexicographic order of row sequences.
void tableaux_rec(const Partition& lambda, int a, std::vector<std::vector<int>>& rows,
                  std::vector<StandardTableau>& out) {
  if (a > lambda.size()) {
    out.emplace_back(rows);
    return;
  }
  for (int i = 0; i < lambda.length(); ++i) {
    const auto len = rows[i].size();
    if (static_cast<int>(len) == lambda.parts()[i]) continue;
    if (i > 0 && rows[i - 1].size() <= len) continue;
    rows[i].push_back(a);
    tableaux_rec(lambda, a + 1, rows, out);
    rows[i].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("shape must be nonempty");
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  tableaux_rec(lambda, 1, rows, out);
  return out;
}

}  // namespace symchar
