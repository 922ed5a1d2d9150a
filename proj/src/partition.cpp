#include "symchar/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "symchar/error.hpp"

namespace symchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_multiset(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return Partition(std::move(values));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError("empty partition", pos);
  while (true) {
    skip_space();
    const std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError("part too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected positive integer", pos);
    if (value == 0) throw ParseError("parts must be positive", start);
    if (!parts.empty() && value > parts.back())
      throw ParseError("parts must be weakly decreasing", start);
    parts.push_back(static_cast<int>(value));
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::padded_with_ones(int count) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), static_cast<std::size_t>(std::max(count, 0)), 1);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition build_pq_partition(std::span<const int> p, std::span<const int> q) {
  if (p.size() != q.size()) throw DomainError("p and q must have the same length");
  if (p.empty()) throw DomainError("p and q must be nonempty");
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || q[i] < 1) throw DomainError("p and q entries must be positive");
    if (i > 0 && q[i] > q[i - 1]) throw DomainError("q must be weakly decreasing");
    parts.insert(parts.end(), static_cast<std::size_t>(p[i]), q[i]);
  }
  return Partition(std::move(parts));
}

void decompose_pq(const Partition& lambda, std::vector<int>& p, std::vector<int>& q) {
  p.clear();
  q.clear();
  for (int part : lambda.parts()) {
    if (!q.empty() && q.back() == part) {
      ++p.back();
    } else {
      q.push_back(part);
      p.push_back(1);
    }
  }
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer hook_length_dimension(const Partition& lambda) {
  // Column lengths give the leg of each box.
  const int width = lambda.part(1);
  std::vector<int> column_length(static_cast<std::size_t>(width), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++column_length[j];

  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      const int arm = lambda.parts()[i] - j - 1;
      const int leg = column_length[j] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

Integer conjugacy_class_size(const Partition& cycle_type) {
  Integer centralizer = 1;
  const auto& parts = cycle_type.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int multiplicity = static_cast<int>(j - i);
    for (int r = 0; r < multiplicity; ++r) centralizer *= parts[i];
    centralizer *= factorial(multiplicity);
    i = j;
  }
  return factorial(cycle_type.size()) / centralizer;
}

}  // namespace symchar
