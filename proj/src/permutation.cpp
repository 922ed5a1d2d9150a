#include "symchar/permutation.hpp"

#include <cctype>

#include "symchar/error.hpp"

namespace symchar {

void check_enumeration_cap(int k) {
  if (k < 0) throw DomainError("negative degree");
  if (k > kMaxEnumerationDegree)
    throw CapExceeded("full enumeration of S(" + std::to_string(k) +
                      ") exceeds the cap k <= " +
                      std::to_string(kMaxEnumerationDegree));
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw DomainError("negative degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int k = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int image : images) {
    if (image < 1 || image > k || seen[image - 1])
      throw DomainError("image sequence is not a bijection");
    seen[image - 1] = true;
  }
  return Permutation(std::move(images));
}

namespace {

struct ParsedPoint {
  int value;
  std::size_t position;
};

// Disjoint cycles written in the text, in order of appearance.
std::vector<std::vector<ParsedPoint>> parse_cycle_list(std::string_view text) {
  std::vector<std::vector<ParsedPoint>> cycles;
  std::vector<bool> used;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_space();
    if (pos != text.size()) throw ParseError("unexpected text after 'id'", pos);
    return cycles;
  }
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<ParsedPoint> cycle;
    while (true) {
      skip_space();
      if (pos == text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        if (cycle.empty()) throw ParseError("empty cycle", pos);
        ++pos;
        break;
      }
      const std::size_t start = pos;
      long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected positive integer", pos);
      if (value == 0) throw ParseError("points are numbered from 1", start);
      if (pos < text.size() && text[pos] != ')' &&
          !std::isspace(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected whitespace or ')'", pos);
      const auto point = static_cast<std::size_t>(value);
      if (used.size() < point) used.resize(point, false);
      if (used[point - 1]) throw ParseError("point repeated", start);
      used[point - 1] = true;
      cycle.push_back({static_cast<int>(value), start});
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, int degree) {
  const auto cycles = parse_cycle_list(text);
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (cycle[j].value > degree)
        throw ParseError("point " + std::to_string(cycle[j].value) +
                             " exceeds degree " + std::to_string(degree),
                         cycle[j].position);
      images[cycle[j].value - 1] = cycle[(j + 1) % cycle.size()].value;
    }
  }
  return Permutation(std::move(images));
}

int Permutation::minimal_degree(std::string_view text) {
  int degree = 1;
  for (const auto& cycle : parse_cycle_list(text))
    for (const auto& point : cycle) degree = std::max(degree, point.value);
  return degree;
}

Permutation Permutation::transposition(int a, int b, int degree) {
  if (a < 1 || b < 1 || a > degree || b > degree || a == b)
    throw DomainError("invalid transposition");
  Permutation t = identity(degree);
  std::swap(t.images_[a - 1], t.images_[b - 1]);
  return t;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[images_[x] - 1] = static_cast<int>(x) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::embedded(int degree) const {
  if (degree < this->degree()) throw DomainError("cannot embed into a smaller degree");
  std::vector<int> images = images_;
  for (int x = this->degree() + 1; x <= degree; ++x) images.push_back(x);
  return Permutation(std::move(images));
}

Permutation Permutation::restricted(int degree) const {
  if (support_bound() > degree)
    throw DomainError("permutation " + to_string() + " moves a point beyond " +
                      std::to_string(degree));
  return Permutation(std::vector<int>(images_.begin(), images_.begin() + degree));
}

int Permutation::support_bound() const noexcept {
  for (int x = degree(); x >= 1; --x)
    if (images_[x - 1] != x) return x;
  return 0;
}

bool Permutation::is_identity() const noexcept { return support_bound() == 0; }

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    Cycle c;
    for (int x = start; !seen[x - 1]; x = images_[x - 1]) {
      seen[x - 1] = true;
      c.points.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    ++count;
    for (int x = start; !seen[x - 1]; x = images_[x - 1]) seen[x - 1] = true;
  }
  return count;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(c.length());
  return Partition::from_multiset(std::move(lengths));
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.length() == 1) continue;
    out += '(';
    for (std::size_t j = 0; j < c.points.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(c.points[j]);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in product");
  std::vector<int> images(b.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a.images_[b.images_[x] - 1];
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  for_each_permutation(k, [&](const Permutation& s) { out.push_back(s); });
  return out;
}

Permutation representative_of_type(const Partition& cycle_type) {
  std::vector<int> images(static_cast<std::size_t>(cycle_type.size()));
  int start = 1;
  for (int length : cycle_type.parts()) {
    for (int j = 0; j < length; ++j)
      images[start + j - 1] = start + (j + 1) % length;
    start += length;
  }
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> cycle_type_representatives(int k) {
  std::vector<Permutation> out;
  for (const auto& t : partitions_of(k)) out.push_back(representative_of_type(t));
  return out;
}

}  // namespace symchar
