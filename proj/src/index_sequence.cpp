#include "symchar/index_sequence.hpp"

#include <algorithm>
#include <numeric>

#include "symchar/error.hpp"

namespace symchar {

IndexSequence::IndexSequence(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < 1) throw DomainError("index values must be >= 1");
    if (j > 0 && values_[j] > values_[j - 1])
      throw DomainError("index sequence must be weakly decreasing");
  }
}

std::vector<int> IndexSequence::block_lengths() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (j > 0 && values_[j] == values_[j - 1])
      ++out.back();
    else
      out.push_back(1);
  }
  return out;
}

bool fixes(const std::vector<int>& i, const Permutation& tau) {
  if (static_cast<int>(i.size()) != tau.degree()) throw DomainError("length mismatch");
  for (int j = 1; j <= tau.degree(); ++j)
    if (i[tau(j) - 1] != i[j - 1]) return false;
  return true;
}

Integer stabilizer_order(const IndexSequence& i) {
  Integer order = 1;
  for (int block : i.block_lengths()) order *= factorial(block);
  return order;
}

std::vector<Permutation> stabilizer_elements(const IndexSequence& i) {
  const int k = i.length();
  std::vector<std::vector<int>> partial{std::vector<int>{}};
  int offset = 0;
  for (int block : i.block_lengths()) {
    std::vector<int> local(static_cast<std::size_t>(block));
    std::iota(local.begin(), local.end(), offset + 1);
    std::vector<std::vector<int>> next;
    do {
      for (const auto& prefix : partial) {
        auto images = prefix;
        images.insert(images.end(), local.begin(), local.end());
        next.push_back(std::move(images));
      }
    } while (std::next_permutation(local.begin(), local.end()));
    partial = std::move(next);
    offset += block;
  }
  std::vector<Permutation> out;
  out.reserve(partial.size());
  for (auto& images : partial) {
    if (static_cast<int>(images.size()) != k) throw DomainError("internal: bad stabilizer");
    out.push_back(Permutation::from_images(std::move(images)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void sequences_rec(int k, int max_value, std::vector<int>& current,
                   std::vector<IndexSequence>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.emplace_back(current);
    return;
  }
  const int bound = current.empty() ? max_value : current.back();
  for (int v = 1; v <= bound; ++v) {
    current.push_back(v);
    sequences_rec(k, max_value, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<IndexSequence> decreasing_sequences(int k, int max_value) {
  if (k < 0) throw DomainError("negative length");
  std::vector<IndexSequence> out;
  if (max_value < 1) return out;
  std::vector<int> current;
  sequences_rec(k, max_value, current, out);
  return out;
}

}  // namespace symchar
