#include "symchar/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "symchar/error.hpp"

namespace symchar {

Polynomial Polynomial::constant(int variables, const Integer& c) {
  Polynomial out(variables);
  out.add_term(Exponents(static_cast<std::size_t>(variables), 0), c);
  return out;
}

Polynomial Polynomial::variable(int variables, int index) {
  if (index < 0 || index >= variables) throw DomainError("variable index out of range");
  Exponents e(static_cast<std::size_t>(variables), 0);
  e[index] = 1;
  Polynomial out(variables);
  out.add_term(e, 1);
  return out;
}

Integer Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != variables_)
    throw DomainError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.variables_ != variables_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.variables_ != variables_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw DomainError("variable count mismatch");
  Polynomial out(a.variables_);
  Polynomial::Exponents e(static_cast<std::size_t>(a.variables_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != variables_)
    throw DomainError("evaluation point has the wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int r = 0; r < e[v]; ++r) term *= point[v];
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(int index, const Polynomial& replacement) const {
  if (index < 0 || index >= variables_) throw DomainError("variable index out of range");
  if (replacement.variables_ != variables_) throw DomainError("variable count mismatch");
  std::vector<Polynomial> powers{constant(variables_, 1)};
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[index])
      powers.push_back(powers.back() * replacement);
    Exponents rest = e;
    rest[index] = 0;
    Polynomial monomial(variables_);
    monomial.add_term(rest, c);
    out += monomial * powers[e[index]];
  }
  return out;
}

Polynomial Polynomial::remap(int variables, const std::vector<int>& target) const {
  if (static_cast<int>(target.size()) != variables_)
    throw DomainError("remap target has the wrong length");
  for (int t : target)
    if (t < 0 || t >= variables) throw DomainError("remap target out of range");
  Polynomial out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents mapped(static_cast<std::size_t>(variables), 0);
    for (std::size_t v = 0; v < e.size(); ++v) mapped[target[v]] += e[v];
    out.add_term(mapped, c);
  }
  return out;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

std::string Polynomial::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });

  std::string out;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    const auto& [e, c] = sorted[t];
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (t == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";

    std::string factors;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += name(static_cast<int>(v));
      if (e[v] > 1) factors += '^' + std::to_string(e[v]);
    }
    if (factors.empty())
      out += magnitude.get_str();
    else if (magnitude == 1)
      out += factors;
    else
      out += magnitude.get_str() + '*' + factors;
  }
  return out;
}

}  // namespace symchar
