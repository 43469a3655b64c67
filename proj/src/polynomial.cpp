#include "linetrees/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace linetrees {

Monomial::Monomial(std::vector<std::uint32_t> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
}

std::size_t Monomial::exponent(std::uint32_t var) const {
  auto [lo, hi] = std::equal_range(vars_.begin(), vars_.end(), var);
  return static_cast<std::size_t>(hi - lo);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.vars_.reserve(vars_.size() + other.vars_.size());
  std::merge(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(), std::back_inserter(out.vars_));
  return out;
}

GenPoly GenPoly::one(VarFamily family) {
  GenPoly p(family);
  p.add_term(Monomial{});
  return p;
}

GenPoly GenPoly::linear(VarFamily family, std::span<const std::uint32_t> vars) {
  GenPoly p(family);
  for (auto v : vars) p.add_term(Monomial({v}));
  return p;
}

void GenPoly::add_term(const Monomial& m, const BigInt& coeff) {
  if (coeff < 0) throw std::invalid_argument("GenPoly coefficients must be nonnegative");
  if (coeff == 0) return;
  terms_[m] += coeff;
}

GenPoly GenPoly::operator*(const GenPoly& other) const {
  if (family_ != other.family_) throw std::invalid_argument("cannot multiply polynomials over different variables");
  GenPoly out(family_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) out.terms_[ma * mb] += ca * cb;
  }
  return out;
}

GenPoly GenPoly::pow(unsigned exponent) const {
  GenPoly result = one(family_);
  GenPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BigInt GenPoly::evaluate_at_ones() const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) total += c;
  return total;
}

BigInt GenPoly::evaluate(const std::function<BigInt(std::uint32_t)>& value) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt term = c;
    for (auto v : m.vars()) term *= value(v);
    total += term;
  }
  return total;
}

GenPoly GenPoly::renamed(const std::function<std::uint32_t(std::uint32_t)>& rename, VarFamily family) const {
  GenPoly out(family);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> vars;
    vars.reserve(m.degree());
    for (auto v : m.vars()) vars.push_back(rename(v));
    out.add_term(Monomial(std::move(vars)), c);
  }
  return out;
}

std::string to_string(const Monomial& m, const std::function<std::string(std::uint32_t)>& name) {
  if (m.degree() == 0) return "1";
  std::string out;
  auto vars = m.vars();
  for (std::size_t i = 0; i < vars.size();) {
    std::size_t j = i;
    while (j < vars.size() && vars[j] == vars[i]) ++j;
    if (!out.empty()) out += '*';
    out += name(vars[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string GenPoly::to_string(const std::function<std::string(std::uint32_t)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + (m.degree() ? "*" : "");
    if (c == 1 || m.degree() > 0) out += m.degree() ? linetrees::to_string(m, name) : "1";
  }
  return out;
}

}  // namespace linetrees
