#ifndef LINETREES_POLYNOMIAL_HPP
#define LINETREES_POLYNOMIAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "linetrees/bigint.hpp"

namespace linetrees {

enum class VarFamily { Edge, Vertex };

/// Product of variables, stored as a sorted multiset of variable ids.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> vars);

  std::size_t degree() const { return vars_.size(); }
  std::span<const std::uint32_t> vars() const { return vars_; }
  std::size_t exponent(std::uint32_t var) const;

  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> vars_;
};

/// Sparse polynomial with positive integer coefficients. Zero coefficients
/// are never stored, so the zero polynomial has no terms.
class GenPoly {
 public:
  explicit GenPoly(VarFamily family = VarFamily::Edge) : family_(family) {}

  static GenPoly one(VarFamily family);
  /// Sum of the given variables, each with coefficient 1.
  static GenPoly linear(VarFamily family, std::span<const std::uint32_t> vars);

  VarFamily family() const { return family_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  void add_term(const Monomial& m, const BigInt& coeff = 1);

  GenPoly operator*(const GenPoly& other) const;
  GenPoly pow(unsigned exponent) const;

  /// Value with every variable set to 1.
  BigInt evaluate_at_ones() const;
  BigInt evaluate(const std::function<BigInt(std::uint32_t)>& value) const;

  /// Applies `rename` to every variable id and switches to `family`.
  GenPoly renamed(const std::function<std::uint32_t(std::uint32_t)>& rename, VarFamily family) const;

  /// `name` maps variable ids to printable names.
  std::string to_string(const std::function<std::string(std::uint32_t)>& name) const;

  friend bool operator==(const GenPoly& a, const GenPoly& b) {
    return a.family_ == b.family_ && a.terms_ == b.terms_;
  }

 private:
  VarFamily family_;
  std::map<Monomial, BigInt> terms_;
};

std::string to_string(const Monomial& m, const std::function<std::string(std::uint32_t)>& name);

}  // namespace linetrees

#endif  // LINETREES_POLYNOMIAL_HPP
