#ifndef LINETREES_BIGINT_HPP
#define LINETREES_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace linetrees {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) {
  return x.get_str();
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline BigInt pow(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

}  // namespace linetrees

#endif  // LINETREES_BIGINT_HPP
