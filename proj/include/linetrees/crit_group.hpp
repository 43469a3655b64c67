#ifndef LINETREES_CRIT_GROUP_HPP
#define LINETREES_CRIT_GROUP_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linetrees/bigint.hpp"
#include "linetrees/digraph.hpp"
#include "linetrees/int_matrix.hpp"

namespace linetrees {

/// Finite abelian group Z^free_rank + Z_{d_1} + ... + Z_{d_k} in invariant
/// factor form: every d_i >= 2 and d_i divides d_{i+1}.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Normalizes an arbitrary direct sum of cyclic groups Z_{orders[i]};
  /// order 0 means Z, order 1 is dropped.
  static AbelianGroup from_cyclic_orders(std::vector<BigInt> orders);

  const std::vector<BigInt>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }

  /// Product of the invariant factors. Throws for infinite groups.
  BigInt order() const;

  /// E.g. "Z_2 + Z_6", "Z + Z_3", "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<BigInt> factors_;
  std::size_t free_rank_ = 0;
};

/// Direct sum of (Z_modulus)^multiplicity summands.
struct GroupFormula {
  std::vector<std::pair<BigInt, BigInt>> summands;

  AbelianGroup normalize() const;
};

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A(G) - D(G): edge multiplicities minus out-degrees on the diagonal.
IntMatrix laplacian(const DiGraph& g);

/// Cokernel of the Laplacian with the sink's row and column deleted.
/// Requires a strongly connected graph.
AbelianGroup sandpile_group(const DiGraph& g, VertexId sink);

/// Sandpile group at vertex 0 of an Eulerian, strongly connected graph.
/// With check_all_sinks, every other sink is computed too and must agree.
AbelianGroup critical_group(const DiGraph& g, bool check_all_sinks = false);

/// (Z_{m^n})^{m-2} + sum_{i=1}^{n-1} (Z_{m^i})^{m^{n-1-i}(m-1)^2}
GroupFormula db_formula(unsigned m, unsigned n);
/// (Z_{m+1})^{m-1} + (Z_{m^{n-1}})^{m^2-2} + sum_{i=1}^{n-2} (Z_{m^i})^{m^{n-2-i}(m-1)^2(m+1)}
GroupFormula kautz_formula(unsigned m, unsigned n);

/// m^{m^n - n - 1}
BigInt group_order_db(unsigned m, unsigned n);
/// (m+1)^{m-1} m^{m^n + m^{n-1} - m - n}
BigInt group_order_kautz(unsigned m, unsigned n);

/// m^{m^n - 1}
BigInt kappa_db(unsigned m, unsigned n);
/// (m+1)^m m^{(m^{n-1} - 1)(m+1)}
BigInt kappa_kautz(unsigned m, unsigned n);
/// (m+1)^m m^{(m^n - 1)(m+1)}: the closed form as printed in the source
/// derivation. Disagrees with kappa_kautz and with direct counts; kept so
/// tests can show the discrepancy.
BigInt kappa_kautz_as_printed(unsigned m, unsigned n);

/// kK: each Z_d becomes Z_{d / gcd(d, k)}. K must be finite.
AbelianGroup mult_by_k(const AbelianGroup& group, const BigInt& k);

/// p-primary part. p must be prime, the group finite.
AbelianGroup sylow(const AbelianGroup& group, const BigInt& p);

/// Primes dividing n > 0, by trial division.
std::vector<BigInt> prime_divisors(BigInt n);

struct DivByMReport {
  bool holds = false;
  std::size_t classes = 0;
  unsigned m = 0;
  /// Full-Laplacian invariant factors (length |V|, zeros last).
  std::vector<BigInt> factors;
};

/// For DB_{n+1}(m) or Kautz_{n+1}(m): the first |V|/m invariant factors of
/// the full Laplacian are coprime to m and the rest (including the 0) are
/// divisible by m.
DivByMReport check_divbym(const DiGraph& g);

}  // namespace linetrees

#endif  // LINETREES_CRIT_GROUP_HPP
