#include "linetrees/crit_group.hpp"

#include <algorithm>

namespace linetrees {

namespace {

constexpr unsigned long kMaxExpandedSummands = 1'000'000;

void require_m(unsigned m, unsigned n) {
  if (m < 2) throw GroupError("group formulas need m >= 2");
  if (n < 1) throw GroupError("group formulas need n >= 1");
}

BigInt upow(unsigned long base, unsigned long exponent) {
  return pow(base, exponent);
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclic_orders(std::vector<BigInt> orders) {
  AbelianGroup g;
  std::vector<BigInt> finite;
  for (auto& d : orders) {
    d = abs(d);
    if (d == 0) {
      ++g.free_rank_;
    } else if (d != 1) {
      finite.push_back(std::move(d));
    }
  }
  std::sort(finite.begin(), finite.end());
  // Z_a + Z_b = Z_gcd + Z_lcm; sweeping every pair leaves a divisibility chain.
  BigInt gcd_ab, lcm_ab;
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      mpz_gcd(gcd_ab.get_mpz_t(), finite[i].get_mpz_t(), finite[j].get_mpz_t());
      mpz_lcm(lcm_ab.get_mpz_t(), finite[i].get_mpz_t(), finite[j].get_mpz_t());
      finite[i] = gcd_ab;
      finite[j] = lcm_ab;
    }
  }
  for (auto& d : finite) {
    if (d != 1) g.factors_.push_back(std::move(d));
  }
  return g;
}

BigInt AbelianGroup::order() const {
  if (!is_finite()) throw GroupError("infinite group has no finite order");
  BigInt total = 1;
  for (const auto& d : factors_) total *= d;
  return total;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < free_rank_; ++i) out += out.empty() ? "Z" : " + Z";
  for (const auto& d : factors_) out += (out.empty() ? "Z_" : " + Z_") + d.get_str();
  return out.empty() ? "0" : out;
}

AbelianGroup GroupFormula::normalize() const {
  std::vector<BigInt> orders;
  unsigned long total = 0;
  for (const auto& [modulus, multiplicity] : summands) {
    if (modulus < 0 || multiplicity < 0) throw GroupError("formula summands must be nonnegative");
    if (modulus == 1 || multiplicity == 0) continue;
    if (multiplicity > kMaxExpandedSummands || (total += multiplicity.get_ui()) > kMaxExpandedSummands) {
      throw GroupError("formula has too many summands to normalize");
    }
    for (unsigned long i = 0; i < multiplicity.get_ui(); ++i) orders.push_back(modulus);
  }
  return AbelianGroup::from_cyclic_orders(std::move(orders));
}

IntMatrix laplacian(const DiGraph& g) {
  const std::size_t n = g.num_vertices();
  IntMatrix m(n, n);
  for (const auto& e : g.edges()) {
    m(e.source.index(), e.target.index()) += 1;
    m(e.source.index(), e.source.index()) -= 1;
  }
  return m;
}

AbelianGroup sandpile_group(const DiGraph& g, VertexId sink) {
  if (sink.index() >= g.num_vertices()) throw GroupError("sink out of range");
  if (!is_strongly_connected(g)) throw GroupError("sandpile group needs a strongly connected graph");
  IntMatrix reduced = laplacian(g).minor(sink.index(), sink.index());
  return AbelianGroup::from_cyclic_orders(smith_normal_form(reduced).diagonal);
}

AbelianGroup critical_group(const DiGraph& g, bool check_all_sinks) {
  if (!is_eulerian(g)) throw GroupError("critical group needs an Eulerian graph");
  AbelianGroup k = sandpile_group(g, VertexId{0u});
  if (check_all_sinks) {
    for (std::size_t r = 1; r < g.num_vertices(); ++r) {
      if (sandpile_group(g, VertexId{r}) != k) {
        throw std::logic_error("sandpile groups differ between sinks 0 and " + std::to_string(r));
      }
    }
  }
  return k;
}

GroupFormula db_formula(unsigned m, unsigned n) {
  require_m(m, n);
  GroupFormula f;
  f.summands.emplace_back(upow(m, n), m - 2);
  for (unsigned i = 1; i + 1 <= n; ++i) {
    f.summands.emplace_back(upow(m, i), upow(m, n - 1 - i) * (m - 1) * (m - 1));
  }
  return f;
}

GroupFormula kautz_formula(unsigned m, unsigned n) {
  require_m(m, n);
  GroupFormula f;
  f.summands.emplace_back(BigInt(m + 1), m - 1);
  f.summands.emplace_back(upow(m, n - 1), BigInt(m * m - 2));
  for (unsigned i = 1; i + 2 <= n; ++i) {
    f.summands.emplace_back(upow(m, i), upow(m, n - 2 - i) * (m - 1) * (m - 1) * (m + 1));
  }
  return f;
}

BigInt group_order_db(unsigned m, unsigned n) {
  require_m(m, n);
  // m^n - n - 1 >= 0 for m >= 2.
  return upow(m, upow(m, n).get_ui() - n - 1);
}

BigInt group_order_kautz(unsigned m, unsigned n) {
  require_m(m, n);
  unsigned long e = upow(m, n).get_ui() + upow(m, n - 1).get_ui() - m - n;
  return upow(m + 1, m - 1) * upow(m, e);
}

BigInt kappa_db(unsigned m, unsigned n) {
  require_m(m, n);
  return upow(m, upow(m, n).get_ui() - 1);
}

BigInt kappa_kautz(unsigned m, unsigned n) {
  require_m(m, n);
  return upow(m + 1, m) * upow(m, (upow(m, n - 1).get_ui() - 1) * (m + 1));
}

BigInt kappa_kautz_as_printed(unsigned m, unsigned n) {
  require_m(m, n);
  return upow(m + 1, m) * upow(m, (upow(m, n).get_ui() - 1) * (m + 1));
}

AbelianGroup mult_by_k(const AbelianGroup& group, const BigInt& k) {
  if (!group.is_finite()) throw GroupError("mult_by_k needs a finite group");
  std::vector<BigInt> orders;
  BigInt g;
  for (const auto& d : group.invariant_factors()) {
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), k.get_mpz_t());
    orders.push_back(d / g);
  }
  return AbelianGroup::from_cyclic_orders(std::move(orders));
}

AbelianGroup sylow(const AbelianGroup& group, const BigInt& p) {
  if (!group.is_finite()) throw GroupError("sylow needs a finite group");
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw GroupError("sylow needs a prime, got " + p.get_str());
  std::vector<BigInt> orders;
  for (auto d : group.invariant_factors()) {
    BigInt part = 1;
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
      d /= p;
      part *= p;
    }
    orders.push_back(part);
  }
  return AbelianGroup::from_cyclic_orders(std::move(orders));
}

std::vector<BigInt> prime_divisors(BigInt n) {
  if (n <= 0) throw GroupError("prime_divisors needs a positive integer");
  std::vector<BigInt> out;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

DivByMReport check_divbym(const DiGraph& g) {
  const auto& fam = g.family();
  if (!fam || fam->n < 2) throw GroupError("check_divbym needs a de Bruijn or Kautz graph with string length >= 2");
  DivByMReport r;
  r.m = fam->m;
  r.classes = g.num_vertices() / fam->m;
  r.factors = smith_normal_form(laplacian(g)).diagonal;
  const BigInt m = fam->m;
  r.holds = true;
  BigInt gcd_dm;
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    mpz_gcd(gcd_dm.get_mpz_t(), r.factors[i].get_mpz_t(), m.get_mpz_t());
    bool ok = i < r.classes ? gcd_dm == 1 : mpz_divisible_p(r.factors[i].get_mpz_t(), m.get_mpz_t()) != 0;
    if (!ok) r.holds = false;
  }
  return r;
}

}  // namespace linetrees
