#pragma once

#include <vector>

#include "abelrep/bigint.hpp"
#include "abelrep/errors.hpp"

namespace abelrep {

/// A positive integer carried together with its prime factorization.
/// Factors are sorted by prime ascending; the value 1 has an empty list.
class FactoredInteger {
 public:
  struct Factor {
    Int prime;
    unsigned exponent = 0;
    bool operator==(const Factor&) const = default;
  };

  /// The integer 1.
  FactoredInteger() = default;

  /// Builds from an explicit factorization. Validates that primes are
  /// strictly ascending and actually prime and that exponents are positive.
  static FactoredInteger from_factors(std::vector<Factor> factors);

  const Int& value() const { return value_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Exponent of `prime` in the factorization, 0 if absent.
  unsigned exponent_of(const Int& prime) const;

  bool operator==(const FactoredInteger&) const = default;

 private:
  // Trusted path for factorizations produced inside this module.
  static FactoredInteger unchecked(Int value, std::vector<Factor> factors);
  friend FactoredInteger factor(const Int& n);
  friend std::vector<FactoredInteger> divisors_factored(const FactoredInteger& n);

  Int value_ = 1;
  std::vector<Factor> factors_;
};

/// Primality test with fixed, reproducible parameters: strong probable-prime
/// tests to the witness bases 2..41 (a proven-deterministic set below
/// 3.3e24), strengthened by a strong Lucas test for larger inputs.
bool is_prime(const Int& n);

/// Largest value factor() accepts: 2^96.
const Int& factor_input_limit();

/// Prime factorization: trial division up to 10^6, then Brent's cycle-finding
/// rho with is_prime() certifying every cofactor split. Throws
/// FactorizationLimitExceeded for inputs above factor_input_limit() and
/// ValueError for n < 1.
FactoredInteger factor(const Int& n);

/// All divisors of n, ascending.
std::vector<Int> divisors(const FactoredInteger& n);

/// All divisors of n in factored form, ascending by value.
std::vector<FactoredInteger> divisors_factored(const FactoredInteger& n);

Int gcd(const Int& a, const Int& b);

/// Least common multiple of two positive integers.
/// Throws ZeroArgument if either argument is 0.
Int lcm(const Int& a, const Int& b);

/// base^exponent mod modulus, for exponent >= 0 and modulus >= 1.
Int pow_mod(const Int& base, const Int& exponent, const Int& modulus);

/// Multiplicative order of q modulo d: the least n >= 1 with q^n = 1 (mod d).
/// mul_order(q, 1) = 1 for every q. Computed by dividing prime factors out of
/// the totient of d, never by iterating powers. Throws NotCoprime when
/// gcd(q, d) > 1.
Int mul_order(const Int& q, const Int& d);

/// Same, for callers that already hold d in factored form.
Int mul_order(const Int& q, const FactoredInteger& d);

}  // namespace abelrep
