#pragma once

#include <string>
#include <vector>

#include "abelrep/numtheory.hpp"

namespace abelrep {

/// A finite abelian group given as Z/m1 x ... x Z/mk, factors in input
/// order. Factors equal to 1 are allowed and contribute nothing; the empty
/// list is the trivial group.
struct CyclicFactorList {
  std::vector<Int> factors;
  bool operator==(const CyclicFactorList&) const = default;
};

/// Parses a group description. Two grammars, chosen by the first
/// non-whitespace character:
///   comma-separated orders   "9,5"      "2, 4, 3"
///   C-notation               "C9xC5"    "c9 X c5"   (case-insensitive)
/// Throws ParseError (with byte position) on malformed input and ValueError
/// on a zero factor.
CyclicFactorList parse_group_spec(const std::string& text);

/// A finite abelian group in primary form: for each prime r dividing |G|,
/// the ascending exponents a_1 <= ... <= a_n of its cyclic factors Z/r^a_j.
class PrimaryDecomposition {
 public:
  struct Component {
    Int prime;
    std::vector<unsigned> exponents;  // ascending, all >= 1, nonempty
    bool operator==(const Component&) const = default;
  };

  /// The trivial group.
  PrimaryDecomposition() = default;

  /// Components must be sorted by strictly ascending prime; order and
  /// exponent are derived here.
  explicit PrimaryDecomposition(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }

  /// |G| = prod_r r^(a_1 + ... + a_n), in factored form.
  const FactoredInteger& order() const { return order_; }

  /// exp(G) = prod_r r^(a_n), the largest order of an element.
  const FactoredInteger& exponent() const { return exponent_; }

  bool is_trivial() const { return components_.empty(); }

  bool operator==(const PrimaryDecomposition&) const = default;

 private:
  std::vector<Component> components_;
  FactoredInteger order_;
  FactoredInteger exponent_;
};

/// Splits every cyclic factor into prime-power cyclic factors and regroups
/// them by prime (the Chinese remainder decomposition of the group).
PrimaryDecomposition primary_decomposition(const CyclicFactorList& group);

/// Same, for callers that already know the factorization of each cyclic
/// factor order; skips the factoring step entirely.
PrimaryDecomposition primary_decomposition(const std::vector<FactoredInteger>& factored_orders);

}  // namespace abelrep
