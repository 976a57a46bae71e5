#pragma once

#include <utility>
#include <vector>

#include "abelrep/field_spec.hpp"
#include "abelrep/group_model.hpp"

namespace abelrep {

struct DegreeEntry {
  Int degree;
  Int multiplicity;
  bool operator==(const DegreeEntry&) const = default;
};

/// The multiset of irreducible representation degrees of a group over F_q:
/// (degree, multiplicity) pairs, degrees strictly ascending. The weighted sum
/// of degrees always equals the group order.
class DegreeTable {
 public:
  DegreeTable(std::vector<DegreeEntry> entries, Int group_order, Int field_q);

  const std::vector<DegreeEntry>& entries() const { return entries_; }
  const Int& group_order() const { return group_order_; }
  const Int& field_q() const { return field_q_; }

  bool operator==(const DegreeTable&) const = default;

 private:
  std::vector<DegreeEntry> entries_;
  Int group_order_;
  Int field_q_;
};

/// Per-divisor bookkeeping behind a degree table: card_Id characters have
/// character field Q(zeta_d); they fall into orbits of the common length
/// degree = ord(q mod d), giving count = card_Id / degree irreducibles.
struct DivisorContribution {
  Int d;
  Int card_Id;
  Int degree;
  Int count;
  bool operator==(const DivisorContribution&) const = default;
};

/// |F(G_r, l)| = prod_j r^min(l, a_j): the number of characters of the Sylow
/// r-component whose order divides r^l. `exponents` is the ascending exponent
/// list of the component; l may exceed every a_j only up to max(a_j), else
/// OutOfRange. l = 0 gives 1.
Int factor_quotient_order(const Int& r, const std::vector<unsigned>& exponents, unsigned l);

/// Number of characters of the Sylow r-component whose character field is
/// exactly Q(zeta_{r^l}): |F(G_r, l)| - |F(G_r, l-1)| for l >= 1, with one
/// exception: for r = 2, l = 1 the count is 2^n (n = number of cyclic
/// factors), because zeta_2 = -1 is rational and the order-2 characters share
/// the field Q with the trivial one.
Int card_I_prime_power(const Int& r, const std::vector<unsigned>& exponents, unsigned l);

/// Number of characters of G with character field exactly Q(zeta_d): the
/// product over Sylow components of card_I_prime_power at the r-part of d.
/// d must be a relevant divisor of the group exponent, else
/// NotARelevantDivisor.
Int card_I_d(const PrimaryDecomposition& G, const Int& d);

/// The divisors of e indexing distinct character fields: every divisor when
/// e is odd, only the even ones when e is even (each odd d merges into 2d
/// since Q(zeta_d) = Q(zeta_2d)). relevant_divisors(1) = {1}.
std::vector<Int> relevant_divisors(const FactoredInteger& e);

struct DegreeTableResult {
  DegreeTable table;
  std::vector<DivisorContribution> contributions;  // ascending by d
};

/// Degrees and multiplicities of the irreducible F_q-representations of G,
/// computed from the closed-form character counts (no enumeration).
/// Requires gcd(q, |G|) = 1, else NotCoprime.
DegreeTableResult degree_table(const PrimaryDecomposition& G, const FieldSpec& field);

/// Multiplicities in the splitting of the group algebra F_q[G] into field
/// extensions: pairs (d, a_d) with F_q[G] = sum of a_d copies of
/// F_q(zeta_d), over the relevant divisors d of the exponent, ascending.
/// sum of a_d * ord(q mod d) equals |G|.
std::vector<std::pair<Int, Int>> wedderburn_decomposition(const PrimaryDecomposition& G,
                                                          const FieldSpec& field);

}  // namespace abelrep
