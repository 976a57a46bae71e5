#include "abelrep/char_counts.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace abelrep {

namespace mp = boost::multiprecision;

namespace {

void ensure_coprime(const PrimaryDecomposition& G, const FieldSpec& field) {
  for (const auto& comp : G.components())
    if (field.value() % comp.prime == 0)
      throw NotCoprime("q = " + field.value().str() + " and |G| = " + G.order().value().str() +
                       " share the prime " + comp.prime.str());
}

// card_I_d with d given as a factored divisor of the exponent (validated by
// the caller); multiplies the per-component counts at the r-part of d.
Int card_for_divisor(const PrimaryDecomposition& G, const FactoredInteger& d) {
  Int result = 1;
  for (const auto& comp : G.components())
    result *= card_I_prime_power(comp.prime, comp.exponents, d.exponent_of(comp.prime));
  return result;
}

// The shared core of degree_table and wedderburn_decomposition: one entry per
// relevant divisor of the exponent, ascending by d.
std::vector<DivisorContribution> divisor_contributions(const PrimaryDecomposition& G,
                                                       const FieldSpec& field) {
  ensure_coprime(G, field);
  const FactoredInteger& e = G.exponent();
  const bool even_exponent = (e.value() & 1) == 0;

  std::vector<DivisorContribution> contributions;
  Int characters_covered = 0;
  for (const FactoredInteger& d : divisors_factored(e)) {
    if (even_exponent && (d.value() & 1) != 0) continue;
    const Int degree = mul_order(field.value(), d);
    const Int card = card_for_divisor(G, d);
    if (card % degree != 0)
      throw std::logic_error("card_I_d not divisible by ord(q mod d) at d = " + d.value().str());
    contributions.push_back({d.value(), card, degree, card / degree});
    characters_covered += card;
  }
  if (characters_covered != G.order().value())
    throw std::logic_error("character-field classes do not partition the dual group");
  return contributions;
}

}  // namespace

DegreeTable::DegreeTable(std::vector<DegreeEntry> entries, Int group_order, Int field_q)
    : entries_(std::move(entries)),
      group_order_(std::move(group_order)),
      field_q_(std::move(field_q)) {
  Int weighted = 0;
  const DegreeEntry* previous = nullptr;
  for (const DegreeEntry& entry : entries_) {
    if (entry.degree < 1 || entry.multiplicity < 1)
      throw std::logic_error("degree table entries must be positive");
    if (previous != nullptr && !(previous->degree < entry.degree))
      throw std::logic_error("degree table must be strictly ascending");
    weighted += entry.degree * entry.multiplicity;
    previous = &entry;
  }
  if (weighted != group_order_)
    throw std::logic_error("degree table does not sum to the group order");
}

Int factor_quotient_order(const Int& r, const std::vector<unsigned>& exponents, unsigned l) {
  if (r < 2) throw ValueError("factor_quotient_order: r must be a prime");
  Int result = 1;
  for (const unsigned a : exponents) result *= mp::pow(r, std::min(l, a));
  return result;
}

Int card_I_prime_power(const Int& r, const std::vector<unsigned>& exponents, unsigned l) {
  const unsigned max_exponent =
      exponents.empty() ? 0 : *std::max_element(exponents.begin(), exponents.end());
  if (l > max_exponent)
    throw OutOfRange("card_I_prime_power: r^l does not divide the component exponent");
  if (l == 0) return 1;
  if (r == 2 && l == 1) {
    // zeta_2 = -1 is rational: every character of order dividing 2 has
    // character field Q, so the class absorbs the trivial character.
    return Int(1) << exponents.size();
  }
  return factor_quotient_order(r, exponents, l) - factor_quotient_order(r, exponents, l - 1);
}

Int card_I_d(const PrimaryDecomposition& G, const Int& d) {
  const Int& e = G.exponent().value();
  if (d < 1 || e % d != 0)
    throw NotARelevantDivisor(d.str() + " does not divide the exponent " + e.str());
  if ((e & 1) == 0 && (d & 1) != 0)
    throw NotARelevantDivisor(d.str() + " is odd but the exponent is even; use " +
                              Int(2 * d).str());

  Int result = 1;
  Int rest = d;
  for (const auto& comp : G.components()) {
    unsigned l = 0;
    while (rest % comp.prime == 0) {
      rest /= comp.prime;
      ++l;
    }
    result *= card_I_prime_power(comp.prime, comp.exponents, l);
  }
  return result;
}

std::vector<Int> relevant_divisors(const FactoredInteger& e) {
  const bool even = (e.value() & 1) == 0;
  std::vector<Int> out;
  for (const Int& d : divisors(e))
    if (!even || (d & 1) == 0) out.push_back(d);
  return out;
}

DegreeTableResult degree_table(const PrimaryDecomposition& G, const FieldSpec& field) {
  std::vector<DivisorContribution> contributions = divisor_contributions(G, field);

  std::map<Int, Int> multiplicity_by_degree;
  for (const DivisorContribution& c : contributions) multiplicity_by_degree[c.degree] += c.count;

  std::vector<DegreeEntry> entries;
  entries.reserve(multiplicity_by_degree.size());
  for (const auto& [degree, multiplicity] : multiplicity_by_degree)
    entries.push_back({degree, multiplicity});

  DegreeTable table(std::move(entries), G.order().value(), field.value());
  return {std::move(table), std::move(contributions)};
}

std::vector<std::pair<Int, Int>> wedderburn_decomposition(const PrimaryDecomposition& G,
                                                          const FieldSpec& field) {
  std::vector<std::pair<Int, Int>> result;
  for (const DivisorContribution& c : divisor_contributions(G, field))
    result.emplace_back(c.d, c.count);
  return result;
}

}  // namespace abelrep
