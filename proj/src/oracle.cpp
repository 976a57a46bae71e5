#include "abelrep/oracle.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "abelrep/numtheory.hpp"

namespace abelrep {

namespace {

// Canonical prime-power moduli of G (primes ascending, exponents ascending),
// after checking |G| against the enumeration bound.
std::vector<std::uint64_t> prime_power_moduli(const PrimaryDecomposition& G, std::uint64_t bound) {
  if (G.order().value() > bound)
    throw OracleBoundExceeded("|G| = " + G.order().value().str() +
                              " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<std::uint64_t> moduli;
  for (const auto& comp : G.components()) {
    for (const unsigned a : comp.exponents) {
      // Each prime power divides |G| <= bound, so it fits in 64 bits.
      moduli.push_back(
          static_cast<std::uint64_t>(boost::multiprecision::pow(comp.prime, a)));
    }
  }
  return moduli;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t order_of_residues(const std::vector<std::uint64_t>& residues,
                                const std::vector<std::uint64_t>& moduli) {
  std::uint64_t order = 1;
  for (std::size_t j = 0; j < residues.size(); ++j)
    order = std::lcm(order, moduli[j] / std::gcd(moduli[j], residues[j]));
  return order;
}

}  // namespace

CharacterEnumerator::CharacterEnumerator(const PrimaryDecomposition& G, std::uint64_t bound)
    : moduli_(prime_power_moduli(G, bound)), current_(moduli_.size(), 0) {
  for (const std::uint64_t m : moduli_) size_ *= m;
}

CharacterVector CharacterEnumerator::next() {
  if (done()) throw std::logic_error("character enumeration exhausted");
  CharacterVector chi;
  chi.entries.reserve(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) chi.entries.push_back({current_[j], moduli_[j]});
  ++emitted_;
  // Lexicographic successor: bump the last coordinate, carrying leftward.
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    if (++current_[j] < moduli_[j]) break;
    current_[j] = 0;
  }
  return chi;
}

std::vector<CharacterVector> enumerate_characters(const PrimaryDecomposition& G,
                                                  std::uint64_t bound) {
  CharacterEnumerator enumerator(G, bound);
  std::vector<CharacterVector> out;
  out.reserve(enumerator.group_size());
  while (!enumerator.done()) out.push_back(enumerator.next());
  return out;
}

std::uint64_t character_order(const CharacterVector& chi) {
  std::uint64_t order = 1;
  for (const auto& entry : chi.entries)
    order = std::lcm(order, entry.modulus / std::gcd(entry.modulus, entry.residue));
  return order;
}

DegreeTable frobenius_orbits(const PrimaryDecomposition& G, const FieldSpec& field,
                             const OracleOptions& options) {
  if (gcd(field.value(), G.order().value()) != 1)
    throw NotCoprime("q = " + field.value().str() + " and |G| = " + G.order().value().str() +
                     " are not coprime");

  const std::vector<std::uint64_t> moduli = prime_power_moduli(G, options.bound);
  const std::size_t k = moduli.size();
  const std::uint64_t size = static_cast<std::uint64_t>(G.order().value());

  // chi -> chi^q multiplies each residue by q mod its modulus.
  std::vector<std::uint64_t> q_mod(k);
  for (std::size_t j = 0; j < k; ++j)
    q_mod[j] = static_cast<std::uint64_t>(field.value() % moduli[j]);

  // Flat mixed-radix index, first coordinate most significant, so index
  // order is lexicographic order.
  std::vector<std::uint64_t> weight(k);
  {
    std::uint64_t w = 1;
    for (std::size_t j = k; j-- > 0;) {
      weight[j] = w;
      w *= moduli[j];
    }
  }

  // Memoized ord(q mod d) for the orbit-length assertions.
  std::map<std::uint64_t, std::uint64_t> expected_length;
  const auto expected_for = [&](std::uint64_t d) {
    const auto it = expected_length.find(d);
    if (it != expected_length.end()) return it->second;
    const std::uint64_t value = static_cast<std::uint64_t>(mul_order(field.value(), Int(d)));
    expected_length.emplace(d, value);
    return value;
  };

  std::vector<bool> visited(size, false);
  std::vector<std::uint64_t> residues(k);
  std::map<std::uint64_t, Int> orbits_by_length;

  for (std::uint64_t start = 0; start < size; ++start) {
    if (visited[start]) continue;
    std::uint64_t rem = start;
    for (std::size_t j = 0; j < k; ++j) {
      residues[j] = rem / weight[j];
      rem %= weight[j];
    }
    const std::uint64_t start_order =
        options.check_orbit_lengths ? order_of_residues(residues, moduli) : 0;

    std::uint64_t length = 0;
    std::uint64_t index = start;
    do {
      visited[index] = true;
      ++length;
      if (options.check_orbit_lengths && order_of_residues(residues, moduli) != start_order)
        throw std::logic_error("character order not constant along an orbit");
      index = 0;
      for (std::size_t j = 0; j < k; ++j) {
        residues[j] = mul_mod(residues[j], q_mod[j], moduli[j]);
        index += residues[j] * weight[j];
      }
    } while (index != start);

    if (options.check_orbit_lengths && expected_for(start_order) != length)
      throw std::logic_error("orbit length disagrees with ord(q mod character order)");
    orbits_by_length[length] += 1;
  }

  std::vector<DegreeEntry> entries;
  entries.reserve(orbits_by_length.size());
  for (const auto& [length, count] : orbits_by_length) entries.push_back({Int(length), count});
  return DegreeTable(std::move(entries), G.order().value(), field.value());
}

}  // namespace abelrep
