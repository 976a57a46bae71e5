#pragma once

#include <cstdint>
#include <vector>

#include "abelrep/char_counts.hpp"
#include "abelrep/field_spec.hpp"
#include "abelrep/group_model.hpp"

namespace abelrep {

/// Default ceiling on |G| for brute-force enumeration.
inline constexpr std::uint64_t kDefaultOracleBound = 10'000'000;

/// A character of G, one residue per prime-power cyclic factor taken in
/// canonical order (primes ascending, exponents ascending within a prime).
/// The character maps the j-th generator to zeta_j^residue for zeta_j a
/// fixed root of unity of order modulus.
struct CharacterVector {
  struct Entry {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 1;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;
  bool operator==(const CharacterVector&) const = default;
};

/// Streams all |G| characters in lexicographic residue order.
/// Throws OracleBoundExceeded when |G| > bound.
class CharacterEnumerator {
 public:
  explicit CharacterEnumerator(const PrimaryDecomposition& G,
                               std::uint64_t bound = kDefaultOracleBound);

  std::uint64_t group_size() const { return size_; }
  bool done() const { return emitted_ == size_; }
  CharacterVector next();

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> current_;
  std::uint64_t size_ = 1;
  std::uint64_t emitted_ = 0;
};

/// Materializes the full character list (test-sized groups only).
std::vector<CharacterVector> enumerate_characters(const PrimaryDecomposition& G,
                                                  std::uint64_t bound = kDefaultOracleBound);

/// Order of a character: lcm over entries of modulus / gcd(modulus, residue).
std::uint64_t character_order(const CharacterVector& chi);

struct OracleOptions {
  std::uint64_t bound = kDefaultOracleBound;
  /// When set, assert during the walk that character order is constant on
  /// each orbit and that the orbit length equals ord(q mod that order).
  /// Disable to keep the enumeration free of any shared order computation.
  bool check_orbit_lengths = true;
};

/// Brute-force degree table: enumerates every character of G, partitions
/// them into orbits of chi -> chi^q, and tabulates the orbit lengths. This is
/// a full enumeration, deliberately independent of the closed-form counting
/// route. Requires gcd(q, |G|) = 1 and |G| <= options.bound.
DegreeTable frobenius_orbits(const PrimaryDecomposition& G, const FieldSpec& field,
                             const OracleOptions& options = {});

}  // namespace abelrep
