#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abelrep {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// factor() input above the hard 2^96 bound.
struct FactorizationLimitExceeded : Error {
  using Error::Error;
};

// gcd(q, n) > 1 where coprimality is required.
struct NotCoprime : Error {
  using Error::Error;
};

// lcm() called with a zero argument.
struct ZeroArgument : Error {
  using Error::Error;
};

// Index outside the valid range of a Sylow component.
struct OutOfRange : Error {
  using Error::Error;
};

// card_I_d called with d outside relevant_divisors(exponent).
struct NotARelevantDivisor : Error {
  using Error::Error;
};

// Brute-force enumeration refused: |G| exceeds the configured bound.
struct OracleBoundExceeded : Error {
  using Error::Error;
};

// Malformed textual input; position() is the offending byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structurally valid input with an inadmissible value (e.g. a zero factor).
struct ValueError : Error {
  using Error::Error;
};

// --q N where N is not a prime power, or --p P with P composite.
struct NotAPrimePower : Error {
  using Error::Error;
};

// Inconsistent or incomplete combination of command-line options.
struct InputError : Error {
  using Error::Error;
};

}  // namespace abelrep
