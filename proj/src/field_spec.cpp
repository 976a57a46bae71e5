#include "abelrep/field_spec.hpp"

#include "abelrep/numtheory.hpp"

namespace abelrep {

FieldSpec::FieldSpec(Int p, unsigned long m, Int value)
    : p_(std::move(p)), m_(m), value_(std::move(value)) {}

FieldSpec FieldSpec::from_prime_power(const Int& q) {
  if (q < 2) throw NotAPrimePower("field size must be at least 2, got " + q.str());
  const FactoredInteger f = factor(q);
  if (f.factors().size() != 1)
    throw NotAPrimePower(q.str() + " is not a prime power");
  return FieldSpec(f.factors()[0].prime, f.factors()[0].exponent, q);
}

FieldSpec FieldSpec::from_prime_and_exponent(const Int& p, unsigned long m) {
  if (!is_prime(p)) throw NotAPrimePower("field characteristic must be prime, got " + p.str());
  if (m < 1) throw InputError("field extension degree must be at least 1");
  if (m > 1'000'000) throw InputError("field extension degree too large");
  return FieldSpec(p, m, boost::multiprecision::pow(p, static_cast<unsigned>(m)));
}

}  // namespace abelrep
