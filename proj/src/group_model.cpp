#include "abelrep/group_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace abelrep {

namespace {

std::size_t skip_ws(const std::string& s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

bool is_digit(const std::string& s, std::size_t i) {
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}

Int parse_factor(const std::string& s, std::size_t& i) {
  if (!is_digit(s, i)) throw ParseError("expected a cyclic factor order", i);
  const std::size_t start = i;
  while (is_digit(s, i)) ++i;
  const Int value(s.substr(start, i - start));
  if (value == 0)
    throw ValueError("cyclic factor must be positive (position " + std::to_string(start) + ")");
  return value;
}

}  // namespace

CyclicFactorList parse_group_spec(const std::string& text) {
  std::size_t i = skip_ws(text, 0);
  if (i == text.size()) throw ParseError("empty group spec", i);

  const bool c_notation = text[i] == 'C' || text[i] == 'c';
  CyclicFactorList group;
  while (true) {
    i = skip_ws(text, i);
    if (c_notation) {
      if (i >= text.size() || (text[i] != 'C' && text[i] != 'c'))
        throw ParseError("expected 'C'", i);
      ++i;
    }
    group.factors.push_back(parse_factor(text, i));
    i = skip_ws(text, i);
    if (i == text.size()) break;
    const bool separator = c_notation ? (text[i] == 'x' || text[i] == 'X') : text[i] == ',';
    if (!separator)
      throw ParseError(c_notation ? "expected 'x' between factors" : "expected ',' between factors", i);
    ++i;
  }
  return group;
}

PrimaryDecomposition::PrimaryDecomposition(std::vector<Component> components)
    : components_(std::move(components)) {
  std::vector<FactoredInteger::Factor> order_factors;
  std::vector<FactoredInteger::Factor> exponent_factors;
  const Int* previous = nullptr;
  for (const Component& comp : components_) {
    if (previous != nullptr && !(*previous < comp.prime))
      throw ValueError("components must be sorted by strictly ascending prime");
    if (comp.exponents.empty()) throw ValueError("component with no cyclic factors");
    if (!std::is_sorted(comp.exponents.begin(), comp.exponents.end()))
      throw ValueError("component exponents must be ascending");
    if (comp.exponents.front() == 0) throw ValueError("component exponents must be positive");
    previous = &comp.prime;

    unsigned total = 0;
    for (const unsigned a : comp.exponents) total += a;
    order_factors.push_back({comp.prime, total});
    exponent_factors.push_back({comp.prime, comp.exponents.back()});
  }
  order_ = FactoredInteger::from_factors(std::move(order_factors));
  exponent_ = FactoredInteger::from_factors(std::move(exponent_factors));
}

PrimaryDecomposition primary_decomposition(const CyclicFactorList& group) {
  std::vector<FactoredInteger> factored;
  factored.reserve(group.factors.size());
  for (const Int& m : group.factors) {
    if (m < 1) throw ValueError("cyclic factor must be positive, got " + m.str());
    factored.push_back(factor(m));
  }
  return primary_decomposition(factored);
}

PrimaryDecomposition primary_decomposition(const std::vector<FactoredInteger>& factored_orders) {
  std::map<Int, std::vector<unsigned>> by_prime;
  for (const FactoredInteger& m : factored_orders)
    for (const auto& f : m.factors()) by_prime[f.prime].push_back(f.exponent);

  std::vector<PrimaryDecomposition::Component> components;
  components.reserve(by_prime.size());
  for (auto& [prime, exponents] : by_prime) {
    std::sort(exponents.begin(), exponents.end());
    components.push_back({prime, std::move(exponents)});
  }
  return PrimaryDecomposition(std::move(components));
}

}  // namespace abelrep
