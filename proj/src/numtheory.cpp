#include "abelrep/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace abelrep {

namespace mp = boost::multiprecision;

namespace {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

// Strong probable-prime test to base a, for odd n > 2 with 1 < a < n - 1.
bool strong_probable_prime(const Int& n, const Int& a) {
  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Int x = mp::powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Jacobi symbol (a|n) for odd n > 0.
int jacobi(Int a, Int n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const Int r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Strong Lucas probable-prime test with Selfridge parameters, for odd n > 2
// that is not a perfect square and has no small prime factors.
bool strong_lucas_probable_prime(const Int& n) {
  Int D = 5;
  while (true) {
    const int j = jacobi(D, n);
    if (j == -1) break;
    if (j == 0 && abs(D) != n) return false;  // shares a factor with n
    D = D > 0 ? Int(-(D + 2)) : Int(-(D - 2));
  }
  const Int P = 1;
  const Int Q = (1 - D) / 4;

  Int d = n + 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }

  const auto mod_n = [&n](Int x) {
    x %= n;
    if (x < 0) x += n;
    return x;
  };
  // Halving mod the odd modulus n.
  const auto half = [&n, &mod_n](Int x) {
    if ((x & 1) != 0) x += n;
    return mod_n(x >> 1);
  };

  // Left-to-right binary chain for (U_d, V_d, Q^d), starting from index 1.
  Int U = 1, V = P, Qk = mod_n(Q);
  for (int i = static_cast<int>(mp::msb(d)) - 1; i >= 0; --i) {
    U = mod_n(U * V);
    V = mod_n(V * V - 2 * Qk);
    Qk = mod_n(Qk * Qk);
    if (mp::bit_test(d, static_cast<unsigned>(i))) {
      const Int U1 = half(mod_n(P * U + V));
      const Int V1 = half(mod_n(D * U + P * V));
      U = U1;
      V = V1;
      Qk = mod_n(Qk * Q);
    }
  }

  if (U == 0 || V == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    V = mod_n(V * V - 2 * Qk);
    if (V == 0) return true;
    Qk = mod_n(Qk * Qk);
  }
  return false;
}

// The first 13 primes are a proven witness set below this bound.
const Int& mr_deterministic_limit() {
  static const Int limit("3317044064679887385961981");
  return limit;
}

constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Finds a nontrivial divisor of n (odd, composite, no factor <= 10^6) by
// Brent's variant of the rho method. Fixed increment sequence c = 1, 2, ...
// keeps the result reproducible.
Int pollard_brent(const Int& n) {
  for (unsigned c = 1;; ++c) {
    Int y = 2, q = 1, g = 1, x = 0, ys = 0;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t limit = std::min(kBatch, r - k);
        for (std::uint64_t j = 0; j < limit; ++j) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // The batch overshot a factor; replay one step at a time.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void divide_out(Int& m, const Int& p, std::vector<FactoredInteger::Factor>& out) {
  unsigned e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (e > 0) out.push_back({p, e});
}

}  // namespace

FactoredInteger FactoredInteger::unchecked(Int value, std::vector<Factor> factors) {
  FactoredInteger result;
  result.value_ = std::move(value);
  result.factors_ = std::move(factors);
  return result;
}

FactoredInteger FactoredInteger::from_factors(std::vector<Factor> factors) {
  Int value = 1;
  const Int* previous = nullptr;
  for (const Factor& f : factors) {
    if (previous != nullptr && !(*previous < f.prime))
      throw ValueError("factorization primes must be strictly ascending");
    if (f.exponent == 0) throw ValueError("factorization exponents must be positive");
    if (!is_prime(f.prime)) throw ValueError("not a prime: " + f.prime.str());
    value *= mp::pow(f.prime, f.exponent);
    previous = &f.prime;
  }
  return unchecked(std::move(value), std::move(factors));
}

unsigned FactoredInteger::exponent_of(const Int& prime) const {
  for (const Factor& f : factors_)
    if (f.prime == prime) return f.exponent;
  return 0;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (const unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;
  for (const unsigned a : kWitnesses)
    if (!strong_probable_prime(n, a)) return false;
  if (n < mr_deterministic_limit()) return true;
  const Int root = mp::sqrt(n);
  if (root * root == n) return false;
  return strong_lucas_probable_prime(n);
}

const Int& factor_input_limit() {
  static const Int limit = Int(1) << 96;
  return limit;
}

FactoredInteger factor(const Int& n) {
  if (n < 1) throw ValueError("factor: argument must be positive, got " + n.str());
  if (n > factor_input_limit())
    throw FactorizationLimitExceeded("factor: " + n.str() + " exceeds the 2^96 input limit");

  Int m = n;
  std::vector<FactoredInteger::Factor> factors;
  divide_out(m, 2, factors);
  divide_out(m, 3, factors);
  divide_out(m, 5, factors);
  std::uint64_t p = 7;
  unsigned step = 4;  // alternating gaps of the 6k +/- 1 wheel
  while (p <= kTrialDivisionBound && Int(p) * p <= m) {
    divide_out(m, p, factors);
    p += step;
    step = 6 - step;
  }

  if (m > 1) {
    if (Int(p) * p > m) {
      factors.push_back({m, 1});  // no divisor below sqrt(m): m is prime
    } else {
      std::vector<Int> pending{m};
      std::vector<Int> primes;
      while (!pending.empty()) {
        Int t = std::move(pending.back());
        pending.pop_back();
        if (is_prime(t)) {
          primes.push_back(std::move(t));
          continue;
        }
        Int d = pollard_brent(t);
        pending.push_back(t / d);
        pending.push_back(std::move(d));
      }
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        factors.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
      }
    }
  }
  return FactoredInteger::unchecked(n, std::move(factors));
}

std::vector<FactoredInteger> divisors_factored(const FactoredInteger& n) {
  std::vector<FactoredInteger> out{FactoredInteger{}};
  for (const auto& f : n.factors()) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= f.exponent; ++k) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) {
        auto factors = out[i].factors();
        factors.push_back({f.prime, k});  // f.prime exceeds all earlier primes
        out.push_back(FactoredInteger::unchecked(out[i].value() * pk, std::move(factors)));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FactoredInteger& a, const FactoredInteger& b) { return a.value() < b.value(); });
  return out;
}

std::vector<Int> divisors(const FactoredInteger& n) {
  std::vector<Int> out;
  for (const FactoredInteger& d : divisors_factored(n)) out.push_back(d.value());
  return out;
}

Int gcd(const Int& a, const Int& b) { return mp::gcd(a, b); }

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) throw ZeroArgument("lcm: arguments must be nonzero");
  return mp::lcm(a, b);
}

Int pow_mod(const Int& base, const Int& exponent, const Int& modulus) {
  if (modulus < 1) throw ValueError("pow_mod: modulus must be positive");
  if (exponent < 0) throw ValueError("pow_mod: exponent must be nonnegative");
  if (modulus == 1) return 0;
  Int b = base % modulus;
  if (b < 0) b += modulus;
  return mp::powm(b, exponent, modulus);
}

Int mul_order(const Int& q, const Int& d) {
  if (d < 1) throw ValueError("mul_order: modulus must be positive");
  if (d == 1) return 1;
  if (gcd(q, d) != 1)
    throw NotCoprime("mul_order: " + q.str() + " is not invertible mod " + d.str());
  return mul_order(q, factor(d));
}

Int mul_order(const Int& q, const FactoredInteger& d) {
  if (d.value() == 1) return 1;
  if (gcd(q, d.value()) != 1)
    throw NotCoprime("mul_order: " + q.str() + " is not invertible mod " + d.value().str());

  // phi(d) in factored form; the order divides phi(d).
  Int phi = 1;
  std::map<Int, unsigned> phi_factors;
  for (const auto& f : d.factors()) {
    if (f.exponent > 1) {
      phi *= mp::pow(f.prime, f.exponent - 1);
      phi_factors[f.prime] += f.exponent - 1;
    }
    phi *= f.prime - 1;
    const FactoredInteger cofactor = factor(f.prime - 1);
    for (const auto& g : cofactor.factors()) phi_factors[g.prime] += g.exponent;
  }

  // Divide each prime out of the candidate exponent while q^(t/s) stays 1.
  Int t = phi;
  for (const auto& [s, k] : phi_factors) {
    for (unsigned i = 0; i < k; ++i) {
      if (t % s != 0) break;
      const Int candidate = t / s;
      if (pow_mod(q, candidate, d.value()) != 1) break;
      t = candidate;
    }
  }
  return t;
}

}  // namespace abelrep
