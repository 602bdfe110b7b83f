#include "pcg/numth.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pcg {

namespace {

void check_argument(u64 n, const char* what) {
  if (n == 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be positive");
  }
  if (n > kMaxArgument) {
    throw std::out_of_range(std::string(what) + ": argument " + std::to_string(n) +
                            " exceeds 2^32");
  }
}

}  // namespace

unsigned Factorization::big_omega() const {
  unsigned total = 0;
  for (const auto& pp : powers_) total += pp.exponent;
  return total;
}

bool Factorization::is_squarefree() const {
  return std::all_of(powers_.begin(), powers_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

Factorization factorize(u64 n) {
  check_argument(n, "factorize");
  Factorization f;
  f.value_ = n;
  u64 rest = n;
  for (u64 p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    f.powers_.push_back({p, k});
  }
  if (rest > 1) f.powers_.push_back({rest, 1});
  return f;
}

u64 euler_phi(u64 n) {
  check_argument(n, "euler_phi");
  u64 phi = 1;
  for (const auto& [p, k] : factorize(n).powers()) {
    // p^k - p^(k-1)
    phi *= ipow(p, k - 1) * (p - 1);
  }
  return phi;
}

std::vector<u64> divisors(u64 n) {
  check_argument(n, "divisors");
  std::vector<u64> out{1};
  for (const auto& [p, k] : factorize(n).powers()) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> semiprime_divisors(u64 n) {
  check_argument(n, "semiprime_divisors");
  const auto& powers = factorize(n).powers();
  std::vector<u64> out;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i].exponent >= 2) out.push_back(powers[i].prime * powers[i].prime);
    for (std::size_t j = i + 1; j < powers.size(); ++j) {
      out.push_back(powers[i].prime * powers[j].prime);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 gcd(u64 a, u64 b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_composite(u64 n) { return n > 1 && !is_prime(n); }

bool is_semiprime(u64 n) {
  if (n < 4) return false;
  return factorize(n).big_omega() == 2;
}

bool gcd_is_unit_or_prime(u64 a, u64 b) {
  const u64 g = gcd(a, b);
  return g == 1 || is_prime(g);
}

u64 ipow(u64 base, unsigned exponent) {
  u64 result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<u64>::max() / base) {
      throw std::overflow_error("ipow: result exceeds 64 bits");
    }
    result *= base;
  }
  return result;
}

}  // namespace pcg
