#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pcg {

using u64 = std::uint64_t;

/// Largest argument accepted by the arithmetic kernel. Every closed form used
/// by the library stays inside 64 bits for values up to this bound.
inline constexpr u64 kMaxArgument = u64{1} << 32;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization n = p_1^k_1 ... p_t^k_t with p_1 < ... < p_t.
/// The value 1 has no prime powers.
class Factorization {
 public:
  Factorization() = default;

  u64 value() const { return value_; }
  const std::vector<PrimePower>& powers() const& { return powers_; }
  std::vector<PrimePower> powers() && { return std::move(powers_); }

  /// Number of distinct prime divisors.
  std::size_t omega() const { return powers_.size(); }
  /// Number of prime divisors counted with multiplicity.
  unsigned big_omega() const;
  bool is_squarefree() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  friend Factorization factorize(u64 n);

  u64 value_ = 1;
  std::vector<PrimePower> powers_;
};

/// Trial division up to sqrt(n). Throws std::invalid_argument for n = 0 and
/// std::out_of_range above kMaxArgument.
Factorization factorize(u64 n);

u64 euler_phi(u64 n);

/// Divisors of n in ascending order.
std::vector<u64> divisors(u64 n);

/// Divisors of n of the form p^2 or pq (p != q prime), ascending. Empty when
/// n has none, including n = 1 and n prime.
std::vector<u64> semiprime_divisors(u64 n);

/// Rejects gcd(0, 0).
u64 gcd(u64 a, u64 b);

bool is_prime(u64 n);
bool is_composite(u64 n);
bool is_semiprime(u64 n);

/// True when the gcd of a and b is 1 or a prime. This is the adjacency rule of
/// the prime-coprime graph applied to two element orders.
bool gcd_is_unit_or_prime(u64 a, u64 b);

/// Integer power with overflow check (throws std::overflow_error).
u64 ipow(u64 base, unsigned exponent);

}  // namespace pcg
