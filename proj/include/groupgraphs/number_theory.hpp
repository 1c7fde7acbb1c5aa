#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace groupgraphs {

/// Greatest common divisor. Throws Error(Domain) when both arguments are zero.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Count of k in [1, n] coprime to n. Throws Error(Domain) for n == 0.
std::uint64_t euler_phi(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Returns p when n = p^k with k >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace groupgraphs
