#ifndef CAPGAP_DISCRIMINANT_HPP
#define CAPGAP_DISCRIMINANT_HPP

#include <cstdint>
#include <vector>

namespace capgap {

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// d = 1 mod 4 squarefree, or d = 4m with m = 2, 3 mod 4 squarefree; d != 0, 1.
bool is_fundamental_discriminant(std::int64_t d);

/// -4, 8, -8, or p* = (-1)^((p-1)/2) p for an odd prime p.
bool is_prime_discriminant(std::int64_t d);

/// The unique factorization of a fundamental discriminant into prime
/// discriminants, sorted ascending. Throws std::invalid_argument otherwise.
std::vector<std::int64_t> factor_into_prime_discriminants(std::int64_t d);

/// Number t of prime-discriminant factors; the 2-rank of Cl(d) is t - 1.
std::size_t prime_discriminant_count(std::int64_t d);

/// Fundamental discriminants in [lo, hi], ascending.
std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi);

} // namespace capgap

#endif // CAPGAP_DISCRIMINANT_HPP
