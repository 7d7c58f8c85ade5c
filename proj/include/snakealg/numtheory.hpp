#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Integer number theory around the cyclotomic polynomial T^2 + T + 1:
// Legendre symbols, Tonelli-Shanks square roots, roots of T^2+T+1 mod p,
// the mod-3 splitting classification of primes, and the factor-congruence
// report for b^2+b+1. All moduli are bounded by 2^31 - 1 (desk scale);
// primality is decided by trial division.

namespace snakealg::numtheory {

inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;
inline constexpr std::uint64_t kMaxFactorLemmaB = 1'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p); // p prime, a not divisible by p

bool is_prime(std::uint64_t n);

// Euler's criterion a^((p-1)/2) mod p; p must be an odd prime.
// Returns 0 iff p | a, 1 iff a is a nonzero quadratic residue, -1 otherwise.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Tonelli-Shanks square root of a mod the odd prime p. Returns the smaller
// of the two roots, or nullopt when a is a nonresidue. The quadratic
// nonresidue needed internally is found by ascending search from 2.
std::optional<std::uint64_t> sqrt_mod(std::int64_t a, std::uint64_t p);

// All b in [0, p) with b^2 + b + 1 == 0 (mod p), ascending. p must be prime;
// p = 2 is allowed (and yields no roots).
std::vector<std::uint64_t> phi3_roots_mod_p(std::uint64_t p);

enum class SplitClass {
    Ramified, // p = 3
    Splits,   // p = 1 (mod 3)
    Inert,    // p = 2 (mod 3)
};

const char* split_class_name(SplitClass c) noexcept;

SplitClass classify_prime(std::uint64_t p);

struct FactorReport {
    std::uint64_t b = 0;
    std::uint64_t value = 0; // b^2 + b + 1
    std::vector<std::pair<std::uint64_t, int>> factors; // (prime, multiplicity), ascending
    bool all_congruent = false; // every prime factor is 0 or 1 mod 3
};

// Full trial-division factorization of b^2+b+1 for 1 <= b <= kMaxFactorLemmaB.
FactorReport factor_lemma_check(std::uint64_t b);

} // namespace snakealg::numtheory
