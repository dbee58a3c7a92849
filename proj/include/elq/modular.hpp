#pragma once

#include <cstdint>
#include <optional>

namespace elq::modp {

// Arithmetic in Z/p for primes p < 2^32; residues are kept in [0, p).

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const auto s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Inverse of a nonzero residue (Fermat).
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Maps a signed integer into [0, p).
std::uint64_t reduce(std::int64_t v, std::uint64_t p);

/// Deterministic primality test for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// A square root of a modulo the odd prime p (Tonelli-Shanks), or nothing
/// when a is a non-residue.
std::optional<std::uint64_t> sqrt(std::uint64_t a, std::uint64_t p);

}  // namespace elq::modp
