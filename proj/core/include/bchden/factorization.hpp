#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bchden {

using BigInt = mpz_class;

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint64_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of a positive integer as (prime, exponent) pairs with
/// strictly increasing primes and exponents >= 1. The empty list is 1.
class PrimeFactorization {
public:
    PrimeFactorization() = default;

    /// Validates ordering and exponents; throws std::invalid_argument.
    explicit PrimeFactorization(std::vector<PrimePower> factors);

    /// Trial division; intended for values whose prime factors are small.
    static PrimeFactorization of(const BigInt& value);
    static PrimeFactorization of(std::uint64_t value);

    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }

    std::uint64_t exponent_of(std::uint64_t prime) const noexcept;
    BigInt value() const;

    /// Adds e to the exponent of p (e = 0 is a no-op).
    void multiply_prime_power(std::uint64_t prime, std::uint64_t exponent);

    PrimeFactorization operator*(const PrimeFactorization& other) const;
    /// Exponent-wise max.
    PrimeFactorization lcm(const PrimeFactorization& other) const;
    /// Product of the distinct primes.
    PrimeFactorization radical() const;
    /// True when other divides *this.
    bool divisible_by(const PrimeFactorization& other) const noexcept;

    /// "2^9*3^5*5^2*7*11"; "1" for the empty factorization.
    std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument.
    static PrimeFactorization parse(const std::string& text);

    friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

} // namespace bchden
