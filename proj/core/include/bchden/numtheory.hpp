#pragma once

// Integer and p-adic building blocks for the BCH denominator sequence
//
//   d_n = prod_{p prime, p < n} p^{max{t : p^t <= s_p(n)}}
//
// together with the brute-force lcm oracle
//
//   D_n = lcm{ k * j_1! * ... * j_k! : j_i >= 1, j_1 + ... + j_k = n }
//
// which equals n! * d_n.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "bchden/factorization.hpp"

namespace bchden {

using BigRational = mpq_class;

/// Exhaustive-enumeration oracles refuse n above `max_n`.
struct EnumerationBound {
    static constexpr std::uint64_t default_max = 20;
    static constexpr std::uint64_t hard_cap = 24;

    std::uint64_t max_n = default_max;
};

bool is_prime(std::uint64_t n) noexcept;

/// All primes p < n, ascending.
std::vector<std::uint64_t> primes_below(std::uint64_t n);

/// Base-p digits alpha_0..alpha_r of n (least significant first; empty for 0).
struct PadicExpansion {
    std::uint64_t n = 0;
    std::uint64_t p = 2;
    std::vector<std::uint64_t> digits;

    /// Throws std::invalid_argument unless p is prime.
    static PadicExpansion of(std::uint64_t n, std::uint64_t p);

    std::uint64_t digit_sum() const noexcept;
    std::uint64_t value() const noexcept;
};

/// s_p(n). Throws std::invalid_argument for p < 2 or composite p.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);

/// v_p(m). Throws InfiniteValuation for m = 0.
std::uint64_t padic_valuation(const BigInt& m, std::uint64_t p);
std::uint64_t padic_valuation(std::uint64_t m, std::uint64_t p);

/// v_p(n!) by Legendre's formula (n - s_p(n)) / (p - 1). In builds without
/// NDEBUG the floor-sum form sum_i floor(n / p^i) is evaluated too and the two
/// must agree.
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);
/// sum_{i >= 1} floor(n / p^i).
std::uint64_t factorial_valuation_floor_sum(std::uint64_t n, std::uint64_t p);

/// max{t : p^t <= s_p(n)}, i.e. v_p(d_n) for p < n.
std::uint64_t dn_exponent(std::uint64_t n, std::uint64_t p);

struct FactoredInteger {
    BigInt value;
    PrimeFactorization factorization;
};

/// d_n (d_1 = d_2 = 1).
FactoredInteger compute_dn(std::uint64_t n);

/// Square-free kernel of d_n, taken as the radical of compute_dn(n).
BigInt squarefree_kernel(std::uint64_t n);
/// Same value from prod_{p < n : s_p(n) >= p} p.
BigInt squarefree_kernel_by_digit_sums(std::uint64_t n);

/// n! * d_n with exponents v_p(n!) + v_p(d_n).
FactoredInteger common_denominator(std::uint64_t n);

BigInt factorial(std::uint64_t n);

/// Visits every composition of n (ordered tuples of positive parts) in
/// lexicographic order of the part sequence. Stops early if visit returns false.
void for_each_composition(std::uint64_t n,
                          const std::function<bool(std::span<const std::uint64_t>)>& visit);

/// Visits the compositions of n into exactly k parts, lexicographically.
void for_each_composition(std::uint64_t n, std::uint64_t k,
                          const std::function<bool(std::span<const std::uint64_t>)>& visit);

/// D_n by exhaustive enumeration of all 2^{n-1} compositions. Independent of
/// digit sums and Legendre's formula: factorials are factored by trial
/// division. `workers` splits the enumeration by first part; the result does
/// not depend on it. Throws BudgetExceeded when n > bound.max_n.
BigInt dn_bruteforce(std::uint64_t n, EnumerationBound bound = {}, unsigned workers = 1);

/// (s_p(j_1) + ... + s_p(j_k) - s_p(n)) / (p - 1), checked against v_p of the
/// explicitly computed multinomial coefficient. Throws std::invalid_argument
/// if parts are empty, contain 0, or do not sum to n.
std::uint64_t multinomial_valuation(std::uint64_t n, std::span<const std::uint64_t> parts,
                                    std::uint64_t p);

/// h_p(n, k): minimum of the digit-sum excess over compositions of n into k
/// parts, divided by p - 1. Test oracle only; throws BudgetExceeded.
std::uint64_t hp_min(std::uint64_t n, std::uint64_t k, std::uint64_t p,
                     EnumerationBound bound = {});

/// Explicit k-part composition of n with sum_i s_p(j_i) = s_p(n): k - 1 parts
/// are powers p^0, p^1, ... taken with digit multiplicities, the last part
/// carries the remaining high digits. Requires 1 <= k <= s_p(n).
std::vector<std::uint64_t> constructive_partition(std::uint64_t n, std::uint64_t p,
                                                  std::uint64_t k);

/// B_0..B_m from sum_{k=0}^{m} C(m+1, k) B_k = 0, so B_1 = -1/2.
std::vector<BigRational> bernoulli_numbers(std::uint64_t m);

/// denom(B_n(x) - B_n): lcm of the reduced denominators of C(n,k) B_k, k < n.
BigInt bernoulli_poly_denominator(std::uint64_t n);

/// Reduced denominator of (B_{n-1} + B_{n-2}) / n!. Requires n >= 4.
BigInt goldberg_denominator(std::uint64_t n);

} // namespace bchden
