#include "bchden/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "bchden/errors.hpp"

namespace bchden {

namespace {

void require_prime(std::uint64_t p, const char* where)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::string(where) + ": p = " + std::to_string(p) +
                                    " is not a prime");
}

void check_bound(std::uint64_t n, EnumerationBound bound, const char* where)
{
    const auto limit = std::min(bound.max_n, EnumerationBound::hard_cap);
    if (n > limit)
        throw BudgetExceeded(std::string(where) + ": n = " + std::to_string(n) +
                             " exceeds enumeration bound " + std::to_string(limit));
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t n)
{
    if (n < 3)
        return {};
    std::vector<bool> composite(n, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i < n; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j < n; j += i)
            composite[j] = true;
    }
    return primes;
}

PadicExpansion PadicExpansion::of(std::uint64_t n, std::uint64_t p)
{
    require_prime(p, "PadicExpansion");
    PadicExpansion e{n, p, {}};
    for (std::uint64_t m = n; m > 0; m /= p)
        e.digits.push_back(m % p);
    return e;
}

std::uint64_t PadicExpansion::digit_sum() const noexcept
{
    return std::accumulate(digits.begin(), digits.end(), std::uint64_t{0});
}

std::uint64_t PadicExpansion::value() const noexcept
{
    std::uint64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = v * p + *it;
    return v;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p)
{
    require_prime(p, "digit_sum");
    std::uint64_t s = 0;
    for (; n > 0; n /= p)
        s += n % p;
    return s;
}

std::uint64_t padic_valuation(const BigInt& m, std::uint64_t p)
{
    if (m == 0)
        throw InfiniteValuation();
    require_prime(p, "padic_valuation");
    BigInt rest = abs(m);
    std::uint64_t v = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++v;
    }
    return v;
}

std::uint64_t padic_valuation(std::uint64_t m, std::uint64_t p)
{
    if (m == 0)
        throw InfiniteValuation();
    require_prime(p, "padic_valuation");
    std::uint64_t v = 0;
    for (; m % p == 0; m /= p)
        ++v;
    return v;
}

std::uint64_t factorial_valuation_floor_sum(std::uint64_t n, std::uint64_t p)
{
    require_prime(p, "factorial_valuation_floor_sum");
    std::uint64_t v = 0;
    for (std::uint64_t q = n / p; q > 0; q /= p)
        v += q;
    return v;
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p)
{
    const std::uint64_t s = digit_sum(n, p);
    const std::uint64_t v = (n - s) / (p - 1);
#ifndef NDEBUG
    if ((n - s) % (p - 1) != 0 || v != factorial_valuation_floor_sum(n, p))
        throw CorrectnessViolation("Legendre's formula disagrees with the floor sum");
#endif
    return v;
}

std::uint64_t dn_exponent(std::uint64_t n, std::uint64_t p)
{
    const std::uint64_t s = digit_sum(n, p);
    std::uint64_t t = 0;
    for (std::uint64_t power = p; power <= s; power *= p)
        ++t;
    return t;
}

FactoredInteger compute_dn(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("compute_dn: n must be >= 1");
    PrimeFactorization f;
    for (auto p : primes_below(n))
        f.multiply_prime_power(p, dn_exponent(n, p));
    return {f.value(), f};
}

BigInt squarefree_kernel(std::uint64_t n)
{
    return compute_dn(n).factorization.radical().value();
}

BigInt squarefree_kernel_by_digit_sums(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("squarefree_kernel: n must be >= 1");
    BigInt k = 1;
    for (auto p : primes_below(n))
        if (digit_sum(n, p) >= p)
            k *= p;
    return k;
}

BigInt factorial(std::uint64_t n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

FactoredInteger common_denominator(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("common_denominator: n must be >= 1");
    PrimeFactorization f;
    // p = n contributes to n! only when n itself is prime; include p <= n.
    for (auto p : primes_below(n + 1)) {
        const auto e = factorial_valuation(n, p) + (p < n ? dn_exponent(n, p) : 0);
        f.multiply_prime_power(p, e);
    }
    return {f.value(), f};
}

void for_each_composition(std::uint64_t n,
                          const std::function<bool(std::span<const std::uint64_t>)>& visit)
{
    if (n == 0)
        return;
    // Odometer over part sequences in lexicographic order: (1,...,1) first, (n) last.
    std::vector<std::uint64_t> parts(n, 1);
    while (true) {
        if (!visit(parts))
            return;
        // Successor: pop the last part L, bump the new last part, refill L-1 ones.
        if (parts.size() == 1)
            return;
        const auto last = parts.back();
        parts.pop_back();
        parts.back() += 1;
        for (std::uint64_t i = 1; i < last; ++i)
            parts.push_back(1);
    }
}

void for_each_composition(std::uint64_t n, std::uint64_t k,
                          const std::function<bool(std::span<const std::uint64_t>)>& visit)
{
    if (k == 0 || k > n)
        return;
    std::vector<std::uint64_t> parts(k, 1);
    parts.back() = n - (k - 1);
    while (true) {
        if (!visit(parts))
            return;
        // Lexicographic successor: bump the rightmost parts[i] (i < k-1) that
        // still leaves room for ones in between and a positive last part.
        std::uint64_t prefix = n - parts.back(); // sum of parts[0..k-2]
        std::size_t i = k - 1;
        bool advanced = false;
        while (i > 0) {
            --i;
            prefix -= parts[i]; // now sum of parts[0..i-1]
            const std::uint64_t needed = prefix + (parts[i] + 1) + (k - 2 - i) + 1;
            if (needed <= n) {
                parts[i] += 1;
                for (std::size_t j = i + 1; j + 1 < k; ++j)
                    parts[j] = 1;
                parts.back() = n - (prefix + parts[i] + (k - 2 - i));
                advanced = true;
                break;
            }
        }
        if (!advanced)
            return;
    }
}

namespace {

// Exponent vectors over the primes <= n, built without any digit-sum or
// Legendre machinery.
struct CompositionLcm {
    std::vector<std::uint64_t> primes;
    std::vector<std::vector<std::uint64_t>> factorial_exp; // [j][prime index]
    std::vector<std::vector<std::uint64_t>> integer_exp;   // [k][prime index]

    explicit CompositionLcm(std::uint64_t n)
    {
        primes = primes_below(n + 1);
        const auto np = primes.size();
        integer_exp.assign(n + 1, std::vector<std::uint64_t>(np, 0));
        factorial_exp.assign(n + 1, std::vector<std::uint64_t>(np, 0));
        for (std::uint64_t m = 1; m <= n; ++m) {
            const auto f = PrimeFactorization::of(m);
            for (std::size_t i = 0; i < np; ++i) {
                integer_exp[m][i] = f.exponent_of(primes[i]);
                factorial_exp[m][i] = factorial_exp[m - 1][i] + integer_exp[m][i];
            }
        }
    }

    // Max-accumulates over all compositions whose parts so far sum to n - remaining.
    void descend(std::uint64_t remaining, std::uint64_t depth, std::vector<std::uint64_t>& partial,
                 std::vector<std::uint64_t>& acc) const
    {
        const auto np = primes.size();
        if (remaining == 0) {
            for (std::size_t i = 0; i < np; ++i)
                acc[i] = std::max(acc[i], partial[i] + integer_exp[depth][i]);
            return;
        }
        for (std::uint64_t j = 1; j <= remaining; ++j) {
            for (std::size_t i = 0; i < np; ++i)
                partial[i] += factorial_exp[j][i];
            descend(remaining - j, depth + 1, partial, acc);
            for (std::size_t i = 0; i < np; ++i)
                partial[i] -= factorial_exp[j][i];
        }
    }

    std::vector<std::uint64_t> first_part(std::uint64_t n, std::uint64_t j) const
    {
        std::vector<std::uint64_t> acc(primes.size(), 0);
        std::vector<std::uint64_t> partial = factorial_exp[j];
        descend(n - j, 1, partial, acc);
        return acc;
    }
};

} // namespace

BigInt dn_bruteforce(std::uint64_t n, EnumerationBound bound, unsigned workers)
{
    if (n == 0)
        throw std::invalid_argument("dn_bruteforce: n must be >= 1");
    check_bound(n, bound, "dn_bruteforce");

    const CompositionLcm table(n);
    std::vector<std::vector<std::uint64_t>> per_first(n + 1);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (workers == 1) {
        for (std::uint64_t j = 1; j <= n; ++j)
            per_first[j] = table.first_part(n, j);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t j = 1 + w; j <= n; j += workers)
                    per_first[j] = table.first_part(n, j);
            });
    }

    PrimeFactorization lcm;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        std::uint64_t e = 0;
        for (std::uint64_t j = 1; j <= n; ++j)
            e = std::max(e, per_first[j][i]);
        lcm.multiply_prime_power(table.primes[i], e);
    }
    return lcm.value();
}

std::uint64_t multinomial_valuation(std::uint64_t n, std::span<const std::uint64_t> parts,
                                    std::uint64_t p)
{
    require_prime(p, "multinomial_valuation");
    if (parts.empty())
        throw std::invalid_argument("multinomial_valuation: empty composition");
    std::uint64_t total = 0;
    std::uint64_t digit_total = 0;
    for (auto j : parts) {
        if (j == 0)
            throw std::invalid_argument("multinomial_valuation: parts must be >= 1");
        total += j;
        digit_total += digit_sum(j, p);
    }
    if (total != n)
        throw std::invalid_argument("multinomial_valuation: parts sum to " +
                                    std::to_string(total) + ", expected " + std::to_string(n));

    const auto s = digit_sum(n, p);
    if (digit_total < s || (digit_total - s) % (p - 1) != 0)
        throw CorrectnessViolation("multinomial digit-sum excess is not a nonnegative multiple of p-1");
    const auto v = (digit_total - s) / (p - 1);

    BigInt multinomial = factorial(n);
    for (auto j : parts)
        mpz_divexact(multinomial.get_mpz_t(), multinomial.get_mpz_t(), factorial(j).get_mpz_t());
    if (padic_valuation(multinomial, p) != v)
        throw CorrectnessViolation("multinomial valuation disagrees with the digit-sum form");
    return v;
}

std::uint64_t hp_min(std::uint64_t n, std::uint64_t k, std::uint64_t p, EnumerationBound bound)
{
    require_prime(p, "hp_min");
    if (k == 0 || k > n)
        throw std::invalid_argument("hp_min: requires 1 <= k <= n");
    check_bound(n, bound, "hp_min");

    const auto s = digit_sum(n, p);
    auto best = std::numeric_limits<std::uint64_t>::max();
    for_each_composition(n, k, [&](std::span<const std::uint64_t> parts) {
        std::uint64_t total = 0;
        for (auto j : parts)
            total += digit_sum(j, p);
        best = std::min(best, total - s);
        return best != 0;
    });
    if (best % (p - 1) != 0)
        throw CorrectnessViolation("hp_min: digit-sum excess not divisible by p-1");
    return best / (p - 1);
}

std::vector<std::uint64_t> constructive_partition(std::uint64_t n, std::uint64_t p, std::uint64_t k)
{
    const auto expansion = PadicExpansion::of(n, p);
    const auto s = expansion.digit_sum();
    if (k == 0 || k > s)
        throw std::invalid_argument("constructive_partition: requires 1 <= k <= s_p(n) = " +
                                    std::to_string(s));

    const auto& alpha = expansion.digits;
    // x is the digit position where the (k-1) unit parts run out:
    // alpha_0 + ... + alpha_{x-1} <= k-1 < alpha_0 + ... + alpha_x.
    std::size_t x = 0;
    std::uint64_t below = 0;
    while (below + alpha[x] <= k - 1) {
        below += alpha[x];
        ++x;
    }
    const std::uint64_t y = (k - 1) - below;

    std::vector<std::uint64_t> parts;
    parts.reserve(k);
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < x; ++i, power *= p)
        parts.insert(parts.end(), alpha[i], power);
    parts.insert(parts.end(), y, power);

    std::uint64_t last = (alpha[x] - y) * power;
    std::uint64_t high = power;
    for (std::size_t i = x + 1; i < alpha.size(); ++i) {
        high *= p;
        last += alpha[i] * high;
    }
    parts.push_back(last);
    return parts;
}

} // namespace bchden
