#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bchden/errors.hpp"
#include "bchden/numtheory.hpp"
#include "oracles.hpp"

using namespace bchden;

namespace {

// The two sequences listed for n = 1..25.
const std::vector<unsigned long> listed_dn = {1,  1,  2,   1,  6,   2,  6,  3,  10, 2,  6,  2,  210,
                                              30, 12, 3,   30, 10,  210, 42, 330, 30, 60, 30, 546};
const std::vector<unsigned long> listed_kernel = {1,  1, 2,  1,  6,   2,  6,   3,  10, 2,  6,  2, 210,
                                                  30, 6, 3,  30, 10,  210, 42, 330, 30, 30, 30, 546};

std::vector<std::uint64_t> v(std::initializer_list<std::uint64_t> xs) { return xs; }

} // namespace

TEST(PrimesBelow, SmallCases)
{
    EXPECT_TRUE(primes_below(1).empty());
    EXPECT_TRUE(primes_below(2).empty());
    EXPECT_EQ(primes_below(3), v({2}));
    EXPECT_EQ(primes_below(12), v({2, 3, 5, 7, 11}));
}

TEST(PrimesBelow, AgreesWithTrialDivision)
{
    auto primes = primes_below(500);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t m = 2; m < 500; ++m) {
        bool prime = true;
        for (std::uint64_t d = 2; d < m; ++d)
            prime = prime && m % d != 0;
        if (prime)
            expected.push_back(m);
    }
    EXPECT_EQ(primes, expected);
}

TEST(DigitSum, Examples)
{
    EXPECT_EQ(digit_sum(11, 2), 3u);
    EXPECT_EQ(digit_sum(11, 3), 3u);
    EXPECT_EQ(digit_sum(11, 5), 3u);
    EXPECT_EQ(digit_sum(11, 7), 5u);
    EXPECT_EQ(digit_sum(0, 5), 0u);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
        EXPECT_EQ(digit_sum(1, p), 1u);
}

TEST(DigitSum, RejectsNonPrimeBase)
{
    EXPECT_THROW(digit_sum(11, 0), std::invalid_argument);
    EXPECT_THROW(digit_sum(11, 1), std::invalid_argument);
    EXPECT_THROW(digit_sum(11, 4), std::invalid_argument);
    EXPECT_THROW(digit_sum(11, 9), std::invalid_argument);
}

TEST(PadicExpansion, ReconstructsValue)
{
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        for (std::uint64_t n = 0; n < 300; ++n) {
            auto e = PadicExpansion::of(n, p);
            EXPECT_EQ(e.value(), n);
            EXPECT_EQ(e.digit_sum(), digit_sum(n, p));
            for (auto d : e.digits)
                EXPECT_LT(d, p);
            if (!e.digits.empty()) {
                EXPECT_NE(e.digits.back(), 0u);
            }
        }
    }
    EXPECT_TRUE(PadicExpansion::of(0, 3).digits.empty());
    EXPECT_EQ(PadicExpansion::of(11, 2).digits, v({1, 1, 0, 1}));
}

TEST(PadicValuation, Examples)
{
    EXPECT_EQ(padic_valuation(std::uint64_t{8}, 2), 3u);
    EXPECT_EQ(padic_valuation(std::uint64_t{10}, 5), 1u);
    // 165 = 3 * 5 * 11
    EXPECT_EQ(padic_valuation(std::uint64_t{165}, 3), 1u);
    EXPECT_EQ(padic_valuation(BigInt(165), 11), 1u);
    EXPECT_EQ(padic_valuation(BigInt(165), 2), 0u);
    EXPECT_EQ(padic_valuation(BigInt("239500800"), 2), 9u);
}

TEST(PadicValuation, ZeroIsADistinctError)
{
    EXPECT_THROW(padic_valuation(std::uint64_t{0}, 2), InfiniteValuation);
    EXPECT_THROW(padic_valuation(BigInt(0), 3), InfiniteValuation);
    EXPECT_THROW(padic_valuation(std::uint64_t{12}, 4), std::invalid_argument);
}

TEST(PadicValuation, AdditiveOverProducts)
{
    for (std::uint64_t p : {2, 3, 5, 7})
        for (std::uint64_t a = 1; a < 60; ++a)
            for (std::uint64_t b = 1; b < 60; ++b)
                EXPECT_EQ(padic_valuation(a * b, p), padic_valuation(a, p) + padic_valuation(b, p));
}

TEST(FactorialValuation, Examples)
{
    EXPECT_EQ(factorial_valuation(11, 2), 8u);
    EXPECT_EQ(factorial_valuation(11, 3), 4u);
    EXPECT_EQ(factorial_valuation(11, 13), 0u);
    EXPECT_EQ(factorial_valuation(0, 2), 0u);
    EXPECT_THROW(factorial_valuation(11, 6), std::invalid_argument);
    // 11! = 2^8 3^4 5^2 7 11 and v_2(d_11) = 1 gives the 2^9 of 239500800.
    EXPECT_EQ(factorial_valuation(11, 2) + padic_valuation(compute_dn(11).value, 2), 9u);
}

TEST(FactorialValuation, LegendreMatchesFloorSum)
{
    for (std::uint64_t p : primes_below(51)) {
        for (std::uint64_t n = 0; n <= 200; ++n) {
            const auto s = digit_sum(n, p);
            ASSERT_EQ((n - s) % (p - 1), 0u) << n << ' ' << p;
            EXPECT_EQ(factorial_valuation(n, p), factorial_valuation_floor_sum(n, p));
            if (n <= 30) {
                EXPECT_EQ(factorial_valuation(n, p), padic_valuation(factorial(n), p));
            }
        }
    }
}

TEST(ComputeDn, ListedValues)
{
    EXPECT_EQ(compute_dn(1).value, 1);
    EXPECT_EQ(compute_dn(2).value, 1);
    EXPECT_EQ(compute_dn(11).value, 6);
    EXPECT_EQ(compute_dn(11).factorization.to_string(), "2*3");
    EXPECT_EQ(compute_dn(13).value, 210);
    EXPECT_EQ(compute_dn(25).value, 546);
    for (std::size_t n = 1; n <= listed_dn.size(); ++n)
        EXPECT_EQ(compute_dn(n).value, listed_dn[n - 1]) << "n = " << n;
    EXPECT_TRUE(compute_dn(1).factorization.is_one());
    EXPECT_THROW(compute_dn(0), std::invalid_argument);
}

TEST(ComputeDn, ExponentIsLargestPowerBelowDigitSum)
{
    for (std::uint64_t n = 1; n <= 120; ++n) {
        const auto dn = compute_dn(n);
        for (auto p : primes_below(n)) {
            const auto s = oracle::raw_digit_sum(n, p);
            std::uint64_t t = 0;
            for (std::uint64_t power = p; power <= s; power *= p)
                ++t;
            const auto e = padic_valuation(dn.value, p);
            EXPECT_EQ(e, t) << n << ' ' << p;
            EXPECT_EQ(e == 0, s < p);
        }
        for (const auto& f : dn.factorization.factors())
            EXPECT_LT(f.prime, n);
    }
}

TEST(SquarefreeKernel, ListedValues)
{
    EXPECT_EQ(squarefree_kernel(15), 6);
    EXPECT_EQ(compute_dn(15).value, 12);
    EXPECT_EQ(squarefree_kernel(23), 30);
    EXPECT_EQ(compute_dn(23).value, 60);
    EXPECT_EQ(squarefree_kernel(11), 6);
    std::vector<std::size_t> differ;
    for (std::size_t n = 1; n <= listed_kernel.size(); ++n) {
        EXPECT_EQ(squarefree_kernel(n), listed_kernel[n - 1]) << "n = " << n;
        if (compute_dn(n).value != squarefree_kernel(n))
            differ.push_back(n);
    }
    EXPECT_EQ(differ, (std::vector<std::size_t>{15, 23}));
}

TEST(SquarefreeKernel, CharacterizationsAgree)
{
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto k = squarefree_kernel(n);
        EXPECT_EQ(k, squarefree_kernel_by_digit_sums(n)) << n;
        EXPECT_TRUE(mpz_divisible_p(compute_dn(n).value.get_mpz_t(), k.get_mpz_t()));
        const auto factored = PrimeFactorization::of(k);
        for (const auto& f : factored.factors())
            EXPECT_EQ(f.exponent, 1u);
    }
}

TEST(CommonDenominator, Examples)
{
    const auto c11 = common_denominator(11);
    EXPECT_EQ(c11.value, 239500800);
    EXPECT_EQ(c11.factorization.to_string(), "2^9*3^5*5^2*7*11");
    EXPECT_EQ(common_denominator(1).value, 1);
    EXPECT_EQ(common_denominator(6).value, 1440);
    for (std::uint64_t n = 1; n <= 40; ++n) {
        const auto c = common_denominator(n);
        EXPECT_EQ(c.value, factorial(n) * compute_dn(n).value);
        EXPECT_EQ(c.value, c.factorization.value());
    }
}

TEST(Compositions, CountAndOrder)
{
    for (std::uint64_t n = 1; n <= 12; ++n) {
        std::vector<std::vector<std::uint64_t>> seen;
        for_each_composition(n, [&](std::span<const std::uint64_t> c) {
            seen.emplace_back(c.begin(), c.end());
            return true;
        });
        EXPECT_EQ(seen.size(), std::uint64_t{1} << (n - 1));
        EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
        auto reference = oracle::all_compositions(n);
        std::sort(reference.begin(), reference.end());
        EXPECT_EQ(seen, reference);
    }
}

TEST(Compositions, FixedPartCount)
{
    for (std::uint64_t n = 1; n <= 12; ++n) {
        const auto all = oracle::all_compositions(n);
        for (std::uint64_t k = 1; k <= n; ++k) {
            std::vector<std::vector<std::uint64_t>> seen;
            for_each_composition(n, k, [&](std::span<const std::uint64_t> c) {
                seen.emplace_back(c.begin(), c.end());
                return true;
            });
            std::vector<std::vector<std::uint64_t>> expected;
            std::copy_if(all.begin(), all.end(), std::back_inserter(expected),
                         [k](const auto& c) { return c.size() == k; });
            std::sort(expected.begin(), expected.end());
            EXPECT_EQ(seen, expected) << n << ' ' << k;
        }
    }
}

TEST(DnBruteforce, Examples)
{
    EXPECT_EQ(dn_bruteforce(1), 1);
    // k=1: 3! = 6; k=2: 2*1!*2! = 4; k=3: 3; lcm = 12.
    EXPECT_EQ(dn_bruteforce(3), 12);
    EXPECT_EQ(oracle::dn_by_bigint_lcm(3), 12);
    EXPECT_EQ(dn_bruteforce(11), BigInt("239500800"));
}

TEST(DnBruteforce, MatchesBigIntegerLcmOracle)
{
    for (std::uint64_t n = 1; n <= 14; ++n)
        EXPECT_EQ(dn_bruteforce(n), oracle::dn_by_bigint_lcm(n)) << n;
}

TEST(DnBruteforce, WorkerCountDoesNotMatter)
{
    for (std::uint64_t n : {5, 12, 16})
        EXPECT_EQ(dn_bruteforce(n, {}, 1), dn_bruteforce(n, {}, 4));
}

TEST(DnBruteforce, EqualsClosedForm)
{
    for (std::uint64_t n = 1; n <= 16; ++n)
        EXPECT_EQ(dn_bruteforce(n), common_denominator(n).value) << n;
}

TEST(DnBruteforce, EnforcesBound)
{
    EXPECT_THROW(dn_bruteforce(21), BudgetExceeded);
    EXPECT_THROW(dn_bruteforce(8, EnumerationBound{7}), BudgetExceeded);
    EXPECT_THROW(dn_bruteforce(25, EnumerationBound{30}), BudgetExceeded); // hard cap 24
    EXPECT_NO_THROW(dn_bruteforce(7, EnumerationBound{7}));
}

TEST(MultinomialValuation, Examples)
{
    // binomial(11, 3) = 165 = 3 * 5 * 11
    EXPECT_EQ(multinomial_valuation(11, v({8, 3}), 2), 0u);
    EXPECT_EQ(multinomial_valuation(11, v({8, 3}), 3), 1u);
    EXPECT_EQ(multinomial_valuation(11, v({8, 3}), 11), 1u);
    for (std::uint64_t p : {2, 3, 5})
        EXPECT_EQ(multinomial_valuation(9, v({9}), p), 0u);
}

TEST(MultinomialValuation, RejectsBadCompositions)
{
    EXPECT_THROW(multinomial_valuation(11, v({8, 2}), 2), std::invalid_argument);
    EXPECT_THROW(multinomial_valuation(3, v({}), 2), std::invalid_argument);
    EXPECT_THROW(multinomial_valuation(3, v({3, 0}), 2), std::invalid_argument);
    EXPECT_THROW(multinomial_valuation(3, v({1, 2}), 4), std::invalid_argument);
}

TEST(HpMin, Examples)
{
    EXPECT_EQ(hp_min(11, 3, 2), 0u);
    for (std::uint64_t n = 1; n <= 12; ++n)
        EXPECT_EQ(hp_min(n, 1, 3), 0u);
    // Only composition of 4 into 4 parts is (1,1,1,1): (4 * s_2(1) - s_2(4)) / 1 = 3.
    EXPECT_EQ(hp_min(4, 4, 2), 3u);
}

TEST(HpMin, Errors)
{
    EXPECT_THROW(hp_min(4, 5, 2), std::invalid_argument);
    EXPECT_THROW(hp_min(4, 0, 2), std::invalid_argument);
    EXPECT_THROW(hp_min(21, 2, 2), BudgetExceeded);
    EXPECT_THROW(hp_min(4, 2, 9), std::invalid_argument);
}

TEST(ConstructivePartition, Examples)
{
    EXPECT_EQ(constructive_partition(11, 2, 3), v({1, 2, 8}));
    EXPECT_EQ(constructive_partition(11, 3, 2), v({1, 10}));
    EXPECT_EQ(constructive_partition(11, 3, 3), v({1, 1, 9}));
    for (std::uint64_t n = 1; n <= 30; ++n)
        EXPECT_EQ(constructive_partition(n, 5, 1), v({n}));
}

TEST(ConstructivePartition, RejectsTooManyParts)
{
    EXPECT_THROW(constructive_partition(11, 2, 4), std::invalid_argument); // s_2(11) = 3
    EXPECT_THROW(constructive_partition(8, 2, 2), std::invalid_argument);  // s_2(8) = 1
    EXPECT_THROW(constructive_partition(8, 2, 0), std::invalid_argument);
}

TEST(Bernoulli, FirstNumbers)
{
    const auto b = bernoulli_numbers(12);
    EXPECT_EQ(b[0], 1);
    EXPECT_EQ(b[1], mpq_class(-1, 2));
    EXPECT_EQ(b[2], mpq_class(1, 6));
    EXPECT_EQ(b[3], 0);
    EXPECT_EQ(b[4], mpq_class(-1, 30));
    EXPECT_EQ(b[6], mpq_class(1, 42));
    EXPECT_EQ(b[10], mpq_class(5, 66));
    EXPECT_EQ(b[12], mpq_class(-691, 2730));
    for (std::size_t k = 3; k < b.size(); k += 2)
        EXPECT_EQ(b[k], 0);
}

TEST(Bernoulli, PolynomialDenominator)
{
    // B_4(x) - B_4 = x^4 - 2x^3 + x^2
    EXPECT_EQ(bernoulli_poly_denominator(4), 1);
    // B_3(x) - B_3 = x^3 - (3/2)x^2 + (1/2)x
    EXPECT_EQ(bernoulli_poly_denominator(3), 2);
    EXPECT_EQ(bernoulli_poly_denominator(1), 1);
    EXPECT_EQ(bernoulli_poly_denominator(23), 30);
    for (std::uint64_t n = 1; n <= 25; ++n)
        EXPECT_EQ(bernoulli_poly_denominator(n), squarefree_kernel(n)) << n;
}

TEST(Goldberg, Denominators)
{
    // (B_3 + B_2)/4! = (1/6)/24
    EXPECT_EQ(goldberg_denominator(4), 144);
    // (B_4 + B_3)/5! = (-1/30)/120
    EXPECT_EQ(goldberg_denominator(5), 3600);
    // (B_10 + B_9)/11! = (5/66)/39916800 = 1/526901760
    EXPECT_EQ(goldberg_denominator(11), BigInt("526901760"));
    EXPECT_THROW(goldberg_denominator(3), std::invalid_argument);
    EXPECT_THROW(goldberg_denominator(1), std::invalid_argument);
}
