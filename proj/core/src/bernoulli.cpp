#include <stdexcept>

#include "bchden/numtheory.hpp"

namespace bchden {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace

std::vector<BigRational> bernoulli_numbers(std::uint64_t m)
{
    std::vector<BigRational> b;
    b.reserve(m + 1);
    b.emplace_back(1);
    for (std::uint64_t j = 1; j <= m; ++j) {
        BigRational sum = 0;
        for (std::uint64_t k = 0; k < j; ++k)
            sum += BigRational(binomial(j + 1, k)) * b[k];
        BigRational bj = -sum / BigRational(j + 1);
        bj.canonicalize();
        b.push_back(std::move(bj));
    }
    return b;
}

BigInt bernoulli_poly_denominator(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("bernoulli_poly_denominator: n must be >= 1");
    const auto b = bernoulli_numbers(n - 1);
    BigInt l = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        BigRational c = BigRational(binomial(n, k)) * b[k];
        c.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    return l;
}

BigInt goldberg_denominator(std::uint64_t n)
{
    if (n < 4)
        throw std::invalid_argument("goldberg_denominator: defined here only for n >= 4");
    const auto b = bernoulli_numbers(n - 1);
    BigRational q = (b[n - 1] + b[n - 2]) / BigRational(factorial(n));
    q.canonicalize();
    return q.get_den();
}

} // namespace bchden
