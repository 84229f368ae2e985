#include "bchden/factorization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bchden {

PrimeFactorization::PrimeFactorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors))
{
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].prime < 2 || factors_[i].exponent == 0)
            throw std::invalid_argument("PrimeFactorization: prime < 2 or zero exponent");
        if (i > 0 && factors_[i - 1].prime >= factors_[i].prime)
            throw std::invalid_argument("PrimeFactorization: primes must be strictly increasing");
    }
}

PrimeFactorization PrimeFactorization::of(const BigInt& value)
{
    if (value <= 0)
        throw std::invalid_argument("PrimeFactorization::of: value must be positive");
    if (value.fits_ulong_p())
        return of(static_cast<std::uint64_t>(value.get_ui()));

    PrimeFactorization result;
    BigInt rest = value;
    for (std::uint64_t p = 2; rest > 1; ++p) {
        if (rest.fits_ulong_p())
            return result * of(static_cast<std::uint64_t>(rest.get_ui()));
        std::uint64_t e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        result.multiply_prime_power(p, e);
    }
    return result;
}

PrimeFactorization PrimeFactorization::of(std::uint64_t value)
{
    if (value == 0)
        throw std::invalid_argument("PrimeFactorization::of: value must be positive");
    PrimeFactorization result;
    for (std::uint64_t p = 2; p * p <= value; ++p) {
        std::uint64_t e = 0;
        while (value % p == 0) {
            value /= p;
            ++e;
        }
        if (e > 0)
            result.factors_.push_back({p, e});
    }
    if (value > 1)
        result.factors_.push_back({value, 1});
    return result;
}

std::uint64_t PrimeFactorization::exponent_of(std::uint64_t prime) const noexcept
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                               [](const PrimePower& f, std::uint64_t p) { return f.prime < p; });
    return (it != factors_.end() && it->prime == prime) ? it->exponent : 0;
}

BigInt PrimeFactorization::value() const
{
    BigInt result = 1;
    BigInt power;
    for (const auto& f : factors_) {
        mpz_ui_pow_ui(power.get_mpz_t(), f.prime, f.exponent);
        result *= power;
    }
    return result;
}

void PrimeFactorization::multiply_prime_power(std::uint64_t prime, std::uint64_t exponent)
{
    if (exponent == 0)
        return;
    if (prime < 2)
        throw std::invalid_argument("PrimeFactorization: prime < 2");
    auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                               [](const PrimePower& f, std::uint64_t p) { return f.prime < p; });
    if (it != factors_.end() && it->prime == prime)
        it->exponent += exponent;
    else
        factors_.insert(it, PrimePower{prime, exponent});
}

namespace {

template <typename Combine>
std::vector<PrimePower> merge(const std::vector<PrimePower>& a, const std::vector<PrimePower>& b,
                              Combine combine)
{
    std::vector<PrimePower> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
            out.push_back({a[i].prime, combine(a[i].exponent, std::uint64_t{0})});
            ++i;
        } else if (i == a.size() || b[j].prime < a[i].prime) {
            out.push_back({b[j].prime, combine(std::uint64_t{0}, b[j].exponent)});
            ++j;
        } else {
            out.push_back({a[i].prime, combine(a[i].exponent, b[j].exponent)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

PrimeFactorization PrimeFactorization::operator*(const PrimeFactorization& other) const
{
    PrimeFactorization out;
    out.factors_ = merge(factors_, other.factors_, [](auto x, auto y) { return x + y; });
    return out;
}

PrimeFactorization PrimeFactorization::lcm(const PrimeFactorization& other) const
{
    PrimeFactorization out;
    out.factors_ = merge(factors_, other.factors_, [](auto x, auto y) { return std::max(x, y); });
    return out;
}

PrimeFactorization PrimeFactorization::radical() const
{
    PrimeFactorization out = *this;
    for (auto& f : out.factors_)
        f.exponent = 1;
    return out;
}

bool PrimeFactorization::divisible_by(const PrimeFactorization& other) const noexcept
{
    return std::all_of(other.factors_.begin(), other.factors_.end(),
                       [this](const PrimePower& f) { return exponent_of(f.prime) >= f.exponent; });
}

std::string PrimeFactorization::to_string() const
{
    if (factors_.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0)
            os << '*';
        os << factors_[i].prime;
        if (factors_[i].exponent > 1)
            os << '^' << factors_[i].exponent;
    }
    return os.str();
}

PrimeFactorization PrimeFactorization::parse(const std::string& text)
{
    if (text == "1")
        return {};
    std::vector<PrimePower> factors;
    std::istringstream is(text);
    std::string term;
    while (std::getline(is, term, '*')) {
        auto caret = term.find('^');
        try {
            std::size_t used = 0;
            std::uint64_t p = std::stoull(term.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? term.size() : caret))
                throw std::invalid_argument(term);
            std::uint64_t e = 1;
            if (caret != std::string::npos) {
                auto tail = term.substr(caret + 1);
                e = std::stoull(tail, &used);
                if (used != tail.size())
                    throw std::invalid_argument(term);
            }
            factors.push_back({p, e});
        } catch (const std::exception&) {
            throw std::invalid_argument("PrimeFactorization::parse: bad term '" + term + "'");
        }
    }
    return PrimeFactorization(std::move(factors));
}

} // namespace bchden
