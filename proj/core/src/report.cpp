#include <algorithm>
#include <stdexcept>

#include "bchden/bch.hpp"
#include "bchden/errors.hpp"

namespace bchden {

DenominatorReport degree_report(const DegreeTable& table)
{
    const std::size_t n = table.degree();
    DenominatorReport report;
    report.degree = n;
    report.alphabet = table.alphabet();
    report.d_n = compute_dn(n).value;
    report.common_denominator = common_denominator(n).value;
    report.observed_lcm = 1;
    report.divisibility_ok = true;

    mpz_class max_denominator = 0;
    std::uint64_t max_index = 0;
    for (std::uint64_t i = 0; i < table.size(); ++i) {
        // denom(0) = 1, which mpq already stores for zero.
        const mpz_class& den = table[i].get_den();
        mpz_lcm(report.observed_lcm.get_mpz_t(), report.observed_lcm.get_mpz_t(), den.get_mpz_t());
        if (den > max_denominator) {
            max_denominator = den;
            max_index = i;
        }
        if (report.divisibility_ok &&
            mpz_divisible_p(report.common_denominator.get_mpz_t(), den.get_mpz_t()) == 0) {
            report.divisibility_ok = false;
            report.divisibility_witness = Word::unpack(i, n, table.alphabet());
        }
    }
    report.witness_max = Word::unpack(max_index, n, table.alphabet());
    report.minimal = report.divisibility_ok && report.observed_lcm == report.common_denominator;
    return report;
}

DenominatorReport degree_report(std::size_t n, unsigned alphabet, const ScanOptions& options)
{
    return degree_report(degree_coefficients(n, alphabet, options));
}

BigInt numerator_over_common(const Rational& h, std::size_t degree)
{
    const auto common = common_denominator(degree).value;
    if (mpz_divisible_p(common.get_mpz_t(), h.get_den_mpz_t()) == 0)
        throw CorrectnessViolation("coefficient " + h.get_str() + " of degree " +
                                   std::to_string(degree) + " has a denominator not dividing " +
                                   common.get_str());
    BigInt a;
    mpz_divexact(a.get_mpz_t(), common.get_mpz_t(), h.get_den_mpz_t());
    a *= h.get_num();
    return a;
}

BigInt numerator_over_common(const Word& w, unsigned alphabet)
{
    if (w.empty())
        throw std::invalid_argument("numerator_over_common: empty word");
    return numerator_over_common(bch_coeff_word(w, alphabet), w.size());
}

GoldbergDegree goldberg_check_degree(const DegreeTable& table)
{
    GoldbergDegree result;
    result.degree = table.degree();
    result.goldberg_denominator = goldberg_denominator(table.degree());
    result.passed = true;
    for (std::uint64_t i = 0; i < table.size(); ++i) {
        const auto& den = table[i].get_den();
        if (mpz_divisible_p(result.goldberg_denominator.get_mpz_t(), den.get_mpz_t()) == 0) {
            result.passed = false;
            result.witness = Word::unpack(i, table.degree(), table.alphabet());
            result.witness_denominator = den;
            result.ratio = Rational(result.goldberg_denominator, den);
            result.ratio.canonicalize();
            break;
        }
    }
    return result;
}

std::vector<GoldbergDegree> goldberg_check(std::size_t n_max, const ScanOptions& options)
{
    if (n_max < 4)
        throw std::invalid_argument("goldberg_check: requires n_max >= 4");
    std::vector<GoldbergDegree> out;
    for (std::size_t n = 4; n <= n_max; ++n)
        out.push_back(goldberg_check_degree(degree_coefficients(n, 2, options)));
    return out;
}

std::vector<CoefficientClass> distinct_coefficients(const DegreeTable& table)
{
    std::vector<std::uint64_t> order;
    for (std::uint64_t i = 0; i < table.size(); ++i)
        if (sgn(table[i]) != 0)
            order.push_back(i);

    auto before = [&](const Rational& a, const Rational& b) {
        const int c = cmp(abs(a), abs(b));
        if (c != 0)
            return c > 0;
        return sgn(a) > sgn(b);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](auto i, auto j) { return before(table[i], table[j]); });

    std::vector<CoefficientClass> out;
    for (auto i : order) {
        if (!out.empty() && out.back().value == table[i]) {
            ++out.back().multiplicity;
            continue;
        }
        CoefficientClass c;
        c.value = table[i];
        c.denominator = PrimeFactorization::of(BigInt(table[i].get_den()));
        c.numerator = numerator_over_common(table[i], table.degree());
        c.multiplicity = 1;
        c.first_word = Word::unpack(i, table.degree(), table.alphabet());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CoefficientClass> table11(const ScanOptions& options)
{
    return distinct_coefficients(degree_coefficients(11, 2, options));
}

} // namespace bchden
