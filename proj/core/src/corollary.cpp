#include <stdexcept>
#include <string>

#include "bchden/bch.hpp"

namespace bchden {

namespace {

std::uint64_t residue(const BigInt& a, std::uint64_t p)
{
    return mpz_fdiv_ui(a.get_mpz_t(), p);
}

std::uint64_t residue_of_dn(std::size_t n, std::uint64_t p)
{
    return residue(compute_dn(n).value, p);
}

bool is_pure_power(const Word& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] != w[0])
            return false;
    return true;
}

} // namespace

CongruenceReport check_corollary_prime(std::uint64_t p, const ScanOptions& options)
{
    if (!is_prime(p))
        throw std::invalid_argument("check_corollary_prime: " + std::to_string(p) + " is not prime");
    const auto table = degree_coefficients(p, 2, options);

    CongruenceReport report;
    report.p = p;
    report.degree = p;
    report.modulus = p;
    report.expected_residue = (p - residue_of_dn(p, p)) % p;

    for (std::uint64_t i = 0; i < table.size(); ++i) {
        const auto w = Word::unpack(i, p, 2);
        if (is_pure_power(w))
            continue;
        ++report.words_checked;
        const auto a = numerator_over_common(table[i], p);
        const auto r = residue(a, p);
        if (r != report.expected_residue)
            report.violations.push_back({w, a, r});
    }
    return report;
}

bool in_exceptional_set(const Word& w)
{
    const std::size_t n = w.size();
    if (n < 2)
        return false;
    if (w[0] == w[n - 1])
        return true;
    // AB^p, BA^p: one letter then a constant tail; A^pB, B^pA: mirror images.
    bool tail_constant = true, head_constant = true;
    for (std::size_t i = 1; i < n; ++i)
        tail_constant = tail_constant && w[i] == w[1];
    for (std::size_t i = 0; i + 1 < n; ++i)
        head_constant = head_constant && w[i] == w[0];
    return tail_constant || head_constant;
}

CongruenceReport check_corollary_prime_plus_one(std::uint64_t p, const ScanOptions& options)
{
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("check_corollary_prime_plus_one: " + std::to_string(p) +
                                    " is not an odd prime");
    const std::size_t n = p + 1;
    const auto table = degree_coefficients(n, 2, options);

    CongruenceReport report;
    report.p = p;
    report.degree = n;
    report.modulus = p;
    report.expected_residue = ((p - 1) / 2 * residue_of_dn(n, p)) % p;

    for (std::uint64_t i = 0; i < table.size(); ++i) {
        const auto w = Word::unpack(i, n, 2);
        ++report.words_checked;
        if (in_exceptional_set(w)) {
            if (sgn(table[i]) != 0)
                report.exceptional_zero_failures.push_back(w);
            continue;
        }
        const auto a = numerator_over_common(table[i], n);
        const auto r = residue(a, p);
        if (r != report.expected_residue)
            report.violations.push_back({w, a, r});
    }
    return report;
}

} // namespace bchden
