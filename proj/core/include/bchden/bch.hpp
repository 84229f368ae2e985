#pragma once

// Degree scans over the BCH series and the checks built on them: the common
// denominator n! * d_n, its minimality, numerator congruences at prime
// degrees p and p + 1, and Goldberg's Bernoulli-number denominator.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bchden/factorization.hpp"
#include "bchden/freealgebra.hpp"
#include "bchden/numtheory.hpp"

namespace bchden {

enum class Backend {
    Series,  ///< dense truncated-series arithmetic
    WordDp,  ///< per-word dynamic program
    Both,    ///< run both and require identical tables
};

std::string to_string(Backend backend);
/// Accepts "series", "per-word-dp" (or "dp"), "both".
Backend parse_backend(const std::string& name);

struct ScanOptions {
    static constexpr std::size_t default_max_degree = 14;

    Backend backend = Backend::WordDp;
    unsigned workers = 1;
    /// Scans above this degree throw BudgetExceeded.
    std::size_t max_degree = default_max_degree;
    SeriesBudget series_budget{};
    /// Called with (words done, total words); may be invoked from worker threads
    /// but never concurrently.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Every coefficient of degree n. The result does not depend on
/// options.workers. Backend::Both throws CorrectnessViolation on any mismatch.
DegreeTable degree_coefficients(std::size_t n, unsigned alphabet, const ScanOptions& options = {});

struct DenominatorReport {
    std::size_t degree = 0;
    unsigned alphabet = 2;
    BigInt d_n;
    BigInt common_denominator;
    BigInt observed_lcm;
    /// observed_lcm == common_denominator
    bool minimal = false;
    /// every denom(h_w) divides common_denominator
    bool divisibility_ok = false;
    /// Lexicographically smallest word of maximal denominator.
    Word witness_max;
    /// Lexicographically smallest word whose denominator does not divide.
    std::optional<Word> divisibility_witness;
};

DenominatorReport degree_report(const DegreeTable& table);
DenominatorReport degree_report(std::size_t n, unsigned alphabet, const ScanOptions& options = {});

/// a_w = h_w * n! * d_n for a coefficient of degree n. A non-integer result
/// would contradict the common-denominator theorem and throws
/// CorrectnessViolation.
BigInt numerator_over_common(const Rational& h, std::size_t degree);
BigInt numerator_over_common(const Word& w, unsigned alphabet = 2);

struct CongruenceViolation {
    Word word;
    BigInt numerator;
    std::uint64_t residue = 0;
};

struct CongruenceReport {
    std::uint64_t p = 0;
    std::size_t degree = 0;
    std::uint64_t modulus = 0;
    /// In 0..p-1.
    std::uint64_t expected_residue = 0;
    std::uint64_t words_checked = 0;
    std::vector<CongruenceViolation> violations;
    /// Degree p + 1 only: exceptional words with a nonzero coefficient.
    std::vector<Word> exceptional_zero_failures;

    bool passed() const noexcept { return violations.empty() && exceptional_zero_failures.empty(); }
};

/// For every w of length p other than A^p, B^p: a_w == -d_p (mod p).
CongruenceReport check_corollary_prime(std::uint64_t p, const ScanOptions& options = {});

/// Exceptional words of degree p + 1: first letter equal to last letter, plus
/// AB^p, B^pA, A^pB, BA^p.
bool in_exceptional_set(const Word& w);

/// For odd p: h_w = 0 on the exceptional set, a_w == (p-1)/2 * d_{p+1} (mod p)
/// elsewhere.
CongruenceReport check_corollary_prime_plus_one(std::uint64_t p, const ScanOptions& options = {});

struct GoldbergDegree {
    std::size_t degree = 0;
    BigInt goldberg_denominator;
    bool passed = false;
    /// First word (lexicographically) whose denominator does not divide.
    std::optional<Word> witness;
    BigInt witness_denominator;
    /// goldberg_denominator / witness_denominator, a non-integer on failure.
    Rational ratio;
};

GoldbergDegree goldberg_check_degree(const DegreeTable& table);
/// Degrees 4..n_max.
std::vector<GoldbergDegree> goldberg_check(std::size_t n_max, const ScanOptions& options = {});

/// One distinct nonzero coefficient value of a degree.
struct CoefficientClass {
    Rational value;
    PrimeFactorization denominator;
    BigInt numerator;
    std::uint64_t multiplicity = 0;
    Word first_word;
};

/// Distinct nonzero values sorted by descending |h|, positive before negative.
std::vector<CoefficientClass> distinct_coefficients(const DegreeTable& table);

/// distinct_coefficients of degree 11, K = 2.
std::vector<CoefficientClass> table11(const ScanOptions& options = {});

} // namespace bchden
